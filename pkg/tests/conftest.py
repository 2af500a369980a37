import random

from ffpoly import CoeffRegion, Field, poly_region

FIELD_PRIMES = (2, 3, 5, 7, 13, 65521)

_FIELDS = {p: Field(p) for p in FIELD_PRIMES}


def field(p: int) -> Field:
    return _FIELDS[p]


def rand_coeffs(rng: random.Random, p: int, n: int) -> list[int]:
    return [rng.randrange(p) for _ in range(n)]


def rand_monic_tail(rng: random.Random, p: int, deg: int) -> list[int]:
    """deg+1 coefficients with a nonzero leading one."""
    return [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]


def region_of(p: int, coeffs) -> CoeffRegion:
    return poly_region(field(p), list(coeffs))
