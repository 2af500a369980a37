import pytest

from ffpoly import (
    Buffer,
    GuardViolation,
    Schoolbook,
    acc_mul_full,
    conv_acc,
    measure,
    measure_call,
    poly_region,
)

from conftest import field, rand_coeffs


def test_schoolbook_counts_are_definitional():
    f = field(65521)
    a = poly_region(f, list(range(1, 9)))
    b = poly_region(f, list(range(2, 10)))
    c = Buffer.zeros(f, 15).region()
    with measure(f) as scope:
        acc_mul_full(c, a, b)
    assert scope.muls == 64
    assert scope.adds == 64
    assert scope.divs == 0


def test_counts_are_deterministic():
    import random

    f = field(13)
    rng = random.Random(55)
    coeffs = [rand_coeffs(rng, 13, 64) for _ in range(3)]
    scopes = []
    for _ in range(2):
        a, b, c = (poly_region(f, x) for x in coeffs)
        scopes.append(measure_call(f, conv_acc, c, a, b, 5))
    s0, s1 = scopes
    assert (s0.adds, s0.muls, s0.divs) == (s1.adds, s1.muls, s1.divs)
    assert s0.peak_depth == s1.peak_depth


def test_counts_do_not_depend_on_values():
    # Zero operands cost exactly as much as dense ones.
    f = field(13)
    n = 48
    dense = [rand_coeffs(__import__("random").Random(7), 13, n) for _ in range(3)]
    a, b, c = (poly_region(f, x) for x in dense)
    s_dense = measure_call(f, conv_acc, c, a, b, 2)
    a, b, c = (poly_region(f, [0] * n) for _ in range(3))
    s_zero = measure_call(f, conv_acc, c, a, b, 2)
    assert (s_dense.adds, s_dense.muls) == (s_zero.adds, s_zero.muls)


def test_zero_aux_ceiling_passes_for_conv():
    import random

    f = field(65521)
    rng = random.Random(3)
    a, b, c = (poly_region(f, rand_coeffs(rng, f.p, 64)) for _ in range(3))
    with measure(f, max_aux=0) as scope:
        conv_acc(c, a, b, 3)
    assert scope.peak_aux == 0


def test_alloc_ceiling_trips():
    f = field(7)
    with pytest.raises(GuardViolation):
        with measure(f, max_aux=4):
            Buffer.zeros(f, 5)


def test_depth_ceiling_trips():
    import random

    f = field(65521)
    rng = random.Random(4)
    a, b, c = (poly_region(f, rand_coeffs(rng, f.p, 128)) for _ in range(3))
    with pytest.raises(GuardViolation):
        with measure(f, max_depth=1):
            conv_acc(c, a, b, 1, strategy=Schoolbook(2))


def test_scopes_do_not_nest():
    f = field(7)
    with measure(f):
        with pytest.raises(RuntimeError):
            with measure(f):
                pass


def test_scalar_ops_tick_counters():
    f = field(7)
    with measure(f) as scope:
        f.add(1, 2)
        f.sub(1, 2)
        f.neg(4)
        f.mul(2, 3)
        f.inv(3)
        f.div(1, 2)
    assert scope.adds == 3
    assert scope.muls == 2   # div = inv + mul
    assert scope.divs == 2


def test_counter_and_guard_reports():
    f = field(7)
    with measure(f) as scope:
        f.mul(2, 3)
    counter = scope.counter
    guard = scope.guard
    assert counter.total == 1
    assert guard.peak_aux == 0
    assert "muls=1" in repr(counter)
