"""Naive allocating oracles used as ground truth by the tests and selftest.

Everything here works on plain Python lists of canonical residues and a
modulus p, evaluates the defining formulas directly, and shares no code
with the in-place implementations.  Performance is a non-goal.
"""

from __future__ import annotations


class OracleError(ValueError):
    pass


def ref_mul(a: list[int], b: list[int], p: int) -> list[int]:
    """Schoolbook product into a fresh buffer; [] if either input is []."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        for j, bv in enumerate(b):
            out[i + j] = (out[i + j] + av * bv) % p
    return out


def ref_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Long division a = b*q + r with deg r < deg b.

    q has length max(0, len(a)-len(b)+1); r keeps width len(b)-1 when a
    long enough, otherwise it is a itself.
    """
    if not b or b[-1] % p == 0:
        raise OracleError("divisor needs a nonzero leading coefficient")
    m = len(b) - 1
    if len(a) - 1 < m:
        return [], list(a)
    inv_lead = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - m)
    for i in range(len(a) - m - 1, -1, -1):
        digit = r[i + m] * inv_lead % p
        q[i] = digit
        for j in range(m + 1):
            r[i + j] = (r[i + j] - digit * b[j]) % p
    return q, r[:m]


def ref_rem(a: list[int], b: list[int], p: int, width: int | None = None) -> list[int]:
    """Remainder of a mod b, zero-padded to `width` (defaults to deg b)."""
    _, r = ref_divmod(a, b, p)
    if width is None:
        width = len(b) - 1
    return (r + [0] * width)[:width]


def ref_convolution(a: list[int], b: list[int], f: int, n: int, p: int) -> list[int]:
    """a*b mod (X^n - f): wrapped coefficients come back scaled by f."""
    out = [0] * n
    for i, av in enumerate(a):
        for j, bv in enumerate(b):
            k = i + j
            if k < n:
                out[k] = (out[k] + av * bv) % p
            else:
                out[k - n] = (out[k - n] + f * av * bv) % p
    return out


def ref_mulmod(a: list[int], c: list[int], b: list[int], p: int) -> list[int]:
    """a*c mod b, zero-padded to deg b coefficients."""
    return ref_rem(ref_mul(a, c, p), b, p)


def ref_dense_toeplitz(vec: list[int], rows: int, cols: int) -> list[list[int]]:
    """Dense rows x cols Toeplitz matrix: entry (i, j) = vec[rows-1 + j - i]."""
    if len(vec) != rows + cols - 1:
        raise OracleError(f"defining vector needs length {rows + cols - 1}")
    return [[vec[rows - 1 + j - i] for j in range(cols)] for i in range(rows)]


def ref_dense_circulant(a: list[int], f: int, p: int) -> list[list[int]]:
    """Dense f-circulant: plain circulant with the lower-left part scaled by f."""
    m = len(a)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            v = a[(j - i) % m]
            if i > j:
                v = f * v % p
            row.append(v)
        out.append(row)
    return out


def ref_matvec(mat: list[list[int]], v: list[int], p: int) -> list[int]:
    return [sum(mij * vj for mij, vj in zip(row, v)) % p for row in mat]


def ref_solve_upper(mat: list[list[int]], v: list[int], p: int) -> list[int]:
    """Back-substitution for an upper-triangular dense system."""
    m = len(v)
    x = [0] * m
    for i in range(m - 1, -1, -1):
        if mat[i][i] % p == 0:
            raise OracleError(f"singular diagonal at {i}")
        acc = v[i]
        for j in range(i + 1, m):
            acc -= mat[i][j] * x[j]
        x[i] = acc % p * pow(mat[i][i], -1, p) % p
    return x


def ref_solve_lower(mat: list[list[int]], v: list[int], p: int) -> list[int]:
    """Forward substitution for a lower-triangular dense system."""
    m = len(v)
    x = [0] * m
    for i in range(m):
        if mat[i][i] % p == 0:
            raise OracleError(f"singular diagonal at {i}")
        acc = v[i]
        for j in range(i):
            acc -= mat[i][j] * x[j]
        x[i] = acc % p * pow(mat[i][i], -1, p) % p
    return x
