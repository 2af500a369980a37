"""Accumulating polynomial multiplication and the quadratic baselines.

The multiplication building block is pluggable: anything honouring the
`MulStrategy` contract (accumulate c += a*b restoring a and b exactly,
O(1) auxiliary space beyond an O(log n) call stack) can drive the rest of
the library.  The default is the schoolbook kernel, which is trivially
in-place for both the full and the truncated accumulation.

Also here: over-place dense triangular matrix-vector multiply/solve and
the quadratic polynomial remainder, used as reference base cases.
"""

from __future__ import annotations

from .instrument import tracked
from .region import CoeffRegion, SplitTarget


class TargetTooShort(ValueError):
    """Accumulation target cannot hold the product."""


class SingularDiagonal(ZeroDivisionError):
    """Triangular solve hit a zero diagonal entry."""


class NonMonicLeadingZero(ZeroDivisionError):
    """Polynomial remainder needs an invertible leading divisor coefficient."""


class MulStrategy:
    """Interface of an accumulating multiplication routine.

    threshold: length at or below which callers should switch to their
    quadratic base case.
    """

    name = "abstract"
    threshold = 16

    def acc_mul_full(self, c, a, b, negate=False):
        raise NotImplementedError

    def acc_mul_short(self, c, a, b, n, negate=False):
        raise NotImplementedError


class Schoolbook(MulStrategy):
    """Quadratic accumulating multiplication; exactly la*lb muls and adds."""

    name = "schoolbook"

    def __init__(self, threshold: int = 16):
        if threshold < 1:
            raise ValueError("threshold must be >= 1")
        self.threshold = threshold

    def acc_mul_full(self, c, a, b, negate=False):
        field = a.field
        p = field.p
        la, lb = len(a), len(b)
        if la == 0 or lb == 0:
            return
        da, oa, sa, _ = a.raw()
        db, ob, sb, _ = b.raw()
        if isinstance(c, SplitTarget):
            d1, o1, s1, l1 = c.first.raw()
            d2, o2, s2, _ = c.second.raw()
            for i in range(la):
                av = da[oa + sa * i]
                if negate:
                    av = -av % p
                jcut = min(lb, max(0, l1 - i))
                ib = ob
                ic = o1 + s1 * i
                for _ in range(jcut):
                    d1[ic] = (d1[ic] + av * db[ib]) % p
                    ic += s1
                    ib += sb
                ic = o2 + s2 * (i + jcut - l1)
                for _ in range(lb - jcut):
                    d2[ic] = (d2[ic] + av * db[ib]) % p
                    ic += s2
                    ib += sb
        else:
            dc, oc, sc, _ = c.raw()
            for i in range(la):
                av = da[oa + sa * i]
                if negate:
                    av = -av % p
                ic = oc + sc * i
                ib = ob
                for _ in range(lb):
                    dc[ic] = (dc[ic] + av * db[ib]) % p
                    ic += sc
                    ib += sb
        scope = field.scope
        if scope is not None:
            scope.count(adds=la * lb, muls=la * lb)

    def acc_mul_short(self, c, a, b, n, negate=False):
        field = a.field
        p = field.p
        la = min(len(a), n)
        lb = len(b)
        if la == 0 or lb == 0 or n == 0:
            return
        da, oa, sa, _ = a.raw()
        db, ob, sb, _ = b.raw()
        dc, oc, sc, _ = c.raw()
        pairs = 0
        for i in range(la):
            av = da[oa + sa * i]
            if negate:
                av = -av % p
            jmax = min(lb, n - i)
            pairs += jmax
            ic = oc + sc * i
            ib = ob
            for _ in range(jmax):
                dc[ic] = (dc[ic] + av * db[ib]) % p
                ic += sc
                ib += sb
        scope = field.scope
        if scope is not None:
            scope.count(adds=pairs, muls=pairs)


_DEFAULT = Schoolbook()


def default_strategy() -> MulStrategy:
    return _DEFAULT


def _resolve(strategy) -> MulStrategy:
    return _DEFAULT if strategy is None else strategy


@tracked
def acc_mul_full(c, a: CoeffRegion, b: CoeffRegion, negate: bool = False,
                 strategy: MulStrategy | None = None) -> None:
    """c[k] += sum_{i+j=k} a[i]*b[j] (minus, when negate); a, b restored.

    c may be a CoeffRegion or a SplitTarget and must be disjoint from a
    and b; exclusive access to all three is assumed for the call.
    """
    need = len(a) + len(b) - 1
    if len(c) < need:
        raise TargetTooShort(f"target {len(c)} < product length {need}")
    _resolve(strategy).acc_mul_full(c, a, b, negate)


@tracked
def acc_mul_short(c: CoeffRegion, a: CoeffRegion, b: CoeffRegion, n: int,
                  negate: bool = False, strategy: MulStrategy | None = None) -> None:
    """c[k] += sum_{i+j=k, k<n} a[i]*b[j]; quadratic truncated accumulation."""
    if len(c) < n:
        raise TargetTooShort(f"target {len(c)} < truncation length {n}")
    _resolve(strategy).acc_mul_short(c, a, b, n, negate)


# ---------------------------------------------------------------------------
# Over-place dense triangular operations.  U is a dense row-major square
# matrix (list of rows); only its upper triangle is read.

def quad_tri_mul_overplace(u, v: CoeffRegion) -> None:
    """v <- U*v for upper-triangular U, ascending column sweep, O(1) space."""
    field = v.field
    p = field.p
    dv, ov, sv, m = v.raw()
    for i in range(m):
        vi = dv[ov + sv * i]
        idx = ov
        row = 0
        while row < i:
            dv[idx] = (dv[idx] + u[row][i] * vi) % p
            idx += sv
            row += 1
        dv[ov + sv * i] = u[i][i] * vi % p
    scope = field.scope
    if scope is not None:
        scope.count(adds=m * (m - 1) // 2, muls=m * (m + 1) // 2)


def quad_tri_solve_overplace(u, v: CoeffRegion) -> None:
    """v <- U^{-1}*v for upper-triangular U, descending back-substitution."""
    field = v.field
    p = field.p
    for i in range(len(v)):
        if u[i][i] % p == 0:
            raise SingularDiagonal(f"zero diagonal at row {i}")
    dv, ov, sv, m = v.raw()
    inv = field.inv
    for i in range(m - 1, -1, -1):
        acc = dv[ov + sv * i]
        for j in range(m - 1, i, -1):
            acc = (acc - u[i][j] * dv[ov + sv * j]) % p
        dv[ov + sv * i] = acc * inv(u[i][i]) % p
    scope = field.scope
    if scope is not None:
        scope.count(adds=m * (m - 1) // 2, muls=m * (m - 1) // 2 + m)


# ---------------------------------------------------------------------------
# Quadratic polynomial remainder (long division), read-only inputs.

@tracked
def quad_rem(r: CoeffRegion, a: CoeffRegion, b: CoeffRegion) -> None:
    """r <- a mod b by long division; a and b are never written.

    r has length M = len(b)-1 and doubles as the working window; one
    scalar register holds the current quotient digit.
    """
    mm = len(b) - 1
    if mm < 0 or b[mm] == 0:
        raise NonMonicLeadingZero("divisor needs a nonzero leading coefficient")
    if len(r) != mm:
        raise TargetTooShort(f"remainder window must have length {mm}")
    field = r.field
    p = field.p
    nn = len(a) - 1
    if nn < mm:
        for k in range(mm):
            r[k] = a[k] if k <= nn else 0
        return
    if mm == 0:
        return
    inv_bm = field.inv(b[mm])
    n = nn - mm
    for k in range(mm):
        r[k] = a[n + 1 + k]
    dr, orr, sr, _ = r.raw()
    da, oa, sa, _ = a.raw()
    db, ob, sb, _ = b.raw()
    top = orr + sr * (mm - 1)
    for i in range(n, -1, -1):
        q = dr[top] * inv_bm % p
        # window <- a_i + X*window mod X^M, then subtract q * (b mod X^M)
        idx = top
        for _ in range(mm - 1):
            dr[idx] = dr[idx - sr]
            idx -= sr
        dr[orr] = da[oa + sa * i]
        idx = orr
        ib = ob
        for _ in range(mm):
            dr[idx] = (dr[idx] - q * db[ib]) % p
            idx += sr
            ib += sb
    scope = field.scope
    if scope is not None:
        scope.count(adds=(n + 1) * mm, muls=(n + 1) * (mm + 1))


@tracked
def quad_rem_overplace(a: CoeffRegion, b: CoeffRegion) -> None:
    """Over-place long division: a's buffer becomes [remainder, quotient].

    The quotient digit is parked in the cell whose leading coefficient it
    just consumed, so the low M cells end up holding a mod b and the high
    N-M+1 cells hold a div b, low degree first.
    """
    mm = len(b) - 1
    if mm < 0 or b[mm] == 0:
        raise NonMonicLeadingZero("divisor needs a nonzero leading coefficient")
    field = a.field
    p = field.p
    nn = len(a) - 1
    if nn < mm:
        return
    inv_bm = field.inv(b[mm])
    da, oa, sa, _ = a.raw()
    db, ob, sb, _ = b.raw()
    n = nn - mm
    for i in range(n, -1, -1):
        itop = oa + sa * (i + mm)
        q = da[itop] * inv_bm % p
        da[itop] = q
        idx = oa + sa * i
        ib = ob
        for _ in range(mm):
            da[idx] = (da[idx] - q * db[ib]) % p
            idx += sa
            ib += sb
    scope = field.scope
    if scope is not None:
        scope.count(adds=(n + 1) * mm, muls=(n + 1) * (mm + 1))
