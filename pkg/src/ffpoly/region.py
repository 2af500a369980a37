"""Coefficient buffers and the window views all operations work on.

A `Buffer` owns a flat list of canonical residues.  A `CoeffRegion` is a
unit-stride window over one buffer, forward or reversed, optionally
extended by trailing *virtual zeros*: reads past the real data return 0,
writes there are a contract violation.  A `SplitTarget` couples two
disjoint regions into one logical accumulation destination.

None of the view operations copies coefficients; the only copying
utilities are `snapshot` (test harness) and `vec_copy`.
"""

from __future__ import annotations

from .ff import Field, FieldError


class RestorationViolation(AssertionError):
    """A region no longer matches its snapshot."""


class VirtualWrite(ValueError):
    """Attempted write into the virtual zero-padding of a region."""


class Buffer:
    """A mutable array of field elements.

    Construction inside a measurement scope records the acquisition with
    the allocation guard.
    """

    __slots__ = ("field", "data")

    def __init__(self, field: Field, values):
        self.field = field
        data = list(values)
        p = field.p
        for v in data:
            if not isinstance(v, int) or not 0 <= v < p:
                raise FieldError(f"not a canonical residue mod {p}: {v!r}")
        self.data = data
        scope = field.scope
        if scope is not None:
            scope.alloc(len(data))

    @classmethod
    def zeros(cls, field: Field, n: int) -> "Buffer":
        buf = cls.__new__(cls)
        buf.field = field
        buf.data = [0] * n
        scope = field.scope
        if scope is not None:
            scope.alloc(n)
        return buf

    def __len__(self):
        return len(self.data)

    def region(self, start: int = 0, stop: int | None = None) -> "CoeffRegion":
        if stop is None:
            stop = len(self.data)
        if not 0 <= start <= stop <= len(self.data):
            raise IndexError(f"window [{start}, {stop}) outside buffer of {len(self.data)}")
        return CoeffRegion(self, start, stop - start, 1, 0)

    def __repr__(self):
        return f"Buffer(p={self.field.p}, {self.data!r})"


class CoeffRegion:
    """A window of `length` real coefficients plus `virtual` trailing zeros.

    `step` is +1 for forward views and -1 for reversed ones; `start` is the
    physical index of logical position 0.
    """

    __slots__ = ("buf", "start", "length", "step", "virtual")

    def __init__(self, buf: Buffer, start: int, length: int, step: int, virtual: int):
        self.buf = buf
        self.start = start
        self.length = length
        self.step = step
        self.virtual = virtual

    @property
    def field(self) -> Field:
        return self.buf.field

    def __len__(self):
        return self.length + self.virtual

    def __getitem__(self, k: int) -> int:
        if k < 0 or k >= self.length + self.virtual:
            raise IndexError(k)
        if k >= self.length:
            return 0
        return self.buf.data[self.start + k * self.step]

    def __setitem__(self, k: int, v: int):
        if k < 0 or k >= self.length + self.virtual:
            raise IndexError(k)
        if k >= self.length:
            raise VirtualWrite(f"write at virtual index {k} (real length {self.length})")
        self.buf.data[self.start + k * self.step] = v

    def raw(self):
        """(data, start, step, length) for kernel loops; no virtual padding."""
        if self.virtual:
            raise VirtualWrite("kernel access to a virtually padded region")
        return self.buf.data, self.start, self.step, self.length

    def sub(self, lo: int, hi: int) -> "CoeffRegion":
        """Logical sub-window [lo, hi); must lie inside the region."""
        if not 0 <= lo <= hi <= self.length + self.virtual:
            raise IndexError(f"sub-window [{lo}, {hi}) outside region of {len(self)}")
        real_lo = min(lo, self.length)
        real_hi = min(hi, self.length)
        return CoeffRegion(self.buf, self.start + real_lo * self.step,
                           real_hi - real_lo, self.step, (hi - lo) - (real_hi - real_lo))

    def sub_padded(self, lo: int, hi: int) -> "CoeffRegion":
        """Like `sub` but hi may overshoot; the excess becomes virtual zeros."""
        if not 0 <= lo <= hi:
            raise IndexError(f"bad sub-window [{lo}, {hi})")
        real_lo = min(lo, self.length)
        real_hi = min(max(hi, real_lo), self.length)
        return CoeffRegion(self.buf, self.start + real_lo * self.step,
                           real_hi - real_lo, self.step, (hi - lo) - (real_hi - real_lo))

    def reversed(self) -> "CoeffRegion":
        """O(1) reversed view; composing twice yields the original window."""
        if self.virtual:
            raise VirtualWrite("cannot reverse a virtually padded region")
        n = self.length
        return CoeffRegion(self.buf, self.start + (n - 1) * self.step if n else self.start,
                           n, -self.step, 0)

    def to_list(self) -> list[int]:
        return [self[k] for k in range(len(self))]

    def overlaps(self, other: "CoeffRegion") -> bool:
        if self.buf is not other.buf or self.length == 0 or other.length == 0:
            return False
        lo_a, hi_a = sorted((self.start, self.start + (self.length - 1) * self.step))
        lo_b, hi_b = sorted((other.start, other.start + (other.length - 1) * other.step))
        return lo_a <= hi_b and lo_b <= hi_a

    def __repr__(self):
        return (f"CoeffRegion(start={self.start}, len={self.length}, step={self.step}"
                + (f", virtual={self.virtual}" if self.virtual else "") + ")")


class SplitTarget:
    """Two disjoint regions acting as one logical accumulation target.

    Logical index k maps to first[k] when k < len(first) and to
    second[k - len(first)] otherwise.
    """

    __slots__ = ("first", "second")

    def __init__(self, first: CoeffRegion, second: CoeffRegion):
        if first.overlaps(second):
            raise ValueError("split target halves must be disjoint")
        self.first = first
        self.second = second

    @property
    def field(self) -> Field:
        return self.first.field

    def __len__(self):
        return len(self.first) + len(self.second)

    def __getitem__(self, k: int) -> int:
        n1 = len(self.first)
        return self.first[k] if k < n1 else self.second[k - n1]

    def __setitem__(self, k: int, v: int):
        n1 = len(self.first)
        if k < n1:
            self.first[k] = v
        else:
            self.second[k - n1] = v

    def to_list(self) -> list[int]:
        return self.first.to_list() + self.second.to_list()

    def __repr__(self):
        return f"SplitTarget({self.first!r}, {self.second!r})"


def poly_region(field: Field, coeffs) -> CoeffRegion:
    """Fresh buffer holding `coeffs`, viewed whole.  Convenience for callers."""
    return Buffer(field, coeffs).region()


def split_blocks(r: CoeffRegion, block: int, pad_virtual: bool = False) -> list[CoeffRegion]:
    """Tile a region into consecutive windows of width `block`.

    The final window is short when the region length is not a multiple of
    `block`; with `pad_virtual` it is instead reported at full width with
    read-only virtual zeros, leaving the buffer untouched.
    """
    if block < 1:
        raise ValueError("block width must be >= 1")
    n = len(r)
    out = []
    full, rem = divmod(n, block)
    for i in range(full):
        out.append(r.sub(i * block, (i + 1) * block))
    if rem:
        if pad_virtual:
            out.append(r.sub_padded(full * block, full * block + block))
        else:
            out.append(r.sub(full * block, n))
    return out


def reverse_in_place(r: CoeffRegion) -> None:
    """Physically reverse the region's storage; involutive."""
    data, off, step, n = r.raw()
    i, j = off, off + (n - 1) * step
    for _ in range(n // 2):
        data[i], data[j] = data[j], data[i]
        i += step
        j -= step


class Snapshot:
    """Frozen copy of one or more regions, for exact restoration checks."""

    __slots__ = ("regions", "copies")

    def __init__(self, regions):
        self.regions = tuple(regions)
        self.copies = [r.to_list() for r in self.regions]

    def assert_restored(self):
        for ridx, (r, copy) in enumerate(zip(self.regions, self.copies)):
            for k in range(len(copy)):
                if r[k] != copy[k]:
                    raise RestorationViolation(
                        f"region {ridx} differs first at index {k}: "
                        f"{r[k]} != snapshot {copy[k]}")

    def restored(self) -> bool:
        try:
            self.assert_restored()
        except RestorationViolation:
            return False
        return True


def snapshot(*regions) -> Snapshot:
    return Snapshot(regions)


# ---------------------------------------------------------------------------
# Element-wise vector kernels.  All operate on equal-length regions, report
# exact operation counts in bulk, and allocate nothing.

def _pair_raw(dst: CoeffRegion, src: CoeffRegion):
    if len(dst) != len(src):
        raise ValueError(f"length mismatch: {len(dst)} vs {len(src)}")
    dd, do, ds, n = dst.raw()
    sd, so, ss, _ = src.raw()
    return dd, do, ds, sd, so, ss, n


def vec_iadd(dst: CoeffRegion, src: CoeffRegion, negate: bool = False) -> None:
    """dst += src (or dst -= src when negate)."""
    dd, do, ds, sd, so, ss, n = _pair_raw(dst, src)
    p = dst.buf.field.p
    if negate:
        for _ in range(n):
            dd[do] = (dd[do] - sd[so]) % p
            do += ds
            so += ss
    else:
        for _ in range(n):
            dd[do] = (dd[do] + sd[so]) % p
            do += ds
            so += ss
    scope = dst.buf.field.scope
    if scope is not None:
        scope.count(adds=n)


def vec_addmul(dst: CoeffRegion, scalar: int, src: CoeffRegion, negate: bool = False) -> None:
    """dst += scalar*src (or dst -= scalar*src when negate)."""
    dd, do, ds, sd, so, ss, n = _pair_raw(dst, src)
    p = dst.buf.field.p
    s = -scalar % p if negate else scalar
    for _ in range(n):
        dd[do] = (dd[do] + s * sd[so]) % p
        do += ds
        so += ss
    scope = dst.buf.field.scope
    if scope is not None:
        scope.count(adds=n, muls=n)


def vec_scale(dst: CoeffRegion, scalar: int) -> None:
    """dst *= scalar, element-wise."""
    dd, do, ds, n = dst.raw()
    p = dst.buf.field.p
    for _ in range(n):
        dd[do] = dd[do] * scalar % p
        do += ds
    scope = dst.buf.field.scope
    if scope is not None:
        scope.count(muls=n)


def vec_negate(dst: CoeffRegion) -> None:
    dd, do, ds, n = dst.raw()
    p = dst.buf.field.p
    for _ in range(n):
        dd[do] = -dd[do] % p
        do += ds
    scope = dst.buf.field.scope
    if scope is not None:
        scope.count(adds=n)


def vec_copy(dst: CoeffRegion, src: CoeffRegion) -> None:
    """dst[k] = src[k]; src may carry virtual zeros.  Not a field operation."""
    if len(dst) != len(src):
        raise ValueError(f"length mismatch: {len(dst)} vs {len(src)}")
    if src.virtual:
        for k in range(len(dst)):
            dst[k] = src[k]
        return
    dd, do, ds, sd, so, ss, n = _pair_raw(dst, src)
    for _ in range(n):
        dd[do] = sd[so]
        do += ds
        so += ss
