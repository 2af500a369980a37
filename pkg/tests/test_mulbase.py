import random

import pytest

from ffpoly import (
    Buffer,
    NonMonicLeadingZero,
    Schoolbook,
    SingularDiagonal,
    SplitTarget,
    TargetTooShort,
    acc_mul_full,
    acc_mul_short,
    measure,
    quad_rem,
    quad_rem_overplace,
    quad_tri_mul_overplace,
    quad_tri_solve_overplace,
    snapshot,
)
from ffpoly.reference import ref_divmod, ref_matvec, ref_mul, ref_rem, ref_solve_upper

from conftest import FIELD_PRIMES, field, rand_coeffs, rand_monic_tail, region_of


def test_acc_mul_full_worked_example():
    # oracle first
    assert ref_mul([2, 3], [1, 4], 7) == [2, 4, 5]
    c = region_of(7, [1, 1, 1])
    acc_mul_full(c, region_of(7, [2, 3]), region_of(7, [1, 4]))
    assert c.to_list() == [3, 5, 6]


def test_acc_mul_full_identity_and_zero():
    c = region_of(7, [1, 1, 1])
    acc_mul_full(c.sub(0, 3), region_of(7, [2, 3, 4]), region_of(7, [1]))
    assert c.to_list() == [3, 4, 5]
    acc_mul_full(c, region_of(7, [0, 0]), region_of(7, [5, 5]))
    assert c.to_list() == [3, 4, 5]


def test_acc_mul_full_matches_oracle_bulk():
    rng = random.Random(2024)
    sizes = ([lambda: rng.randrange(0, 11)] * 90
             + [lambda: rng.randrange(0, 49)] * 9
             + [lambda: rng.randrange(0, 257)])
    for p in FIELD_PRIMES:
        f = field(p)
        for i in range(10_000):
            pick = sizes[i % len(sizes)]
            la, lb = pick(), pick()
            a = rand_coeffs(rng, p, la)
            b = rand_coeffs(rng, p, lb)
            need = max(la + lb - 1, 0)
            c = rand_coeffs(rng, p, need)
            ra, rb, rc = region_of(p, a), region_of(p, b), region_of(p, c)
            snap = snapshot(ra, rb)
            acc_mul_full(rc, ra, rb)
            prod = ref_mul(a, b, p)
            want = [(x + y) % p for x, y in zip(c, prod + [0] * need)]
            assert rc.to_list() == want
            snap.assert_restored()


def test_acc_mul_full_negate_and_split_target():
    rng = random.Random(77)
    for p in (2, 5, 65521):
        for _ in range(300):
            la, lb = rng.randrange(0, 12), rng.randrange(0, 12)
            cut = rng.randrange(0, la + lb + 1)
            a, b = rand_coeffs(rng, p, la), rand_coeffs(rng, p, lb)
            need = max(la + lb - 1, 0)
            c = rand_coeffs(rng, p, max(cut, need))
            buf = region_of(p, c)
            tgt = SplitTarget(buf.sub(0, cut), buf.sub(cut, len(c)))
            neg = rng.random() < 0.5
            acc_mul_full(tgt, region_of(p, a), region_of(p, b), negate=neg)
            prod = ref_mul(a, b, p) + [0] * len(c)
            want = [(x - y if neg else x + y) % p for x, y in zip(c, prod)]
            assert buf.to_list() == want


def test_acc_mul_full_zero_aux():
    f = field(65521)
    rng = random.Random(5)
    a = region_of(65521, rand_coeffs(rng, f.p, 64))
    b = region_of(65521, rand_coeffs(rng, f.p, 64))
    c = Buffer.zeros(f, 127).region()
    with measure(f, max_aux=0) as scope:
        acc_mul_full(c, a, b)
    assert scope.peak_aux == 0


def test_acc_mul_full_target_too_short():
    with pytest.raises(TargetTooShort):
        acc_mul_full(region_of(7, [0, 0]), region_of(7, [1, 1]), region_of(7, [1, 1]))


def test_acc_mul_short_examples():
    c = region_of(5, [0, 0])
    acc_mul_short(c, region_of(5, [1, 2]), region_of(5, [3, 1]), 2)
    assert c.to_list() == [3, 2]
    c = region_of(5, [1])
    acc_mul_short(c, region_of(5, [2]), region_of(5, [3]), 1)
    assert c.to_list() == [2]
    c = region_of(5, [4])
    acc_mul_short(c, region_of(5, [2]), region_of(5, [3]), 0)
    assert c.to_list() == [4]


def test_acc_mul_short_matches_truncated_oracle():
    rng = random.Random(31)
    for p in (2, 7, 65521):
        for _ in range(400):
            la, lb = rng.randrange(0, 14), rng.randrange(0, 14)
            n = rng.randrange(0, 16)
            a, b = rand_coeffs(rng, p, la), rand_coeffs(rng, p, lb)
            c = rand_coeffs(rng, p, n)
            rc = region_of(p, c)
            acc_mul_short(rc, region_of(p, a), region_of(p, b), n)
            prod = ref_mul(a, b, p) + [0] * n
            want = [(x + y) % p for x, y in zip(c, prod)]
            assert rc.to_list() == want


def test_quad_tri_worked_examples():
    u = [[1, 2], [0, 1]]
    assert ref_matvec(u, [3, 4], 5) == [1, 4]
    v = region_of(5, [3, 4])
    quad_tri_mul_overplace(u, v)
    assert v.to_list() == [1, 4]

    assert ref_solve_upper(u, [3, 4], 5) == [0, 4]
    v = region_of(5, [3, 4])
    quad_tri_solve_overplace(u, v)
    assert v.to_list() == [0, 4]
    # and U * [0, 4] = [3, 4]
    assert ref_matvec(u, [0, 4], 5) == [3, 4]

    eye = [[1, 0], [0, 1]]
    v = region_of(5, [2, 3])
    quad_tri_mul_overplace(eye, v)
    assert v.to_list() == [2, 3]
    quad_tri_solve_overplace(eye, v)
    assert v.to_list() == [2, 3]


def test_quad_tri_solve_inverts_mul():
    rng = random.Random(9)
    for p in (5, 13, 65521):
        for _ in range(100):
            m = rng.randrange(1, 12)
            u = [[rng.randrange(p) if j > i else 0 for j in range(m)] for i in range(m)]
            for i in range(m):
                u[i][i] = rng.randrange(1, p)
            v0 = rand_coeffs(rng, p, m)
            v = region_of(p, v0)
            quad_tri_mul_overplace(u, v)
            assert v.to_list() == ref_matvec(u, v0, p)
            quad_tri_solve_overplace(u, v)
            assert v.to_list() == v0


def test_quad_tri_solve_singular():
    with pytest.raises(SingularDiagonal):
        quad_tri_solve_overplace([[0, 1], [0, 1]], region_of(5, [1, 2]))


def test_quad_rem_worked_examples():
    # oracle first: hand long division gives q = X, r = 1 + X
    assert ref_divmod([1, 2, 0, 1], [1, 0, 1], 7) == ([0, 1], [1, 1])
    r = Buffer.zeros(field(7), 2).region()
    quad_rem(r, region_of(7, [1, 2, 0, 1]), region_of(7, [1, 0, 1]))
    assert r.to_list() == [1, 1]

    # deg a < deg b: remainder is a itself (padded)
    r = Buffer.zeros(field(7), 2).region()
    quad_rem(r, region_of(7, [4]), region_of(7, [1, 0, 1]))
    assert r.to_list() == [4, 0]

    # b = X^M: remainder is the low window of a
    r = Buffer.zeros(field(7), 2).region()
    quad_rem(r, region_of(7, [3, 5, 2, 6]), region_of(7, [0, 0, 1]))
    assert r.to_list() == [3, 5]


def test_quad_rem_matches_oracle():
    rng = random.Random(12)
    for p in FIELD_PRIMES:
        for _ in range(200):
            m = rng.randrange(0, 9)
            n = rng.randrange(0, 25)
            a = rand_coeffs(rng, p, n + 1)
            b = rand_monic_tail(rng, p, m)
            ra, rb = region_of(p, a), region_of(p, b)
            r = Buffer.zeros(field(p), m).region()
            quad_rem(r, ra, rb)
            assert r.to_list() == ref_rem(a, b, p)
            assert ra.to_list() == a and rb.to_list() == b
            # reconstruction through the oracle quotient
            q, _ = ref_divmod(a, b, p)
            recon = ref_mul(b, q, p)
            recon = [(x + y) % p for x, y in
                     zip(recon + [0] * (n + 1), r.to_list() + [0] * (n + 1))][:n + 1]
            if n >= m:
                assert recon == a


def test_quad_rem_overplace_layout():
    rng = random.Random(13)
    for p in (5, 7, 65521):
        for _ in range(200):
            m = rng.randrange(1, 8)
            n = rng.randrange(m, 20)
            a = rand_coeffs(rng, p, n + 1)
            b = rand_monic_tail(rng, p, m)
            ra = region_of(p, a)
            quad_rem_overplace(ra, region_of(p, b))
            q, r = ref_divmod(a, b, p)
            assert ra.to_list() == ref_rem(a, b, p) + q


def test_quad_rem_rejects_zero_leading():
    with pytest.raises(NonMonicLeadingZero):
        quad_rem(Buffer.zeros(field(5), 1).region(), region_of(5, [1, 1]),
                 region_of(5, [1, 0]))
    with pytest.raises(NonMonicLeadingZero):
        quad_rem_overplace(region_of(5, [1, 1]), region_of(5, []))


def test_threshold_validation():
    with pytest.raises(ValueError):
        Schoolbook(0)
    assert Schoolbook(1).threshold == 1
