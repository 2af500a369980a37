#!/usr/bin/env python3
"""Counting field operations and policing space with measurement scopes.

A scope attached to the field records adds/muls/divs, the peak number of
auxiliary field elements acquired, and the peak recursion depth.  Setting
a ceiling turns the record into an enforced guard.
"""

import random

from ffpoly import (
    Buffer,
    Field,
    GuardViolation,
    acc_mul_full,
    conv_acc,
    measure,
    poly_region,
    remainder_in_place,
)

F = Field(65521)
rng = random.Random(5)


def rand(n):
    return poly_region(F, [rng.randrange(F.p) for _ in range(n)])


# Schoolbook 8x8 accumulation: exactly 64 multiplications, by definition.
c = Buffer.zeros(F, 15).region()
with measure(F) as scope:
    acc_mul_full(c, rand(8), rand(8))
print(f"8x8 schoolbook: {scope.muls} muls, {scope.adds} adds")

# Convolution cost versus the building block it reduces to.
for n in (64, 128, 256, 512):
    a, b, c = rand(n), rand(n), rand(n)
    with measure(F) as conv_scope:
        conv_acc(c, a, b, f=1)
    h = n // 2
    ch = Buffer.zeros(F, 2 * h - 1).region()
    with measure(F) as mul_scope:
        acc_mul_full(ch, rand(h), rand(h))
    t = conv_scope.counter.total
    s = mul_scope.counter.total
    print(f"n={n:4d}: conv cost {t:8d}  = {t / s:.2f} x half-size multiplication")

# Peak auxiliary allocation of the in-place family is zero, and a ceiling
# of zero proves it: buffers acquired inside the scope would trip it.
a, b, c = rand(512), rand(512), rand(512)
with measure(F, max_aux=0) as scope:
    conv_acc(c, a, b, f=3)
print(f"conv n=512: peak aux = {scope.peak_aux}, depth = {scope.peak_depth}")

try:
    with measure(F, max_aux=0):
        Buffer.zeros(F, 16)
except GuardViolation as e:
    print("ceiling works:", e)

# Remainder cost scales linearly in deg A at fixed deg B.
B = poly_region(F, [rng.randrange(F.p) for _ in range(16)] + [1])
for n_deg in (256, 512, 1024):
    A = rand(n_deg + 1)
    r = Buffer.zeros(F, 16).region()
    with measure(F) as scope:
        remainder_in_place(r, A, B)
    print(f"deg A = {n_deg:5d}, deg B = 16: {scope.counter.total:7d} ops")
