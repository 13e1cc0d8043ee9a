"""Shared oracles for the test suite.

Everything here recomputes results along a route independent of the
package internals: direct sign summation instead of the butterfly,
Sylvester matrices built by doubling, and the classical half-split
recipe for bent truth tables.  Frozen constants elsewhere in the suite
were produced by these helpers.
"""

from __future__ import annotations

import numpy as np

from bentkit import gf2n
from bentkit.boolfun import BooleanFunction


def slow_walsh(f: BooleanFunction, mu: int, spec=None) -> int:
    """One coefficient by direct +-1 summation over the domain."""
    total = 0
    for x in range(1 << f.n):
        if spec is None:
            pair = (mu & x).bit_count() & 1
        else:
            pair = gf2n.trace_abs(gf2n.mul(mu, x, spec), spec)
        total += -1 if (f(x) ^ pair) else 1
    return total


def sylvester(n: int) -> np.ndarray:
    h = np.array([[1]], dtype=np.int64)
    for _ in range(n):
        h = np.block([[h, h], [h, -h]])
    return h


def random_function(rng, n: int) -> BooleanFunction:
    return BooleanFunction.from_bits(n, [rng.randrange(2) for _ in range(1 << n)])


def inner_product_fn(n: int) -> BooleanFunction:
    """f(y, z) = y.z on half-split coordinates; bent and self dual."""
    m = n // 2
    mask = (1 << m) - 1
    bits = [(x & (x >> m) & mask).bit_count() & 1 for x in range(1 << n)]
    return BooleanFunction.from_bits(n, bits)


def random_mm_bent(rng, n: int) -> BooleanFunction:
    """y.pi(z) + g(z) on half-split coordinates, pi a random permutation."""
    m = n // 2
    mask = (1 << m) - 1
    perm = list(range(1 << m))
    rng.shuffle(perm)
    gbits = [rng.randrange(2) for _ in range(1 << m)]
    bits = []
    for x in range(1 << n):
        lo, hi = x & mask, x >> m
        bits.append(((lo & perm[hi]).bit_count() & 1) ^ gbits[hi])
    return BooleanFunction.from_bits(n, bits)


def xor_rank(vectors) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return len(basis)


def xor_span(vectors) -> set[int]:
    span = {0}
    for v in vectors:
        span |= {s ^ v for s in span}
    return span


def random_affine_image(rng, h: BooleanFunction) -> BooleanFunction:
    """h(Ax + c) + l.x + e for random invertible A, shift c, affine tail."""
    n = h.n
    while True:
        cols = [rng.randrange(1, 1 << n) for _ in range(n)]
        if xor_rank(cols) == n:
            break
    c = rng.randrange(1 << n)
    ell = rng.randrange(1 << n)
    e = rng.randrange(2)
    bits = []
    for x in range(1 << n):
        y = c
        for i in range(n):
            if x >> i & 1:
                y ^= cols[i]
        bits.append(h(y) ^ ((ell & x).bit_count() & 1) ^ e)
    return BooleanFunction.from_bits(n, bits)
