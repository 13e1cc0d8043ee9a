"""Arithmetic in GF(2^n) on integer-indexed elements.

An element is a plain int in [0, 2^n): bit i holds the coefficient of X^i
in the polynomial basis, so field addition is integer XOR and the index of
an element doubles as its truth-table position.  A FieldSpec pins the degree
and the reduction modulus (given as the bitmask of the irreducible
polynomial, e.g. 0b111 for X^2+X+1); all operations take the spec explicitly.

Degrees 1..24 are supported.  When no modulus is supplied the
lexicographically smallest irreducible bitmask of that degree is used, found
by an ascending scan with trial division, so results are reproducible
without a shipped table.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NonIrreducible, NotADivisor, SingularMap, UnsupportedDegree

MAX_DEGREE = 24


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, b: int) -> int:
    db = _poly_degree(b)
    while a and _poly_degree(a) >= db:
        a ^= b << (_poly_degree(a) - db)
    return a


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree up to deg(p)/2.

    A zero constant term means X divides p, so such bitmasks are
    rejected outright; that also rules out X itself, which cannot serve
    as a reduction modulus.  Divisors with zero constant term then
    cannot occur either, hence the scan walks odd bitmasks only.
    """
    d = _poly_degree(p)
    if d < 1 or not p & 1:
        return False
    for q in range(3, 1 << (d // 2 + 1), 2):
        if _poly_mod(p, q) == 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    for p in range(1 << n, 1 << (n + 1)):
        if is_irreducible(p):
            return p
    raise NonIrreducible(f"no irreducible of degree {n}")  # unreachable for n >= 1


@dataclass(frozen=True)
class FieldSpec:
    """Degree plus reduction modulus; hashable so derived tables can cache on it."""

    n: int
    modulus: int

    @property
    def m(self) -> int | None:
        """Half degree for even n, None otherwise."""
        return self.n // 2 if self.n % 2 == 0 else None

    def __str__(self) -> str:
        return f"GF(2^{self.n}) mod {self.modulus:x}"


def make_field(n: int, modulus: int | None = None) -> FieldSpec:
    if not isinstance(n, int) or n < 1 or n > MAX_DEGREE:
        raise UnsupportedDegree(f"degree must be in 1..{MAX_DEGREE}, got {n}")
    if modulus is None:
        modulus = default_modulus(n)
    else:
        if _poly_degree(modulus) != n:
            raise NonIrreducible(f"modulus {modulus:#x} does not have degree {n}")
        if not is_irreducible(modulus):
            raise NonIrreducible(f"modulus {modulus:#x} is reducible")
    return FieldSpec(n, modulus)


def mul(a: int, b: int, spec: FieldSpec) -> int:
    """Carry-less product reduced by the modulus."""
    n, mod = spec.n, spec.modulus
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= mod
    return r


def power(a: int, e: int, spec: FieldSpec) -> int:
    if e < 0:
        raise ValueError("negative exponent")
    r = 1
    while e:
        if e & 1:
            r = mul(r, a, spec)
        a = mul(a, a, spec)
        e >>= 1
    return r


def inverse(a: int, spec: FieldSpec) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return power(a, (1 << spec.n) - 2, spec)


def frobenius(a: int, k: int, spec: FieldSpec) -> int:
    """a ** (2 ** (k mod n)), i.e. k applications of the squaring map."""
    for _ in range(k % spec.n):
        a = mul(a, a, spec)
    return a


@functools.lru_cache(maxsize=None)
def _trace_mask(spec: FieldSpec) -> int:
    # bit i = Tr(X^i), computed from the defining sum of conjugates
    mask = 0
    for i in range(spec.n):
        t, x = 0, 1 << i
        for _ in range(spec.n):
            t ^= x
            x = mul(x, x, spec)
        assert t in (0, 1), "trace landed outside the prime field"
        if t:
            mask |= 1 << i
    return mask


def trace_abs(a: int, spec: FieldSpec) -> int:
    """Absolute trace to GF(2), as 0 or 1."""
    return (a & _trace_mask(spec)).bit_count() & 1


def trace_rel(a: int, r: int, spec: FieldSpec) -> int:
    """Relative trace into the subfield GF(2^r); requires r | n."""
    if r < 1 or spec.n % r:
        raise NotADivisor(f"{r} does not divide {spec.n}")
    t = 0
    x = a
    for _ in range(spec.n // r):
        t ^= x
        x = frobenius(x, r, spec)
    assert x == a
    return t


def in_subfield(a: int, r: int, spec: FieldSpec) -> bool:
    """True iff a lies in the subfield GF(2^r); requires r | n."""
    if r < 1 or spec.n % r:
        raise NotADivisor(f"{r} does not divide {spec.n}")
    return frobenius(a, r, spec) == a


def trace_abs_in(a: int, r: int, spec: FieldSpec) -> int:
    """Absolute trace of a subfield element, taken inside GF(2^r).

    For a in the subfield GF(2^r) of GF(2^n) this is the sum of the r
    conjugates a^(2^k), k < r, which lands in GF(2).  Distinct from
    trace_abs: the full-field trace vanishes identically on a half-degree
    subfield when n/r is even.
    """
    if not in_subfield(a, r, spec):
        raise ValueError(f"{a:#x} is not in GF(2^{r})")
    t = 0
    x = a
    for _ in range(r):
        t ^= x
        x = mul(x, x, spec)
    assert t in (0, 1)
    return t


@functools.lru_cache(maxsize=None)
def _covector_images(spec: FieldSpec) -> tuple[int, ...]:
    # image of each basis vector under mu -> covector(mu); entry j has
    # bit i = Tr(X^(i+j))
    tp = []
    x = 1
    for _ in range(2 * spec.n - 1):
        tp.append(trace_abs(x, spec))
        x = mul(x, 2, spec)
    return tuple(
        sum(tp[i + j] << i for i in range(spec.n)) for j in range(spec.n)
    )


def covector(mu: int, spec: FieldSpec) -> int:
    """Bitmask v with parity(v & x) = Tr(mu * x) for every x.

    Bridges the trace pairing on field elements and the dot pairing on
    plain bit vectors; it is a bijection because the trace form is
    non-degenerate.
    """
    images = _covector_images(spec)
    v = 0
    j = 0
    while mu:
        if mu & 1:
            v ^= images[j]
        mu >>= 1
        j += 1
    return v


def _column_echelon(cols: list[int]):
    """Echelonize images of basis vectors, tracking input combinations.

    Returns (rows, kernel): rows is a list of (pivot_bit, vector, combo)
    with distinct pivots, kernel is a list of input combos mapping to zero.
    """
    rows: list[tuple[int, int, int]] = []
    kernel: list[int] = []
    for j, v in enumerate(cols):
        combo = 1 << j
        for pb, bv, bc in rows:
            if v >> pb & 1:
                v ^= bv
                combo ^= bc
        if v:
            rows.append((v.bit_length() - 1, v, combo))
        else:
            kernel.append(combo)
    return rows, kernel


@functools.lru_cache(maxsize=None)
def _linearized_rows(lam: int, t: int, spec: FieldSpec):
    lam_t = frobenius(lam, t, spec)
    cols = [
        mul(lam, 1 << j, spec) ^ mul(lam_t, frobenius(1 << j, 2 * t, spec), spec)
        for j in range(spec.n)
    ]
    rows, _ = _column_echelon(cols)
    return tuple(rows)


def solve_linearized(lam: int, t: int, rhs: int, spec: FieldSpec) -> int:
    """Solve lam*y + lam^(2^t) * y^(2^(2t)) = rhs for y.

    The map is GF(2)-linear in y; it is echelonized once per (lam, t) and
    cached, so repeated solves against the same map cost O(n) reductions.
    Raises SingularMap when the map is not invertible.
    """
    rows = _linearized_rows(lam, t, spec)
    if len(rows) < spec.n:
        raise SingularMap(f"linearized map for lam={lam:#x}, t={t} has rank {len(rows)}")
    y = 0
    for pb, bv, bc in rows:
        if rhs >> pb & 1:
            rhs ^= bv
            y ^= bc
    assert rhs == 0
    return y


def nullspace(rows: list[int], n: int) -> list[int]:
    """Basis of {x : parity(x & row) = 0 for every row}, ascending."""
    pivots: dict[int, int] = {}
    for row in rows:
        for c, r in pivots.items():
            if row >> c & 1:
                row ^= r
        if row:
            pivots[row.bit_length() - 1] = row
    for c in sorted(pivots, reverse=True):
        r = pivots[c]
        for c2 in list(pivots):
            if c2 != c and pivots[c2] >> c & 1:
                pivots[c2] ^= r
    basis = []
    for j in range(n):
        if j in pivots:
            continue
        v = 1 << j
        for c, r in pivots.items():
            if r >> j & 1:
                v |= 1 << c
        basis.append(v)
    return sorted(basis)


def ortho_complement(mus: tuple[int, ...] | list[int], spec: FieldSpec) -> list[int]:
    """Basis of {alpha : Tr(alpha * mu_i) = 0 for every mu_i}."""
    size = 1 << spec.n
    for mu in mus:
        if not 0 <= mu < size:
            raise ValueError(f"element {mu:#x} outside the field")
    return nullspace([covector(mu, spec) for mu in mus], spec.n)


@functools.lru_cache(maxsize=None)
def subfield_elements(r: int, spec: FieldSpec) -> tuple[int, ...]:
    """All elements of GF(2^r) inside the field, ascending; requires r | n."""
    if r < 1 or spec.n % r:
        raise NotADivisor(f"{r} does not divide {spec.n}")
    cols = [frobenius(1 << j, r, spec) ^ (1 << j) for j in range(spec.n)]
    _, kernel = _column_echelon(cols)
    assert len(kernel) == r
    elems = [0]
    for b in kernel:
        elems += [e ^ b for e in elems]
    assert len(elems) == 1 << r
    return tuple(sorted(elems))


def to_hex(a: int) -> str:
    """Spec'd wire format for a field element: lowercase hex, no prefix."""
    return format(a, "x")


def from_hex(s: str) -> int:
    a = int(s, 16)
    if a < 0:
        raise ValueError(f"negative element {s!r}")
    return a
