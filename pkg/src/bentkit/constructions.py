"""Secondary bent constructions of the form h = f + F(phi_1, ..., phi_r).

The central object is the companion certificate: f together with a tuple
phi has the companion property when every f + omega.phi is bent and the
duals move additively, (f + omega.phi)~ = f~ + omega.phi' for a fixed
companion tuple phi'.  The weight-one cases force phi'_i = f~ + (f+phi_i)~,
so the checker derives the only possible companion and then verifies every
omega against it.  Under a valid certificate, h = f + F(phi) is bent for
every F on r inputs with dual h~ = f~ + F(phi').

The specialized builders below (three-function majority, one- and
two-linear-factor corrections, linear-form tuples, and their shifted
variants) each check the hypotheses of their construction, raise
SideConditionFailed naming the violated clause otherwise, and always
verify the built pair spectrally before reporting.

Every entry point takes an optional FieldSpec selecting the trace pairing
for linear forms, complements, and duals; the default is the dot pairing
on plain bit vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf2n
from .boolfun import (
    BooleanFunction,
    VectorialFunction,
    algebraic_degree,
    compose,
    dot_form,
    dual,
    is_bent,
    linear_form,
    translate,
)
from .errors import ArityMismatch, CertificateInvalid, SideConditionFailed


@dataclass(frozen=True)
class PrCertificate:
    holds: bool
    varphi: VectorialFunction | None
    witness_omega: int | None = None
    witness_x: int | None = None
    spec: gf2n.FieldSpec | None = None


@dataclass
class ConstructionReport:
    h: BooleanFunction
    h_star: BooleanFunction | None
    side_conditions: list[tuple[str, bool]]
    params: dict
    warnings: list[str] = field(default_factory=list)
    bent: bool = False
    dual_matches: bool = False
    spec: gf2n.FieldSpec | None = None

    @property
    def ok(self) -> bool:
        return (
            all(passed for _, passed in self.side_conditions)
            and self.bent
            and self.dual_matches
        )


def _lin(n: int, mu: int, spec: gf2n.FieldSpec | None) -> BooleanFunction:
    return linear_form(spec, mu) if spec is not None else dot_form(n, mu)


def _pair_bit(a: int, b: int, spec: gf2n.FieldSpec | None) -> int:
    if spec is None:
        return (a & b).bit_count() & 1
    return gf2n.trace_abs(gf2n.mul(a, b, spec), spec)


def _maj(a: BooleanFunction, b: BooleanFunction, c: BooleanFunction) -> BooleanFunction:
    return (a & b) ^ (a & c) ^ (b & c)


def _check_domain(n: int, name: str, *values: int) -> None:
    for v in values:
        if not 0 <= v < 1 << n:
            raise ValueError(f"{name} {v:#x} outside the {n}-variable domain")


def _degeneracy_warnings(mus, n: int) -> list[str]:
    warnings = []
    if any(mu == 0 for mu in mus):
        warnings.append("zero element among the mu tuple")
    if len(set(mus)) != len(mus):
        warnings.append("repeated element in the mu tuple")
    basis: dict[int, int] = {}  # leading bit -> reduced vector
    dependent = False
    for mu in mus:
        v = mu
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
        else:
            dependent = True
    if dependent and not warnings:
        warnings.append("linearly dependent mu tuple")
    return warnings


def _finish(h, h_star, conds, params, warnings, spec) -> ConstructionReport:
    report = ConstructionReport(
        h=h,
        h_star=h_star,
        side_conditions=conds,
        params=params,
        warnings=warnings,
        spec=spec,
    )
    report.bent = is_bent(h)
    if h_star is not None:
        report.dual_matches = report.bent and dual(h, spec) == h_star
    return report


def check_property_pr(
    f: BooleanFunction,
    phi: VectorialFunction,
    spec: gf2n.FieldSpec | None = None,
) -> PrCertificate:
    """Derive the forced companion tuple and verify it for every omega.

    Returns a certificate with holds=False and a witness omega (and, for a
    dual mismatch, the first disagreeing point x) as soon as one omega
    fails; omega is encoded with bit i-1 selecting phi_i.
    """
    if phi.n != f.n:
        raise ArityMismatch(f"phi is on {phi.n} variables, f on {f.n}")
    if not is_bent(f):
        return PrCertificate(False, None, witness_omega=0, spec=spec)
    f_star = dual(f, spec)
    companions = []
    for i, comp in enumerate(phi.components):
        g = f ^ comp
        if not is_bent(g):
            return PrCertificate(False, None, witness_omega=1 << i, spec=spec)
        companions.append(f_star ^ dual(g, spec))
    varphi = VectorialFunction(f.n, phi.r, tuple(companions))
    for omega in range(1 << phi.r):
        g, expected = f, f_star
        for i in range(phi.r):
            if omega >> i & 1:
                g ^= phi.components[i]
                expected ^= companions[i]
        if not is_bent(g):
            return PrCertificate(False, None, witness_omega=omega, spec=spec)
        got = dual(g, spec)
        if got != expected:
            diff = got.table ^ expected.table
            x = (diff & -diff).bit_length() - 1
            return PrCertificate(False, None, witness_omega=omega, witness_x=x, spec=spec)
    return PrCertificate(True, varphi, spec=spec)


def check_odd_sum_condition(
    f: BooleanFunction,
    gs: list[BooleanFunction] | tuple[BooleanFunction, ...],
    spec: gf2n.FieldSpec | None = None,
) -> bool:
    """Every odd-size subset of {f, g_1, ..., g_r} sums to a bent function
    whose dual is the sum of the members' duals.

    Equivalent to the companion property of (f, phi) with phi_i = f + g_i;
    the two checkers are tested against each other.
    """
    fns = [f, *gs]
    for g in fns:
        if g.n != f.n:
            raise ArityMismatch("mixed arities in the odd-sum family")
        if not is_bent(g):
            return False
    duals = [dual(g, spec) for g in fns]
    k = len(fns)
    for mask in range(1, 1 << k):
        if mask.bit_count() % 2 == 0 or mask.bit_count() == 1:
            continue
        s_tab = 0
        d_tab = 0
        for i in range(k):
            if mask >> i & 1:
                s_tab ^= fns[i].table
                d_tab ^= duals[i].table
        s = BooleanFunction(f.n, s_tab)
        if not is_bent(s):
            return False
        if dual(s, spec).table != d_tab:
            return False
    return True


def build_generic(
    f: BooleanFunction,
    F: BooleanFunction,
    phi: VectorialFunction,
    certificate: PrCertificate,
) -> ConstructionReport:
    """h = f + F(phi) under a companion certificate; dual from the companions."""
    if not certificate.holds or certificate.varphi is None:
        raise CertificateInvalid("certificate does not hold")
    if F.n != phi.r:
        raise ArityMismatch(f"F takes {F.n} inputs, phi supplies {phi.r}")
    if certificate.varphi.r != phi.r or certificate.varphi.n != phi.n:
        raise CertificateInvalid("certificate shape does not match phi")
    spec = certificate.spec
    h = f ^ compose(F, phi)
    h_star = dual(f, spec) ^ compose(F, certificate.varphi)
    params = {"r": phi.r, "F": F.table}
    return _finish(h, h_star, [("certificate-holds", True)], params, [], spec)


def carlet_build(
    f1: BooleanFunction,
    f2: BooleanFunction,
    f3: BooleanFunction,
    spec: gf2n.FieldSpec | None = None,
) -> ConstructionReport:
    """Majority of three bent functions whose sum is bent with additive dual."""
    conds = []
    for name, g in (("f1-bent", f1), ("f2-bent", f2), ("f3-bent", f3)):
        if not is_bent(g):
            raise SideConditionFailed(name)
        conds.append((name, True))
    s = f1 ^ f2 ^ f3
    if not is_bent(s):
        raise SideConditionFailed("sum-bent")
    conds.append(("sum-bent", True))
    d1, d2, d3 = dual(f1, spec), dual(f2, spec), dual(f3, spec)
    if dual(s, spec) != d1 ^ d2 ^ d3:
        raise SideConditionFailed("dual-additive")
    conds.append(("dual-additive", True))
    h = _maj(f1, f2, f3)
    h_star = _maj(d1, d2, d3)
    return _finish(h, h_star, conds, {}, [], spec)


def mesnager_build(
    f: BooleanFunction,
    a: int,
    b: int,
    spec: gf2n.FieldSpec | None = None,
) -> ConstructionReport:
    """h = f + l_a l_b, bent iff the second derivative of the dual by (a, b)
    vanishes; the dual is the majority of f~ and its two shifts."""
    _check_domain(f.n, "shift", a, b)
    if not is_bent(f):
        raise SideConditionFailed("f-bent")
    f_star = dual(f, spec)
    second = f_star ^ translate(f_star, a) ^ translate(f_star, b) ^ translate(f_star, a ^ b)
    if second.table != 0:
        raise SideConditionFailed("second-derivative", f"D_a D_b of the dual is nonzero (a={a:x}, b={b:x})")
    conds = [("f-bent", True), ("second-derivative", True)]
    h = f ^ (_lin(f.n, a, spec) & _lin(f.n, b, spec))
    h_star = _maj(f_star, translate(f_star, a), translate(f_star, b))
    return _finish(h, h_star, conds, {"a": a, "b": b}, [], spec)


def mesnager2_build(
    f1: BooleanFunction,
    f2: BooleanFunction,
    a: int,
    spec: gf2n.FieldSpec | None = None,
) -> ConstructionReport:
    """h = f1 + l_a (f1 + f2) for bent f1, f2 with D_a(f1~ + f2~) = 0."""
    _check_domain(f1.n, "shift", a)
    conds = []
    for name, g in (("f1-bent", f1), ("f2-bent", f2)):
        if not is_bent(g):
            raise SideConditionFailed(name)
        conds.append((name, True))
    d1, d2 = dual(f1, spec), dual(f2, spec)
    sd = d1 ^ d2
    if (sd ^ translate(sd, a)).table != 0:
        raise SideConditionFailed("derivative-sum", f"D_a(f1~ + f2~) is nonzero (a={a:x})")
    conds.append(("derivative-sum", True))
    h = f1 ^ (_lin(f1.n, a, spec) & (f1 ^ f2))
    h_star = d1 ^ (sd & (d1 ^ translate(d1, a)))
    return _finish(h, h_star, conds, {"a": a}, [], spec)


def zlj_build(
    f: BooleanFunction,
    mus: tuple[int, ...] | list[int],
    F: BooleanFunction,
    spec: gf2n.FieldSpec | None = None,
) -> ConstructionReport:
    """h = f + F(l_mu1, ..., l_mur) under vanishing pairwise second
    derivatives of the dual; companions are the dual's derivatives."""
    mus = tuple(mus)
    if len(mus) != F.n:
        raise ArityMismatch(f"F takes {F.n} inputs, got {len(mus)} elements")
    _check_domain(f.n, "element", *mus)
    if not is_bent(f):
        raise SideConditionFailed("f-bent")
    conds = [("f-bent", True)]
    f_star = dual(f, spec)
    shifted = [translate(f_star, mu) for mu in mus]
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            second = f_star ^ shifted[i] ^ shifted[j] ^ translate(f_star, mus[i] ^ mus[j])
            name = f"second-derivative[{i + 1},{j + 1}]"
            if second.table != 0:
                raise SideConditionFailed(name)
            conds.append((name, True))
    phi = VectorialFunction(f.n, F.n, tuple(_lin(f.n, mu, spec) for mu in mus))
    varphi = VectorialFunction(f.n, F.n, tuple(f_star ^ s for s in shifted))
    h = f ^ compose(F, phi)
    h_star = f_star ^ compose(F, varphi)
    params = {"mus": mus, "F": F.table}
    return _finish(h, h_star, conds, params, _degeneracy_warnings(mus, f.n), spec)


def cornew_build(
    f: BooleanFunction,
    g: BooleanFunction,
    mus: tuple[int, ...] | list[int],
    F: BooleanFunction,
    spec: gf2n.FieldSpec | None = None,
) -> ConstructionReport:
    """h = f + F(f + g, l_mu2, ..., l_mur) for a second bent g whose dual
    shifts compatibly along the mu span.

    Condition (B) is checked literally: for every selector omega' over the
    mu tuple and every x,
      g~(x + sum omega_i mu_i) = g~(x) + sum omega_i f~(x + mu_i)
                                 [+ f~(x) when omega' has odd weight],
    at a cost of 2^(r-1) table comparisons with early exit.
    """
    mus = tuple(mus)
    if F.n != len(mus) + 1:
        raise ArityMismatch(f"F takes {F.n} inputs, expected {len(mus) + 1}")
    if g.n != f.n:
        raise ArityMismatch("f and g disagree on arity")
    _check_domain(f.n, "element", *mus)
    conds = []
    for name, fn in (("f-bent", f), ("g-bent", g)):
        if not is_bent(fn):
            raise SideConditionFailed(name)
        conds.append((name, True))
    f_star, g_star = dual(f, spec), dual(g, spec)
    shifted = [translate(f_star, mu) for mu in mus]
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            second = f_star ^ shifted[i] ^ shifted[j] ^ translate(f_star, mus[i] ^ mus[j])
            name = f"second-derivative[{i + 2},{j + 2}]"
            if second.table != 0:
                raise SideConditionFailed(name)
            conds.append((name, True))
    for omega in range(1, 1 << len(mus)):
        s = 0
        rhs = g_star.table
        for i in range(len(mus)):
            if omega >> i & 1:
                s ^= mus[i]
                rhs ^= shifted[i].table
        if omega.bit_count() % 2:
            rhs ^= f_star.table
        lhs = translate(g_star, s).table
        if lhs != rhs:
            diff = lhs ^ rhs
            x = (diff & -diff).bit_length() - 1
            raise SideConditionFailed(
                "dual-shift", f"fails at omega'={omega:x}, x={x:x}", witness=(omega, x)
            )
    conds.append(("dual-shift", True))
    phi = VectorialFunction(
        f.n, F.n, (f ^ g, *(_lin(f.n, mu, spec) for mu in mus))
    )
    varphi = VectorialFunction(
        f.n, F.n, (f_star ^ g_star, *(f_star ^ s for s in shifted))
    )
    h = f ^ compose(F, phi)
    h_star = f_star ^ compose(F, varphi)
    params = {"mus": mus, "F": F.table}
    return _finish(h, h_star, conds, params, _degeneracy_warnings(mus, f.n), spec)


def correduced_build(
    f: BooleanFunction,
    alpha: int,
    mus: tuple[int, ...] | list[int],
    F: BooleanFunction,
    spec: gf2n.FieldSpec | None = None,
) -> ConstructionReport:
    """h = f + F(D_alpha f, l_mu2, ..., l_mur) with alpha orthogonal to the
    mu tuple; the dual swaps the first slot to l_alpha."""
    mus = tuple(mus)
    if F.n != len(mus) + 1:
        raise ArityMismatch(f"F takes {F.n} inputs, expected {len(mus) + 1}")
    _check_domain(f.n, "element", alpha, *mus)
    if not is_bent(f):
        raise SideConditionFailed("f-bent")
    conds = [("f-bent", True)]
    for i, mu in enumerate(mus):
        if _pair_bit(alpha, mu, spec):
            raise SideConditionFailed(
                "alpha-complement", f"<alpha, mu_{i + 2}> = 1 (alpha={alpha:x}, mu={mu:x})"
            )
    conds.append(("alpha-complement", True))
    f_star = dual(f, spec)
    shifted = [translate(f_star, mu) for mu in mus]
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            second = f_star ^ shifted[i] ^ shifted[j] ^ translate(f_star, mus[i] ^ mus[j])
            name = f"second-derivative[{i + 2},{j + 2}]"
            if second.table != 0:
                raise SideConditionFailed(name)
            conds.append((name, True))
    phi = VectorialFunction(
        f.n, F.n, (f ^ translate(f, alpha), *(_lin(f.n, mu, spec) for mu in mus))
    )
    varphi = VectorialFunction(
        f.n, F.n, (_lin(f.n, alpha, spec), *(f_star ^ s for s in shifted))
    )
    h = f ^ compose(F, phi)
    h_star = f_star ^ compose(F, varphi)
    params = {"alpha": alpha, "mus": mus, "F": F.table}
    return _finish(h, h_star, conds, params, _degeneracy_warnings(mus, f.n), spec)


def report_degrees(report: ConstructionReport) -> tuple[int, int | None]:
    """(degree of h, degree of h~ or None); used by the CLI report writer."""
    dh = algebraic_degree(report.h)
    ds = algebraic_degree(report.h_star) if report.h_star is not None else None
    return dh, ds
