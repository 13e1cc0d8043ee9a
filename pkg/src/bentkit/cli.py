"""Command-line front end.

Every command prints a flat report of "key: value" lines in a fixed
order, the timing line always last, so two runs of the same command
produce byte-identical output apart from elapsed-ms.  Data outputs
(truth tables, spectra, search streams) print in their wire formats
instead.

Exit codes: 0 success, 2 malformed input or field errors, 3 a function
that ought to be bent is not, 4 a construction hypothesis or parameter
admissibility clause failed.  Field elements are read and written as
lowercase hex indices; F tables as plain binary strings; the
BENT_MAX_N environment variable (default 16, hard cap 24) bounds the
accepted degrees.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import gf2n
from .boolfun import (
    BooleanFunction,
    VectorialFunction,
    algebraic_degree,
    anf,
    derivative,
    dual,
    from_text,
    is_bent,
    parse_bitstring,
    to_text,
    wht,
)
from .constructions import (
    build_generic,
    carlet_build,
    check_property_pr,
    cornew_build,
    correduced_build,
    mesnager2_build,
    mesnager_build,
    report_degrees,
    zlj_build,
)
from .errors import (
    CertificateInvalid,
    NotBent,
    NotBentAdmissible,
    SideConditionFailed,
    SingularMap,
    UnsupportedDegree,
    ZeroDenominator,
)
from .families import (
    GoldParams,
    MMParams,
    corn4t_build,
    cort_m_build,
    gold_build,
    gold_dual_build,
    mm_build,
    mm_dual_build,
    parse_permutation_text,
    thfromgold_build,
    thmm_build,
)
from .search import (
    MuSearchSpec,
    ea_fingerprint,
    find_alphas,
    find_gold_lambdas,
    find_mu_tuples,
)

EXIT_INPUT, EXIT_NOT_BENT, EXIT_CONDITION = 2, 3, 4


class Report:
    """Ordered key: value emitter with the elapsed-ms line appended last."""

    def __init__(self, command: str):
        self._t0 = time.perf_counter()
        self._lines: list[tuple[str, str]] = [("command", command)]

    def add(self, key: str, value) -> None:
        self._lines.append((key, str(value)))

    def emit(self) -> None:
        self._lines.append(("elapsed-ms", f"{(time.perf_counter() - self._t0) * 1e3:.1f}"))
        sys.stdout.write("".join(f"{k}: {v}\n" for k, v in self._lines))


# ------------------------------------------------------------ plumbing


def max_degree_cap() -> int:
    raw = os.environ.get("BENT_MAX_N")
    if raw is None:
        return 16
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"BENT_MAX_N is not an integer: {raw!r}") from None
    return max(1, min(cap, gf2n.MAX_DEGREE))


def _guard(n: int) -> None:
    cap = max_degree_cap()
    if n > cap:
        raise UnsupportedDegree(f"degree {n} exceeds the BENT_MAX_N cap of {cap}")


def _hex(tok: str) -> int:
    try:
        v = int(tok, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex field element: {tok!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("field elements are non-negative")
    return v


def _hex_tuple(tok: str) -> tuple[int, ...]:
    tok = tok.strip()
    if not tok:
        return ()
    try:
        return tuple(int(p, 16) for p in tok.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated hex tuple: {tok!r}") from None


def _hx(v: int) -> str:
    return f"{v:x}"


def _b(flag: bool) -> str:
    return "true" if flag else "false"


def _read_fn(path: str) -> BooleanFunction:
    f = from_text(Path(path).read_text())
    _guard(f.n)
    return f


def _write_fn(path: str, f: BooleanFunction) -> None:
    Path(path).write_text(to_text(f))


def _field(n: int, modulus: int | None) -> gf2n.FieldSpec:
    _guard(n)
    return gf2n.make_field(n, modulus)


def _field_for(f: BooleanFunction, args) -> gf2n.FieldSpec | None:
    # dot pairing needs no field structure at all
    if args.pairing == "trace":
        return gf2n.make_field(f.n, args.modulus)
    return None


def _field_lines(rep: Report, spec: gf2n.FieldSpec, pairing: str) -> None:
    rep.add("n", spec.n)
    rep.add("modulus", _hx(spec.modulus))
    rep.add("pairing", pairing)


def _pairing_lines(rep: Report, n: int, spec: gf2n.FieldSpec | None, pairing: str) -> None:
    rep.add("n", n)
    if spec is not None:
        rep.add("modulus", _hx(spec.modulus))
    rep.add("pairing", pairing)


def _poly_str(p: int) -> str:
    terms = []
    for i in range(p.bit_length() - 1, -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms) if terms else "0"


def _anf_str(form) -> str:
    if form.coeffs == 0:
        return "0"
    terms = []
    for u in range(1 << form.n):
        if form.coeffs >> u & 1:
            terms.append("1" if u == 0 else "".join(f"x{i + 1}" for i in range(form.n) if u >> i & 1))
    return " + ".join(terms)


def _emit_construction(rep: Report, cons, args) -> int:
    for name, passed in cons.side_conditions:
        rep.add(f"condition[{name}]", "pass" if passed else "fail")
    for w in cons.warnings:
        rep.add("warning", w)
    rep.add("bent", _b(cons.bent))
    rep.add("dual-matches", _b(cons.dual_matches))
    dh, ds = report_degrees(cons)
    rep.add("degree-h", dh)
    if ds is not None:
        rep.add("degree-dual", ds)
    _write_fn(args.out_h, cons.h)
    rep.add("out-h", args.out_h)
    if cons.h_star is not None:
        _write_fn(args.out_dual, cons.h_star)
        rep.add("out-dual", args.out_dual)
    rep.emit()
    return 0 if cons.ok else EXIT_NOT_BENT


# ------------------------------------------------------------ commands


def cmd_field_info(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report("field info")
    rep.add("n", spec.n)
    rep.add("modulus", _hx(spec.modulus))
    rep.add("modulus-poly", _poly_str(spec.modulus))
    rep.add("default-modulus", _hx(gf2n.default_modulus(spec.n)))
    rep.add("subfields", ",".join(str(d) for d in range(1, spec.n + 1) if spec.n % d == 0))
    rep.emit()
    return 0


def cmd_fn(args) -> int:
    f = _read_fn(args.infile)
    spec = _field_for(f, args)
    if args.op == "walsh":
        w = wht(f, spec)
        sys.stdout.write("".join(f"{mu:x} {int(w.values[mu])}\n" for mu in range(w.values.size)))
    elif args.op == "bent":
        rep = Report("fn bent")
        rep.add("n", f.n)
        rep.add("bent", _b(is_bent(f)))
        rep.emit()
    elif args.op == "dual":
        sys.stdout.write(to_text(dual(f, spec)))
    elif args.op == "degree":
        rep = Report("fn degree")
        rep.add("n", f.n)
        rep.add("degree", algebraic_degree(f))
        rep.emit()
    elif args.op == "anf":
        sys.stdout.write(_anf_str(anf(f)) + "\n")
    else:
        if args.mu is None:
            raise ValueError("fn derivative needs --mu")
        if not 0 <= args.mu < 1 << f.n:
            raise ValueError(f"mu {args.mu:#x} outside the {f.n}-variable domain")
        sys.stdout.write(to_text(derivative(f, args.mu)))
    return 0


def cmd_c_gold(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report(f"construct {args.shape}")
    _field_lines(rep, spec, "trace")
    rep.add("lambda", _hx(args.lam))
    rep.add("t", args.t)
    build = gold_dual_build if args.shape == "gold-dual" else gold_build
    return _emit_construction(rep, build(GoldParams(spec, args.lam, args.t)), args)


def cmd_c_thm8(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report("construct thm8")
    _field_lines(rep, spec, "trace")
    rep.add("lambda", _hx(args.lam))
    rep.add("t", args.t)
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("alpha", _hx(args.alpha))
    rep.add("F", args.F)
    F = parse_bitstring(args.F)
    cons = thfromgold_build(GoldParams(spec, args.lam, args.t), args.mus, args.alpha, F)
    return _emit_construction(rep, cons, args)


def cmd_c_cor9(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report("construct cor9")
    _field_lines(rep, spec, "trace")
    rep.add("theta", _hx(args.theta))
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("alpha", _hx(args.alpha))
    rep.add("F", args.F)
    cons = cort_m_build(spec, args.theta, args.mus, args.alpha, parse_bitstring(args.F))
    return _emit_construction(rep, cons, args)


def cmd_c_cor10(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report("construct cor10")
    _field_lines(rep, spec, "trace")
    rep.add("lambda", _hx(args.lam))
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("alpha", _hx(args.alpha))
    rep.add("F", args.F)
    cons = corn4t_build(spec, args.lam, args.mus, args.alpha, parse_bitstring(args.F))
    rep.add("p-lambda", _hx(cons.params["p_lam"]))
    return _emit_construction(rep, cons, args)


def _mm_params(args, spec: gf2n.FieldSpec, rep: Report) -> MMParams:
    m = spec.n // 2
    rep.add("lambda", _hx(args.lam))
    rep.add("t", args.t)
    if args.pi_file is not None:
        fm, images = parse_permutation_text(Path(args.pi_file).read_text())
        if fm != m:
            raise ValueError(f"permutation acts on GF(2^{fm}), the field needs GF(2^{m})")
        pi: int | tuple[int, ...] = images
        rep.add("pi", f"file:{args.pi_file}")
    else:
        pi = args.pi_power
        rep.add("pi", f"power:{args.pi_power}")
    if args.g_file is not None:
        g = _read_fn(args.g_file)
        rep.add("g", f"file:{args.g_file}")
    elif args.g_bits is not None:
        g = parse_bitstring(args.g_bits)
        rep.add("g", args.g_bits)
    else:
        g = BooleanFunction.const(m, 0)
        rep.add("g", "0" * (1 << m))
    return MMParams(spec, args.lam, args.t, pi, g)


def cmd_c_mm(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report(f"construct {args.shape}")
    _field_lines(rep, spec, "trace")
    p = _mm_params(args, spec, rep)
    if args.omega is not None:
        rep.add("omega", _hx(args.omega))
    build = mm_dual_build if args.shape == "mm-dual" else mm_build
    return _emit_construction(rep, build(p, args.omega), args)


def cmd_c_thm12(args) -> int:
    spec = _field(args.n, args.modulus)
    rep = Report("construct thm12")
    _field_lines(rep, spec, "trace")
    p = _mm_params(args, spec, rep)
    if args.omega is not None:
        rep.add("omega", _hx(args.omega))
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("alpha", _hx(args.alpha))
    rep.add("F", args.F)
    cons = thmm_build(p, args.mus, args.alpha, parse_bitstring(args.F), args.omega)
    return _emit_construction(rep, cons, args)


def cmd_c_zlj(args) -> int:
    f = _read_fn(args.f)
    spec = _field_for(f, args)
    rep = Report("construct zlj")
    _pairing_lines(rep, f.n, spec, args.pairing)
    rep.add("f", args.f)
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("F", args.F)
    cons = zlj_build(f, args.mus, parse_bitstring(args.F), spec)
    return _emit_construction(rep, cons, args)


def cmd_c_cornew(args) -> int:
    f, g = _read_fn(args.f), _read_fn(args.g)
    spec = _field_for(f, args)
    rep = Report("construct cornew")
    _pairing_lines(rep, f.n, spec, args.pairing)
    rep.add("f", args.f)
    rep.add("g", args.g)
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("F", args.F)
    cons = cornew_build(f, g, args.mus, parse_bitstring(args.F), spec)
    return _emit_construction(rep, cons, args)


def cmd_c_correduced(args) -> int:
    f = _read_fn(args.f)
    spec = _field_for(f, args)
    rep = Report("construct correduced")
    _pairing_lines(rep, f.n, spec, args.pairing)
    rep.add("f", args.f)
    rep.add("alpha", _hx(args.alpha))
    rep.add("mus", ",".join(map(_hx, args.mus)))
    rep.add("F", args.F)
    cons = correduced_build(f, args.alpha, args.mus, parse_bitstring(args.F), spec)
    return _emit_construction(rep, cons, args)


def cmd_c_carlet(args) -> int:
    f1, f2, f3 = _read_fn(args.f1), _read_fn(args.f2), _read_fn(args.f3)
    spec = _field_for(f1, args)
    rep = Report("construct carlet")
    _pairing_lines(rep, f1.n, spec, args.pairing)
    rep.add("f1", args.f1)
    rep.add("f2", args.f2)
    rep.add("f3", args.f3)
    return _emit_construction(rep, carlet_build(f1, f2, f3, spec), args)


def cmd_c_mesnager1(args) -> int:
    f = _read_fn(args.f)
    spec = _field_for(f, args)
    rep = Report("construct mesnager1")
    _pairing_lines(rep, f.n, spec, args.pairing)
    rep.add("f", args.f)
    rep.add("a", _hx(args.a))
    rep.add("b", _hx(args.b))
    return _emit_construction(rep, mesnager_build(f, args.a, args.b, spec), args)


def cmd_c_mesnager2(args) -> int:
    f1, f2 = _read_fn(args.f1), _read_fn(args.f2)
    spec = _field_for(f1, args)
    rep = Report("construct mesnager2")
    _pairing_lines(rep, f1.n, spec, args.pairing)
    rep.add("f1", args.f1)
    rep.add("f2", args.f2)
    rep.add("a", _hx(args.a))
    return _emit_construction(rep, mesnager2_build(f1, f2, args.a, spec), args)


def cmd_c_generic(args) -> int:
    f = _read_fn(args.f)
    spec = _field_for(f, args)
    phi = VectorialFunction.from_components(tuple(_read_fn(p) for p in args.phi))
    rep = Report("construct generic")
    _pairing_lines(rep, f.n, spec, args.pairing)
    rep.add("f", args.f)
    rep.add("phi", ",".join(args.phi))
    rep.add("F", args.F)
    F = parse_bitstring(args.F, phi.r)
    cert = check_property_pr(f, phi, spec)
    if not cert.holds:
        detail = f"companion property fails at omega={cert.witness_omega:x}"
        if cert.witness_x is not None:
            detail += f", x={cert.witness_x:x}"
        raise CertificateInvalid(detail)
    return _emit_construction(rep, build_generic(f, F, phi, cert), args)


def cmd_search_mus(args) -> int:
    kwargs = dict(
        mode=args.mode,
        r=args.r,
        limit=args.limit,
        require_independent=not args.allow_dependent,
    )
    if args.mode == "second-derivative":
        if args.f_star is None:
            raise ValueError("second-derivative mode needs --f-star")
        kwargs["f_star"] = _read_fn(args.f_star)
    elif args.mode == "gold-trace":
        if args.n is None or args.lam is None:
            raise ValueError("gold-trace mode needs --n, --t and --lambda")
        kwargs["gold"] = GoldParams(_field(args.n, args.modulus), args.lam, args.t)
    else:
        if args.n is None or args.theta is None:
            raise ValueError("cor9-trace mode needs --n and --theta")
        kwargs["theta"] = args.theta
        kwargs["spec"] = _field(args.n, args.modulus)
    for tup in find_mu_tuples(MuSearchSpec(**kwargs), args.cursor):
        sys.stdout.write(",".join(map(_hx, tup)) + "\n")
    return 0


def cmd_search_alphas(args) -> int:
    if args.pairing == "trace":
        members = find_alphas(args.mus, args.limit, spec=_field(args.n, args.modulus))
    else:
        _guard(args.n)
        members = find_alphas(args.mus, args.limit, n=args.n)
    sys.stdout.write("".join(f"{a:x}\n" for a in members))
    return 0


def cmd_search_lambdas(args) -> int:
    spec = _field(args.n, args.modulus)
    for lam in find_gold_lambdas(spec, args.t, args.limit, args.cursor):
        sys.stdout.write(f"{lam:x}\n")
    return 0


def cmd_verify_pr(args) -> int:
    f = _read_fn(args.f)
    phi = VectorialFunction.from_components(tuple(_read_fn(p) for p in args.phi))
    spec = _field_for(f, args)
    rep = Report("verify pr")
    _pairing_lines(rep, f.n, spec, args.pairing)
    rep.add("f", args.f)
    rep.add("phi", ",".join(args.phi))
    rep.add("r", phi.r)
    cert = check_property_pr(f, phi, spec)
    rep.add("holds", _b(cert.holds))
    if not cert.holds:
        rep.add("witness-omega", _hx(cert.witness_omega))
        if cert.witness_x is not None:
            rep.add("witness-x", _hx(cert.witness_x))
    rep.emit()
    return 0


def cmd_fingerprint(args) -> int:
    f = _read_fn(args.infile)
    fp = ea_fingerprint(f)
    rep = Report("fingerprint")
    rep.add("n", f.n)
    rep.add("degree", fp.degree)
    rep.add("derivative-degrees", ",".join(f"{d}:{c}" for d, c in fp.derivative_degrees))
    rep.emit()
    return 0


# -------------------------------------------------------------- parser


def _add_out(sp) -> None:
    sp.add_argument("--out-h", default="h.tt", metavar="PATH", help="truth table of h")
    sp.add_argument("--out-dual", default="h-dual.tt", metavar="PATH", help="truth table of the dual")


def _add_pairing(sp) -> None:
    sp.add_argument("--pairing", choices=("dot", "trace"), default="dot")
    sp.add_argument("--modulus", type=_hex, help="field modulus when --pairing trace")


def _add_mus_alpha_F(sp, alpha: bool = True) -> None:
    sp.add_argument("--mus", type=_hex_tuple, required=True, metavar="HEX,HEX,...")
    if alpha:
        sp.add_argument("--alpha", type=_hex, required=True)
    sp.add_argument("--F", required=True, metavar="BITS", help="truth table of F as a binary string")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bentkit",
        description="construct and exhaustively verify bent functions and their duals",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="field structure queries")
    fsub = p_field.add_subparsers(dest="sub", required=True)
    p_info = fsub.add_parser("info", help="modulus and subfield lattice")
    p_info.add_argument("--n", type=int, required=True)
    p_info.add_argument("--modulus", type=_hex)
    p_info.set_defaults(func=cmd_field_info)

    p_fn = sub.add_parser("fn", help="pointwise operators on one truth table")
    p_fn.add_argument("op", choices=("walsh", "bent", "dual", "degree", "anf", "derivative"))
    p_fn.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_fn.add_argument("--mu", type=_hex, help="direction for the derivative")
    _add_pairing(p_fn)
    p_fn.set_defaults(func=cmd_fn)

    p_con = sub.add_parser("construct", help="run one construction and verify it")
    csub = p_con.add_subparsers(dest="shape", required=True)

    for shape in ("gold", "gold-dual"):
        sp = csub.add_parser(shape)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--modulus", type=_hex)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--lambda", dest="lam", type=_hex, required=True)
        _add_out(sp)
        sp.set_defaults(func=cmd_c_gold)

    sp = csub.add_parser("thm8")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--modulus", type=_hex)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", type=_hex, required=True)
    _add_mus_alpha_F(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_thm8)

    sp = csub.add_parser("cor9")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--modulus", type=_hex)
    sp.add_argument("--theta", type=_hex, required=True)
    _add_mus_alpha_F(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_cor9)

    sp = csub.add_parser("cor10")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--modulus", type=_hex)
    sp.add_argument("--lambda", dest="lam", type=_hex, required=True)
    _add_mus_alpha_F(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_cor10)

    def add_mm_flags(sp) -> None:
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--modulus", type=_hex)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--lambda", dest="lam", type=_hex, required=True)
        pi = sp.add_mutually_exclusive_group()
        pi.add_argument("--pi-power", type=int, default=1, metavar="K")
        pi.add_argument("--pi-file", metavar="PATH")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--g-bits", metavar="BITS")
        g.add_argument("--g-file", metavar="PATH")
        sp.add_argument("--omega", type=_hex, help="override the canonical omega")

    for shape in ("mm", "mm-dual"):
        sp = csub.add_parser(shape)
        add_mm_flags(sp)
        _add_out(sp)
        sp.set_defaults(func=cmd_c_mm)

    sp = csub.add_parser("thm12")
    add_mm_flags(sp)
    _add_mus_alpha_F(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_thm12)

    sp = csub.add_parser("zlj")
    sp.add_argument("--f", required=True, metavar="FILE")
    _add_mus_alpha_F(sp, alpha=False)
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_zlj)

    sp = csub.add_parser("cornew")
    sp.add_argument("--f", required=True, metavar="FILE")
    sp.add_argument("--g", required=True, metavar="FILE")
    _add_mus_alpha_F(sp, alpha=False)
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_cornew)

    sp = csub.add_parser("correduced")
    sp.add_argument("--f", required=True, metavar="FILE")
    sp.add_argument("--alpha", type=_hex, required=True)
    sp.add_argument("--mus", type=_hex_tuple, required=True, metavar="HEX,HEX,...")
    sp.add_argument("--F", required=True, metavar="BITS")
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_correduced)

    sp = csub.add_parser("carlet")
    sp.add_argument("--f1", required=True, metavar="FILE")
    sp.add_argument("--f2", required=True, metavar="FILE")
    sp.add_argument("--f3", required=True, metavar="FILE")
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_carlet)

    sp = csub.add_parser("mesnager1")
    sp.add_argument("--f", required=True, metavar="FILE")
    sp.add_argument("--a", type=_hex, required=True)
    sp.add_argument("--b", type=_hex, required=True)
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_mesnager1)

    sp = csub.add_parser("mesnager2")
    sp.add_argument("--f1", required=True, metavar="FILE")
    sp.add_argument("--f2", required=True, metavar="FILE")
    sp.add_argument("--a", type=_hex, required=True)
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_mesnager2)

    sp = csub.add_parser("generic")
    sp.add_argument("--f", required=True, metavar="FILE")
    sp.add_argument("--phi", required=True, nargs="+", metavar="FILE")
    sp.add_argument("--F", required=True, metavar="BITS")
    _add_pairing(sp)
    _add_out(sp)
    sp.set_defaults(func=cmd_c_generic)

    p_search = sub.add_parser("search", help="parameter enumeration, one result per line")
    ssub = p_search.add_subparsers(dest="sub", required=True)

    sp = ssub.add_parser("mus")
    sp.add_argument("--mode", choices=("second-derivative", "gold-trace", "cor9-trace"), required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--limit", type=int, default=16)
    sp.add_argument("--cursor", type=_hex_tuple, help="last tuple already emitted")
    sp.add_argument("--allow-dependent", action="store_true")
    sp.add_argument("--f-star", metavar="FILE", help="dual table for second-derivative mode")
    sp.add_argument("--n", type=int)
    sp.add_argument("--modulus", type=_hex)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--lambda", dest="lam", type=_hex)
    sp.add_argument("--theta", type=_hex)
    sp.set_defaults(func=cmd_search_mus)

    sp = ssub.add_parser("alphas")
    sp.add_argument("--mus", type=_hex_tuple, required=True, metavar="HEX,HEX,...")
    sp.add_argument("--limit", type=int, default=16)
    sp.add_argument("--n", type=int, required=True)
    _add_pairing(sp)
    sp.set_defaults(func=cmd_search_alphas)

    sp = ssub.add_parser("lambdas")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--modulus", type=_hex)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--limit", type=int, default=16)
    sp.add_argument("--cursor", type=_hex)
    sp.set_defaults(func=cmd_search_lambdas)

    p_verify = sub.add_parser("verify", help="check certified properties")
    vsub = p_verify.add_subparsers(dest="sub", required=True)
    sp = vsub.add_parser("pr")
    sp.add_argument("--f", required=True, metavar="FILE")
    sp.add_argument("--phi", required=True, nargs="+", metavar="FILE")
    _add_pairing(sp)
    sp.set_defaults(func=cmd_verify_pr)

    p_fp = sub.add_parser("fingerprint", help="EA-invariant fingerprint of one table")
    p_fp.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_fp.set_defaults(func=cmd_fingerprint)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotBent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_BENT
    except (SideConditionFailed, NotBentAdmissible, CertificateInvalid, ZeroDenominator, SingularMap) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONDITION
    except (ValueError, OSError) as exc:
        # NonIrreducible, UnsupportedDegree, NotADivisor, ArityMismatch and
        # plain parse or file problems all count as input errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
