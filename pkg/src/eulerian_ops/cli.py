"""Command-line interface.

Exit codes: 0 the property holds / computation succeeded, 1 the property
fails, 2 usage error, 3 invalid input data, 4 a size bound was refused.

Simplicial complex dimensions are combinatorial: a face with k vertices
has dimension k (one more than the topological convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import ehrhart, eulerian, permstats, polycore, topology, transform
from .errors import SizeBoundError
from .polycore import Poly, format_poly, parse_poly, poly_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3, 4


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _poly_arg(text: str) -> Poly:
    try:
        return parse_poly(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, payload: dict, lines: list[str]) -> None:
        if self.as_json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print("\n".join(lines))


def _pj(f: Poly) -> dict:
    return poly_to_json(f)


def _fmt_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.2f}{sign}{abs(z.imag):.2f}i"


def _cert_json(cert: polycore.RootCertificate) -> dict:
    return {
        "squarefree_part": _pj(cert.squarefree_part),
        "distinct_real_roots": cert.distinct_real_roots,
        "isolating_intervals": [[str(lo), str(hi), m] for lo, hi, m in cert.isolating_intervals],
        "real_rooted": cert.real_rooted,
    }


# --- subcommand handlers ---------------------------------------------------

def cmd_family(args, out):
    if args.cmd == "eulerian":
        f = eulerian.eulerian_polynomial(args.N)
    elif args.cmd == "derangement":
        f = eulerian.derangement_polynomial(args.N)
    else:
        f = eulerian.binomial_eulerian(args.N, args.r)
    out.emit({"n": args.N, "polynomial": _pj(f)}, [format_poly(f)])
    return EXIT_OK


def cmd_apply(args, out):
    f = transform.apply_operator(args.poly)
    out.emit({"input": _pj(args.poly), "polynomial": _pj(f)}, [format_poly(f)])
    return EXIT_OK


def cmd_series_poly(args, out):
    f = transform.eulerian_series_polynomial(args.N, args.x)
    cert = polycore.real_root_certificate(f)
    nonreal = [z for z in polycore.numeric_roots(f) if abs(z.imag) > 1e-9]
    if cert.real_rooted:
        verdict = f"real-rooted; {cert.distinct_real_roots} real roots"
    else:
        pairs = sorted({_fmt_complex(complex(z.real, abs(z.imag))).replace("+", "±") for z in nonreal})
        verdict = (f"not real-rooted; {cert.distinct_real_roots} real roots; "
                   f"complex pair ≈ {', '.join(pairs)}")
    out.emit({"n": args.N, "x": str(args.x), "polynomial": _pj(f), "certificate": _cert_json(cert),
              "nonreal_roots": [[z.real, z.imag] for z in nonreal], "verdict": verdict},
             [format_poly(f), verdict])
    return EXIT_OK if cert.real_rooted else EXIT_FAIL


def cmd_decompose(args, out):
    dec = transform.symmetric_decomposition(args.poly, args.n)
    out.emit({"n": args.n, "a": _pj(dec.a), "b": _pj(dec.b)},
             [f"a: {format_poly(dec.a)}", f"b: {format_poly(dec.b)}"])
    return EXIT_OK


def cmd_gamma(args, out):
    g = transform.gamma_expansion(args.poly, args.n)
    text = ",".join(str(x) for x in g.gammas)
    out.emit({"n": args.n, "gammas": [str(x) for x in g.gammas], "gamma_positive": g.positive}, [text])
    return EXIT_OK


def cmd_gamma_counts(args, out):
    counts = permstats.gamma_counts(args.N, max_n=args.max_n)
    expansion = transform.gamma_expansion(eulerian.binomial_eulerian(args.N), args.N)
    equal = tuple(expansion.gammas) == tuple(Fraction(c) for c in counts)
    out.emit({"n": args.N, "counts": list(counts),
              "gamma_expansion": [str(x) for x in expansion.gammas], "equal": equal},
             [",".join(map(str, counts)), f"equal: {str(equal).lower()}"])
    return EXIT_OK if equal else EXIT_FAIL


def cmd_realroot(args, out):
    cert = polycore.real_root_certificate(args.poly)
    lines = [f"squarefree part: {format_poly(cert.squarefree_part)}",
             f"distinct real roots: {cert.distinct_real_roots}"]
    lines += [f"  ({lo}, {hi}) multiplicity {m}" for lo, hi, m in cert.isolating_intervals]
    lines.append("real-rooted" if cert.real_rooted else "not real-rooted")
    out.emit(_cert_json(cert), lines)
    return EXIT_OK if cert.real_rooted else EXIT_FAIL


def _verdict_json(v: polycore.InterlacingVerdict) -> dict:
    return {"relation": v.relation.value,
            "witness": [[str(lo), str(hi), mg, mf] for lo, hi, mg, mf in v.witness]}


def cmd_interlace(args, out):
    v = polycore.interlaces(args.g, args.f)
    out.emit(_verdict_json(v), [v.relation.value])
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_theorem_main1(args, out):
    q = args.q
    lhs = transform.shifted_power_image(args.n, q)
    rhs = transform.shifted_power_image(args.n + 1, q)
    v = polycore.interlaces(lhs, rhs)
    distinct = all(polycore.real_root_certificate(p).distinct_real_roots == p.degree for p in (lhs, rhs))
    holds = v.strict and distinct
    out.emit({"n": args.n, "q": str(q), "lhs": _pj(lhs), "rhs": _pj(rhs),
              "relation": v.relation.value, "distinct_real_zeros": distinct, "holds": holds},
             [f"lhs: {format_poly(lhs)}", f"rhs: {format_poly(rhs)}",
              f"relation: {v.relation.value}", f"distinct real zeros: {str(distinct).lower()}",
              f"holds: {str(holds).lower()}"])
    return EXIT_OK if holds else EXIT_FAIL


def cmd_theorem_interlacing(args, out):
    p, q, n = args.p, args.q, args.n
    if not p < q:
        raise ValueError("need p < q")
    fq = transform.shifted_power_image(n, q)
    fp = transform.shifted_power_image(n, p)
    v1 = polycore.interlaces(fq, fp)
    rev = polycore.reverse(fp, n)
    v2 = polycore.interlaces(rev, fp)
    holds = v1.strict and v2.holds
    out.emit({"n": n, "p": str(p), "q": str(q), "A_q": _pj(fq), "A_p": _pj(fp),
              "reversed_A_p": _pj(rev), "relation": v1.relation.value,
              "reverse_relation": v2.relation.value, "holds": holds},
             [f"A((t+q)^n): {format_poly(fq)}", f"A((t+p)^n): {format_poly(fp)}",
              f"relation: {v1.relation.value}",
              f"reversed A((t+p)^n): {format_poly(rev)}", f"reverse relation: {v2.relation.value}",
              f"holds: {str(holds).lower()}"])
    return EXIT_OK if holds else EXIT_FAIL


def cmd_theorem_topoint(args, out):
    with open(args.complex) as fh:
        cx = topology.load_complex(json.load(fh))
    rep = topology.check_topoint(cx, max_n=args.max_n)
    dp_counts = rep.f_prime.coeffs
    out.emit({"complex": cx.to_json(), "f": _pj(topology.f_polynomial(cx)),
              "h": _pj(topology.h_polynomial(cx)), "h_delta_prime": _pj(rep.h_direct),
              "A_of_f": _pj(rep.A_of_f), "f_delta_prime": _pj(rep.f_prime),
              "faces_by_dimension": [int(c) for c in dp_counts],
              "f_identity": rep.f_identity, "equal": rep.equal},
             [f"h(Delta'): {format_poly(rep.h_direct)}", f"A(f):      {format_poly(rep.A_of_f)}",
              f"f(Delta'): {format_poly(rep.f_prime)}  (combinatorial dimension)",
              f"equal: {str(rep.equal).lower()}"])
    return EXIT_OK if rep.equal and rep.f_identity else EXIT_FAIL


def cmd_theorem_hstar(args, out):
    rep = ehrhart.check_hstar_theorem(args.theta, max_dim=args.max_dim)
    out.emit({"theta": list(rep.theta), "L": list(rep.data.counts),
              "ehrhart": format_poly(rep.data.ehrhart_poly), "h_star": format_poly(rep.data.h_star),
              "A_product": format_poly(rep.A_product), "equal": rep.equal},
             [f"h* (counted):  {format_poly(rep.data.h_star)}",
              f"A(prod):       {format_poly(rep.A_product)}",
              f"equal: {str(rep.equal).lower()}"])
    return EXIT_OK if rep.equal else EXIT_FAIL


def cmd_probe(args, out):
    report = transform.probe_conjecture(args.n, args.trials, args.seed, max_n=args.max_n)
    bad = [r for r in report if not r["real_rooted"]]
    if out.as_json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"{len(report)} samples, {len(bad)} violations")
        for r in bad:
            print("VIOLATION:", r["input_vector"])
    return EXIT_FAIL if bad else EXIT_OK


def cmd_stats(args, out):
    perm = permstats.parse_perm(args.perm)
    st = permstats.statistics(perm)
    payload = {"perm": list(perm), "exc": st.exc, "fixed_points": sorted(st.fixed_points),
               "double_exc": sorted(st.double_exc), "double_antiexc": sorted(st.double_antiexc),
               "des": st.des, "bad": st.bad}
    out.emit(payload, [f"{k}: {v}" for k, v in payload.items()])
    return EXIT_OK


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="eulerian-ops", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    for name in ("eulerian", "derangement", "binomial"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("N", type=int)
        if name == "binomial":
            sp.add_argument("--r", type=_rational, default=Fraction(1))
        sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("apply", parents=[common], help="apply the Eulerian transformation")
    sp.add_argument("--poly", type=_poly_arg, required=True)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("series-poly", parents=[common])
    sp.add_argument("N", type=int)
    sp.add_argument("--x", type=_rational, required=True)
    sp.set_defaults(func=cmd_series_poly)

    for name, func in (("decompose", cmd_decompose), ("gamma", cmd_gamma)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--poly", type=_poly_arg, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("gamma-counts", parents=[common])
    sp.add_argument("N", type=int)
    sp.add_argument("--max-n", type=int, default=permstats.DEFAULT_MAX_N)
    sp.set_defaults(func=cmd_gamma_counts)

    sp = sub.add_parser("realroot", parents=[common])
    sp.add_argument("--poly", type=_poly_arg, required=True)
    sp.set_defaults(func=cmd_realroot)

    sp = sub.add_parser("interlace", parents=[common])
    sp.add_argument("--g", type=_poly_arg, required=True)
    sp.add_argument("--f", type=_poly_arg, required=True)
    sp.set_defaults(func=cmd_interlace)

    th = sub.add_parser("theorem").add_subparsers(dest="which", required=True)
    sp = th.add_parser("main1", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=_rational, required=True)
    sp.set_defaults(func=cmd_theorem_main1)
    sp = th.add_parser("interlacing", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_rational, required=True)
    sp.add_argument("--q", type=_rational, required=True)
    sp.set_defaults(func=cmd_theorem_interlacing)
    sp = th.add_parser("topoint", parents=[common])
    sp.add_argument("--complex", required=True, help='JSON file {"n": 3, "maximal_faces": [[1,2],[3]]}')
    sp.add_argument("--max-n", type=int, default=5)
    sp.set_defaults(func=cmd_theorem_topoint)
    sp = th.add_parser("hstar", parents=[common])
    sp.add_argument("--theta", type=_int_list, required=True)
    sp.add_argument("--max-dim", type=int, default=ehrhart.DEFAULT_MAX_DIM)
    sp.set_defaults(func=cmd_theorem_hstar)

    sp = sub.add_parser("probe", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=12)
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("stats", parents=[common])
    sp.add_argument("--perm", required=True)
    sp.set_defaults(func=cmd_stats)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Out(getattr(args, "json", False))
    try:
        return args.func(args, out)
    except SizeBoundError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
