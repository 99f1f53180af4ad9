"""Command-line front end.  Every subcommand takes a root-system label and
weight literals like "[2,0,1]" (fundamental-weight basis, Bourbaki order)
and prints either an aligned text report or, with --json, a stable JSON
document.

Exit status: 0 success; 1 a precondition or named threshold fails
(expected outcome, with a structured reason); 2 malformed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import bounds as bnd
from .bounds import BoundContext
from .genericity import (
    VERDICT_THRESHOLD,
    certify_shifted_generic,
    classify_weight,
    cpsk_check,
    enumerate_filtration_sections,
    large_prime_collapse,
)
from .kostant import appendix_dimension, kostant_graded
from .rootsys import ResourceError, build_root_system
from .weights import digit_expand, format_weight, parse_weight, q_shift
from .weyl import linked_Wp


def _jsonable(obj):
    if is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "to_json"):
            return obj.to_json()
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def _emit(data: dict, as_json: bool, tags: dict | None = None) -> None:
    if as_json:
        print(json.dumps(_jsonable(data), ensure_ascii=False, indent=2, sort_keys=True))
        return
    flat = []

    def walk(prefix, val):
        if isinstance(val, dict):
            for k, v in val.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif is_dataclass(val) and not isinstance(val, type):
            walk(prefix, _jsonable(val))
        elif isinstance(val, (list, tuple)) and val and isinstance(val[0], (dict,)):
            for i, v in enumerate(val):
                walk(f"{prefix}[{i}]", v)
        else:
            flat.append((prefix, val))

    walk("", data)
    width = max((len(k) for k, _ in flat), default=0)
    for key, val in flat:
        tag = (tags or {}).get(key.split(".")[0].split("[")[0], "")
        suffix = f"  [{tag}]" if tag else ""
        print(f"{key.ljust(width)}  {val}{suffix}")


def _fail(reason, as_json: bool) -> int:
    payload = {"error": reason} if not isinstance(reason, dict) else reason
    if as_json:
        print(json.dumps(_jsonable(payload), ensure_ascii=False, indent=2))
    else:
        print(f"error: {payload}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="shiftgen",
        description="Exact certificates for shifted-generic cohomology thresholds.",
    )
    ap.add_argument("--json", action="store_true", help="emit the stable JSON schema")
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, *, weights=0, weights_var=False, **flags):
        c = sub.add_parser(name)
        c.add_argument("type_label", metavar="TYPE")
        for flag, (kind, required, default) in flags.items():
            c.add_argument(f"-{flag}", f"--{flag}" if len(flag) > 1 else f"--{flag}_",
                           dest=flag, type=kind, required=required, default=default)
        if weights_var:
            c.add_argument("weights", nargs="+", metavar="W")
        else:
            for i in range(weights):
                c.add_argument(f"w{i}", metavar="W")
        return c

    cmd("info")
    cmd("digits", weights=1, p=(int, True, None), r=(int, False, None))
    cmd("shift", weights=1, p=(int, True, None), r=(int, True, None), e=(int, True, None))
    b = cmd("bounds", m=(int, True, None), p=(int, False, None), r=(int, False, None),
            eps=(int, False, 0))
    b.add_argument("--sharp", action="store_true")
    cmd("cpsk", weights_var=True, m=(int, True, None), p=(int, True, None),
        e=(int, True, None), f=(int, True, None))
    cmd("certify", weights=2, p=(int, True, None), r=(int, True, None),
        m=(int, True, None), eps=(int, False, 0))
    cmd("classify", weights=1, p=(int, True, None), r=(int, True, None), m=(int, True, None))
    cmd("collapse", weights=2, p=(int, True, None), r=(int, True, None), m=(int, True, None))
    cmd("linkage", weights=2, p=(int, True, None))
    cmd("dimension", weights=1, p=(int, True, None), m=(int, True, None))
    cmd("kostant", weights=1, j=(int, True, None))
    cmd("filtration", p=(int, False, None), r=(int, False, None), b=(int, False, None),
        m=(int, False, 0))
    return ap


_BOUND_TAGS = {
    "delta": "algebraic digit bound",
    "d": "finite-group digit bound",
    "d_prime": "pair digit bound",
    "r0": "shift-construction threshold",
    "b_uniform": "filtration cutoff, any p",
    "b_pr": "filtration cutoff at p^r",
    "phi": "digit-bound increment",
    "e0": "coarse twist threshold",
    "f0": "coarse power threshold",
    "g": "tensor restriction growth",
    "smallness": "weight-smallness bounds",
    "large_prime": "large-prime regime thresholds",
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = args.json
    try:
        rs = build_root_system(args.type_label)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "info":
            _emit(
                {
                    "type": rs.type_label,
                    "rank": rs.rank,
                    "positive_roots": len(rs.positive_roots),
                    "weyl_order": rs.weyl_order,
                    "h": rs.h,
                    "t": rs.t,
                    "c": rs.c,
                    "c2rho": rs.c2rho,
                    "alpha0": list(rs.alpha0),
                    "alpha_tilde": list(rs.alpha_tilde),
                },
                as_json,
                {"h": "Coxeter number", "t": "torsion exponent",
                 "c": "highest-long-root coefficient", "c2rho": "max coefficient of 2rho"},
            )
            return 0

        if args.command == "digits":
            lam = parse_weight(args.w0, rs.rank)
            exp = digit_expand(rs, lam, args.p, args.r)
            _emit(
                {"weight": format_weight(lam), "p": exp.p, "r": exp.r,
                 "digits": [format_weight(d) for d in exp.digits]},
                as_json,
            )
            return 0

        if args.command == "shift":
            lam = parse_weight(args.w0, rs.rank)
            out = q_shift(rs, lam, args.p, args.r, args.e)
            _emit({"shifted": format_weight(out)}, as_json)
            return 0

        if args.command == "bounds":
            ctx = BoundContext(rs=rs, m=args.m, p=args.p, r=args.r,
                               epsilon=args.eps, sharp_mode=args.sharp)
            coarse = bnd.coarse_constants(ctx)
            data = {
                "delta": bnd.delta(ctx),
                "phi": bnd.phi(ctx),
                "d": bnd.digit_bound_d(ctx),
                "d_prime": bnd.d_prime(ctx),
                "r0": bnd.r0_threshold(ctx),
                "b_uniform": bnd.filtration_cutoff_b(
                    BoundContext(rs=rs, m=args.m)),
                **coarse,
                "smallness": bnd.smallness_bounds(ctx),
                "large_prime": bnd.large_prime_thresholds(ctx),
            }
            if args.p is not None and args.r is not None:
                data["b_pr"] = bnd.filtration_cutoff_b(ctx)
            _emit(data, as_json, _BOUND_TAGS)
            return 0

        if args.command == "cpsk":
            ws = [parse_weight(w, rs.rank) for w in args.weights]
            report = cpsk_check(rs, ws, args.m, args.p, args.e, args.f)
            _emit(report, as_json)
            return 0 if report["pass"] else 1

        if args.command == "certify":
            lam = parse_weight(args.w0, rs.rank)
            mu = parse_weight(args.w1, rs.rank)
            cert = certify_shifted_generic(rs, lam, mu, args.p, args.r, args.m, args.eps)
            _emit(cert.to_json(), as_json)
            return 1 if cert.verdict == VERDICT_THRESHOLD else 0

        if args.command == "classify":
            mu = parse_weight(args.w0, rs.rank)
            result = classify_weight(rs, mu, args.p, args.r, args.m)
            _emit(result, as_json)
            return 1 if result["route"] == "no-route-applicable" else 0

        if args.command == "collapse":
            lam = parse_weight(args.w0, rs.rank)
            mu = parse_weight(args.w1, rs.rank)
            report = large_prime_collapse(rs, lam, mu, args.p, args.r, args.m)
            _emit(report, as_json)
            ok = report["a"]["applies"] or report["c_route"].get("applies") \
                or report["b_route"].get("applies")
            return 0 if ok else 1

        if args.command == "linkage":
            lam = parse_weight(args.w0, rs.rank)
            mu = parse_weight(args.w1, rs.rank)
            res = linked_Wp(rs, lam, mu, args.p)
            data = {"linked": res.linked}
            if res.witness is not None:
                data["witness_matrix"] = [list(row) for row in res.witness.matrix]
                data["witness_translation"] = list(res.witness.translation)
            _emit(data, as_json)
            return 0

        if args.command == "dimension":
            mu = parse_weight(args.w0, rs.rank)
            value, flags = appendix_dimension(rs, mu, args.m, args.p)
            note = "m odd" if args.m % 2 else "alternating Weyl sum"
            _emit({"dimension": value, "note": note, "validity": flags}, as_json)
            return 0

        if args.command == "kostant":
            nu = parse_weight(args.w0, rs.rank)  # simple-root coordinates
            _emit({"count": kostant_graded(rs, nu, args.j)}, as_json)
            return 0

        if args.command == "filtration":
            ctx = BoundContext(rs=rs, m=args.m, p=args.p, r=args.r)
            cutoff = args.b if args.b is not None else bnd.filtration_cutoff_b(ctx)
            secs = enumerate_filtration_sections(rs, cutoff)
            _emit(
                {
                    "cutoff": cutoff,
                    "sections": [
                        {"gamma": format_weight(s.gamma),
                         "gamma_star": format_weight(s.gamma_star),
                         "layer": s.layer,
                         "dim_product": s.dim_product}
                        for s in secs
                    ],
                },
                as_json,
            )
            return 0
    except ValueError as exc:
        return _fail(str(exc), as_json)
    except ResourceError as exc:
        return _fail(str(exc), as_json)
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
