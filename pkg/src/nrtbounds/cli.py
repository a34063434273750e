"""Command-line surface: JSON tables and CSV curves on stdout (or --out).

Exit codes: 0 success, 2 usage error, 3 budget or scale cap exceeded,
4 internal consistency failure (e.g. a certificate that does not verify).
Logs go to stderr so output stays pipeline-composable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .asymptotics import (
    be_curve,
    gv_curve,
    hamming_curve,
    lp_curve,
    lp_curve_default_taus,
    nets_rao,
    phi_r2,
    plotkin_curve,
    psi_nets,
)
from .bounds import best_bounds, bound_table_json
from .delsarte import (
    certificate_from_json,
    certificate_to_json,
    check_certificate,
    format_rational,
    solve_code_lp,
    solve_ooa_lp,
)
from .macwilliams import enumerator_of, enumerator_to_json, transform, verify_duality
from .space import (
    BudgetExceeded,
    LinearCode,
    SpaceParams,
    delta_crit,
    enumerate_shapes,
    net_to_ooa,
    ooa_strength,
    read_array_file,
    shape_count,
    shape_weight,
    sphere_size,
)

USAGE_ERROR, BUDGET_ERROR, CHECK_ERROR = 2, 3, 4


class CheckFailure(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {out}", file=sys.stderr)
    else:
        print(text)


def _params(args) -> SpaceParams:
    return SpaceParams(q=args.q, r=args.r, n=args.n)


def _fmt_float(x: float) -> float:
    return float(f"{x:.12g}")


def cmd_sphere(args) -> int:
    params = _params(args)
    shapes = sorted(enumerate_shapes(params), key=lambda e: (shape_weight(e), e))
    if args.d is not None:
        if not 0 <= args.d <= params.dim:
            raise ValueError(f"weight {args.d} out of range [0, {params.dim}]")
        shapes = [e for e in shapes if shape_weight(e) == args.d]
    payload = {
        "params": {"q": params.q, "r": params.r, "n": params.n},
        "shapes": [
            {
                "shape": ",".join(str(c) for c in e),
                "weight": shape_weight(e),
                "count": shape_count(params, e),
            }
            for e in shapes
        ],
    }
    if args.d is not None:
        payload["sphere_size"] = sphere_size(params, args.d)
    else:
        payload["total"] = params.ambient_size
        payload["sphere_sizes"] = [sphere_size(params, d) for d in range(params.dim + 1)]
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def cmd_bounds(args) -> int:
    params = _params(args)
    table = best_bounds(params, args.d)
    _emit(bound_table_json(table), args.out)
    return 0


def cmd_lp(args) -> int:
    params = _params(args)
    if args.program == "I":
        if args.d is None:
            raise ValueError("program I needs --d")
        res = solve_code_lp(params, args.d)
        payload = {
            "params": {"q": params.q, "r": params.r, "n": params.n},
            "program": "I",
            "d": args.d,
            "value": format_rational(res.bound),
            "floor": res.bound.numerator // res.bound.denominator,
        }
        if args.certificate:
            with open(args.certificate, "w", encoding="utf-8") as fh:
                fh.write(certificate_to_json(res.certificate))
            with open(args.certificate, "r", encoding="utf-8") as fh:
                reloaded = certificate_from_json(fh.read())
            chk = check_certificate(reloaded)
            if not chk.accepted or chk.code_bound != res.bound:
                raise CheckFailure("reloaded certificate failed verification")
            payload["certificate"] = args.certificate
    else:
        if args.t is None:
            raise ValueError("program II needs --t")
        res = solve_ooa_lp(params, args.t)
        payload = {
            "params": {"q": params.q, "r": params.r, "n": params.n},
            "program": "II",
            "t": args.t,
            "value": format_rational(res.bound),
            "ceil": -((-res.bound.numerator) // res.bound.denominator),
        }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def cmd_asym(args) -> int:
    q, r, grid = args.q, args.r, args.grid
    rows: list[tuple[float, float, str]] = []  # delta, rate, meta
    name = args.curve
    if name in ("gv", "hamming", "plotkin", "be"):
        fn = {
            "gv": gv_curve,
            "hamming": hamming_curve,
            "plotkin": plotkin_curve,
            "be": be_curve,
        }[name]
        dc = float(delta_crit(q, r))
        for j in range(1, grid + 1):
            delta = dc * j / grid
            rows.append((delta, fn(q, r, delta), ""))
    elif name == "lp":
        for pt in lp_curve(q, r, lp_curve_default_taus(q, grid)):
            rows.append((pt.delta, pt.rate, f"{pt.meta['tau']:.12g}"))
    elif name == "lp2":
        if r != 2:
            raise ValueError("curve lp2 is defined for r = 2")
        dc = float(delta_crit(q, 2))
        for j in range(1, grid + 1):
            delta = dc * j / grid
            rows.append((delta, phi_r2(q, delta), ""))
    elif name == "psi":
        for j in range(1, grid + 1):
            delta = j / grid
            pt = psi_nets(q, delta)
            rows.append((delta, pt.rate, f"{pt.alpha:.12g}"))
    elif name == "psirao":
        for j in range(1, grid + 1):
            delta = j / grid
            rows.append((delta, nets_rao(q, delta), ""))
    else:
        raise ValueError(f"unknown curve {name!r}")
    lines = ["delta,rate,curve,q,r,meta"]
    for delta, rate, meta in rows:
        lines.append(f"{delta:.12g},{rate:.12g},{name},{q},{r},{meta}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify_ooa(args) -> int:
    table = read_array_file(args.file)
    result = ooa_strength(table)
    p = table.params
    payload = {
        "params": {"q": p.q, "r": p.r, "n": p.n},
        "rows": len(table.rows),
        "strength": result.strength,
        "index": result.index,
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def cmd_macwilliams(args) -> int:
    table = read_array_file(args.gen)
    code = LinearCode(params=table.params, generators=table.rows)
    primal = enumerator_of(code, "right")
    dual = transform(primal, code.size)
    payload = {
        "params": {"q": code.params.q, "r": code.params.r, "n": code.params.n},
        "k": code.k,
        "primal": json.loads(enumerator_to_json(primal)),
        "dual": json.loads(enumerator_to_json(dual)),
    }
    if code.params.ambient_size <= 1 << 16:
        if not verify_duality(code):
            raise CheckFailure("transform disagrees with the exhaustive dual")
        payload["verified"] = True
    else:
        payload["verified"] = False
        print("ambient too large, duality not re-verified", file=sys.stderr)
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def cmd_net(args) -> int:
    ooa = net_to_ooa(args.t, args.m, args.s, args.q)
    payload = {
        "net": {"t": args.t, "m": args.m, "s": args.s, "q": args.q},
        "ooa": {
            "strength": ooa.strength,
            "n": ooa.n,
            "r": ooa.r,
            "q": ooa.q,
            "index": ooa.index,
            "size": ooa.size,
        },
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nrtbounds",
        description="Combinatorics and bounds for codes and orthogonal arrays "
        "in the ordered Hamming space.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n=True):
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        if n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("sphere", help="shape counts and sphere sizes")
    add_common(p)
    p.add_argument("--d", type=int, help="restrict to one weight stratum")
    p.set_defaults(fn=cmd_sphere)

    p = sub.add_parser("bounds", help="all bounds at a given distance")
    add_common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("lp", help="exact Delsarte linear program")
    add_common(p)
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--program", choices=["I", "II"], required=True)
    p.add_argument("--certificate", help="write the dual certificate here")
    p.set_defaults(fn=cmd_lp)

    p = sub.add_parser("asym", help="asymptotic curve as CSV")
    add_common(p, n=False)
    p.add_argument(
        "--curve",
        choices=["gv", "hamming", "plotkin", "be", "lp", "lp2", "psi", "psirao"],
        required=True,
    )
    p.add_argument("--grid", type=int, default=100)
    p.set_defaults(fn=cmd_asym)

    p = sub.add_parser("verify-ooa", help="strength and index of an array file")
    p.add_argument("--file", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify_ooa)

    p = sub.add_parser("macwilliams", help="enumerator and dual of a generator file")
    p.add_argument("--gen", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_macwilliams)

    p = sub.add_parser("net", help="net parameters to array parameters")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_net)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except CheckFailure as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return CHECK_ERROR
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return CHECK_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
