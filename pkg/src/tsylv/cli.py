"""Command line front end: generate, transform, solve, and verify.

Exit codes: 0 success, 1 verification failure, 2 hypothesis violation
(reciprocal-free, rank, shape gates), 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import (
    BadRightInverseError,
    GenerationError,
    InconsistentCouplingError,
    InstanceFormatError,
    NotReciprocalFreeError,
    RankDeficientError,
    ShapeError,
    SingularMatrixError,
)
from .generate import generate_instance
from .instance_io import dump_instance, format_float, read_instance
from .kernels import pivot_tolerance, smallest_lu_pivot
from .solvers import (
    DEFAULT_REPORT_TOL,
    compare_solutions,
    solve_direct,
    solve_transformed,
)
from .transforms import (
    ProblemInstance,
    build_g_matrix,
    transform_lyap_over,
    transform_lyap_under,
    transform_over,
    transform_under,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_IO = 3

_HYPOTHESIS_ERRORS = (
    NotReciprocalFreeError,
    RankDeficientError,
    SingularMatrixError,
    InconsistentCouplingError,
    BadRightInverseError,
    ShapeError,
    GenerationError,
)

_TRANSFORMS = {
    "over": transform_over,
    "under": transform_under,
    "lyap-over": transform_lyap_over,
    "lyap-under": transform_lyap_under,
}


def _auto_routes(inst: ProblemInstance) -> list[str]:
    # routing by shape: strictly tall goes over, strictly wide goes under,
    # square gets both Lyapunov specializations
    if inst.m > inst.n:
        return ["over"]
    if inst.m < inst.n:
        return ["under"]
    return ["lyap-over", "lyap-under"]


def _matrix_lines(name: str, arr: np.ndarray) -> list[str]:
    lines = [f"{name}: {arr.shape[0]}x{arr.shape[1]}"]
    for row in arr:
        lines.append("  " + " ".join(format_float(v) for v in row))
    return lines


def _matrix_json(arr: np.ndarray) -> list[list[float]]:
    return [[float(v) for v in row] for row in arr]


def _bool(v: bool) -> str:
    return "true" if v else "false"


def cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    inst = generate_instance(
        args.size[0],
        args.size[1],
        rng,
        solvable=args.solvable,
        near_reciprocal=args.near_reciprocal,
    )
    text = dump_instance(inst)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_transform(args) -> int:
    inst = read_instance(args.instance)
    routes = _auto_routes(inst) if args.method == "auto" else [args.method]
    rendered = []
    for name in routes:
        form = _TRANSFORMS[name](inst, tol=args.tol)
        g = build_g_matrix(form)
        pivot = smallest_lu_pivot(g)
        entry = {
            "kind": form.kind.value,
            "margin": form.margin,
            "g_nonsingular": bool(pivot > pivot_tolerance(g)),
            "g_min_pivot": pivot,
            "recovery": form.recovery.kind.value,
            "coupling": form.coupling,
            "right_inverse": form.recovery.d,
            "rhs": form.rhs,
        }
        rendered.append(entry)
    if args.json:
        doc = {
            "size": [inst.m, inst.n],
            "routes": [
                {
                    "kind": e["kind"],
                    "margin": e["margin"],
                    "g_nonsingular": e["g_nonsingular"],
                    "g_min_pivot": e["g_min_pivot"],
                    "recovery": e["recovery"],
                    "coupling": _matrix_json(e["coupling"]),
                    "right_inverse": None
                    if e["right_inverse"] is None
                    else _matrix_json(e["right_inverse"]),
                    "rhs": _matrix_json(e["rhs"]),
                }
                for e in rendered
            ],
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    lines = [f"size: {inst.m} {inst.n}", f"routes: {len(rendered)}"]
    for e in rendered:
        lines.append("")
        lines.append(f"kind: {e['kind']}")
        lines.append(f"margin: {format_float(e['margin'])}")
        lines.append(f"g_nonsingular: {_bool(e['g_nonsingular'])}")
        lines.append(f"g_min_pivot: {format_float(e['g_min_pivot'])}")
        lines.append(f"recovery: {e['recovery']}")
        lines.extend(_matrix_lines("coupling", e["coupling"]))
        if e["right_inverse"] is not None:
            lines.extend(_matrix_lines("right_inverse", e["right_inverse"]))
        lines.extend(_matrix_lines("rhs", e["rhs"]))
    print("\n".join(lines))
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    if args.method == "direct":
        report = solve_direct(inst, tol=args.tol)
    else:
        name = args.method
        if name == "auto":
            name = _auto_routes(inst)[0]
        form = _TRANSFORMS[name](inst)
        report = solve_transformed(form, tol=args.tol)
    if args.json:
        doc = {
            "method": report.method,
            "size": [inst.m, inst.n],
            "x": _matrix_json(report.x),
            "residual": report.residual,
            "system_rank": report.system_rank,
            "consistent": report.consistent,
            "margin": report.margin,
        }
        if args.verbose and report.transformed_solution is not None:
            doc["transformed_solution"] = _matrix_json(report.transformed_solution)
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    lines = [f"method: {report.method}", f"size: {inst.m} {inst.n}"]
    lines.extend(_matrix_lines("x", report.x))
    lines.append(f"residual: {format_float(report.residual)}")
    lines.append(f"system_rank: {report.system_rank}")
    lines.append(f"consistent: {_bool(report.consistent)}")
    if report.margin is not None:
        lines.append(f"margin: {format_float(report.margin)}")
    if args.verbose and report.transformed_solution is not None:
        lines.extend(_matrix_lines("transformed_solution", report.transformed_solution))
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    m, n = args.size
    tol = DEFAULT_REPORT_TOL if args.tol is None else args.tol
    if m > n:
        regime, routes = "over", ["over"]
    elif m < n:
        regime, routes = "under", ["under"]
    else:
        regime, routes = "square", ["lyap-over", "lyap-under"]
    passes = {name: 0 for name in routes}
    agree_pass = 0
    failures = 0
    worst_residual = 0.0
    min_margin = float("inf")
    for k in range(args.count):
        # one independent, index-keyed stream per instance so results do
        # not depend on evaluation order
        rng = np.random.default_rng([args.seed, k])
        inst = generate_instance(m, n, rng, solvable=True, min_margin=1e-3)
        direct = solve_direct(inst, tol=tol)
        worst_residual = max(worst_residual, direct.residual)
        inst_ok = True
        reports = {}
        for name in routes:
            form = _TRANSFORMS[name](inst)
            rep = solve_transformed(form, tol=tol)
            reports[name] = rep
            worst_residual = max(worst_residual, rep.residual)
            min_margin = min(min_margin, form.margin)
            if compare_solutions(direct, rep, inst, tol=tol).equivalent:
                passes[name] += 1
            else:
                inst_ok = False
        if regime == "square":
            pairwise = compare_solutions(
                reports["lyap-over"], reports["lyap-under"], inst, tol=tol
            )
            if pairwise.equivalent:
                agree_pass += 1
            else:
                inst_ok = False
        if not inst_ok:
            failures += 1
    passed = failures == 0
    if args.json:
        doc = {
            "regime": regime,
            "size": [m, n],
            "count": args.count,
            "routes": {name: {"pass": passes[name], "fail": args.count - passes[name]} for name in routes},
            "worst_residual": worst_residual,
            "min_margin": min_margin,
            "result": "PASS" if passed else "FAIL",
        }
        if regime == "square":
            doc["pairwise_agreement"] = {"pass": agree_pass, "fail": args.count - agree_pass}
        print(json.dumps(doc, indent=2))
        return EXIT_OK if passed else EXIT_VERIFY_FAILED
    lines = [
        f"regime: {regime}",
        f"size: {m} {n}",
        f"count: {args.count}",
    ]
    for name in routes:
        lines.append(f"route {name}: pass {passes[name]}/{args.count}")
    if regime == "square":
        lines.append(f"pairwise_agreement: pass {agree_pass}/{args.count}")
    lines.append(f"worst_residual: {format_float(worst_residual)}")
    lines.append(f"min_margin: {format_float(min_margin)}")
    lines.append(f"result: {'PASS' if passed else 'FAIL'}")
    print("\n".join(lines))
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsylv",
        description="Generate, transform, solve, and verify instances of "
        "the matrix equation A X + X^T B = C.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random instance file")
    gen.add_argument("--size", nargs=2, type=int, metavar=("M", "N"), required=True)
    gen.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    gen.add_argument(
        "--solvable",
        action="store_true",
        help="build C from a random X0 so an exact solution exists",
    )
    gen.add_argument(
        "--near-reciprocal",
        type=float,
        default=None,
        metavar="DELTA",
        dest="near_reciprocal",
        help="rescale B so a coupling eigenvalue pair product lands at 1 + DELTA",
    )
    gen.add_argument("--out", default=None, help="output path (default stdout)")
    gen.set_defaults(func=cmd_gen)

    tr = sub.add_parser("transform", help="print an equivalent transpose-free form")
    tr.add_argument("instance", help="instance file path")
    tr.add_argument(
        "--method",
        choices=["auto", "over", "under", "lyap-over", "lyap-under"],
        default="auto",
        help="route selection; auto follows the shape (default)",
    )
    tr.add_argument(
        "--tol",
        type=float,
        default=None,
        help="base tolerance for the coupling / right-inverse consistency checks",
    )
    tr.add_argument("--json", action="store_true", help="emit a JSON document")
    tr.set_defaults(func=cmd_transform)

    so = sub.add_parser("solve", help="solve an instance")
    so.add_argument("instance", help="instance file path")
    so.add_argument(
        "--method",
        choices=["auto", "direct", "over", "under", "lyap-over", "lyap-under"],
        default="auto",
        help="auto picks over/under by shape and lyap-over when square",
    )
    so.add_argument(
        "--tol",
        type=float,
        default=None,
        help="base tolerance for the consistency flag (default 1e-8)",
    )
    so.add_argument("--json", action="store_true", help="emit a JSON document")
    so.add_argument(
        "--verbose",
        action="store_true",
        help="also print the pre-recovery solution of the transformed equation",
    )
    so.set_defaults(func=cmd_solve)

    ve = sub.add_parser(
        "verify", help="cross-check transformed routes against the direct oracle"
    )
    ve.add_argument("--size", nargs=2, type=int, metavar=("M", "N"), required=True)
    ve.add_argument("--count", type=int, default=20, help="instances to draw (default 20)")
    ve.add_argument("--seed", type=int, default=0, help="base RNG seed (default 0)")
    ve.add_argument(
        "--tol",
        type=float,
        default=None,
        help="base equivalence tolerance (default 1e-8)",
    )
    ve.add_argument("--json", action="store_true", help="emit a JSON document")
    ve.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _HYPOTHESIS_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InstanceFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
