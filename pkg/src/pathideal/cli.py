"""Command-line front end.

One subcommand per artifact: ``gen`` emits an ideal, ``betti`` one table,
``formula`` the closed forms, ``verify`` a formula-vs-oracle sweep,
``split`` a Betti-splitting check, ``cert`` the topological certificates,
``open-problem`` the regularity data dump for the regime without a closed
form.  Exit status: 0 clean, 1 when a verification-style command found a
failure, 2 on invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .betti import betti_table, depth_of, invariants_of
from .caps import (
    HOCHSTER_CAP_N,
    MINOR_CAP_N,
    SEQ_CM_CAP_N,
    SHELLING_CAP_FACETS,
    TAYLOR_CAP_K,
    CapExceeded,
)
from .fields import parse_field
from .monomials import MonomialIdeal, ideal_from_text, ideal_to_text, iter_bits
from .pathfamily import (
    PathParams,
    classify,
    formula_full_path,
    formula_result,
    make_full_path_ideal,
    make_path_ideal,
)
from .splitting import fht_condition, is_betti_splitting, splitting_invariant_bounds
from .sweep import (
    open_problem_sweep,
    open_problem_to_csv,
    open_problem_to_json,
    open_problem_to_text,
    record_is_mismatch,
    report_to_csv,
    report_to_json,
    report_to_text,
    run_sweep,
)
from .topology import (
    Clutter,
    clutter_from_text,
    clutter_of,
    cover_complex,
    find_shelling,
    free_vertex_property,
    is_path_clutter,
    is_sequentially_cm,
    path_free_vertex_property,
)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_ideal(args) -> MonomialIdeal:
    if args.ideal:
        return ideal_from_text(args.ideal)
    if args.m is None:
        raise SystemExit2("one of --ideal or --m is required")
    if args.l is not None and args.k is not None:
        return make_path_ideal(PathParams(args.m, args.l, args.k))
    if args.n is not None:
        return make_full_path_ideal(args.m, args.n)
    raise SystemExit2("give --l and --k for the general family, or --n for all paths")


class SystemExit2(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def _params_args(parser, with_n=True) -> None:
    parser.add_argument("--m", type=int, help="path length (>= 2)")
    parser.add_argument("--l", type=int, help="overlap between consecutive paths")
    parser.add_argument("--k", type=int, help="number of generators")
    if with_n:
        parser.add_argument(
            "--n", type=int, help="vertex count; with --m alone selects all length-m paths"
        )


def cmd_gen(args) -> int:
    ideal = _resolve_ideal(args)
    if args.json:
        payload = {"n": ideal.n, "gens": [list(g.vars) for g in ideal.gens]}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit(ideal_to_text(ideal) + "\n", args.out)
    return 0


def cmd_betti(args) -> int:
    ideal = _resolve_ideal(args)
    field = parse_field(args.field)
    table = betti_table(ideal, field, args.method, cap_n=args.cap_n, cap_k=args.cap_k)
    inv = invariants_of(table)
    depths = depth_of(ideal, table)
    if args.json:
        payload = {
            "ideal": ideal_to_text(ideal),
            "field": field.label,
            "betti": [[i, j, b] for i, j, b in table.items_sorted()],
            "pd": inv.pd,
            "reg": inv.reg,
            "depth_I": depths.depth_I,
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    elif args.golden:
        _emit(table.to_text(), args.out)
    else:
        lines = [f"{ideal_to_text(ideal)}  over {field.label}"]
        for i, j, b in table.items_sorted():
            lines.append(f"  beta[{i},{j}] = {b}")
        lines.append(
            f"pd={inv.pd} reg={inv.reg} depth_I={depths.depth_I} depth_RI={depths.depth_RI}"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_formula(args) -> int:
    if args.m is not None and args.l is None and args.n is not None:
        result = formula_full_path(args.m, args.n)
        label = f"m={args.m},n={args.n} (all paths)"
        regime_info = {}
    else:
        if args.m is None or args.l is None or args.k is None:
            raise SystemExit2("give --m --l --k, or --m --n for all paths")
        params = PathParams(args.m, args.l, args.k)
        result = formula_result(params)
        regime = classify(params)
        label = str(params)
        regime_info = {
            "regime": regime.branch.value,
            "s": regime.s,
            "p": regime.p,
            "d": regime.d,
        }
    if args.json:
        payload = {
            "params": label,
            "pd": result.pd,
            "reg": result.reg,
            "depth_I": result.depth_I,
            "depth_RI": result.depth_RI,
            **regime_info,
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        reg = "unknown" if result.reg is None else result.reg
        extra = f" regime={regime_info['regime']}" if regime_info else ""
        _emit(
            f"{label}: pd={result.pd} reg={reg} depth_I={result.depth_I} "
            f"depth_RI={result.depth_RI}{extra}\n",
            args.out,
        )
    return 0


def cmd_verify(args) -> int:
    field = parse_field(args.field)
    report = run_sweep(
        m_min=args.m_min,
        m_max=args.m_max,
        n_max=args.n_max,
        field=field,
        method=args.method,
        l_fixed=args.l,
        k_fixed=args.k,
        k_max=args.k_max,
        cap_n=args.cap_n,
        cap_k=args.cap_k,
        jobs=args.jobs,
        timing=args.timing,
    )
    if args.json:
        _emit(report_to_json(report), args.out)
    elif args.csv:
        _emit(report_to_csv(report), args.out)
    else:
        _emit(report_to_text(report), args.out)
    return 1 if report["summary"]["mismatches"] else 0


def cmd_split(args) -> int:
    field = parse_field(args.field)
    if args.ideal:
        ideal = ideal_from_text(args.ideal)
        if args.var is None:
            raise SystemExit2("--var is required with --ideal")
        var = args.var
    else:
        if args.m is None or args.l is None or args.k is None:
            raise SystemExit2("give --m --l --k (k >= 2), or --ideal with --var")
        params = PathParams(args.m, args.l, args.k)
        if params.k < 2:
            raise SystemExit2("splitting at the last generator needs k >= 2")
        ideal = make_path_ideal(params)
        var = params.n if args.var is None else args.var
    fht = fht_condition(ideal, var, field)
    case = fht.case if fht.case is not None else is_betti_splitting(
        ideal, fht.J, fht.K, field
    )
    ok_pd, ok_reg = splitting_invariant_bounds(case) if case.verdict else (False, False)
    payload = {
        "ideal": ideal_to_text(ideal),
        "field": field.label,
        "var": var,
        "J": ideal_to_text(fht.J),
        "K": ideal_to_text(fht.K),
        "fht_applies": fht.applies,
        "tables": {
            "I": [[i, j, b] for i, j, b in case.table_I.items_sorted()],
            "J": [[i, j, b] for i, j, b in case.table_J.items_sorted()],
            "K": [[i, j, b] for i, j, b in case.table_K.items_sorted()],
            "JK": [[i, j, b] for i, j, b in case.table_JK.items_sorted()],
        },
        "verdict": case.verdict,
        "witness": list(case.witness) if case.witness else None,
        "max_formula_pd": ok_pd,
        "max_formula_reg": ok_reg,
    }
    if args.json:
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"I = {payload['ideal']}",
            f"J = {payload['J']}   (generators divisible by x{var})",
            f"K = {payload['K']}",
            f"linearity condition applies: {fht.applies}",
            f"splitting identity holds: {case.verdict}"
            + (f" (first failure at {case.witness})" if case.witness else ""),
        ]
        if case.verdict:
            lines.append(f"pd max-formula holds: {ok_pd}; reg max-formula holds: {ok_reg}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if case.verdict and (not fht.applies or (ok_pd and ok_reg)) else 1


def cmd_cert(args) -> int:
    field = parse_field(args.field)
    params = None
    if args.clutter:
        clutter = clutter_from_text(args.clutter)
        params = is_path_clutter(clutter)
    else:
        if args.m is None or args.l is None or args.k is None:
            raise SystemExit2("give --m --l --k or --clutter")
        params = PathParams(args.m, args.l, args.k)
        clutter = clutter_of(make_path_ideal(params))

    payload: dict = {"clutter": str(clutter)}
    if clutter.n <= args.cap_minors:
        fvp, counterexample = free_vertex_property(clutter, cap=args.cap_minors)
        payload["free_vertex_property"] = fvp
        if counterexample is not None:
            payload["counterexample_minor"] = str(counterexample)
        payload["free_vertex_method"] = "minor enumeration"
    elif params is not None:
        payload["free_vertex_property"] = path_free_vertex_property(params)
        payload["free_vertex_method"] = "path-family certificate"
    else:
        payload["free_vertex_property"] = None
        payload["free_vertex_method"] = f"skipped: n={clutter.n} exceeds cap {args.cap_minors}"

    cx = cover_complex(clutter)
    payload["facets"] = [list(iter_bits(f)) for f in cx.facets]
    try:
        order = find_shelling(cx, cap=args.cap_facets)
        payload["shelling"] = (
            [list(iter_bits(f)) for f in order] if order is not None else None
        )
    except CapExceeded as exc:
        payload["shelling"] = None
        payload["shelling_skipped"] = str(exc)
    try:
        payload["seq_cm"] = is_sequentially_cm(cx, field, cap=args.cap_seqcm)
    except CapExceeded as exc:
        payload["seq_cm"] = None
        payload["seq_cm_skipped"] = str(exc)

    if args.json:
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"clutter: {payload['clutter']}"]
        lines.append(
            f"free vertex property: {payload['free_vertex_property']}"
            f" [{payload['free_vertex_method']}]"
        )
        if payload.get("counterexample_minor"):
            lines.append(f"  counterexample minor: {payload['counterexample_minor']}")
        if payload.get("shelling") is not None:
            lines.append("shelling: " + " -> ".join(str(f) for f in payload["shelling"]))
        else:
            lines.append("shelling: " + payload.get("shelling_skipped", "none found"))
        lines.append(f"sequentially CM over {field.label}: {payload['seq_cm']}")
        _emit("\n".join(lines) + "\n", args.out)

    checks = [payload["free_vertex_property"], payload["seq_cm"]]
    shelling_ok = payload.get("shelling") is not None or "shelling_skipped" in payload
    return 0 if all(c is not False for c in checks) and shelling_ok else 1


def cmd_open_problem(args) -> int:
    field = parse_field(args.field)
    records = open_problem_sweep(
        n_max=args.n_max, field=field, method=args.method,
        cap_n=args.cap_n, cap_k=args.cap_k,
    )
    if args.json:
        _emit(open_problem_to_json(records), args.out)
    elif args.csv:
        _emit(open_problem_to_csv(records), args.out)
    else:
        _emit(open_problem_to_text(records), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathideal",
        description="Path ideals of the line graph: exact Betti tables and closed forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument("--field", default="gf2", help="gf2, gf<p> or rat")
    common.add_argument("--method", default="auto",
                        choices=["auto", "hochster", "taylor", "both"])
    common.add_argument("--cap-n", type=int, default=HOCHSTER_CAP_N, dest="cap_n")
    common.add_argument("--cap-k", type=int, default=TAYLOR_CAP_K, dest="cap_k")

    p_gen = sub.add_parser("gen", parents=[common], help="emit an ideal")
    _params_args(p_gen)
    p_gen.add_argument("--ideal", help="ideal text form (echoed canonically)")
    p_gen.set_defaults(func=cmd_gen)

    p_betti = sub.add_parser("betti", parents=[common], help="one Betti table")
    _params_args(p_betti)
    p_betti.add_argument("--ideal", help="ideal text form, e.g. 'n=5; (x1*x2*x3, x3*x4*x5)'")
    p_betti.add_argument("--golden", action="store_true", help="golden-file text format")
    p_betti.set_defaults(func=cmd_betti)

    p_formula = sub.add_parser("formula", parents=[common], help="closed forms only")
    _params_args(p_formula)
    p_formula.set_defaults(func=cmd_formula)

    p_verify = sub.add_parser("verify", parents=[common], help="formula-vs-oracle sweep")
    p_verify.add_argument("--m-min", type=int, default=2, dest="m_min")
    p_verify.add_argument("--m-max", type=int, default=5, dest="m_max")
    p_verify.add_argument("--n-max", type=int, default=13, dest="n_max")
    p_verify.add_argument("--l", type=int, help="fix the overlap")
    p_verify.add_argument("--k", type=int, help="fix the generator count")
    p_verify.add_argument("--k-max", type=int, dest="k_max")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--csv", action="store_true")
    p_verify.add_argument("--timing", action="store_true",
                          help="record per-instance wall time (breaks byte-identical output)")
    p_verify.set_defaults(func=cmd_verify)

    p_split = sub.add_parser("split", parents=[common], help="Betti-splitting check")
    _params_args(p_split, with_n=False)
    p_split.add_argument("--ideal", help="ideal text form")
    p_split.add_argument("--var", type=int,
                         help="split at this variable (default: last variable)")
    p_split.set_defaults(func=cmd_split)

    p_cert = sub.add_parser("cert", parents=[common],
                            help="free vertex / shelling / sequential-CM certificates")
    _params_args(p_cert, with_n=False)
    p_cert.add_argument("--clutter", help="clutter text form, e.g. 'n=5; {1,2,3},{3,4,5}'")
    p_cert.add_argument("--cap-minors", type=int, default=MINOR_CAP_N, dest="cap_minors")
    p_cert.add_argument("--cap-facets", type=int, default=SHELLING_CAP_FACETS,
                        dest="cap_facets")
    p_cert.add_argument("--cap-seqcm", type=int, default=SEQ_CM_CAP_N, dest="cap_seqcm")
    p_cert.set_defaults(func=cmd_cert)

    p_open = sub.add_parser("open-problem", parents=[common],
                            help="regularity data in the regime without a closed form")
    p_open.add_argument("--n-max", type=int, default=13, dest="n_max")
    p_open.add_argument("--csv", action="store_true")
    p_open.set_defaults(func=cmd_open_problem)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2:
        raise
    except (ValueError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
