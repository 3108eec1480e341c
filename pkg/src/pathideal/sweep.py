"""Parameter sweeps comparing closed-form invariants against computed tables.

Each instance record carries the parameters, the regime data, the formula
values, the oracle values read off an exact Betti table, a table digest and
three match flags.  An unknown formula value (regularity in the offset-step
regime) never counts as a mismatch.  Instances beyond the feasibility caps
are recorded as skipped with a reason, never dropped.

Reports are deterministic: records are sorted by parameters and timing is
zeroed unless explicitly requested, so identical flags give byte-identical
output.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import itertools
import json
import sys
import time
from typing import Iterator, Optional

from .betti import betti_table, depth_of, invariants_of
from .caps import HOCHSTER_CAP_N, TAYLOR_CAP_K, CapExceeded
from .fields import FieldSpec, parse_field
from .monomials import ideal_to_text
from .pathfamily import (
    Branch,
    PathParams,
    classify,
    formula_result,
    make_path_ideal,
)

CSV_COLUMNS = [
    "m", "l", "k", "n", "regime", "p", "d", "s",
    "pd_formula", "pd_oracle", "reg_formula", "reg_oracle",
    "depth_formula", "depth_oracle",
    "match_pd", "match_reg", "match_depth", "millis",
]

OPEN_PROBLEM_COLUMNS = [
    "m", "l", "k", "n", "s", "p", "d",
    "pd_oracle", "reg_oracle", "reg_small_overlap_formula", "coincides",
]


def iter_param_grid(
    m_min: int,
    m_max: int,
    n_max: int,
    l_fixed: Optional[int] = None,
    k_fixed: Optional[int] = None,
    k_max: Optional[int] = None,
) -> Iterator[PathParams]:
    """All legal (m, l, k) with n = k(m-l)+l <= n_max, in sorted order."""
    for m in range(m_min, m_max + 1):
        ls = [l_fixed] if l_fixed is not None else range(1, m)
        for l in ls:
            if not 1 <= l <= m - 1:
                continue
            ks = (k_fixed,) if k_fixed is not None else itertools.count(1)
            for k in ks:
                params = PathParams(m, l, k)
                if params.n > n_max or (k_max is not None and k > k_max):
                    break
                yield params


def evaluate_instance(
    params: PathParams,
    field: FieldSpec,
    method: str = "auto",
    cap_n: int = HOCHSTER_CAP_N,
    cap_k: int = TAYLOR_CAP_K,
    timing: bool = False,
) -> dict:
    """One sweep record as a plain dict (JSON- and pickle-friendly)."""
    regime = classify(params)
    formula = formula_result(params)
    record = {
        "m": params.m, "l": params.l, "k": params.k, "n": params.n,
        "regime": regime.branch.value,
        "p": regime.p, "d": regime.d, "s": regime.s,
        "pd_formula": formula.pd,
        "reg_formula": formula.reg,
        "depth_formula": formula.depth_I,
        "pd_oracle": None, "reg_oracle": None, "depth_oracle": None,
        "betti_digest": None,
        "match_pd": None, "match_reg": None, "match_depth": None,
        "millis": 0, "status": "ok", "reason": "",
    }
    from .monomials import AMBIENT_CAP

    started = time.perf_counter()
    try:
        if params.n > AMBIENT_CAP:
            raise CapExceeded(f"n={params.n} exceeds the ambient cap {AMBIENT_CAP}")
        ideal = make_path_ideal(params)
        table = betti_table(ideal, field, method, cap_n=cap_n, cap_k=cap_k)
    except CapExceeded as exc:
        record["status"] = "skipped"
        record["reason"] = str(exc)
        return record
    inv = invariants_of(table)
    depths = depth_of(ideal, table)
    record["pd_oracle"] = inv.pd
    record["reg_oracle"] = inv.reg
    record["depth_oracle"] = depths.depth_I
    record["betti_digest"] = table.digest()
    record["match_pd"] = inv.pd == formula.pd
    record["match_reg"] = None if formula.reg is None else inv.reg == formula.reg
    record["match_depth"] = depths.depth_I == formula.depth_I
    if timing:
        record["millis"] = int((time.perf_counter() - started) * 1000)
    return record


def _evaluate_worker(args: tuple) -> dict:
    m, l, k, field_text, method, cap_n, cap_k, timing = args
    return evaluate_instance(
        PathParams(m, l, k), parse_field(field_text), method, cap_n, cap_k, timing
    )


def record_is_mismatch(record: dict) -> bool:
    return any(record[key] is False for key in ("match_pd", "match_reg", "match_depth"))


def run_sweep(
    m_min: int,
    m_max: int,
    n_max: int,
    field: FieldSpec,
    method: str = "auto",
    l_fixed: Optional[int] = None,
    k_fixed: Optional[int] = None,
    k_max: Optional[int] = None,
    cap_n: int = HOCHSTER_CAP_N,
    cap_k: int = TAYLOR_CAP_K,
    jobs: int = 1,
    timing: bool = False,
    log=None,
) -> dict:
    """Sweep the grid and assemble a deterministic report dict."""
    grid = list(iter_param_grid(m_min, m_max, n_max, l_fixed, k_fixed, k_max))
    if jobs > 1:
        args = [(p.m, p.l, p.k, field.label, method, cap_n, cap_k, timing) for p in grid]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_evaluate_worker, args))
    else:
        records = [
            evaluate_instance(p, field, method, cap_n, cap_k, timing) for p in grid
        ]
    records.sort(key=lambda r: (r["m"], r["l"], r["k"]))
    log = log if log is not None else sys.stderr
    for record in records:
        if record["status"] == "skipped":
            print(
                f"skipped m={record['m']},l={record['l']},k={record['k']}: "
                f"{record['reason']}",
                file=log,
            )
    mismatches = [r for r in records if record_is_mismatch(r)]
    summary = {
        "instances": len(records),
        "ok": sum(1 for r in records if r["status"] == "ok"),
        "skipped": sum(1 for r in records if r["status"] == "skipped"),
        "mismatches": len(mismatches),
        "mismatch_params": [f"m={r['m']},l={r['l']},k={r['k']}" for r in mismatches],
    }
    return {
        "field": field.label,
        "method": method,
        "records": records,
        "summary": summary,
    }


def open_problem_sweep(
    n_max: int = 13,
    field: Optional[FieldSpec] = None,
    method: str = "auto",
    cap_n: int = HOCHSTER_CAP_N,
    cap_k: int = TAYLOR_CAP_K,
) -> list[dict]:
    """Oracle regularity for every offset-step instance with n <= n_max.

    No closed regularity formula is known in this regime; alongside the
    oracle value the record carries the small-overlap formula evaluated at
    the same parameters and whether the two coincide, as observational data.
    """
    from .fields import GF2

    field = field if field is not None else GF2
    records = []
    for m in range(2, n_max + 1):
        for l in range(1, m):
            if classify(PathParams(m, l, 1)).branch is not Branch.OFFSET_STEP:
                continue
            k = 1
            while True:
                params = PathParams(m, l, k)
                if params.n > n_max:
                    break
                regime = classify(params)
                ideal = make_path_ideal(params)
                table = betti_table(ideal, field, method, cap_n=cap_n, cap_k=cap_k)
                inv = invariants_of(table)
                small_overlap_value = (params.k - 1) * (m - l - 1) + m
                records.append({
                    "m": m, "l": l, "k": k, "n": params.n,
                    "s": regime.s, "p": regime.p, "d": regime.d,
                    "pd_oracle": inv.pd,
                    "reg_oracle": inv.reg,
                    "reg_small_overlap_formula": small_overlap_value,
                    "coincides": inv.reg == small_overlap_value,
                    "ideal": ideal_to_text(ideal),
                })
                k += 1
    records.sort(key=lambda r: (r["m"], r["l"], r["k"]))
    return records


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_to_csv(report: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report["records"]:
        writer.writerow([_cell(r[c]) for c in CSV_COLUMNS])
    return out.getvalue()


def report_to_text(report: dict) -> str:
    lines = [f"sweep over {report['field']} (method={report['method']})"]
    header = (
        f"{'params':<16} {'regime':<14} {'pd':>7} {'reg':>9} {'depth':>9}  flags"
    )
    lines.append(header)
    lines.append("-" * len(header))
    for r in report["records"]:
        params = f"m={r['m']},l={r['l']},k={r['k']}"
        if r["status"] == "skipped":
            lines.append(f"{params:<16} {r['regime']:<14} skipped: {r['reason']}")
            continue
        def pair(formula, oracle):
            left = "?" if formula is None else str(formula)
            return f"{left}/{oracle}"
        flags = "".join(
            "." if r[key] in (True, None) else "X"
            for key in ("match_pd", "match_reg", "match_depth")
        )
        lines.append(
            f"{params:<16} {r['regime']:<14} {pair(r['pd_formula'], r['pd_oracle']):>7} "
            f"{pair(r['reg_formula'], r['reg_oracle']):>9} "
            f"{pair(r['depth_formula'], r['depth_oracle']):>9}  {flags}"
        )
    s = report["summary"]
    lines.append(
        f"instances={s['instances']} ok={s['ok']} skipped={s['skipped']} "
        f"mismatches={s['mismatches']}"
    )
    if s["mismatch_params"]:
        lines.append("mismatching: " + ", ".join(s["mismatch_params"]))
    return "\n".join(lines) + "\n"


def open_problem_to_csv(records: list[dict]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(OPEN_PROBLEM_COLUMNS)
    for r in records:
        writer.writerow([_cell(r[c]) for c in OPEN_PROBLEM_COLUMNS])
    return out.getvalue()


def open_problem_to_json(records: list[dict]) -> str:
    return json.dumps({"records": records}, indent=2, sort_keys=True) + "\n"


def open_problem_to_text(records: list[dict]) -> str:
    lines = ["offset-step regime: oracle regularity (no closed form is known)"]
    header = f"{'params':<16} {'n':>3} {'s':>2} {'p':>2} {'d':>2} {'pd':>4} {'reg':>4}  small-overlap formula"
    lines.append(header)
    lines.append("-" * len(header))
    for r in records:
        params = f"m={r['m']},l={r['l']},k={r['k']}"
        tail = f"{r['reg_small_overlap_formula']} ({'=' if r['coincides'] else '!='})"
        lines.append(
            f"{params:<16} {r['n']:>3} {r['s']:>2} {r['p']:>2} {r['d']:>2} "
            f"{r['pd_oracle']:>4} {r['reg_oracle']:>4}  {tail}"
        )
    return "\n".join(lines) + "\n"
