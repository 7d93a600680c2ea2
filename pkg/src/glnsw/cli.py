"""Command-line front end: `glnsw <subcommand> [flags]`.

Every subcommand builds a report {"config", "rows", "verdicts"} and renders it
as csv, json or pretty text.  Rows are produced in a fixed order, so output is
byte-identical for identical flags whatever --jobs is.

Exit codes: 0 ok, 1 a check failed (verify), 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import gl2, green
from .fqpoly import require_odd_prime_power
from .partitions import (
    CHIRAL_BRUTE_MAX_N,
    chiral_count_brute,
    chiral_count_closed_form,
    below_log_threshold,
    partition_count,
    valuation_distribution,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

# per-command defaults for --budget
DEFAULT_BUDGETS = {
    "sn-stats": 10**8,  # p(n)
    "gln-stats": 10**6,  # |X_n|
    "gl2-table": 10**4,  # q
    "gl2-density": 10**5,  # X
}

TRUNCATED = "TRUNCATED"


class UsageError(Exception):
    pass


def _fmt(x) -> object:
    if isinstance(x, Fraction):
        return round(float(x), 6)
    if isinstance(x, float):
        return round(x, 6)
    return x


def _yes_no(v) -> str:
    if v is None:
        return "--"
    if v == "mixed":
        return "mixed"
    return "Yes" if v else "No"


def _map(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _odd_prime_power(q: int) -> int:
    try:
        require_odd_prime_power(q)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return q


# --- sn-stats ------------------------------------------------------------------


def _sn_row(args) -> dict:
    n, ell, r, brute_max, budget = args
    p = partition_count(n)
    row = {"n": n, "ell": ell, "r": r, "p": p}
    if p > budget:
        row.update(histogram=TRUNCATED, below=TRUNCATED, proportion=TRUNCATED, b_closed="", b_brute="", b_agree="")
        return row
    dist = valuation_distribution(n, ell)
    below = sum(c for v, c in dist.items() if below_log_threshold(v, ell, r, n))
    row["histogram"] = " ".join(f"{v}:{c}" for v, c in sorted(dist.items()))
    row["below"] = below
    row["proportion"] = _fmt(Fraction(below, p))
    if n >= 2:
        closed = chiral_count_closed_form(n)
        row["b_closed"] = closed
        if n <= brute_max:
            brute = chiral_count_brute(n)
            row["b_brute"] = brute
            row["b_agree"] = brute == closed
        else:
            row["b_brute"] = row["b_agree"] = ""
    else:
        row["b_closed"] = row["b_brute"] = row["b_agree"] = ""
    return row


def cmd_sn_stats(ns) -> dict:
    n_lo = ns.n if ns.n is not None else 1
    n_hi = ns.n_max if ns.n_max is not None else n_lo
    if n_lo < 1 or n_hi < n_lo:
        raise UsageError("need 1 <= --n <= --n-max")
    ell = ns.ell if ns.ell is not None else 2
    r = ns.r if ns.r is not None else 1
    if ell < 2:
        raise UsageError("--ell must be a prime")
    brute_max = min(ns.brute_max, CHIRAL_BRUTE_MAX_N)
    items = [(n, ell, r, brute_max, ns.budget) for n in range(n_lo, n_hi + 1, ns.step)]
    rows = _map(_sn_row, items, ns.jobs)
    props = [row["proportion"] for row in rows if row["proportion"] != TRUNCATED]
    agree = [row["b_agree"] for row in rows if row["b_agree"] != ""]
    verdicts = [
        {"check": "b(n) closed form = brute force", "status": "pass" if all(agree) else "fail", "detail": f"{len(agree)} values compared"},
        {
            "check": f"proportion v_{ell}(f) < {r} + log_{ell} n non-increasing",
            "status": "pass" if all(a >= b for a, b in zip(props, props[1:])) else "fail",
            "detail": f"{len(props)} rows",
        },
    ]
    if any(row["proportion"] == TRUNCATED for row in rows):
        verdicts.append({"check": "budget", "status": TRUNCATED, "detail": f"rows with p(n) > {ns.budget} not computed"})
    return {"config": {"n": n_lo, "n_max": n_hi, "step": ns.step, "ell": ell, "r": r, "brute_max": brute_max}, "rows": rows, "verdicts": verdicts}


# --- gln-stats -----------------------------------------------------------------


def _gln_row(args) -> dict:
    q, n, k, n0, r, budget = args
    size = green.class_number(q, n)
    if size > budget:
        return {"q": q, "n": n, "X_n": size, "status": TRUNCATED}
    row = green.gln_stats_row(q, n, k=k, n0=n0, r=r)
    row["status"] = "ok"
    return row


def cmd_gln_stats(ns) -> dict:
    q = _odd_prime_power(ns.q if ns.q is not None else 3)
    n_lo = ns.n if ns.n is not None else 1
    n_hi = ns.n_max if ns.n_max is not None else n_lo
    if n_lo < 1 or n_hi < n_lo:
        raise UsageError("need 1 <= --n <= --n-max")
    if ns.ell not in (None, 2):
        raise UsageError("gln-stats works with 2-adic valuations only (--ell 2)")
    k = ns.k if ns.k is not None else 1
    n0 = ns.n0 if ns.n0 is not None else 1
    r = ns.r if ns.r is not None else 1
    if k < 1 or not 1 <= n0:
        raise UsageError("need --k >= 1 and --n0 >= 1")
    items = [(q, n, k, n0, r, ns.budget) for n in range(n_lo, n_hi + 1)]
    rows = _map(_gln_row, items, ns.jobs)
    # every row carries every column so csv stays rectangular
    columns = []
    for row in rows:
        for c in row:
            if c not in columns:
                columns.append(c)
    rows = [{c: row.get(c, "") for c in columns} for row in rows]
    done = [row for row in rows if row["status"] == "ok"]
    verdicts = [
        {
            "check": "|X_n| = class number",
            "status": "pass" if all(row["X_n"] == row["class_number"] for row in done) else "fail",
            "detail": f"{len(done)} rows",
        }
    ]
    if len(done) < len(rows):
        verdicts.append({"check": "budget", "status": TRUNCATED, "detail": f"rows with |X_n| > {ns.budget} not computed"})
    return {"config": {"q": q, "n": n_lo, "n_max": n_hi, "k": k, "n0": n0, "r": r}, "rows": rows, "verdicts": verdicts}


# --- gl2-table -----------------------------------------------------------------


def _table_rows(q: int) -> list[dict]:
    reps = list(gl2.enumerate_self_dual_reps(q))
    w1 = {}
    for rep in reps:
        d = gl2.sw_decision(rep)
        w1.setdefault(gl2.subcase(rep), []).append(d.w1_trivial)
    out = []
    for row in gl2.summary_table(q):
        w1_values = w1.get(row.case, [])
        w1_cell = "" if not w1_values else ("unknown" if None in w1_values else _yes_no(gl2._all_same(w1_values)))
        match = row.matches_table
        out.append(
            {
                "q": q,
                "q_mod_8": q % 8,
                "q_mod_16": q % 16,
                "family": row.label,
                "count": row.count,
                "m_pi": row.m_pi,
                "w1_zero": w1_cell,
                "w2_zero": _yes_no(row.w2_trivial),
                "w4_zero": _yes_no(row.w4_trivial),
                "in_table": row.in_table,
                "table_w2_zero": _yes_no(row.table_w2) if row.in_table else "",
                "table_w4_zero": _yes_no(row.table_w4) if row.in_table else "",
                "matches_table": "out-of-table" if not row.in_table else ("vacuous" if match is None else match),
            }
        )
    return out


def cmd_gl2_table(ns) -> dict:
    q_lo = _odd_prime_power(ns.q if ns.q is not None else 3)
    q_hi = ns.q_max if ns.q_max is not None else q_lo
    if q_hi < q_lo:
        raise UsageError("need --q <= --q-max")
    qs = [q for q in gl2.prime_powers(max(q_hi, 3)) if q >= q_lo]
    truncated = [q for q in qs if q > ns.budget]
    qs = [q for q in qs if q <= ns.budget]
    rows = [row for chunk in _map(_table_rows, qs, ns.jobs) for row in chunk]
    verdicts = []
    for q in qs:
        bad = [f"{row['family']}" for row in rows if row["q"] == q and row["matches_table"] is False]
        verdicts.append({"check": f"q={q} agrees with the summary table", "status": "fail" if bad else "pass", "detail": "; ".join(bad)})
    if truncated:
        verdicts.append({"check": "budget", "status": TRUNCATED, "detail": f"q > {ns.budget} skipped"})
    return {"config": {"q": q_lo, "q_max": q_hi}, "rows": rows, "verdicts": verdicts}


# --- gl2-density ---------------------------------------------------------------


def _density_record(q: int) -> gl2.DensityRecord:
    return gl2.density(q)


def cmd_gl2_density(ns) -> dict:
    X = ns.X if ns.X is not None else 10**4
    if X < 3:
        raise UsageError("--X must be at least 3")
    cap = min(X, ns.budget)
    records = _map(_density_record, list(gl2.prime_powers(cap)), ns.jobs)
    per = {a: [0, 0] for a in (1, 3, 5, 7)}
    count = total = 0
    rows = []
    for rec in records:
        per[rec.residue][0] += rec.count_w2_zero
        per[rec.residue][1] += rec.total_orthogonal
        count += rec.count_w2_zero
        total += rec.total_orthogonal
        c, t = per[rec.residue]
        rows.append(
            {
                "q": rec.q,
                "q_mod_8": rec.residue,
                "w2_zero": rec.count_w2_zero,
                "self_dual": rec.total_orthogonal,
                "derived_closed_form": rec.derived_closed_form,
                "table_closed_form": rec.table_closed_form,
                "census_total": rec.census_total,
                "class_running_ratio": _fmt(Fraction(c, t)),
                "global_running_ratio": _fmt(Fraction(count, total)),
            }
        )
    verdicts = []
    for a in (1, 3, 5, 7):
        c, t = per[a]
        ratio = Fraction(c, t) if t else Fraction(0)
        target, derived = gl2.STATED_CLASS_LIMITS[a], gl2.DERIVED_CLASS_LIMITS[a]
        verdicts.append(
            {
                "check": f"class q = {a} mod 8",
                "status": f"{float(ratio):.6f}",
                "detail": f"stated limit {target}, derived limit {derived}, deviation {float(abs(ratio - target)):.6f}",
            }
        )
    g = Fraction(count, total) if total else Fraction(0)
    verdicts.append(
        {
            "check": "global",
            "status": f"{float(g):.6f}",
            "detail": f"stated limit {gl2.STATED_GLOBAL_LIMIT}, derived limit {gl2.DERIVED_GLOBAL_LIMIT}, deviation {float(abs(g - gl2.STATED_GLOBAL_LIMIT)):.6f}",
        }
    )
    if cap < X:
        verdicts.append({"check": "budget", "status": TRUNCATED, "detail": f"stopped at X = {cap}"})
    return {"config": {"X": X}, "rows": rows, "verdicts": verdicts}


# --- verify --------------------------------------------------------------------


def cmd_verify(ns) -> tuple[dict, int]:
    from .acceptance import run_all

    only = None
    if ns.only:
        try:
            only = {int(x) for x in ns.only.split(",")}
        except ValueError:
            raise UsageError("--only takes a comma-separated list of criterion numbers") from None
    tol = Fraction(ns.density_tol) if ns.density_tol is not None else None
    results = run_all(only, tol)
    rows = [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    failed = [r.number for r in results if not r.passed]
    verdicts = [{"check": f"{r.number}. {r.name}", "status": "PASS" if r.passed else "FAIL", "detail": r.detail} for r in results]
    report = {"config": {"only": sorted(only) if only else "all", "density_tol": ns.density_tol}, "rows": rows, "verdicts": verdicts}
    return report, EXIT_CHECK_FAILED if failed else EXIT_OK


# --- rendering -----------------------------------------------------------------


def render(report: dict, fmt: str, table: bool = True) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        rows = report["rows"]
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    lines = []
    rows = report["rows"] if table else []
    if rows:
        cols = list(rows[0])
        width = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
        lines.append("  ".join(c.ljust(width[c]) for c in cols))
        for r in rows:
            lines.append("  ".join(str(r[c]).ljust(width[c]) for c in cols))
    for v in report["verdicts"]:
        lines.append(f"[{v['status']}] {v['check']}" + (f": {v['detail']}" if v["detail"] else ""))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--q-max", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--X", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--n0", type=int)

    p = argparse.ArgumentParser(prog="glnsw", description="Character degrees of GL_n(F_q) and S_n, and Stiefel-Whitney classes of GL_2(F_q).")
    sub = p.add_subparsers(dest="command", required=True)
    sn = sub.add_parser("sn-stats", parents=[common], help="S_n: p(n), v_ell(f_lambda) histograms, chiral counts")
    sn.add_argument("--step", type=int, default=1)
    sn.add_argument("--brute-max", type=int, default=12, help="largest n for the brute-force chiral count")
    sub.add_parser("gln-stats", parents=[common], help="GL_n(F_q): label counts, v2 histograms, divisibility")
    sub.add_parser("gl2-table", parents=[common], help="w1/w2/w4 verdicts per self-dual family of GL_2(F_q)")
    sub.add_parser("gl2-density", parents=[common], help="share of self-dual reps with w2 = 0, q <= X")
    v = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    v.add_argument("--only", help="comma-separated criterion numbers")
    v.add_argument("--density-tol", help="override every density tolerance (a fraction like 0 or 1/100)")
    return p


COMMANDS = {
    "sn-stats": cmd_sn_stats,
    "gln-stats": cmd_gln_stats,
    "gl2-table": cmd_gl2_table,
    "gl2-density": cmd_gl2_density,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if ns.jobs < 1:
            raise UsageError("--jobs must be positive")
        if ns.budget is None:
            ns.budget = DEFAULT_BUDGETS.get(ns.command, 0)
        elif ns.budget <= 0:
            raise UsageError("--budget must be positive")
        if ns.command == "sn-stats" and ns.step < 1:
            raise UsageError("--step must be positive")
        if ns.command == "verify":
            report, code = cmd_verify(ns)
        else:
            report, code = COMMANDS[ns.command](ns), EXIT_OK
    except UsageError as e:
        print(f"glnsw: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = render(report, ns.format, table=ns.command != "verify")
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
