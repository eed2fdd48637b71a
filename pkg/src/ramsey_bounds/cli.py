"""Command line interface: ``rbf compute | explain | edges | oracle``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .bounds import (
    ArithmeticOverflow,
    BoundsTable,
    InconsistencyDetected,
    InconsistentSeed,
    MalformedRecord,
    RamseyPoint,
    base_value,
    get_params,
    load_seeds,
)
from .edges import edge_bounds_at
from .engine import METHODS, resolve_workers, run_fixpoint
from .oracle import CeilingExceeded

log = logging.getLogger("ramsey_bounds")

EXIT_OK, EXIT_IO, EXIT_MATH = 0, 1, 2
FORMATS = ("csv", "json", "markdown", "md", "textable")


@dataclass
class RunConfig:
    max_m: int
    max_n: int
    seed_path: Path
    methods: frozenset = frozenset(METHODS)
    format: str = "csv"
    deep_scan: bool = False
    output: Optional[Path] = None

    def __post_init__(self):
        if not 3 <= self.max_m <= self.max_n:
            raise ValueError("need 3 <= max-m <= max-n")


def parse_methods(text: str) -> frozenset:
    methods = frozenset(ch for ch in text.replace(",", "") if not ch.isspace())
    bad = methods - set(METHODS)
    if bad:
        raise argparse.ArgumentTypeError(f"unknown methods: {''.join(sorted(bad))}")
    return methods


# -- output formats -----------------------------------------------------------

def _cells(table: BoundsTable, max_m: int, max_n: int):
    for m in range(3, max_m + 1):
        for n in range(m, max_n + 1):
            if (m, n) in table:
                yield m, n, table.get(m, n)


def _label(entry) -> str:
    return entry.label or "seed"


def format_csv(table: BoundsTable, max_m: int, max_n: int) -> str:
    buf = io.StringIO()
    buf.write(f"# revision: {table.revision}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "upper", "label"])
    for m, n, e in _cells(table, max_m, max_n):
        w.writerow([m, n, e.upper, _label(e)])
    return buf.getvalue()


def format_json(table: BoundsTable, max_m: int, max_n: int, config: Optional[RunConfig] = None) -> str:
    cells = []
    for m, n, e in _cells(table, max_m, max_n):
        cells.append({
            "m": m,
            "n": n,
            "lower": e.lower,
            "upper": e.upper,
            "label": _label(e),
            "improved": e.improved,
            "seed_upper": e.seed_upper,
            "source": e.source,
            "derivation": e.derivation.to_dict() if e.derivation is not None else None,
        })
    doc = {
        "revision": table.revision,
        "max_m": max_m,
        "max_n": max_n,
        "methods": sorted(config.methods) if config else None,
        "deep_scan": config.deep_scan if config else None,
        "cells": cells,
    }
    return json.dumps(doc, indent=2) + "\n"


def _grid(table, max_m, max_n, render, header, sep, end, fill=""):
    lines = [header]
    for m in range(3, max_m + 1):
        row = [str(m)]
        for n in range(3, max_n + 1):
            row.append(render(table.get(m, n)) if n >= m and (m, n) in table else fill)
        lines.append(sep.join(row) + end)
    return lines


def format_markdown(table: BoundsTable, max_m: int, max_n: int) -> str:
    def render(e):
        v = f"**{e.upper}**" if e.improved else str(e.upper)
        return f"{v} ({e.label})" if e.label else v

    cols = list(range(3, max_n + 1))
    head = "| m \\ n | " + " | ".join(map(str, cols)) + " |\n|" + "---|" * (len(cols) + 1)
    body = _grid(table, max_m, max_n, render, head, " | ", " |")
    body[1:] = ["| " + ln for ln in body[1:]]
    return f"Upper bounds on R(m,n); seeds: {table.revision}\n\n" + "\n".join(body) + "\n"


def format_textable(table: BoundsTable, max_m: int, max_n: int) -> str:
    def render(e):
        v = f"\\textbf{{{e.upper}}}" if e.improved else str(e.upper)
        return f"{v}$^{e.label}$" if e.label else v

    cols = list(range(3, max_n + 1))
    lines = [
        f"% seeds: {table.revision}",
        "\\begin{tabular}{|l||" + "c|" * len(cols) + "}",
        "\\hline",
        "$m \\backslash n$ & " + " & ".join(map(str, cols)) + " \\\\",
        "\\hline",
    ]
    lines += _grid(table, max_m, max_n, render, None, " & ", " \\\\")[1:]
    lines += ["\\hline", "\\end{tabular}"]
    return "\n".join(lines) + "\n"


def render_table(table: BoundsTable, config: RunConfig) -> str:
    fmt = config.format
    if fmt == "json":
        return format_json(table, config.max_m, config.max_n, config)
    if fmt in ("markdown", "md"):
        return format_markdown(table, config.max_m, config.max_n)
    if fmt == "textable":
        return format_textable(table, config.max_m, config.max_n)
    return format_csv(table, config.max_m, config.max_n)


# -- explain --------------------------------------------------------------------

def explain_lines(table: BoundsTable, m: int, n: int) -> list[str]:
    lines: list[str] = []
    seen: set = set()

    def walk(pt: RamseyPoint, depth: int):
        pad = "  " * depth
        exact = base_value(*pt)
        if exact is not None:
            lines.append(f"{pad}base case: R({pt.m},{pt.n}) = {exact}")
            return
        entry = table.get(*pt)
        head = f"{pad}R({pt.m},{pt.n}) <= {entry.upper}"
        if entry.derivation is None:
            src = f" [{entry.source}]" if entry.source else ""
            lines.append(f"{head}: seed{src}")
            return
        if pt in seen:
            lines.append(f"{head}: (derived above)")
            return
        seen.add(pt)
        rec = entry.derivation
        lines.append(f"{head}: {rec.describe()}")
        for prem, _ in rec.premises:
            walk(prem, depth + 1)

    walk(RamseyPoint.of(m, n), 0)
    return lines


# -- commands -------------------------------------------------------------------

def _derive(seeds: Path, max_m: int, max_n: int, methods, deep_scan: bool):
    table = load_seeds(seeds)
    return run_fixpoint(table, max_m, max_n, methods, deep_scan, resolve_workers())


def cmd_compute(args) -> int:
    config = RunConfig(args.max_m, args.max_n, Path(args.seeds), args.methods, args.format,
                       args.deep_scan, Path(args.output) if args.output else None)
    if not config.methods:
        raise ValueError("compute needs at least one method")
    table, _ = _derive(config.seed_path, config.max_m, config.max_n, config.methods, config.deep_scan)
    text = render_table(table, config)
    if config.output:
        config.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_explain(args) -> int:
    lo, hi = sorted((args.m, args.n))
    if base_value(lo, hi) is not None:
        print(f"base case: R({args.m},{args.n}) = {base_value(lo, hi)}")
        return EXIT_OK
    table, _ = _derive(Path(args.seeds), lo, hi, args.methods, args.deep_scan)
    print(f"# revision: {table.revision}")
    print("\n".join(explain_lines(table, lo, hi)))
    return EXIT_OK


def cmd_edges(args) -> int:
    m, n, p = args.m, args.n, args.p
    lo, hi = sorted((m, n))
    params = None
    if lo <= 2:
        table = BoundsTable()
    else:
        # the four shifted cells all lie inside the lo x hi region
        table, _ = _derive(Path(args.seeds), lo, hi, args.methods, False)
        params = get_params(table, m, n)
    eb = edge_bounds_at(table, m, n, p)
    print(f"# revision: {table.revision}")
    ptxt = "exact" if params is None else (
        f"alpha={params.alpha} beta={params.beta} gamma={params.gamma} delta={params.delta}")
    if eb.exists:
        print(f"e_lower={eb.e_lower} E_upper={eb.E_upper} params=({ptxt})")
    else:
        print(f"NONEXISTENT params=({ptxt})")
    return EXIT_OK


def cmd_oracle_edges(args) -> int:
    from .oracle import exact_edge_extremes

    res = exact_edge_extremes(args.m, args.n, args.p, ceiling=args.ceiling, workers=resolve_workers())
    if res is None:
        print("NONEXISTENT")
        return EXIT_OK
    print(f"e={res.e} E={res.E}")
    if args.witness:
        for name, g in (("min", res.min_witness), ("max", res.max_witness)):
            print(f"# {name} witness ({g.edge_count} edges)")
            print("\n".join(g.to_matrix()))
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    from . import verify

    results = verify.run_all(args.max_order, seed=args.seed, samples=args.samples)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbf", description="Recursive upper bounds for Ramsey numbers R(m,n).")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def seeded(p):
        p.add_argument("--seeds", required=True, help="seed CSV (or JSON written by compute)")
        p.add_argument("--methods", type=parse_methods, default=frozenset(METHODS), help="subset of abc")
        p.add_argument("--deep-scan", action="store_true", help="scan every p down to the lower bound")

    p = sub.add_parser("compute", help="derive the bounds table")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    seeded(p)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("explain", help="print the derivation chain of one cell")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    seeded(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("edges", help="edge-count bounds for (m,n;p)-graphs")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    seeded(p)
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("oracle", help="brute-force checks on small graphs")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("verify")
    q.add_argument("--max-order", type=int, default=8)
    q.add_argument("--seed", type=int, default=20240101)
    q.add_argument("--samples", type=int, default=10_000)
    q.set_defaults(func=cmd_oracle_verify)
    q = osub.add_parser("edges")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("p", type=int)
    q.add_argument("--ceiling", type=int, default=8)
    q.add_argument("--witness", action="store_true", help="print extremal graphs as 0/1 rows")
    q.set_defaults(func=cmd_oracle_edges)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InconsistencyDetected, InconsistentSeed, ArithmeticOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (OSError, MalformedRecord, CeilingExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
