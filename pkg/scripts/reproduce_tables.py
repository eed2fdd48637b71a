"""Recompute both survey-seeded grids and diff them against the published values.

    python3 scripts/reproduce_tables.py [--format markdown|textable] [--out DIR]
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from ramsey_bounds.bounds import load_seeds, packaged_seed_path  # noqa: E402
from ramsey_bounds.cli import format_markdown, format_textable  # noqa: E402
from ramsey_bounds.engine import resolve_workers, run_fixpoint  # noqa: E402
from tests.reference_values import REFERENCE_6x23, REFERENCE_10x15  # noqa: E402

GRIDS = {"10x15": (10, 15, REFERENCE_10x15), "6x23": (6, 23, REFERENCE_6x23)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--format", choices=["markdown", "textable"], default="markdown")
    ap.add_argument("--out", type=Path, help="write one file per grid here instead of stdout")
    args = ap.parse_args()
    render = format_markdown if args.format == "markdown" else format_textable
    seeds = load_seeds(packaged_seed_path("survey.csv"))

    for name, (max_m, max_n, ref) in GRIDS.items():
        t0 = time.perf_counter()
        table, records = run_fixpoint(seeds, max_m, max_n, workers=resolve_workers())
        elapsed = time.perf_counter() - t0
        text = render(table, max_m, max_n)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            ext = "md" if args.format == "markdown" else "tex"
            (args.out / f"grid_{name}.{ext}").write_text(text)
        else:
            print(text)
        diffs = []
        for (m, n), (value, label) in sorted(ref.items()):
            e = table.get(m, n)
            if (e.upper, e.label) != (value, label):
                diffs.append(f"  R({m},{n}): computed {e.upper}{e.label and ' ' + e.label}, "
                             f"published {value}{label and ' ' + label}")
        print(f"grid {name}: {len(ref)} cells compared, {len(diffs)} differ, "
              f"{len(records)} improvements, {elapsed:.2f}s")
        print("\n".join(diffs))
    return 0


if __name__ == "__main__":
    sys.exit(main())
