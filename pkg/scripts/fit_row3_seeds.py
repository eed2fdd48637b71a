"""Back-solve R(3,n) upper bounds for n = 16..23 from published rows 4 and 5.

For each n in turn, try every candidate R(3,n) above the previous one and keep
those whose fixpoint reproduces the published R(4,n) and R(5,n). This is how
the ``survey-reconstructed`` rows of the packaged seed file were chosen.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from ramsey_bounds.bounds import ingest_seeds, packaged_seed_path, parse_seed_csv  # noqa: E402
from ramsey_bounds.engine import run_fixpoint  # noqa: E402
from tests.reference_values import REFERENCE_6x23  # noqa: E402


def main():
    records, _ = parse_seed_csv(packaged_seed_path("survey.csv").read_text())
    base = [r for r in records if not (r.m == 3 and r.n >= 16)]
    chosen = {}
    prev = next(r.upper for r in records if (r.m, r.n) == (3, 15))
    for n in range(16, 24):
        want4, want5 = REFERENCE_6x23[(4, n)][0], REFERENCE_6x23[(5, n)][0]
        fits = []
        for v in range(prev + 1, prev + n + 1):
            extra = [(3, k, 1, u, "") for k, u in {**chosen, n: v}.items()]
            table, _ = run_fixpoint(ingest_seeds(base + extra), 5, n)
            if (table.upper(3, n), table.upper(4, n), table.upper(5, n)) == (v, want4, want5):
                fits.append(v)
        print(f"R(3,{n}): candidates {fits}")
        if not fits:
            return 1
        chosen[n] = prev = fits[0]
    print("chosen:", chosen)
    return 0


if __name__ == "__main__":
    sys.exit(main())
