"""Compare quadratic edge bounds with exact edge numbers from enumeration.

Prints, for each small (m,n) and order p, the exact e/E and the bound slack.

    python3 scripts/edge_bound_gaps.py [--max-order 7]
"""
import argparse

from ramsey_bounds.bounds import get_params
from ramsey_bounds.edges import edge_bounds
from ramsey_bounds.engine import resolve_workers
from ramsey_bounds.oracle import exact_edge_numbers
from ramsey_bounds.verify import EXACT_SMALL, exact_small_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=7)
    args = ap.parse_args()
    table = exact_small_table()
    workers = resolve_workers()
    print(f"{'m':>2} {'n':>2} {'p':>2} | {'e':>3} {'E':>3} | {'e_lo':>4} {'E_up':>4} | slack")
    for m, n in EXACT_SMALL:
        params = get_params(table, m, n)
        for p in range(1, args.max_order + 1):
            exact = exact_edge_numbers(m, n, p, ceiling=args.max_order, workers=workers)
            eb = edge_bounds(m, n, p, params)
            if exact is None:
                status = "nonexistent (bound agrees)" if not eb.exists else "nonexistent (bound misses)"
                print(f"{m:>2} {n:>2} {p:>2} | {'-':>3} {'-':>3} | "
                      f"{str(eb.e_lower):>4} {str(eb.E_upper):>4} | {status}")
                continue
            e, E = exact
            print(f"{m:>2} {n:>2} {p:>2} | {e:>3} {E:>3} | {eb.e_lower:>4} {eb.E_upper:>4} | "
                  f"{e - eb.e_lower} / {eb.E_upper - E}")


if __name__ == "__main__":
    main()
