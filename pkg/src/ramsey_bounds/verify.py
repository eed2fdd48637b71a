"""Oracle-backed self checks behind ``rbf oracle verify``."""
from __future__ import annotations

import random

from .bounds import BoundsTable, get_params, ingest_seeds
from .edges import edge_bounds
from .oracle import Graph, all_graphs, exact_edge_numbers, goodman_check
from .triangle import hwplus_holds, mymain_holds

# Exact values; every parameter the small checks need is among these or a base case.
EXACT_SMALL = {(3, 3): 6, (3, 4): 9, (3, 5): 14, (4, 4): 18}


def exact_small_table() -> BoundsTable:
    return ingest_seeds([(m, n, v, v, "exact") for (m, n), v in EXACT_SMALL.items()], "exact small values")


def goodman_exhaustive(max_order: int = 6) -> int:
    """Number of graphs checked; raises AssertionError on the first failure."""
    count = 0
    for p in range(max_order + 1):
        for g in all_graphs(p):
            assert goodman_check(g), g.to_matrix()
            count += 1
    return count


def goodman_random(orders=range(7, 11), samples: int = 10_000, seed: int = 0) -> int:
    rng = random.Random(seed)
    orders = list(orders)
    for _ in range(samples):
        g = Graph.random(rng.choice(orders), rng, density=rng.random())
        assert goodman_check(g), g.to_matrix()
    return samples


def edge_bound_soundness(max_p: int = 7) -> int:
    """Compare bounds with oracle-exact e, E for the small cases. Returns cells checked."""
    table = exact_small_table()
    checked = 0
    for m, n in EXACT_SMALL:
        params = get_params(table, m, n)
        for p in range(max_p + 1):
            exact = exact_edge_numbers(m, n, p)
            eb = edge_bounds(m, n, p, params)
            if exact is None:
                continue
            e, E = exact
            assert eb.exists, (m, n, p)
            assert eb.e_lower <= e <= E <= eb.E_upper, (m, n, p, eb, exact)
            dual = exact_edge_numbers(n, m, p)
            total = p * (p - 1) // 2
            assert dual == (total - E, total - e), (m, n, p)
            checked += 1
    return checked


def feasibility_soundness() -> int:
    table = exact_small_table()
    checked = 0
    for (m, n), r in EXACT_SMALL.items():
        params = get_params(table, m, n)
        for p in range(2, r):
            assert hwplus_holds(m, n, p, params).holds, ("hwplus", m, n, p)
            assert mymain_holds(m, n, p, table).holds, ("mymain", m, n, p)
            checked += 1
    return checked


def run_all(max_order: int = 8, seed: int = 20240101, samples: int = 10_000):
    checks = [
        ("goodman exhaustive", lambda: f"{goodman_exhaustive(min(max_order, 6))} graphs of order <= {min(max_order, 6)}"),
    ]
    if max_order >= 7:
        hi = min(max_order, 10)
        checks.append(("goodman random", lambda: f"{goodman_random(range(7, hi + 1), samples, seed)} graphs of order 7..{hi}"))
    checks += [
        ("edge bounds vs exact", lambda: f"{edge_bound_soundness(min(max_order, 7))} (m,n;p) cases"),
        ("feasibility tests below R", lambda: f"{feasibility_soundness()} (m,n,p) cases"),
    ]
    results = []
    for name, fn in checks:
        try:
            results.append((name, True, fn()))
        except AssertionError as exc:
            results.append((name, False, f"counterexample {exc}"))
    return results
