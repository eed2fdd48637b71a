"""Exit criteria. Each test records one PASS/FAIL line, printed at session end."""
import json
import random
import time
from contextlib import contextmanager


from ramsey_bounds.bounds import get_params, ingest_seeds, load_seeds, parse_seed_csv
from ramsey_bounds.edges import edge_bounds
from ramsey_bounds.engine import run_fixpoint
from ramsey_bounds.oracle import Graph, all_graphs, exact_edge_numbers, goodman_check
from ramsey_bounds.triangle import hwplus_holds, mymain_holds
from ramsey_bounds.verify import EXACT_SMALL, exact_small_table

from .reference_values import REFERENCE_6x23, REFERENCE_10x15

RESULTS: list[str] = []


@contextmanager
def criterion(number, name, budget_s):
    t0 = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        ok = elapsed < budget_s
        detail = f"{elapsed:.2f}s (budget {budget_s}s)"
        assert ok, f"criterion {number} over time budget: {detail}"
    except AssertionError as exc:
        detail = detail or str(exc).splitlines()[0]
        raise
    finally:
        RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {name}: {detail}")


def test_1_classical_chain():
    with criterion(1, "sum rule from base cases gives R(3,3..5), R(4,4) exactly", 1):
        table, _ = run_fixpoint(ingest_seeds([]), 4, 5, {"a"})
        got = {mn: table.upper(*mn) for mn in [(3, 3), (3, 4), (3, 5), (4, 4)]}
        assert got == {(3, 3): 6, (3, 4): 9, (3, 5): 14, (4, 4): 18}


def test_2_sum_rule_consistency():
    with criterion(2, "sum rule on published neighbours: 3576, 12643, 45488", 1):
        targets = {(8, 9): 3576, (9, 10): 12643, (10, 11): 45488}
        seeds = [(m, n, 1, v, "published") for (m, n), (v, _) in REFERENCE_10x15.items()
                 if (m, n) not in targets and m + n <= 21]
        survey, _ = parse_seed_csv(open(_survey_path()).read())
        seeds += [r for r in survey if r.m <= 4]
        table, _ = run_fixpoint(ingest_seeds(seeds), 10, 11, {"a"})
        assert {mn: table.upper(*mn) for mn in targets} == targets
        assert all(table.get(*mn).label == "a" for mn in targets)


def test_3_goodman_identity():
    with criterion(3, "Goodman identity: all graphs p<=6, 10^4 random p=7..10", 60):
        count = 0
        for p in range(7):
            for g in all_graphs(p):
                assert goodman_check(g)
                count += 1
        assert count == sum(2 ** (p * (p - 1) // 2) for p in range(7))
        rng = random.Random(20240101)
        for _ in range(10_000):
            g = Graph.random(rng.randint(7, 10), rng, density=rng.random())
            assert goodman_check(g)


def test_4_edge_bound_soundness():
    with criterion(4, "edge bounds bracket exact e, E for small cases, p<=7", 300):
        table = exact_small_table()
        checked = 0
        for m, n in EXACT_SMALL:
            params = get_params(table, m, n)
            for p in range(8):
                exact = exact_edge_numbers(m, n, p)
                if exact is None:
                    continue
                eb = edge_bounds(m, n, p, params)
                assert eb.exists and eb.e_lower <= exact[0] <= exact[1] <= eb.E_upper, (m, n, p)
                checked += 1
        assert checked == 6 + 8 + 8 + 8
        p33 = get_params(table, 3, 3)
        eb = edge_bounds(3, 3, 5, p33)
        assert (eb.e_lower, eb.E_upper) == (5, 5)
        assert not edge_bounds(3, 3, 6, p33).exists


def test_5_feasibility_soundness():
    with criterion(5, "both feasibility tests hold for every p < R(m,n), small cases", 10):
        table = exact_small_table()
        for (m, n), r in EXACT_SMALL.items():
            params = get_params(table, m, n)
            for p in range(2, r):
                assert hwplus_holds(m, n, p, params).holds, (m, n, p)
                assert mymain_holds(m, n, p, table).holds, (m, n, p)
        out = mymain_holds(3, 3, 5, table)
        assert out.holds and out.rhs_value == out.lhs == 12


def _survey_path():
    from ramsey_bounds.bounds import packaged_seed_path
    return packaged_seed_path("survey.csv")


def test_6_table_reproduction():
    with criterion(6, "row m=5 of both published tables, values and labels", 600):
        seeds = load_seeds(_survey_path())
        t1, _ = run_fixpoint(seeds, 10, 15)
        t2, _ = run_fixpoint(seeds, 6, 23)
        row5 = {mn: v for mn, v in REFERENCE_10x15.items() if mn[0] == 5}
        row5_wide = {mn: v for mn, v in REFERENCE_6x23.items() if mn[0] == 5}
        got = {mn: (t1.upper(*mn), t1.get(*mn).label) for mn in row5}
        got_wide = {mn: (t2.upper(*mn), t2.get(*mn).label) for mn in row5_wide}
        assert got == row5
        assert got_wide == row5_wide


def _perturbed(rng, base_records, weaken=4):
    out = []
    for r in base_records:
        bump = rng.randint(0, weaken) if rng.random() < 0.5 else 0
        out.append((r.m, r.n, 1, r.upper + bump, r.source))
    return out


def _uppers(table, max_m, max_n):
    return {(m, n): table.upper(m, n) if (m, n) in table else None
            for m in range(3, max_m + 1) for n in range(m, max_n + 1)}


def test_7_engine_properties():
    with criterion(7, "idempotence, monotonicity, symmetry, determinism over 100 perturbations", 300):
        max_m, max_n = 5, 11
        survey, _ = parse_seed_csv(open(_survey_path()).read())
        base = [r for r in survey if r.m <= max_m and r.n <= max_n]
        rng = random.Random(7)
        subsets = [{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}]
        for trial in range(100):
            records = _perturbed(rng, base)
            seeds = ingest_seeds(records)
            full, recs = run_fixpoint(seeds, max_m, max_n)
            u_full = _uppers(full, max_m, max_n)

            again, more = run_fixpoint(full, max_m, max_n)
            assert more == [] and again.values() == full.values(), trial

            sub = subsets[trial % len(subsets)]
            partial, _ = run_fixpoint(seeds, max_m, max_n, sub)
            for mn, u in _uppers(partial, max_m, max_n).items():
                assert u is None or u_full[mn] <= u, (trial, sub, mn)

            tighter = [(m, n, lo, max(up - rng.randint(0, 4), _floor(m, n, up)), s)
                       for m, n, lo, up, s in records]
            t_tight, _ = run_fixpoint(ingest_seeds(tighter), max_m, max_n)
            for mn, u in _uppers(t_tight, max_m, max_n).items():
                assert u <= u_full[mn], (trial, mn)

            for pt, e in full:
                assert full.get(pt.n, pt.m) == e

            twin, twin_recs = run_fixpoint(ingest_seeds(records), max_m, max_n)
            assert twin_recs == recs
            assert json.dumps(_dump(twin)) == json.dumps(_dump(full))


def _floor(m, n, up):
    # never tighten below the published seed, so every perturbed seed stays a true bound
    return min(up, SEED_FLOOR.get((m, n), up))


def _dump(table):
    return [[pt.m, pt.n, e.lower, e.upper, e.label,
             e.derivation.to_dict() if e.derivation else None] for pt, e in table]


SEED_FLOOR = {(r.m, r.n): r.upper for r in parse_seed_csv(open(_survey_path()).read())[0]}
