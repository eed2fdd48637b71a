"""Fixpoint driver over the bounds table.

Cells (m, n) with m <= n are processed in waves of constant m + n. Every
premise of a cell lies on an earlier wave, so cells of one wave are evaluated
against the same snapshot and their results applied together.
"""
from __future__ import annotations

import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Optional

from .bounds import (
    METHOD_PROVENANCE,
    BoundEntry,
    BoundsTable,
    InconsistencyDetected,
    MissingPremise,
    RamseyPoint,
    base_value,
    get_params,
    ingest_seeds,
    param_points,
)
from .classical import gg_upper
from .triangle import FeasibilityOutcome, MymainScanner, hwplus_holds

log = logging.getLogger(__name__)

METHODS = ("a", "b", "c")


@dataclass(frozen=True)
class DerivationRecord:
    method: str
    point: RamseyPoint
    failing_p: int
    premises: tuple[tuple[RamseyPoint, int], ...]
    wave: int
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    interval: Optional[tuple[int, int]] = None

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "m": self.point.m,
            "n": self.point.n,
            "failing_p": self.failing_p,
            "premises": [{"m": pt.m, "n": pt.n, "upper": u} for pt, u in self.premises],
            "wave": self.wave,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "interval": list(self.interval) if self.interval is not None else None,
        }

    def describe(self) -> str:
        m, n = self.point
        if self.method == "a":
            (_, u1), (_, u2) = self.premises
            if u1 % 2 == 0 and u2 % 2 == 0:
                return f"method a: {u1} + {u2} - 1 = {self.failing_p} (both even, parity gain)"
            odd = " (both odd, no parity gain)" if u1 % 2 and u2 % 2 else ""
            return f"method a: {u1} + {u2} = {self.failing_p}{odd}"
        lo, hi = self.interval
        if lo > hi:
            why = f"degree interval [{lo},{hi}] is empty"
        elif self.rhs is None:
            why = f"no admissible degree in [{lo},{hi}]"
        else:
            why = f"lhs {self.lhs} > max {self.rhs} over degrees [{lo},{hi}]"
        return f"method {self.method}: test fails at p = {self.failing_p}: {why}"


def premises_for(method: str, m: int, n: int) -> list[RamseyPoint]:
    if method == "a":
        return [RamseyPoint.of(m - 1, n), RamseyPoint.of(m, n - 1)]
    pts = list(param_points(m, n))
    if method == "c":
        for mm, nn in ((m - 1, n), (m, n - 1)):
            if min(mm, nn) >= 3:
                pts.extend(param_points(mm, nn))
    seen, out = set(), []
    for pt in pts:
        key = RamseyPoint.of(*pt)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return sorted(out, key=lambda pt: (pt.m + pt.n, pt.m))


def _premise_values(table: BoundsTable, method: str, m: int, n: int):
    return tuple((pt, table.upper(*pt)) for pt in premises_for(method, m, n))


def feasibility_test(method: str, m: int, n: int, table: BoundsTable) -> Callable[[int], FeasibilityOutcome]:
    if method == "b":
        params = get_params(table, m, n)
        return lambda p: hwplus_holds(m, n, p, params)
    if method == "c":
        return MymainScanner(m, n, table)
    raise ValueError(f"no feasibility test for method {method!r}")


def smallest_failing_p(
    holds: Callable[[int], bool],
    scan_floor: int,
    scan_start: int,
    deep_scan: bool = False,
) -> Optional[int]:
    """Scan p downward from ``scan_start``.

    Default: stop at the first p where the test holds and return the last
    failing p. With ``deep_scan`` every p down to ``scan_floor`` is tried and
    the smallest failing one returned.
    """
    found = None
    p = scan_start
    while p >= scan_floor:
        if holds(p):
            if not deep_scan:
                break
        else:
            found = p
        p -= 1
    return found


def _record(method, m, n, table, p, wave, outcome=None) -> DerivationRecord:
    kw = {}
    if outcome is not None:
        kw = dict(lhs=outcome.lhs, rhs=outcome.rhs_value, interval=outcome.interval)
    return DerivationRecord(
        method, RamseyPoint.of(m, n), p, _premise_values(table, method, m, n), wave, **kw
    )


def improve_cell(
    table: BoundsTable,
    m: int,
    n: int,
    methods: Iterable[str],
    wave: int = 0,
    deep_scan: bool = False,
) -> tuple[Optional[int], list[DerivationRecord]]:
    """Apply the enabled methods in order a, b, c to one cell.

    Returns the best new upper bound (None if nothing improved) and a record
    for every improvement.
    """
    methods = set(methods)
    try:
        u_left, u_right = table.upper(m - 1, n), table.upper(m, n - 1)
    except MissingPremise as exc:
        warnings.warn(f"skipping R({m},{n}): {exc}", stacklevel=2)
        return None, []
    pt = RamseyPoint.of(m, n)
    entry = table.entries.get(pt)
    lower = entry.lower if entry else 1
    current = entry.upper if entry else None
    records: list[DerivationRecord] = []

    sum_bound = gg_upper(u_left, u_right)
    if "a" in methods and (current is None or sum_bound < current):
        current = sum_bound
        records.append(_record("a", m, n, table, sum_bound, wave))

    floor = max(lower, 2)
    for method in ("b", "c"):
        if method not in methods:
            continue
        try:
            test = feasibility_test(method, m, n, table)
        except MissingPremise as exc:
            warnings.warn(f"skipping method {method} at R({m},{n}): {exc}", stacklevel=2)
            continue
        start = sum_bound if current is None else current - 1
        p = smallest_failing_p(lambda q: test(q).holds, floor, start, deep_scan)
        if p is not None and (current is None or p < current):
            current = p
            records.append(_record(method, m, n, table, p, wave, test(p)))

    if not records:
        return None, []
    if current < lower:
        raise InconsistencyDetected(
            f"derived R({m},{n}) <= {current} contradicts lower bound {lower}"
        )
    return current, records


def _improve_star(args):
    return improve_cell(*args)


def cells_in_range(max_m: int, max_n: int) -> list[tuple[int, int]]:
    cells = [(m, n) for m in range(3, max_m + 1) for n in range(m, max_n + 1)]
    return sorted(cells, key=lambda c: (c[0] + c[1], c[0]))


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is None:
        workers = int(os.environ.get("RBF_THREADS", "1") or 1)
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def run_fixpoint(
    table: BoundsTable,
    max_m: int,
    max_n: int,
    methods: Iterable[str] = METHODS,
    deep_scan: bool = False,
    workers: int = 1,
) -> tuple[BoundsTable, list[DerivationRecord]]:
    methods = frozenset(methods)
    unknown = methods - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    if not 3 <= max_m <= max_n:
        raise ValueError("need 3 <= max_m <= max_n")
    table = table.copy()
    if not methods:
        return table, []

    cells = cells_in_range(max_m, max_n)
    waves: dict[int, list[tuple[int, int]]] = {}
    for m, n in cells:
        waves.setdefault(m + n, []).append((m, n))

    workers = resolve_workers(workers)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    records: list[DerivationRecord] = []
    wave_no = 0
    try:
        changed = True
        while changed:
            changed = False
            for s in sorted(waves):
                wave_no += 1
                snapshot = table.copy()
                jobs = [(snapshot, m, n, methods, wave_no, deep_scan) for m, n in waves[s]]
                results = pool.map(_improve_star, jobs) if pool else map(_improve_star, jobs)
                for (m, n), (upper, recs) in zip(waves[s], results):
                    if upper is None:
                        continue
                    changed = True
                    records.extend(recs)
                    old = snapshot.entries.get(RamseyPoint.of(m, n))
                    table.set(m, n, BoundEntry(
                        old.lower if old else 1,
                        upper,
                        METHOD_PROVENANCE[recs[-1].method],
                        recs[-1],
                        old.seed_upper if old else None,
                        old.source if old else "",
                    ))
            log.debug("sweep finished at wave %d, changed=%s", wave_no, changed)
    finally:
        if pool:
            pool.shutdown()

    relabel(table, cells, methods, wave_no)
    return table, records


def weakest_method(table: BoundsTable, m: int, n: int, methods: Iterable[str]) -> Optional[str]:
    """Weakest enabled method whose test certifies the cell's current upper bound."""
    u = table.upper(m, n)
    if "a" in methods and gg_upper(table.upper(m - 1, n), table.upper(m, n - 1)) <= u:
        return "a"
    for method in ("b", "c"):
        if method in methods and not feasibility_test(method, m, n, table)(u).holds:
            return method
    return None


def relabel(table: BoundsTable, cells, methods, wave: int) -> None:
    for m, n in cells:
        pt = RamseyPoint.of(m, n)
        entry = table.entries.get(pt)
        if entry is None or not entry.provenance.is_method:
            continue
        label = weakest_method(table, m, n, methods)
        if label is None:
            raise InconsistencyDetected(f"no enabled method re-certifies {pt} <= {entry.upper}")
        rec = entry.derivation
        if rec is None or rec.method != label or rec.premises != _premise_values(table, label, m, n):
            outcome = None if label == "a" else feasibility_test(label, m, n, table)(entry.upper)
            rec = _record(label, m, n, table, entry.upper, wave, outcome)
        table.entries[pt] = replace(entry, provenance=METHOD_PROVENANCE[label], derivation=rec)


def replay(record: DerivationRecord) -> tuple[bool, bool]:
    """Re-run a record against its own premises.

    Returns (fails at failing_p, holds at failing_p - 1). For method a the
    second value compares the sum rule against failing_p - 1.
    """
    m, n = record.point
    seeds = [(pt.m, pt.n, 1, u, "premise") for pt, u in record.premises if base_value(*pt) is None]
    table = ingest_seeds(seeds)
    if record.method == "a":
        (_, u1), (_, u2) = record.premises
        v = gg_upper(u1, u2)
        return v <= record.failing_p, v > record.failing_p - 1
    test = feasibility_test(record.method, m, n, table)
    return (not test(record.failing_p).holds, test(record.failing_p - 1).holds)
