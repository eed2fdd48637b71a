"""Triangle-counting feasibility tests for (m,n;p)-graphs.

Both tests state a necessary condition for an (m,n;p)-graph to exist. When a
test fails at p, no such graph exists and R(m,n) <= p.

``hwplus`` caps the triangles at a vertex of degree d by alpha*d/2 and the
co-triangles by beta*(p-1-d)/2. ``mymain`` instead uses the edge bounds of
the neighbourhood, an (m-1,n;d)-graph, and of the non-neighbourhood, an
(m,n-1;p-1-d)-graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import ArithmeticOverflow, BoundsTable, MethodParams, get_params
from .edges import edge_bounds_at, edge_profile


# Largest order for which every MymainScanner term fits in int64:
# q^2 + 3dq + 2E <= 3.25 p^2 < 2^63 when p <= 2^30.
INT64_MAX_ORDER = 1 << 30


def binom2(x: int) -> int:
    return x * (x - 1) // 2 if x >= 2 else 0


@dataclass(frozen=True)
class FeasibilityOutcome:
    holds: bool
    lhs: int
    rhs_value: Optional[int] = None
    witness_d: Optional[int] = None
    interval: tuple[int, int] = (0, -1)

    @property
    def interval_empty(self) -> bool:
        return self.interval[0] > self.interval[1]


def degree_interval(p: int, params: MethodParams) -> tuple[int, int]:
    """Admissible vertex degrees, [p-1-delta, gamma] intersected with [0, p-1]."""
    return max(0, p - 1 - params.delta), min(params.gamma, p - 1)


def _hwplus_value(p: int, params: MethodParams, d: int) -> int:
    a, b = params.alpha, params.beta
    return -3 * d * d + (a - b + 3 * (p - 1)) * d + (b - a) * (p - 1)


def hwplus_rhs(p: int, params: MethodParams) -> Optional[tuple[int, int]]:
    """Exact max of the concave quadratic over the degree interval, with argmax."""
    lo, hi = degree_interval(p, params)
    if lo > hi:
        return None
    c = params.alpha - params.beta + 3 * (p - 1)
    v = c // 6
    best = None
    for d in sorted({min(max(v, lo), hi), min(max(v + 1, lo), hi)}):
        val = _hwplus_value(p, params, d)
        if best is None or val > best[0]:
            best = (val, d)
    return best


def hwplus_holds(m: int, n: int, p: int, params: MethodParams) -> FeasibilityOutcome:
    lhs = (p - 1) * (p - 2 - params.alpha)
    interval = degree_interval(p, params)
    rhs = hwplus_rhs(p, params)
    if rhs is None:
        return FeasibilityOutcome(False, lhs, interval=interval)
    value, d = rhs
    return FeasibilityOutcome(lhs <= value, lhs, value, d if lhs <= value else None, interval)


def delta(m: int, n: int, p: int, d: int, table: BoundsTable) -> Optional[int]:
    """E_upper(m-1,n;d) - e_lower(m,n-1;p-d-1); None if either graph cannot exist."""
    hi = edge_bounds_at(table, m - 1, n, d)
    lo = edge_bounds_at(table, m, n - 1, p - d - 1)
    if not (hi.exists and lo.exists):
        return None
    return hi.E_upper - lo.e_lower


def mymain_term(p: int, d: int, delta_value: int) -> int:
    q = p - d - 1
    return 2 * binom2(q) + 2 * delta_value + 3 * d * q


def mymain_holds(m: int, n: int, p: int, table: BoundsTable) -> FeasibilityOutcome:
    """Straight per-degree evaluation; the engine uses :class:`MymainScanner`."""
    params = get_params(table, m, n)
    lhs = (p - 1) * (p - 2)
    interval = degree_interval(p, params)
    best: Optional[tuple[int, int]] = None
    for d in range(interval[0], interval[1] + 1):
        dv = delta(m, n, p, d, table)
        if dv is None:
            continue
        t = mymain_term(p, d, dv)
        if best is None or t > best[0]:
            best = (t, d)
    if best is None:
        return FeasibilityOutcome(False, lhs, interval=interval)
    ok = lhs <= best[0]
    return FeasibilityOutcome(ok, lhs, best[0], best[1] if ok else None, interval)


class MymainScanner:
    """Vectorised ``mymain_holds`` for one (m, n) against a fixed table.

    Edge bounds for every admissible neighbourhood and non-neighbourhood order
    are computed once, so scanning many p costs one numpy pass each.
    """

    def __init__(self, m: int, n: int, table: BoundsTable):
        self.m, self.n = m, n
        self.params = get_params(table, m, n)
        self.nbr = edge_profile(table, m - 1, n, self.params.gamma + 1)
        self.non = edge_profile(table, m, n - 1, self.params.delta + 1)

    def __call__(self, p: int) -> FeasibilityOutcome:
        if p > INT64_MAX_ORDER:
            raise ArithmeticOverflow(f"order {p} exceeds the int64 scanner limit {INT64_MAX_ORDER}")
        lhs = (p - 1) * (p - 2)
        lo, hi = degree_interval(p, self.params)
        if lo > hi:
            return FeasibilityOutcome(False, lhs, interval=(lo, hi))
        d = np.arange(lo, hi + 1, dtype=np.int64)
        q = (p - 1) - d
        mask = self.nbr.exists[lo:hi + 1] & self.non.exists[q]
        if not mask.any():
            return FeasibilityOutcome(False, lhs, interval=(lo, hi))
        terms = (
            q * (q - 1)  # 2 * C(q, 2); zero for q in {0, 1}
            + 2 * (self.nbr.upper[lo:hi + 1] - self.non.lower[q])
            + 3 * d * q
        )
        terms = np.where(mask, terms, np.iinfo(np.int64).min)
        i = int(np.argmax(terms))
        rhs = int(terms[i])
        ok = lhs <= rhs
        return FeasibilityOutcome(ok, lhs, rhs, lo + i if ok else None, (lo, hi))
