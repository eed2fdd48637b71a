"""Bounds on the minimum and maximum edge counts of (m,n;p)-graphs.

Writing e for the edge count of an (m,n;p)-graph, summing the per-vertex
triangle caps through Goodman's identity and applying Cauchy-Schwarz to the
degree sum gives, after multiplying through by p,

    12 e^2 - 2 A e + B / 12 <= 0,
    A = (alpha - beta + 3(p-1)) p,   B = 12 p^2 (p-1) (p-beta-2),

so e lies between the roots (A -/+ sqrt(A^2 - B)) / 12. A negative
discriminant leaves no admissible e at all. Everything here is exact integer
arithmetic; square roots are rounded so that errors only weaken a bound.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Optional

import numpy as np

from .bounds import BoundsTable, MethodParams, get_params


class Verdict(str, enum.Enum):
    EXISTS_COMPATIBLE = "exists-compatible"
    NONEXISTENCE = "nonexistence"


@dataclass(frozen=True)
class EdgeBounds:
    e_lower: Optional[int]
    E_upper: Optional[int]
    verdict: Verdict

    @property
    def exists(self) -> bool:
        return self.verdict is Verdict.EXISTS_COMPATIBLE

    @classmethod
    def nonexistent(cls) -> "EdgeBounds":
        return cls(None, None, Verdict.NONEXISTENCE)

    @classmethod
    def compatible(cls, lo: int, hi: int) -> "EdgeBounds":
        return cls(lo, hi, Verdict.EXISTS_COMPATIBLE)


def isqrt_floor(x: int) -> int:
    if x < 0:
        raise ValueError("square root of a negative number")
    return isqrt(x)


def isqrt_ceil(x: int) -> int:
    r = isqrt_floor(x)
    return r if r * r == x else r + 1


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def quadratic_coefficients(p: int, params: MethodParams) -> tuple[int, int]:
    A = (params.alpha - params.beta + 3 * (p - 1)) * p
    B = 12 * p * p * (p - 1) * (p - params.beta - 2)
    return A, B


def edge_bounds(m: int, n: int, p: int, params: MethodParams) -> EdgeBounds:
    """Sound e_lower <= e(m,n;p) and E(m,n;p) <= E_upper, or nonexistence."""
    if m < 3 or n < 3:
        raise ValueError("use edge_bounds_degenerate when min(m, n) <= 2")
    if p < 0:
        raise ValueError("order must be >= 0")
    if p == 0:
        return EdgeBounds.compatible(0, 0)
    A, B = quadratic_coefficients(p, params)
    disc = A * A - B
    if disc < 0:
        return EdgeBounds.nonexistent()
    lo = max(
        _ceil_div(p * (p - params.delta - 1), 2),
        _ceil_div(A - isqrt_ceil(disc), 12),
    )
    hi = min((p * params.gamma) // 2, (A + isqrt_floor(disc)) // 12)
    total = p * (p - 1) // 2
    if lo > hi or lo > total or hi < 0:
        return EdgeBounds.nonexistent()
    return EdgeBounds.compatible(max(lo, 0), min(hi, total))


def edge_bounds_degenerate(m: int, n: int, p: int) -> EdgeBounds:
    """Exact edge numbers when min(m, n) <= 2."""
    if p < 0:
        raise ValueError("order must be >= 0")
    if p == 0:
        return EdgeBounds.compatible(0, 0)
    if m == 1 or n == 1:
        return EdgeBounds.nonexistent()
    if m == 2:
        # edgeless, independent set of size p
        return EdgeBounds.compatible(0, 0) if p <= n - 1 else EdgeBounds.nonexistent()
    if n == 2:
        full = p * (p - 1) // 2
        return EdgeBounds.compatible(full, full) if p <= m - 1 else EdgeBounds.nonexistent()
    raise ValueError("edge_bounds_degenerate needs min(m, n) <= 2")


def edge_bounds_at(table: BoundsTable, m: int, n: int, p: int) -> EdgeBounds:
    """Dispatch to the exact or the quadratic bound using the table's parameters."""
    if min(m, n) <= 2:
        return edge_bounds_degenerate(m, n, p)
    return _edge_bounds_cached(m, n, p, get_params(table, m, n))


@lru_cache(maxsize=1 << 16)
def _edge_bounds_cached(m: int, n: int, p: int, params: MethodParams) -> EdgeBounds:
    return edge_bounds(m, n, p, params)


@dataclass(frozen=True)
class EdgeProfile:
    """Edge bounds of the (m,n;q)-graphs for every order q in [0, size).

    ``lower``/``upper`` are int64 arrays; entries where ``exists`` is False
    carry no meaning.
    """

    exists: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    @property
    def size(self) -> int:
        return len(self.exists)


def edge_profile(table: BoundsTable, m: int, n: int, size: int) -> EdgeProfile:
    if min(m, n) <= 2:
        return _degenerate_profile(m, n, size)
    return _profile(m, n, get_params(table, m, n), size)


@lru_cache(maxsize=256)
def _degenerate_profile(m: int, n: int, size: int) -> EdgeProfile:
    q = np.arange(size, dtype=np.int64)
    if m == 1 or n == 1:
        exists = q == 0
        e = np.zeros(size, dtype=np.int64)
    elif m == 2:
        exists = q <= n - 1
        e = np.zeros(size, dtype=np.int64)
    else:
        exists = q <= m - 1
        e = q * (q - 1) // 2
    return EdgeProfile(exists, e, e.copy())


@lru_cache(maxsize=256)
def _profile(m: int, n: int, params: MethodParams, size: int) -> EdgeProfile:
    exists = np.zeros(size, dtype=bool)
    lower = np.zeros(size, dtype=np.int64)
    upper = np.zeros(size, dtype=np.int64)
    for q in range(size):
        eb = edge_bounds(m, n, q, params)
        if eb.exists:
            exists[q] = True
            lower[q] = eb.e_lower
            upper[q] = eb.E_upper
    return EdgeProfile(exists, lower, upper)
