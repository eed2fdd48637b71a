"""Brute-force ground truth for small graphs.

Graphs are stored as bitset rows: bit j of ``rows[i]`` is set when i ~ j.
Enumeration is over labeled graphs, adding one vertex at a time and pruning
as soon as a K_m or an independent n-set appears.
"""
from __future__ import annotations

from random import Random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

import numpy as np

from .bounds import RamseyError

MAX_ORDER = 12
DEFAULT_CEILING = 8


class CeilingExceeded(RamseyError):
    pass


@dataclass(frozen=True)
class Graph:
    rows: tuple[int, ...]

    def __post_init__(self):
        p = len(self.rows)
        if p > MAX_ORDER:
            raise ValueError(f"order {p} exceeds {MAX_ORDER}")
        full = (1 << p) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise ValueError(f"row {i} is not a valid adjacency row")
            for j in range(p):
                if (r >> j) & 1 != (self.rows[j] >> i) & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, p: int, edges) -> "Graph":
        rows = [0] * p
        for i, j in edges:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(tuple(rows))

    @classmethod
    def empty(cls, p: int) -> "Graph":
        return cls((0,) * p)

    @classmethod
    def complete(cls, p: int) -> "Graph":
        full = (1 << p) - 1
        return cls(tuple(full & ~(1 << i) for i in range(p)))

    @classmethod
    def cycle(cls, p: int) -> "Graph":
        return cls.from_edges(p, [(i, (i + 1) % p) for i in range(p)])

    @classmethod
    def from_matrix(cls, lines) -> "Graph":
        lines = [ln.strip() for ln in lines if ln.strip()]
        return cls(tuple(sum(1 << j for j, ch in enumerate(ln) if ch == "1") for ln in lines))

    @classmethod
    def random(cls, p: int, rng: Random, density: float = 0.5) -> "Graph":
        return cls.from_edges(p, [(i, j) for i, j in combinations(range(p), 2) if rng.random() < density])

    @property
    def order(self) -> int:
        return len(self.rows)

    def to_matrix(self) -> list[str]:
        p = self.order
        return ["".join("1" if (r >> j) & 1 else "0" for j in range(p)) for r in self.rows]

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree_histogram(self) -> list[int]:
        """n_d for d = 0..p-1."""
        hist = [0] * max(self.order, 1)
        for d in self.degrees:
            hist[d] += 1
        return hist

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph(tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)))

    def induced(self, vertices) -> "Graph":
        vs = list(vertices)
        rows = []
        for v in vs:
            r = 0
            for k, u in enumerate(vs):
                if self.adjacent(v, u):
                    r |= 1 << k
            rows.append(r)
        return Graph(tuple(rows))

    def neighbourhood(self, v: int) -> "Graph":
        return self.induced(u for u in range(self.order) if self.adjacent(v, u))

    def non_neighbourhood(self, v: int) -> "Graph":
        return self.induced(u for u in range(self.order) if u != v and not self.adjacent(v, u))


def _has_clique(rows, k: int, cand: int) -> bool:
    """Is there a k-clique inside the vertex set ``cand``?"""
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False
    while cand:
        v = cand.bit_length() - 1
        cand &= ~(1 << v)
        if _has_clique(rows, k - 1, cand & rows[v]):
            return True
        if cand.bit_count() < k:
            return False
    return False


def has_clique(G: Graph, k: int) -> bool:
    return _has_clique(G.rows, k, (1 << G.order) - 1)


def is_mn_graph(G: Graph, m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    return not has_clique(G, m) and not has_clique(G.complement(), n)


def triangle_count(G: Graph) -> int:
    total = 0
    for v in range(G.order):
        above = G.rows[v] >> (v + 1) << (v + 1)
        u_set = above
        while u_set:
            u = u_set.bit_length() - 1
            u_set &= ~(1 << u)
            total += (G.rows[u] & above & ~((1 << (u + 1)) - 1)).bit_count()
    return total


def triangle_count_at(G: Graph, v: int) -> int:
    nbrs = G.rows[v]
    return sum((G.rows[u] & nbrs).bit_count() for u in range(G.order) if (nbrs >> u) & 1) // 2


def goodman_check(G: Graph) -> bool:
    p = G.order
    lhs = triangle_count(G) + triangle_count(G.complement())
    twice_rhs = 2 * comb(p, 3) - sum(d * (p - d - 1) for d in G.degrees)
    return 2 * lhs == twice_rhs


def all_graphs(p: int) -> Iterator[Graph]:
    pairs = list(combinations(range(p), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(p, [e for k, e in enumerate(pairs) if (mask >> k) & 1])


# -- enumeration of (m,n;p)-graphs ------------------------------------------

def _subsets_of_size(rows, k: int, size: int, independent: bool) -> list[int]:
    """Masks of all cliques (or independent sets) of the given size among the first k vertices."""
    if size <= 0:
        return [0]
    out = []
    for combo in combinations(range(k), size):
        ok = True
        for a, b in combinations(combo, 2):
            if bool((rows[a] >> b) & 1) == independent:
                ok = False
                break
        if ok:
            out.append(sum(1 << v for v in combo))
    return out


def _valid_extensions(rows, m: int, n: int) -> np.ndarray:
    """Neighbour masks S for a new vertex that create no K_m and no independent n-set."""
    k = len(rows)
    full = (1 << k) - 1
    masks = np.arange(1 << k, dtype=np.int64)
    ok = np.ones(1 << k, dtype=bool)
    for c in _subsets_of_size(rows, k, m - 1, independent=False):
        ok &= (masks & c) != c
    comp = full ^ masks
    for s in _subsets_of_size(rows, k, n - 1, independent=True):
        ok &= (comp & s) != s
    return masks[ok]


def _extend(rows: tuple[int, ...], s: int) -> tuple[int, ...]:
    k = len(rows)
    return tuple(r | (((s >> i) & 1) << k) for i, r in enumerate(rows)) + (s,)


def _prefixes(m: int, n: int, depth: int) -> list[tuple[int, ...]]:
    if m <= 1 or n <= 1:
        return [()] if depth == 0 else []
    level = [()]
    for _ in range(depth):
        level = [_extend(rows, int(s)) for rows in level for s in _valid_extensions(rows, m, n)]
    return level


def enumerate_mn_graphs(m: int, n: int, p: int) -> Iterator[Graph]:
    """All labeled (m,n;p)-graphs."""
    def rec(rows):
        if len(rows) == p:
            yield Graph(rows)
            return
        for s in _valid_extensions(rows, m, n):
            yield from rec(_extend(rows, int(s)))

    if p == 0:
        yield Graph(())
        return
    if m <= 1 or n <= 1:
        return
    yield from rec(())


@dataclass(frozen=True)
class EdgeExtremes:
    e: int
    E: int
    min_witness: Graph
    max_witness: Graph


def _extremes_below(args) -> Optional[tuple]:
    """(e, E, min witness rows, max witness rows) over completions of a prefix."""
    prefix, m, n, p = args
    lo: list = [None, None]
    hi: list = [None, None]

    def offer(edges, rows):
        if lo[0] is None or edges < lo[0]:
            lo[:] = [edges, rows]
        if hi[0] is None or edges > hi[0]:
            hi[:] = [edges, rows]

    def rec(rows, edges):
        if len(rows) == p:
            offer(edges, rows)
            return
        exts = _valid_extensions(rows, m, n)
        if len(rows) == p - 1 and len(exts):
            counts = [int(s).bit_count() for s in exts]
            i, j = counts.index(min(counts)), counts.index(max(counts))
            offer(edges + counts[i], _extend(rows, int(exts[i])))
            offer(edges + counts[j], _extend(rows, int(exts[j])))
            return
        for s in exts:
            s = int(s)
            rec(_extend(rows, s), edges + s.bit_count())

    rec(prefix, sum(r.bit_count() for r in prefix) // 2)
    if lo[0] is None:
        return None
    return lo[0], hi[0], lo[1], hi[1]


def exact_edge_extremes(
    m: int, n: int, p: int, ceiling: int = DEFAULT_CEILING, workers: int = 1
) -> Optional[EdgeExtremes]:
    """Exact min/max edge counts over all (m,n;p)-graphs, with witnesses."""
    if p > ceiling:
        raise CeilingExceeded(f"order {p} is above the enumeration ceiling {ceiling}")
    if p < 0 or m < 1 or n < 1:
        raise ValueError("need p >= 0 and m, n >= 1")
    if p == 0:
        return EdgeExtremes(0, 0, Graph(()), Graph(()))
    jobs = [(rows, m, n, p) for rows in _prefixes(m, n, min(3, p))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_extremes_below, jobs))
    else:
        parts = [_extremes_below(j) for j in jobs]
    parts = [x for x in parts if x is not None]
    if not parts:
        return None
    lo = min(parts, key=lambda x: x[0])
    hi = max(parts, key=lambda x: x[1])
    return EdgeExtremes(lo[0], hi[1], Graph(lo[2]), Graph(hi[3]))


def exact_edge_numbers(
    m: int, n: int, p: int, ceiling: int = DEFAULT_CEILING, workers: int = 1
) -> Optional[tuple[int, int]]:
    res = exact_edge_extremes(m, n, p, ceiling, workers)
    return None if res is None else (res.e, res.E)
