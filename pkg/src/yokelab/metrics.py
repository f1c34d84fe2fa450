"""Brute-force oracles: enumeration, BFS distances, eccentricity, diameter.

Vertices are ranked by a mixed-radix code (left bucket as the most
significant digit, then the m middle entries; the right bucket is implied
by the sum condition), so the whole instance fits in one dense array and a
rank order that coincides with lexicographic order on entry tuples.  BFS
runs level by level over rank arrays, applying all 2(m+1) shifts to a
frontier at once; the shift at index i is a constant rank delta plus a
feasibility mask on at most two decoded digits, so no adjacency list is
ever materialized for single-source queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .core import (
    DomainError,
    GraphParams,
    ParamMismatch,
    Vertex,
    YokeError,
    zero_vertex,
)
from .paths import Path


class BudgetExceeded(YokeError):
    """The instance is larger than the allowed work budget."""


class DisconnectedInstance(YokeError):
    """BFS failed to reach some vertex; never observed on valid instances."""


@dataclass(frozen=True)
class InstanceBudget:
    """Work ceiling for oracle operations, in vertices and (estimated) edges."""

    max_vertices: int
    max_edges: int

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_edges <= 0:
            raise DomainError("budget limits must be positive")


SINGLE_SOURCE_BUDGET = InstanceBudget(2_000_000, 30_000_000)
ALL_PAIRS_BUDGET = InstanceBudget(4096, 65_536)


def _as_budget(budget, default: InstanceBudget) -> InstanceBudget:
    if budget is None:
        return default
    if isinstance(budget, InstanceBudget):
        return budget
    return InstanceBudget(int(budget), max(int(budget) * 16, 1))


def _check_budget(params: GraphParams, budget: InstanceBudget):
    count = params.vertex_count
    if count > budget.max_vertices:
        raise BudgetExceeded(
            f"instance has {count} vertices, budget allows {budget.max_vertices}"
        )
    edges = count * (params.m + 1)
    if edges > budget.max_edges:
        raise BudgetExceeded(
            f"instance has up to {edges} edges, budget allows {budget.max_edges}"
        )


class _Codec:
    """Mixed-radix rank/unrank and vectorized shift transitions."""

    def __init__(self, params: GraphParams):
        self.params = params
        self.n = params.n
        self.m = params.m
        self.k = params.family.middle_states
        self.off = 0 if self.k == 2 else 1
        # pows[j] is the weight of digit j; digit 0 is the left bucket.
        self.pows = [self.k ** (self.m - j) for j in range(self.m + 1)]
        self.count = self.n * self.pows[0]

    def rank(self, v: Vertex) -> int:
        r = v.entries[0]
        for e in v.entries[1 : self.m + 1]:
            r = r * self.k + e + self.off
        return r

    def unrank(self, r: int) -> Vertex:
        mids = []
        for _ in range(self.m):
            mids.append(r % self.k - self.off)
            r //= self.k
        mids.reverse()
        u0 = r
        last = (-(u0 + sum(mids))) % self.n
        return Vertex((u0, *mids, last), self.params)

    def letter_edges(self, ranks: np.ndarray, index: int, is_left: bool):
        """Feasible transitions for one directed shift, as (src, dst) rank arrays.

        Self-transitions (possible only in the one-vertex instance) are
        dropped to keep the implied graph loop-free.
        """
        moves = ((index, 1), (index + 1, -1)) if is_left else ((index, -1), (index + 1, 1))
        mask = np.ones(ranks.shape, dtype=bool)
        delta = np.zeros(ranks.shape, dtype=np.int64)
        for pos, sgn in moves:
            if pos == 0:
                c = ranks // self.pows[0]
                delta += ((c + sgn) % self.n - c) * self.pows[0]
            elif pos <= self.m:
                digit = (ranks // self.pows[pos]) % self.k
                if sgn > 0:
                    mask &= digit < self.k - 1
                else:
                    mask &= digit > 0
                delta += sgn * self.pows[pos]
            # pos == m + 1: the implied bucket absorbs the unit, rank unchanged
        src = ranks[mask]
        dst = src + delta[mask]
        keep = dst != src
        if not keep.all():
            src, dst = src[keep], dst[keep]
        return src, dst

    def all_moves(self):
        for index in range(self.m + 1):
            yield index, True
        for index in range(self.m + 1):
            yield index, False


def _bfs_ranks(codec: _Codec, source: int) -> np.ndarray:
    """Exact distances from one rank to every rank of the instance."""
    dist = np.full(codec.count, -1, dtype=np.int32)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        grown = []
        for index, is_left in codec.all_moves():
            _, dst = codec.letter_edges(frontier, index, is_left)
            dst = dst[dist[dst] == -1]
            if dst.size:
                dist[dst] = level
                grown.append(dst)
        frontier = np.concatenate(grown) if grown else np.empty(0, dtype=np.int64)
    if (dist < 0).any():
        raise DisconnectedInstance(
            f"{int((dist < 0).sum())} vertices unreachable from rank {source}"
        )
    return dist


def _bfs_parents(codec: _Codec, source: int, target: int):
    """BFS with parent pointers; the parent is the lexicographically
    smallest already-reached neighbor, so extracted geodesics are
    reproducible.  Stops once the target's level is complete."""
    dist = np.full(codec.count, -1, dtype=np.int32)
    parent = np.full(codec.count, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size and dist[target] < 0:
        level += 1
        srcs, dsts = [], []
        for index, is_left in codec.all_moves():
            src, dst = codec.letter_edges(frontier, index, is_left)
            srcs.append(src)
            dsts.append(dst)
        src = np.concatenate(srcs)
        dst = np.concatenate(dsts)
        fresh = dist[dst] == -1
        src, dst = src[fresh], dst[fresh]
        order = np.lexsort((src, dst))
        src, dst = src[order], dst[order]
        first = np.ones(dst.shape, dtype=bool)
        first[1:] = dst[1:] != dst[:-1]
        src, dst = src[first], dst[first]
        dist[dst] = level
        parent[dst] = src
        frontier = dst
    return dist, parent


def enumerate_vertices(params: GraphParams, budget=None) -> Iterator[Vertex]:
    """Yield every vertex of the instance once, in lexicographic entry order."""
    _check_budget(params, _as_budget(budget, SINGLE_SOURCE_BUDGET))
    lo = params.family.middle_min
    mid_values = tuple(range(lo, 2))
    for u0 in range(params.n):
        for mids in product(mid_values, repeat=params.m):
            last = (-(u0 + sum(mids))) % params.n
            yield Vertex((u0, *mids, last), params)


class DistanceField:
    """Total mapping from the vertices of one instance to BFS distances."""

    def __init__(self, source: Vertex, codec: _Codec, dist: np.ndarray):
        self.source = source
        self._codec = codec
        self._dist = dist

    def __getitem__(self, v: Vertex) -> int:
        if v.params != self._codec.params:
            raise ParamMismatch(f"{v} is not a vertex of {self._codec.params}")
        return int(self._dist[self._codec.rank(v)])

    def __len__(self):
        return self._codec.count

    def max_distance(self) -> int:
        return int(self._dist.max())

    def farthest(self) -> set[Vertex]:
        """Vertices attaining the maximum distance from the source."""
        top = self._dist.max()
        return {self._codec.unrank(int(r)) for r in np.flatnonzero(self._dist == top)}

    def items(self) -> Iterator[tuple[Vertex, int]]:
        """(vertex, distance) pairs in lexicographic vertex order."""
        for r in range(self._codec.count):
            yield self._codec.unrank(r), int(self._dist[r])


def bfs_from(source: Vertex, budget=None) -> DistanceField:
    """Exact single-source distances over the whole instance."""
    _check_budget(source.params, _as_budget(budget, SINGLE_SOURCE_BUDGET))
    codec = _Codec(source.params)
    dist = _bfs_ranks(codec, codec.rank(source))
    return DistanceField(source, codec, dist)


def eccentricity(v: Vertex, budget=None) -> int:
    """Maximum distance from v to any vertex of its instance."""
    return bfs_from(v, budget).max_distance()


def antipodes(v: Vertex, budget=None) -> set[Vertex]:
    """The vertices at maximal distance from v."""
    return bfs_from(v, budget).farthest()


def _neighbor_table(codec: _Codec) -> np.ndarray:
    """Dense rank-indexed successor table, -1 padded, for all-pairs sweeps."""
    table = np.full((codec.count, 2 * (codec.m + 1)), -1, dtype=np.int64)
    everything = np.arange(codec.count, dtype=np.int64)
    for col, (index, is_left) in enumerate(codec.all_moves()):
        src, dst = codec.letter_edges(everything, index, is_left)
        table[src, col] = dst
    return table


def _table_bfs(table: np.ndarray, count: int, source: int) -> np.ndarray:
    dist = np.full(count, -1, dtype=np.int32)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        cand = table[frontier].ravel()
        cand = cand[cand >= 0]
        cand = cand[dist[cand] < 0]
        cand = np.unique(cand)
        dist[cand] = level
        frontier = cand
    return dist


def diameter_bfs(params: GraphParams, budget=None) -> int:
    """All-pairs BFS diameter of the instance (the honest quadratic oracle)."""
    _check_budget(params, _as_budget(budget, ALL_PAIRS_BUDGET))
    codec = _Codec(params)
    table = _neighbor_table(codec)
    best = 0
    for source in range(codec.count):
        dist = _table_bfs(table, codec.count, source)
        if (dist < 0).any():
            raise DisconnectedInstance(
                f"{int((dist < 0).sum())} vertices unreachable from rank {source}"
            )
        best = max(best, int(dist.max()))
    return best


def geodesic(a: Vertex, b: Vertex, budget=None) -> Path:
    """One shortest path from a to b, deterministic across runs.

    Parent pointers always choose the lexicographically smallest reached
    neighbor, so repeated calls rebuild the identical path.
    """
    if a.params != b.params:
        raise ParamMismatch(f"params differ: {a.params} vs {b.params}")
    _check_budget(a.params, _as_budget(budget, SINGLE_SOURCE_BUDGET))
    codec = _Codec(a.params)
    source, target = codec.rank(a), codec.rank(b)
    dist, parent = _bfs_parents(codec, source, target)
    if dist[target] < 0:
        raise DisconnectedInstance(f"{b} unreachable from {a}")
    ranks = [target]
    while ranks[-1] != source:
        ranks.append(int(parent[ranks[-1]]))
    ranks.reverse()
    return Path(tuple(codec.unrank(r) for r in ranks))
