"""Simple graphs, loopless multigraphs and the small generator corpus.

Vertices are dense integers ``0..n-1``.  A :class:`SimpleGraph` keeps one
neighbourhood bitmask (a Python int) per vertex, which keeps the exact
search kernels in :mod:`cliqueimmersion.chromatic` cheap.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Immutable loopless undirected graph on vertices ``0..vertex_count-1``."""

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        adj = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.vertex_count = vertex_count
        self._adj = tuple(adj)

    @classmethod
    def _from_masks(cls, masks: Sequence[int]) -> "SimpleGraph":
        g = cls.__new__(cls)
        g.vertex_count = len(masks)
        g._adj = tuple(masks)
        return g

    @classmethod
    def from_adjacency(cls, matrix) -> "SimpleGraph":
        """Build from a symmetric boolean matrix with an empty diagonal."""
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if a.diagonal().any():
            raise ValueError("adjacency matrix has a loop")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix is not symmetric")
        packed = np.packbits(a, axis=1, bitorder="little")
        return cls._from_masks([int.from_bytes(row.tobytes(), "little") for row in packed])

    def to_adjacency(self) -> np.ndarray:
        n = self.vertex_count
        out = np.zeros((n, n), dtype=bool)
        nbytes = (n + 7) // 8
        for v, mask in enumerate(self._adj):
            if mask:
                row = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
                out[v] = np.unpackbits(row, bitorder="little")[:n].astype(bool)
        return out

    # -- basic queries -------------------------------------------------

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edge_list())

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, mask in enumerate(self._adj):
            m = mask >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range for {self.vertex_count} vertices")

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return _bits(self._adj[v])

    def neighbor_mask(self, v: int) -> int:
        self._check(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    @property
    def all_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    # -- builders ------------------------------------------------------

    def without_edge(self, u: int, v: int) -> "SimpleGraph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        masks = list(self._adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return SimpleGraph._from_masks(masks)

    def relabeled(self, order: Sequence[int]) -> "SimpleGraph":
        """Graph whose vertex ``i`` is ``order[i]`` of this graph."""
        return induced_subgraph(self, order, keep_order=True)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.vertex_count, self._adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.vertex_count}, m={self.edge_count})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class EdgeId(NamedTuple):
    """Address of one parallel edge: endpoints ``u < v`` and its ordinal."""

    u: int
    v: int
    ordinal: int


class Multigraph:
    """Immutable loopless multigraph; every edge instance has an :class:`EdgeId`.

    Instances keep the order in which they were given, and the ordinal of an
    instance counts the earlier instances on the same pair.
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        seen: Counter[tuple[int, int]] = Counter()
        ids = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            p = _pair(u, v)
            ids.append(EdgeId(p[0], p[1], seen[p]))
            seen[p] += 1
        self.vertex_count = vertex_count
        self.edge_ids: tuple[EdgeId, ...] = tuple(ids)
        self._mult = dict(seen)
        deg = [0] * vertex_count
        for (u, v), m in seen.items():
            deg[u] += m
            deg[v] += m
        self._deg = tuple(deg)

    def __len__(self) -> int:
        return len(self.edge_ids)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get(_pair(u, v), 0)

    @property
    def max_degree(self) -> int:
        return max(self._deg, default=0)

    @property
    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def pairs(self) -> dict[tuple[int, int], int]:
        return dict(self._mult)

    def __repr__(self) -> str:
        return (f"Multigraph(n={self.vertex_count}, m={len(self)}, "
                f"Delta={self.max_degree}, mu={self.max_multiplicity})")


# -- graph operations ----------------------------------------------------

def join(*graphs: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus every edge between different operands.

    Operand ``j`` occupies the vertex range right after operand ``j-1``.
    """
    masks: list[int] = []
    offsets = []
    total = 0
    for g in graphs:
        offsets.append(total)
        total += g.vertex_count
    full = (1 << total) - 1
    for g, off in zip(graphs, offsets):
        own = ((1 << g.vertex_count) - 1) << off
        for m in g._adj:
            masks.append((m << off) | (full & ~own))
    return SimpleGraph._from_masks(masks)


def complement(g: SimpleGraph) -> SimpleGraph:
    full = g.all_mask
    return SimpleGraph._from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g._adj)])


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int], keep_order: bool = False) -> SimpleGraph:
    """Subgraph induced by ``vertices``, relabelled ``0..|S|-1``.

    The vertices are sorted first unless ``keep_order`` is set.
    """
    vs = list(vertices)
    if not keep_order:
        vs = sorted(vs)
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex in subset")
    for v in vs:
        g._check(v)
    index = {v: i for i, v in enumerate(vs)}
    masks = []
    for v in vs:
        m = 0
        for w in _bits(g._adj[v]):
            i = index.get(w)
            if i is not None:
                m |= 1 << i
        masks.append(m)
    return SimpleGraph._from_masks(masks)


def degree(g: SimpleGraph, v: int) -> int:
    return g.degree(v)


def complement_components(g: SimpleGraph) -> list[list[int]]:
    """Connected components of the complement, ordered by smallest vertex."""
    full = g.all_mask
    left = full
    comps = []
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            new = full & ~g._adj[v] & ~comp & ~(1 << v)
            comp |= new
            frontier |= new
        left &= ~comp
        comps.append(_bits(comp))
    return comps


# -- generators ----------------------------------------------------------

def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    return SimpleGraph._from_masks([full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: np.random.Generator) -> SimpleGraph:
    """Erdos-Renyi G(n, p)."""
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return SimpleGraph.from_adjacency(upper | upper.T)


def random_multigraph(n: int, max_degree: int, max_mult: int, rng: np.random.Generator,
                      attempts: int | None = None) -> Multigraph:
    """Random loopless multigraph with degree at most ``max_degree`` and
    multiplicity at most ``max_mult``, made by rejection-free edge insertion."""
    if n < 2:
        return Multigraph(n)
    deg = [0] * n
    mult: Counter[tuple[int, int]] = Counter()
    edges = []
    tries = attempts if attempts is not None else int(rng.integers(1, n * max_degree + 2))
    for _ in range(tries):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        p = _pair(u, v)
        if deg[u] < max_degree and deg[v] < max_degree and mult[p] < max_mult:
            deg[u] += 1
            deg[v] += 1
            mult[p] += 1
            edges.append(p)
    return Multigraph(n, edges)
