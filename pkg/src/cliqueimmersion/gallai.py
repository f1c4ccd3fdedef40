"""Complete-join decomposition of critical graphs on at most 2k-2 vertices.

The parts are the connected components of the complement.  Each part's
chromatic number is recomputed with the exact solver so a decomposition
certifies itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .chromatic import chromatic_number, is_k_critical, solver_cap
from .report import Report
from .graphs import SimpleGraph, complement_components, induced_subgraph, join


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Part:
    vertices: tuple[int, ...]
    k: int

    @property
    def n(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GallaiDecomposition:
    parts: tuple[Part, ...]

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(p.n for p in self.parts)

    @property
    def k(self) -> int:
        return sum(p.k for p in self.parts)

    def sizes(self) -> list[tuple[int, int]]:
        """``(n_i, k_i)`` for every part."""
        return [(p.n, p.k) for p in self.parts]

    def to_dict(self) -> dict:
        return {"parts": [{"vertices": list(p.vertices), "n": p.n, "k": p.k} for p in self.parts]}

    @classmethod
    def from_dict(cls, data: dict) -> "GallaiDecomposition":
        return cls(tuple(Part(tuple(p["vertices"]), int(p["k"])) for p in data["parts"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def gallai_decompose(g: SimpleGraph, k: int) -> GallaiDecomposition:
    n = g.vertex_count
    if n == 0:
        raise DecompositionError("empty graph")
    if n <= solver_cap():
        chi = chromatic_number(g)
        if chi != k:
            raise DecompositionError(f"claimed chromatic number {k}, solver found {chi}")
    comps = complement_components(g)
    if len(comps) == 1 and 2 <= n <= 2 * k - 2:
        raise DecompositionError(
            f"complement is connected with n={n} <= 2k-2={2 * k - 2}; "
            "the graph cannot be k-critical")
    parts = tuple(Part(tuple(c), chromatic_number(induced_subgraph(g, c))) for c in comps)
    return GallaiDecomposition(parts)


def verify_decomposition(g: SimpleGraph, k: int, dec: GallaiDecomposition) -> Report:
    rep = Report()
    n = g.vertex_count
    seen: list[int] = [v for p in dec.parts for v in p.vertices]
    rep.add("partition", sorted(seen) == list(range(n)) and all(p.n > 0 for p in dec.parts),
            "parts do not partition the vertex set")
    rep.add("sum_n", dec.n == n, f"sum n_i = {dec.n}, n = {n}")
    rep.add("sum_k", dec.k == k, f"sum k_i = {dec.k}, k = {k}")

    owner = {}
    for i, p in enumerate(dec.parts):
        for v in p.vertices:
            owner[v] = i
    missing = [(u, v) for u in range(n) for v in range(u + 1, n)
               if u in owner and v in owner and owner[u] != owner[v] and not g.has_edge(u, v)]
    rep.add("complete_join", not missing, f"missing cross edges {missing[:5]}")

    small = n <= 2 * k - 2
    if small:
        rep.add("t_at_least_2", dec.t >= 2, f"t = {dec.t}")
    for i, p in enumerate(dec.parts):
        if not all(0 <= v < n for v in p.vertices):
            rep.add("part_critical", False, f"part {i} has out-of-range vertices")
            continue
        sub = induced_subgraph(g, p.vertices)
        rep.add("part_chromatic", chromatic_number(sub) == p.k, f"part {i}: chi != {p.k}")
        rep.add("part_critical", is_k_critical(sub, p.k), f"part {i} is not {p.k}-critical")
        if small:
            rep.add("part_size", p.n >= 2 * p.k - 1,
                    f"part {i}: n_i={p.n} < 2k_i-1={2 * p.k - 1}")
    return rep


def rejoin(g: SimpleGraph, dec: GallaiDecomposition) -> SimpleGraph:
    """Complete join of the induced parts, mapped back onto the original ids."""
    order = [v for p in dec.parts for v in p.vertices]
    joined = join(*(induced_subgraph(g, p.vertices) for p in dec.parts))
    # vertex i of the join is original vertex order[i]
    inverse = sorted(range(len(order)), key=lambda i: order[i])
    return joined.relabeled(inverse)
