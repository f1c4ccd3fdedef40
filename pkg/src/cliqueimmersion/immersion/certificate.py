"""Weak immersions of K_k, their JSON certificates and the verifier."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from ..graphs import SimpleGraph
from ..report import Report

CERT_FORMAT = "weak-immersion-certificate"
CERT_VERSION = 1


@dataclass(frozen=True)
class WeakImmersion:
    """Branch vertex ``branch_vertices[i]`` stands for vertex ``i`` of K_k;
    ``paths[(i, j)]`` (``i < j``) is the vertex sequence of the path between
    branch vertices ``i`` and ``j``."""

    k: int
    vertex_count: int
    branch_vertices: tuple[int, ...]
    paths: dict[tuple[int, int], tuple[int, ...]]

    def path_lengths(self) -> dict[tuple[int, int], int]:
        return {p: len(vs) - 1 for p, vs in self.paths.items()}

    def to_certificate(self) -> dict:
        return {
            "format": CERT_FORMAT,
            "version": CERT_VERSION,
            "k": self.k,
            "vertex_count": self.vertex_count,
            "branch_vertices": list(self.branch_vertices),
            "paths": [{"pair": [i, j], "vertices": list(self.paths[(i, j)])}
                      for i, j in sorted(self.paths)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_certificate(), sort_keys=True)

    @classmethod
    def from_certificate(cls, data: dict) -> "WeakImmersion":
        if data.get("format") != CERT_FORMAT:
            raise ValueError(f"not a {CERT_FORMAT}")
        paths = {}
        for entry in data["paths"]:
            i, j = (int(x) for x in entry["pair"])
            if i > j:
                i, j = j, i
                entry = dict(entry, vertices=list(reversed(entry["vertices"])))
            paths[(i, j)] = tuple(int(v) for v in entry["vertices"])
        return cls(int(data["k"]), int(data["vertex_count"]),
                   tuple(int(v) for v in data["branch_vertices"]), paths)

    @classmethod
    def from_json(cls, text: str) -> "WeakImmersion":
        return cls.from_certificate(json.loads(text))


def identity_immersion(g: SimpleGraph, vertices: list[int]) -> WeakImmersion:
    """Every pair of ``vertices`` joined by its edge; ``vertices`` must be a clique."""
    paths = {(i, j): (vertices[i], vertices[j]) for i, j in combinations(range(len(vertices)), 2)}
    return WeakImmersion(len(vertices), g.vertex_count, tuple(vertices), paths)


def verify_weak_immersion(g: SimpleGraph, imm: WeakImmersion, strong: bool = False) -> Report:
    """Check the three weak-immersion conditions (and the strong one on request).

    ``injective``: distinct branch vertices.  ``edge_disjoint``: no edge of
    ``g`` lies on two paths.  ``paths``: each pair has a simple path in ``g``
    between its two branch vertices.  ``strong``: paths meet the branch set
    only at their ends.
    """
    rep = Report()
    n, k = g.vertex_count, imm.k
    bv = imm.branch_vertices
    rep.add("vertex_count", imm.vertex_count == n, f"certificate n={imm.vertex_count}, graph n={n}")
    rep.add("branch_count", len(bv) == k, f"{len(bv)} branch vertices for k={k}")
    in_range = all(isinstance(v, int) and 0 <= v < n for v in bv)
    rep.add("injective", in_range and len(set(bv)) == len(bv), "branch map is not injective")

    want = set(combinations(range(k), 2))
    have = set(imm.paths)
    rep.add("complete", have == want,
            f"missing pairs {sorted(want - have)[:5]}, extra pairs {sorted(have - want)[:5]}")

    owner: dict[tuple[int, int], tuple[int, int]] = {}
    for pair in sorted(have & want):
        verts = imm.paths[pair]
        i, j = pair
        ok = (len(verts) >= 2 and in_range
              and all(isinstance(v, int) and 0 <= v < n for v in verts)
              and verts[0] == bv[i] and verts[-1] == bv[j]
              and len(set(verts)) == len(verts)
              and all(g.has_edge(a, b) for a, b in zip(verts, verts[1:])))
        rep.add("paths", ok, f"pair {pair}: {list(verts)} is not a path from {bv[i] if in_range else '?'} "
                             f"to {bv[j] if in_range else '?'}")
        for a, b in zip(verts, verts[1:]):
            e = (a, b) if a < b else (b, a)
            prev = owner.get(e)
            rep.add("edge_disjoint", prev is None or prev == pair,
                    f"edge {e} used by pairs {prev} and {pair}")
            owner[e] = pair
    if strong:
        branch = set(bv)
        clean = all(not (set(vs[1:-1]) & branch) for vs in imm.paths.values())
        rep.add("strong", clean, "a path passes through another branch vertex")
    return rep
