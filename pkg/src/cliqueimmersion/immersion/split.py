"""Branch/non-branch split of one part, the injections f_u and the multigraph H."""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import Multigraph, SimpleGraph


@dataclass(frozen=True)
class PartSplit:
    """``injections[u][u2]`` is the vertex of ``W`` that ``f_u`` sends ``u2`` to.

    Vertex ids are those of the part graph the split was made on.
    """

    part_index: int
    U: tuple[int, ...]
    W: tuple[int, ...]
    injections: dict[int, dict[int, int]]


class InjectionError(ValueError):
    pass


def choose_injections(g_part: SimpleGraph, U: list[int], part_index: int = 0) -> PartSplit:
    """Lexicographic-greedy f_u: the i-th non-neighbour of ``u`` in ``U`` goes to
    the i-th neighbour of ``u`` in ``W``."""
    U = sorted(U)
    if len(set(U)) != len(U):
        raise InjectionError("repeated vertex in U")
    u_mask = 0
    for u in U:
        u_mask |= 1 << u
    W = [v for v in range(g_part.vertex_count) if not u_mask >> v & 1]
    inj = {}
    for u in U:
        nb = g_part.neighbor_mask(u)
        domain = [x for x in U if x != u and not nb >> x & 1]
        targets = [w for w in W if nb >> w & 1]
        if len(targets) < len(domain):
            raise InjectionError(
                f"vertex {u}: {len(domain)} non-neighbours in U but only {len(targets)} "
                f"neighbours in W (degree {g_part.degree(u)} < |U|-1 = {len(U) - 1})")
        inj[u] = dict(zip(domain, targets))
    return PartSplit(part_index, tuple(U), tuple(W), inj)


def h_edge_pairs(split: PartSplit) -> list[tuple[int, int, int, int]]:
    """``(w, w2, u, u2)`` for every mismatched non-adjacent pair ``u < u2``,
    where ``w = f_u(u2)`` and ``w2 = f_u2(u)``, in lexicographic order of ``(u, u2)``."""
    out = []
    f = split.injections
    for u in split.U:
        for u2 in sorted(f[u]):
            if u2 <= u:
                continue
            a, b = f[u][u2], f[u2][u]
            if a != b:
                out.append((a, b, u, u2))
    return out


def build_H(split: PartSplit) -> Multigraph:
    """Multigraph on ``W`` (vertex ``i`` is ``split.W[i]``), one edge per
    mismatched pair; edge instances follow :func:`h_edge_pairs` order."""
    index = {w: i for i, w in enumerate(split.W)}
    return Multigraph(len(split.W), [(index[a], index[b]) for a, b, _, _ in h_edge_pairs(split)])


def matched_pairs(split: PartSplit) -> list[tuple[int, int, int]]:
    """``(u, u2, w)`` with ``f_u(u2) = f_u2(u) = w``, ``u < u2``."""
    f = split.injections
    return [(u, u2, f[u][u2]) for u in split.U for u2 in sorted(f[u])
            if u < u2 and f[u][u2] == f[u2][u]]
