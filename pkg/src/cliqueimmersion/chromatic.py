"""Exact chromatic number, k-criticality and critical-subgraph extraction.

The solver splits the graph into the connected components of its
complement (the graph is the complete join of those pieces, so chromatic
numbers add up) and runs a DSATUR branch-and-bound on each piece, with a
greedy clique as lower bound and the first DSATUR descent as upper bound.
"""

from __future__ import annotations

import os

from .graphs import SimpleGraph, _bits, complement_components, induced_subgraph

DEFAULT_CAP = 64
CAP_ENV = "CLIQUEIMMERSION_MAX_VERTICES"


class SolverCapError(ValueError):
    """The instance is larger than the configured exact-solver cap."""


def solver_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(g: SimpleGraph, cap: int | None) -> None:
    limit = solver_cap() if cap is None else cap
    if g.vertex_count > limit:
        raise SolverCapError(f"{g.vertex_count} vertices exceeds solver cap {limit}")


def _local_masks(g: SimpleGraph, verts: list[int]) -> list[int]:
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for w in _bits(g.neighbor_mask(v)):
            i = index.get(w)
            if i is not None:
                m |= 1 << i
        out.append(m)
    return out


def _greedy_clique(adj: list[int]) -> int:
    best = 0
    n = len(adj)
    for start in range(n):
        cand = adj[start]
        size = 1
        while cand:
            # densest remaining candidate, lowest id on ties
            pick, pick_deg = -1, -1
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                d = (adj[v] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
            size += 1
            cand &= adj[pick]
        best = max(best, size)
    return best


def _color_search(adj: list[int], c: int) -> list[int] | None:
    """Proper colouring of the local graph with at most ``c`` colours, or None."""
    n = len(adj)
    if n == 0:
        return []
    if c <= 0:
        return None
    color = [-1] * n
    count = [[0] * c for _ in range(n)]
    sat = [0] * n
    deg = [m.bit_count() for m in adj]
    state = {"uncolored": (1 << n) - 1}

    def pick() -> int:
        best, best_sat, best_deg = -1, -1, -1
        m = state["uncolored"]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            s = sat[v].bit_count()
            if s > best_sat or (s == best_sat and deg[v] > best_deg):
                best, best_sat, best_deg = v, s, deg[v]
        return best

    def rec(used: int) -> bool:
        if not state["uncolored"]:
            return True
        v = pick()
        for col in range(min(c, used + 1)):
            if sat[v] >> col & 1:
                continue
            color[v] = col
            state["uncolored"] ^= 1 << v
            nb = _bits(adj[v] & state["uncolored"])
            for w in nb:
                count[w][col] += 1
                sat[w] |= 1 << col
            if rec(max(used, col + 1)):
                return True
            for w in nb:
                count[w][col] -= 1
                if not count[w][col]:
                    sat[w] &= ~(1 << col)
            state["uncolored"] |= 1 << v
            color[v] = -1
        return False

    return color if rec(0) else None


def _piece_chromatic(adj: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    upper = _color_search(adj, n)
    ub = max(upper) + 1
    lb = _greedy_clique(adj)
    for c in range(lb, ub):
        found = _color_search(adj, c)
        if found is not None:
            return c, found
    return ub, upper


def chromatic_number(g: SimpleGraph, witness: bool = False, cap: int | None = None):
    """Exact chromatic number of ``g``.

    With ``witness=True`` returns ``(k, coloring)`` where ``coloring[v]`` is
    the colour of ``v`` in ``0..k-1`` and every colour is used.
    """
    if g.vertex_count == 0:
        raise ValueError("chromatic number of the empty graph is undefined here")
    _check_cap(g, cap)
    coloring = [0] * g.vertex_count
    total = 0
    for piece in complement_components(g):
        k, local = _piece_chromatic(_local_masks(g, piece))
        for v, col in zip(piece, local):
            coloring[v] = total + col
        total += k
    return (total, coloring) if witness else total


def is_colorable(g: SimpleGraph, c: int, cap: int | None = None) -> bool:
    """Whether ``g`` has a proper colouring with at most ``c`` colours."""
    if g.vertex_count == 0:
        return c >= 0
    _check_cap(g, cap)
    pieces = complement_components(g)
    if len(pieces) == 1:
        return _color_search(_local_masks(g, pieces[0]), c) is not None
    need = 0
    for piece in pieces:
        need += _piece_chromatic(_local_masks(g, piece))[0]
        if need > c:
            return False
    return True


def _delete_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    return induced_subgraph(g, [w for w in range(g.vertex_count) if w != v])


def is_k_critical(g: SimpleGraph, k: int, cap: int | None = None) -> bool:
    if g.vertex_count == 0:
        return False
    _check_cap(g, cap)
    if chromatic_number(g, cap=cap) != k:
        return False
    for u, v in g.edge_list():
        if not is_colorable(g.without_edge(u, v), k - 1, cap):
            return False
    for v in range(g.vertex_count):
        if not is_colorable(_delete_vertex(g, v), k - 1, cap):
            return False
    return True


def critical_core(g: SimpleGraph, cap: int | None = None) -> tuple[SimpleGraph, list[int]]:
    """k-critical subgraph of ``g`` plus the original id of each of its vertices.

    Vertices are tried for deletion in ascending id, then edges in
    lexicographic order; a deletion is kept when the chromatic number stays
    at ``k``.
    """
    k = chromatic_number(g, cap=cap)
    if k == 1:
        return SimpleGraph(1), [0]
    keep = list(range(g.vertex_count))
    cur = g
    for v in range(g.vertex_count):
        i = keep.index(v)
        cand = _delete_vertex(cur, i)
        if not is_colorable(cand, k - 1, cap):
            cur = cand
            keep.pop(i)
    for u, v in cur.edge_list():
        if not cur.has_edge(u, v):
            continue
        cand = cur.without_edge(u, v)
        if not is_colorable(cand, k - 1, cap):
            cur = cand
    live = [i for i in range(cur.vertex_count) if cur.degree(i) > 0]
    if len(live) != cur.vertex_count:
        cur = induced_subgraph(cur, live)
        keep = [keep[i] for i in live]
    return cur, keep


def critical_subgraph(g: SimpleGraph, cap: int | None = None) -> SimpleGraph:
    return critical_core(g, cap)[0]
