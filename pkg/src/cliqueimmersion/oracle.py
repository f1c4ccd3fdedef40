"""Exhaustive oracles for small instances.

Nothing here imports the solver, the verifier or the constructions; the
oracles only read ``vertex_count`` and ``edges`` of the input graph.
"""

from __future__ import annotations

from itertools import combinations

from .immersion.certificate import WeakImmersion

CHROMATIC_CAP = 9
IMMERSION_CAPS = {"n": 7, "k": 4, "m": 12}


class OracleCapError(ValueError):
    pass


def _edge_set(g) -> list[tuple[int, int]]:
    return sorted(tuple(sorted(e)) for e in g.edges)


def _partitions(n: int):
    """Every map v -> colour in restricted-growth form (colour(v) <= 1 + max so far)."""
    col = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield col
            return
        for c in range(top + 2):
            col[i] = c
            yield from rec(i + 1, max(top, c))

    if n == 0:
        yield col
    else:
        yield from rec(1, 0)


def bruteforce_chromatic(g, cap: int = CHROMATIC_CAP) -> int:
    """Minimum number of classes over all vertex partitions into independent sets."""
    n = g.vertex_count
    if n > cap:
        raise OracleCapError(f"{n} vertices exceeds oracle cap {cap}")
    if n == 0:
        return 0
    edges = _edge_set(g)
    best = n
    for col in _partitions(n):
        used = max(col) + 1
        if used < best and all(col[a] != col[b] for a, b in edges):
            best = used
    return best


def _simple_paths(adj: dict[int, set[int]], s: int, t: int) -> list[tuple[int, ...]]:
    out = []
    stack = [(s, (s,))]
    while stack:
        v, path = stack.pop()
        if v == t:
            out.append(path)
            continue
        for w in sorted(adj[v]):
            if w not in path:
                stack.append((w, path + (w,)))
    return sorted(out, key=lambda p: (len(p), p))


def bruteforce_weak_immersion(g, k: int) -> WeakImmersion | None:
    """Search every branch set and every system of edge-disjoint simple paths."""
    n = g.vertex_count
    edges = _edge_set(g)
    if n > IMMERSION_CAPS["n"] or k > IMMERSION_CAPS["k"] or len(edges) > IMMERSION_CAPS["m"]:
        raise OracleCapError(f"instance (n={n}, k={k}, m={len(edges)}) exceeds caps {IMMERSION_CAPS}")
    if k < 1 or k > n:
        return None
    if len(edges) < k * (k - 1) // 2:
        return None
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    pairs = list(combinations(range(k), 2))

    for branch in combinations(range(n), k):
        options = [_simple_paths(adj, branch[i], branch[j]) for i, j in pairs]
        if any(not o for o in options):
            continue
        chosen: list[tuple[int, ...]] = []

        def place(idx: int, used: frozenset) -> bool:
            if idx == len(pairs):
                return True
            for p in options[idx]:
                es = {frozenset(e) for e in zip(p, p[1:])}
                if es.isdisjoint(used):
                    chosen.append(p)
                    if place(idx + 1, used | es):
                        return True
                    chosen.pop()
            return False

        if place(0, frozenset()):
            return WeakImmersion(k, n, tuple(branch), dict(zip(pairs, chosen)))
    return None
