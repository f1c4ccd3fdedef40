"""Proper edge colouring of loopless multigraphs.

Edges are inserted one at a time into a partial proper colouring.  When the
two endpoints of the new edge ``xy`` have no common free colour, a fan is
grown at ``x``: a sequence of distinct edges ``x y_0 (= e), x y_1, ...``
where the colour of every later edge is free at some earlier rim vertex
``y_j``.  Rim vertices may repeat since parallel edges are allowed.  The fan
stops growing as soon as either

* the last rim vertex shares a free colour with ``x`` (the fan *folds*:
  shift colours back along the fan until ``e`` is coloured), or
* the last rim vertex and an earlier, different rim vertex share a free
  colour ``a`` (swap an ``a``/``b`` alternating chain, ``b`` free at ``x``,
  which makes a prefix or the whole fan foldable).

A counting argument shows that one of the two always happens before the fan
runs out of edges when the palette has ``min(floor(3*Delta/2), Delta+mu)``
colours, so the same routine meets both the Shannon and the Vizing-Gupta
budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .graphs import EdgeId, Multigraph


class EdgeColoringError(RuntimeError):
    """Recolouring got stuck; only possible below the guaranteed palette."""


class BudgetError(ValueError):
    """Requested palette is smaller than the guaranteed bound."""


def shannon_bound(delta: int) -> int:
    return 3 * delta // 2


def vizing_gupta_bound(delta: int, mu: int) -> int:
    return delta + mu


def guaranteed_colors(h: Multigraph) -> int:
    delta, mu = h.max_degree, h.max_multiplicity
    return min(shannon_bound(delta), vizing_gupta_bound(delta, mu))


@dataclass(frozen=True)
class EdgeColoring:
    assignment: dict[EdgeId, int]

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def color(self, e: EdgeId) -> int:
        return self.assignment[e]


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class _Partial:
    def __init__(self, h: Multigraph, palette: int):
        self.full = (1 << palette) - 1
        self.ends = [(e.u, e.v) for e in h.edge_ids]
        self.col = [-1] * len(self.ends)
        self.used = [0] * h.vertex_count
        self.at: list[dict[int, int]] = [dict() for _ in range(h.vertex_count)]

    def free(self, v: int) -> int:
        return self.full & ~self.used[v]

    def other(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        return b if a == v else a

    def assign(self, e: int, c: int) -> None:
        u, v = self.ends[e]
        assert self.col[e] == -1 and not (self.used[u] >> c & 1) and not (self.used[v] >> c & 1)
        self.col[e] = c
        for w in (u, v):
            self.used[w] |= 1 << c
            self.at[w][c] = e

    def clear(self, e: int) -> None:
        c = self.col[e]
        for w in self.ends[e]:
            self.used[w] &= ~(1 << c)
            del self.at[w][c]
        self.col[e] = -1

    def recolor(self, e: int, c: int) -> None:
        self.clear(e)
        self.assign(e, c)

    # -- insertion -----------------------------------------------------

    def insert(self, e: int) -> None:
        x, y = self.ends[e]
        common = self.free(x) & self.free(y)
        if common:
            self.assign(e, _lowest(common))
            return
        fan, rim = [e], [y]
        in_fan = {e}
        rim_free = self.free(y)
        while True:
            last = rim[-1]
            if self.free(x) & self.free(last):
                self._fold(x, fan, rim)
                return
            for i in range(len(rim) - 1):
                if rim[i] != last and self.free(rim[i]) & self.free(last):
                    self._reduce(x, fan, rim, i)
                    return
            nxt = None
            cand = rim_free & self.used[x]
            while cand:
                c = _lowest(cand)
                cand &= cand - 1
                f = self.at[x][c]
                if f not in in_fan:
                    nxt = f
                    break
            if nxt is None:
                raise EdgeColoringError(f"fan at vertex {x} cannot be extended")
            fan.append(nxt)
            in_fan.add(nxt)
            y_new = self.other(nxt, x)
            rim.append(y_new)
            rim_free |= self.free(y_new)

    def _fold(self, x: int, fan: list[int], rim: list[int]) -> None:
        while True:
            c = _lowest(self.free(x) & self.free(rim[-1]))
            if len(fan) == 1:
                self.assign(fan[0], c)
                return
            f = fan[-1]
            old = self.col[f]
            self.recolor(f, c)
            i = next(j for j in range(len(fan) - 1) if self.free(rim[j]) >> old & 1)
            del fan[i + 1:]
            del rim[i + 1:]

    def _chain(self, start: int, a: int, b: int) -> tuple[list[int], int]:
        """Maximal a/b alternating path leaving ``start`` along colour ``b``."""
        edges, z, cur = [], start, b
        while self.used[z] >> cur & 1:
            f = self.at[z][cur]
            edges.append(f)
            z = self.other(f, z)
            cur = a if cur == b else b
        return edges, z

    def _swap(self, edges: list[int], a: int, b: int) -> None:
        old = [self.col[f] for f in edges]
        for f in edges:
            self.clear(f)
        for f, c in zip(edges, old):
            self.assign(f, a if c == b else b)

    def _reduce(self, x: int, fan: list[int], rim: list[int], i: int) -> None:
        a = _lowest(self.free(rim[i]) & self.free(rim[-1]))
        b = _lowest(self.free(x))
        chain, end = self._chain(rim[i], a, b)
        if end != x:
            self._swap(chain, a, b)
            del fan[i + 1:]
            del rim[i + 1:]
        else:
            chain, end = self._chain(rim[-1], a, b)
            assert end != x, "both alternating chains reach the fan centre"
            self._swap(chain, a, b)
        self._fold(x, fan, rim)


def edge_color(h: Multigraph, budget: int | None = None, attempt: bool = False) -> EdgeColoring:
    """Proper edge colouring of ``h`` with colours drawn from ``0..budget-1``.

    At most ``min(floor(3*Delta/2), Delta+mu)`` colours are used.  A budget
    below that bound raises :class:`BudgetError` unless ``attempt`` is set, in
    which case the routine tries the smaller palette and raises
    :class:`EdgeColoringError` if it gets stuck.
    """
    bound = guaranteed_colors(h)
    if budget is None:
        budget = bound
    if budget < bound and not attempt:
        raise BudgetError(f"budget {budget} below guaranteed bound {bound}")
    palette = min(budget, bound)
    if palette < h.max_degree:
        raise EdgeColoringError(f"palette {palette} below maximum degree {h.max_degree}")
    state = _Partial(h, palette)
    for e in range(len(state.ends)):
        try:
            state.insert(e)
        except EdgeColoringError:
            if palette >= bound:
                raise AssertionError("recolouring failed within the guaranteed palette")
            raise
    return EdgeColoring(dict(zip(h.edge_ids, state.col)))


def verify_proper(h: Multigraph, coloring: EdgeColoring) -> bool:
    a = coloring.assignment
    if set(a) != set(h.edge_ids):
        return False
    seen: set[tuple[int, int]] = set()
    for e in h.edge_ids:
        c = a[e]
        if not isinstance(c, int) or c < 0:
            return False
        for w in (e.u, e.v):
            if (w, c) in seen:
                return False
            seen.add((w, c))
    return True


BRUTEFORCE_CAP = 14


def chromatic_index_bruteforce(h: Multigraph) -> int:
    """Exact chromatic index by exhaustive search (at most 14 edge instances)."""
    m = len(h)
    if m > BRUTEFORCE_CAP:
        raise ValueError(f"{m} edge instances exceeds brute-force cap {BRUTEFORCE_CAP}")
    if m == 0:
        return 0
    ends = [(e.u, e.v) for e in h.edge_ids]
    clash = [[j for j in range(i) if set(ends[i]) & set(ends[j])] for i in range(m)]
    col = [-1] * m

    def fill(i: int, c: int, used: int) -> bool:
        if i == m:
            return True
        for x in range(min(c, used + 1)):
            if all(col[j] != x for j in clash[i]):
                col[i] = x
                if fill(i + 1, c, max(used, x + 1)):
                    return True
        col[i] = -1
        return False

    for c in count(max(h.max_degree, 1)):
        if fill(0, c, 0):
            return c
    raise AssertionError("unreachable")
