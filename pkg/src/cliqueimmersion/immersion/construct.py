"""Building a weak immersion of K_k from the complete-join decomposition.

Branch vertices are the union of the sets ``U_i``.  Adjacent branch pairs
use their edge.  A non-adjacent pair ``u, u2`` (always inside one part) with
``f_u(u2) = f_u2(u) = w`` uses ``u, w, u2``; every other non-adjacent pair is
an edge of the multigraph ``H_i`` and uses ``u, f_u(u2), t, f_u2(u), u2``
where ``t`` in ``U - U_i`` is the colour of that edge in a proper edge
colouring of ``H_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from ..chromatic import critical_core
from ..edgecolor import BudgetError, EdgeColoring, EdgeColoringError, edge_color
from ..gallai import GallaiDecomposition, gallai_decompose
from ..graphs import Multigraph, SimpleGraph, induced_subgraph
from .certificate import WeakImmersion
from .semirandom import SemiRandomConfig, SemiRandomState, semirandom_split
from .split import PartSplit, build_H, choose_injections, h_edge_pairs

STRATEGIES = ("arbitrary", "semirandom")
DEFAULT_RETRIES = 16


class ImmersionError(ValueError):
    """Hypothesis violated or the construction could not be completed."""


@dataclass
class ImmersionConstruction:
    """Everything the construction produced, in vertex ids of the input graph.

    ``splits[i]``, ``multigraphs[i]`` and ``colorings[i]`` use the ids of the
    part graph ``G[V_i]``; ``decomposition`` and ``core_vertices`` use ids of
    the critical core and of the input graph respectively.
    """

    immersion: WeakImmersion
    core_vertices: list[int]
    decomposition: GallaiDecomposition
    splits: list[PartSplit]
    multigraphs: list[Multigraph]
    colorings: list[EdgeColoring]
    states: list[SemiRandomState | None] = field(default_factory=list)
    attempts: list[int] = field(default_factory=list)


def part_seed(master_seed: int, part_index: int, attempt: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(master_seed), int(part_index), int(attempt)])


def construct_immersion(g: SimpleGraph, k: int, strategy: str = "arbitrary", seed: int = 0,
                        **kwargs) -> WeakImmersion:
    return construct_immersion_detailed(g, k, strategy, seed, **kwargs).immersion


def construct_immersion_detailed(g: SimpleGraph, k: int, strategy: str = "arbitrary",
                                 seed: int = 0, retries: int = DEFAULT_RETRIES,
                                 config: SemiRandomConfig | None = None,
                                 assume_critical: bool = False) -> ImmersionConstruction:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    n = g.vertex_count
    if n == 0 or k < 1:
        raise ImmersionError("need a non-empty graph and k >= 1")
    if strategy == "arbitrary" and not Fraction(n) < Fraction(7, 5) * k - Fraction(3, 5):
        raise ImmersionError(f"arbitrary strategy needs n < 1.4k - 0.6 (n={n}, k={k})")

    if assume_critical:
        core, keep = g, list(range(n))
    else:
        core, keep = critical_core(g)
    if core.vertex_count > 2 * k - 2 and core.vertex_count != k:
        raise ImmersionError(
            f"critical subgraph has {core.vertex_count} > 2k-2 vertices; no join structure")
    dec = gallai_decompose(core, k)

    part_graphs = [induced_subgraph(core, p.vertices) for p in dec.parts]
    splits: list[PartSplit] = []
    states: list[SemiRandomState | None] = []
    attempts: list[int] = []
    multigraphs: list[Multigraph] = []
    colorings: list[EdgeColoring] = []

    for i, (part, pg) in enumerate(zip(dec.parts, part_graphs)):
        budget = k - part.k
        if strategy == "arbitrary":
            split = choose_injections(pg, list(range(part.k)), part_index=i)
            h = build_H(split)
            try:
                col = edge_color(h, budget)
            except BudgetError as exc:
                raise AssertionError(
                    f"part {i}: edge-colour budget {budget} too small ({exc}); "
                    "contradicts k_i <= 0.4(k-1)") from exc
            splits.append(split)
            states.append(None)
            attempts.append(1)
        else:
            for attempt in range(retries):
                st = semirandom_split(pg, part.k, part_seed(seed, i, attempt), config)
                split = st.as_split(i)
                h = build_H(split)
                try:
                    col = edge_color(h, budget, attempt=True)
                except EdgeColoringError:
                    continue
                break
            else:
                raise ImmersionError(f"part {i}: no colouring within budget {budget} "
                                     f"after {retries} semi-random attempts")
            splits.append(split)
            states.append(st)
            attempts.append(attempt + 1)
        multigraphs.append(h)
        colorings.append(col)

    # glue the parts together in core ids
    U_glob = []
    for part, split in zip(dec.parts, splits):
        U_glob.extend(part.vertices[u] for u in split.U)
    branch = sorted(U_glob)
    label = {v: j for j, v in enumerate(branch)}
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for a, b in combinations(branch, 2):
        if core.has_edge(a, b):
            paths[(label[a], label[b])] = (a, b)
    for i, (part, split, h, col) in enumerate(zip(dec.parts, splits, multigraphs, colorings)):
        V = part.vertices
        f = split.injections
        others = sorted(set(branch) - {V[u] for u in split.U})
        for u in split.U:
            for u2, w in f[u].items():
                if u < u2 and f[u2][u] == w:
                    paths[_key(label, V[u], V[u2])] = _oriented(label, (V[u], V[w], V[u2]))
        for (wa, wb, u, u2), eid in zip(h_edge_pairs(split), h.edge_ids):
            t = others[col.color(eid)]
            paths[_key(label, V[u], V[u2])] = _oriented(label, (V[u], V[wa], t, V[wb], V[u2]))

    imm_core = WeakImmersion(k, core.vertex_count, tuple(branch), paths)
    imm = WeakImmersion(
        k, n, tuple(keep[v] for v in imm_core.branch_vertices),
        {p: tuple(keep[v] for v in vs) for p, vs in imm_core.paths.items()},
    )
    return ImmersionConstruction(imm, keep, dec, splits, multigraphs, colorings, states, attempts)


def _key(label: dict[int, int], a: int, b: int) -> tuple[int, int]:
    i, j = label[a], label[b]
    return (i, j) if i < j else (j, i)


def _oriented(label: dict[int, int], verts: tuple[int, ...]) -> tuple[int, ...]:
    return verts if label[verts[0]] < label[verts[-1]] else tuple(reversed(verts))
