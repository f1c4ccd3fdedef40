"""Semi-random choice of U and of the injections f_u for one part.

1. ``U(d)``: vertices of degree at least ``d = ceil(9k/8)``, at most
   ``k - ceil(k**0.9)`` of them (lowest ids first when there are more).
2. The rest of ``U`` is drawn uniformly from the other vertices.
3. Rewiring: while some ``w`` in ``W`` is adjacent to ``u`` in ``U(d)`` and to
   ``u2`` in ``U`` with ``u, u2`` non-adjacent, set ``f_u(u2) = f_u2(u) = w``,
   delete ``uw`` and ``u2w`` and add ``uu2``.  The result is ``G*``.
4. Every f_u is completed by a uniformly random injection relative to ``G*``.

Triples are scanned in lexicographic order ``(w, u, u2)``.  A rewire only
deletes edges at ``w`` and adds edges inside ``U``, so the set of qualifying
triples only shrinks and one ordered pass gives the same result as
restarting the scan after every rewire.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..graphs import SimpleGraph
from ..report import Report
from .split import PartSplit


def degree_threshold(k: int) -> int:
    return -(-9 * k // 8)


def phi(k: int) -> int:
    return math.ceil(k ** 0.9)


@dataclass(frozen=True)
class SemiRandomConfig:
    """``d`` and ``phi_k`` override the threshold and the random reserve.

    ``rewire_scope="all"`` also rewires triples whose ``u`` is outside ``U(d)``.
    """

    d: int | None = None
    phi_k: int | None = None
    rewire_scope: str = "high-degree"


@dataclass(frozen=True)
class SemiRandomState:
    k: int
    d: int
    phi_k: int
    U_d: tuple[int, ...]
    U: tuple[int, ...]
    W: tuple[int, ...]
    G_star: SimpleGraph
    rewire_log: tuple[tuple[int, int, int], ...]
    injections: dict[int, dict[int, int]]
    rewire_scope: str = "high-degree"

    @property
    def ell(self) -> int:
        return len(self.U_d)

    def as_split(self, part_index: int = 0) -> PartSplit:
        return PartSplit(part_index, self.U, self.W, self.injections)


def as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def semirandom_split(g_part: SimpleGraph, k: int, seed=None,
                     config: SemiRandomConfig | None = None) -> SemiRandomState:
    cfg = config or SemiRandomConfig()
    if cfg.rewire_scope not in ("high-degree", "all"):
        raise ValueError(f"unknown rewire scope {cfg.rewire_scope!r}")
    n = g_part.vertex_count
    if k < 1 or n < 2 * k - 1:
        raise ValueError(f"need n >= 2k-1 (n={n}, k={k})")
    A = g_part.to_adjacency()
    deg = A.sum(axis=1)
    if n and deg.min() < k - 1:
        raise ValueError(f"minimum degree {int(deg.min())} < k-1 = {k - 1}")
    rng = as_generator(seed)

    d = cfg.d if cfg.d is not None else degree_threshold(k)
    phi_k = cfg.phi_k if cfg.phi_k is not None else phi(k)
    cap = max(k - phi_k, 0)
    high = np.flatnonzero(deg >= d)
    U_d = high[:cap]
    rest = np.setdiff1d(np.arange(n), U_d)
    extra = rng.choice(rest, size=k - len(U_d), replace=False)
    U = np.sort(np.concatenate([U_d, extra]))
    in_U = np.zeros(n, dtype=bool)
    in_U[U] = True
    in_Ud = np.zeros(n, dtype=bool)
    in_Ud[U_d] = True
    W = np.flatnonzero(~in_U)
    pivot = in_Ud if cfg.rewire_scope == "high-degree" else in_U

    S = A.copy()
    inj: dict[int, dict[int, int]] = {int(u): {} for u in U}
    log = []
    for w in W:
        for u in np.flatnonzero(S[w] & pivot):
            if not S[w, u]:
                continue
            cand = S[w] & in_U & ~S[u]
            cand[u] = False
            hits = np.flatnonzero(cand)
            if hits.size == 0:
                continue
            u2 = hits[0]
            S[u, w] = S[w, u] = False
            S[u2, w] = S[w, u2] = False
            S[u, u2] = S[u2, u] = True
            log.append((int(u), int(u2), int(w)))
            inj[int(u)][int(u2)] = int(w)
            inj[int(u2)][int(u)] = int(w)

    for u in U:
        dom = np.flatnonzero(in_U & ~S[u])
        dom = dom[dom != u]
        targets = np.flatnonzero(~in_U & S[u])
        img = rng.choice(targets, size=dom.size, replace=False)
        inj[int(u)].update(zip(dom.tolist(), img.tolist()))

    return SemiRandomState(
        k=k, d=d, phi_k=phi_k,
        U_d=tuple(U_d.tolist()), U=tuple(U.tolist()), W=tuple(W.tolist()),
        G_star=SimpleGraph.from_adjacency(S), rewire_log=tuple(log),
        injections=inj, rewire_scope=cfg.rewire_scope,
    )


def check_semirandom_invariants(g_part: SimpleGraph, st: SemiRandomState) -> Report:
    """Invariants of a finished semi-random split.

    The containment ``U_w - {u} <= U_u`` is checked for ``u`` in ``U(d)`` (for
    every ``u`` in ``U`` when the state was built with ``rewire_scope="all"``).
    """
    rep = Report()
    A = g_part.to_adjacency()
    S = st.G_star.to_adjacency()
    n = g_part.vertex_count
    in_U = np.zeros(n, dtype=bool)
    in_U[list(st.U)] = True
    in_Ud = np.zeros(n, dtype=bool)
    in_Ud[list(st.U_d)] = True
    U = np.flatnonzero(in_U)
    W = np.flatnonzero(~in_U)

    rep.add("sizes", len(st.U) == st.k and len(st.U) + len(st.W) == n
            and set(st.U_d) <= set(st.U), "U/W sizes or U(d) not inside U")
    rep.add("ell_bound", st.ell <= st.k - st.phi_k, f"ell={st.ell} > k-phi={st.k - st.phi_k}")
    rep.add("threshold", bool(np.all(A[list(st.U_d)].sum(axis=1) >= st.d)) if st.U_d else True,
            "a U(d) vertex is below the threshold")
    dg, ds = A.sum(axis=1), S.sum(axis=1)
    rep.add("u_degree_preserved", bool(np.array_equal(dg[U], ds[U])), "degree changed inside U")
    rep.add("w_degree_monotone", bool(np.all(ds[W] <= dg[W])), "degree grew inside W")
    rep.add("w_degree_sum", int(dg[W].sum() - ds[W].sum()) == 2 * len(st.rewire_log),
            "W degree sum did not drop by 2 per rewire")

    pivot = in_U if st.rewire_scope == "all" else in_Ud
    ok = True
    for w in W:
        Uw = S[w] & in_U
        for u in np.flatnonzero(Uw & pivot):
            outside = Uw & ~S[u]
            outside[u] = False
            if outside.any():
                ok = False
                break
        if not ok:
            break
    rep.add("containment", ok, f"U_w - {{u}} not inside U_u for w={w}")

    inj_ok = dom_ok = img_ok = True
    for u in U:
        f = st.injections.get(int(u), {})
        want = {int(x) for x in U if x != u and not A[u, x]}
        dom_ok &= set(f) == want
        imgs = list(f.values())
        inj_ok &= len(set(imgs)) == len(imgs)
        img_ok &= all(not in_U[w] and A[u, w] for w in imgs)
    rep.add("domain", dom_ok, "some f_u has the wrong domain")
    rep.add("injective", inj_ok, "some f_u is not one-to-one")
    rep.add("image", img_ok, "some f_u leaves W or N_G(u)")
    rep.add("rewire_consistent",
            all(st.injections[u][u2] == w and st.injections[u2][u] == w for u, u2, w in st.rewire_log),
            "rewire log disagrees with the injections")
    return rep
