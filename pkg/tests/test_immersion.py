import json

import numpy as np
import pytest
from conftest import corpus
from hypothesis import given, settings
from hypothesis import strategies as st

from cliqueimmersion.experiments import near_regular_graph, threshold_heavy_graph
from cliqueimmersion.graphs import SimpleGraph, complete_graph, cycle_graph, join
from cliqueimmersion.immersion import (ImmersionError, InjectionError, PartSplit,
                                       SemiRandomConfig, WeakImmersion, build_H,
                                       check_semirandom_invariants, choose_injections,
                                       construct_immersion, construct_immersion_detailed,
                                       degree_threshold, identity_immersion, matched_pairs, phi,
                                       semirandom_split, verify_weak_immersion)


def grotzsch():
    cyc = [(i, (i + 1) % 5) for i in range(5)]
    shadow = [(5 + i, (i + s) % 5) for i in range(5) for s in (1, 4)]
    hub = [(10, 5 + i) for i in range(5)]
    return SimpleGraph(11, cyc + shadow + hub)


# -- verifier ----------------------------------------------------------------

def test_identity_k5():
    g = complete_graph(5)
    rep = verify_weak_immersion(g, identity_immersion(g, list(range(5))), strong=True)
    assert rep.ok and rep.checks["strong"]


def test_shared_edge_fails():
    g = cycle_graph(4)
    paths = {(0, 1): (0, 1), (0, 2): (0, 1, 2), (1, 2): (1, 2)}
    rep = verify_weak_immersion(g, WeakImmersion(3, 4, (0, 1, 2), paths))
    assert not rep.checks["edge_disjoint"]
    assert rep.checks["paths"] and rep.checks["injective"]


def test_verifier_catches_each_condition():
    g = cycle_graph(5)
    good = WeakImmersion(3, 5, (0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 4, 3, 2)})
    rep = verify_weak_immersion(g, good, strong=True)
    assert rep.ok and "strong" in rep.checks
    assert "strong" not in verify_weak_immersion(g, good).checks
    dup = WeakImmersion(3, 5, (0, 0, 2), good.paths)
    assert not verify_weak_immersion(g, dup).checks["injective"]
    short = WeakImmersion(3, 5, (0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2)})
    assert not verify_weak_immersion(g, short).checks["complete"]
    nonedge = WeakImmersion(3, 5, (0, 1, 2), good.paths | {(0, 2): (0, 3, 2)})
    assert not verify_weak_immersion(g, nonedge).checks["paths"]
    wrong_end = WeakImmersion(3, 5, (0, 1, 2), good.paths | {(0, 2): (0, 4, 3)})
    assert not verify_weak_immersion(g, wrong_end).checks["paths"]
    assert not verify_weak_immersion(cycle_graph(6), good).checks["vertex_count"]


def test_weak_but_not_strong():
    g = SimpleGraph(5, [(0, 1), (1, 2), (0, 3), (3, 1), (1, 4), (4, 2)])
    imm = WeakImmersion(3, 5, (0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 3, 1, 4, 2)})
    assert verify_weak_immersion(g, imm).ok
    rep = verify_weak_immersion(g, imm, strong=True)
    assert not rep.checks["strong"] and all(v for c, v in rep.checks.items() if c != "strong")


def test_certificate_round_trip():
    g = join(cycle_graph(5), complete_graph(4))
    imm = construct_immersion(g, 7)
    text = imm.to_json()
    assert WeakImmersion.from_json(text) == imm
    data = json.loads(text)
    assert data["vertex_count"] == 9 and data["k"] == 7
    data["paths"][0] = {"pair": data["paths"][0]["pair"][::-1],
                        "vertices": data["paths"][0]["vertices"][::-1]}
    assert WeakImmersion.from_certificate(data) == imm
    with pytest.raises(ValueError):
        WeakImmersion.from_certificate({"format": "other"})


# -- injections and H ----------------------------------------------------------

def test_choose_injections_examples():
    k4 = complete_graph(4)
    assert all(not f for f in choose_injections(join(k4, SimpleGraph(3)), [0, 1, 2]).injections.values())
    c5 = cycle_graph(5)
    sp = choose_injections(c5, [0, 1, 2])
    for u, f in sp.injections.items():
        assert len(f) <= 2 and len(set(f.values())) == len(f)
        assert all(c5.has_edge(u, w) and w in sp.W for w in f.values())
    tight = choose_injections(c5, [0, 2, 3])
    assert tight.injections[0] == {2: 1, 3: 4}
    assert sorted(tight.injections[0].values()) == sorted(set(c5.neighbors(0)) & set(tight.W))
    with pytest.raises(InjectionError):
        choose_injections(SimpleGraph(5, [(0, 3)]), [0, 1, 2])


def test_build_H_examples():
    empty = PartSplit(0, (0, 1), (2, 3), {0: {}, 1: {}})
    assert len(build_H(empty)) == 0
    matched = PartSplit(0, (0, 1), (2, 3), {0: {1: 2}, 1: {0: 2}})
    assert len(build_H(matched)) == 0 and matched_pairs(matched) == [(0, 1, 2)]
    mism = PartSplit(0, (0, 1), (2, 3), {0: {1: 2}, 1: {0: 3}})
    h = build_H(mism)
    assert len(h) == 1 and h.multiplicity(0, 1) == 1
    res = construct_immersion_detailed(join(cycle_graph(5), complete_graph(4)), 7)
    assert res.multigraphs[0].max_degree <= 3


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2 ** 32 - 1))
def test_H_degree_bounded_by_k(k, seed):
    rng = np.random.default_rng(seed)
    g = near_regular_graph(2 * k - 1 + int(rng.integers(0, 4)), k, 3, rng)
    U = sorted(rng.choice(g.vertex_count, size=k, replace=False).tolist())
    h = build_H(choose_injections(g, U))
    assert h.max_degree <= k


# -- construction ---------------------------------------------------------------

def test_clique_is_identity():
    imm = construct_immersion(complete_graph(7), 7)
    assert set(imm.path_lengths().values()) == {1}
    assert verify_weak_immersion(complete_graph(7), imm, strong=True).ok


@pytest.mark.parametrize("g,k", [(join(cycle_graph(5), complete_graph(4)), 7),
                                 (join(cycle_graph(5), complete_graph(6)), 9)])
def test_examples(g, k):
    imm = construct_immersion(g, k, "arbitrary")
    assert verify_weak_immersion(g, imm).ok
    assert set(imm.path_lengths().values()) <= {1, 2, 4}


def _check_structure(g, res):
    imm = res.immersion
    rep = verify_weak_immersion(g, imm)
    assert rep.ok, rep.messages
    lengths = imm.path_lengths()
    assert set(lengths.values()) <= {1, 2, 4}
    bv = imm.branch_vertices
    for (i, j), L in lengths.items():
        assert (L == 1) == g.has_edge(bv[i], bv[j])
    assert sum(L == 2 for L in lengths.values()) == sum(len(matched_pairs(s)) for s in res.splits)
    for part, split, h in zip(res.decomposition.parts, res.splits, res.multigraphs):
        assert h.max_degree <= part.k


@pytest.mark.parametrize("g,k", corpus())
@pytest.mark.parametrize("strategy", ["arbitrary", "semirandom"])
def test_corpus_structure(g, k, strategy):
    _check_structure(g, construct_immersion_detailed(g, k, strategy, seed=7))


def test_semirandom_with_rewiring():
    # Grotzsch graph (4-critical, 11 vertices) joined with K_16: k = 20, n = 27
    g = join(grotzsch(), complete_graph(16))
    for seed in range(6):
        res = construct_immersion_detailed(g, 20, "semirandom", seed=seed, assume_critical=True)
        _check_structure(g, res)
    res = construct_immersion_detailed(g, 20, "arbitrary", assume_critical=True)
    _check_structure(g, res)
    lowered = SemiRandomConfig(d=4, phi_k=1)
    res = construct_immersion_detailed(g, 20, "semirandom", seed=0, config=lowered,
                                       assume_critical=True)
    _check_structure(g, res)
    st_ = res.states[0]
    assert st_.rewire_log
    for u, u2, w in st_.rewire_log:
        assert u in st_.U_d and not st_.G_star.has_edge(u, w) and st_.G_star.has_edge(u, u2)


def test_determinism():
    g = join(cycle_graph(5), cycle_graph(5), complete_graph(7))
    a = construct_immersion_detailed(g, 13, "semirandom", seed=3)
    b = construct_immersion_detailed(g, 13, "semirandom", seed=3)
    assert a.immersion == b.immersion and a.states == b.states
    assert a.immersion.to_json() == b.immersion.to_json()


def test_construction_errors():
    with pytest.raises(ImmersionError, match="1.4k"):
        construct_immersion(join(cycle_graph(5), complete_graph(2)), 5)
    with pytest.raises(ImmersionError):
        construct_immersion(join(cycle_graph(5), complete_graph(4)), 7, "semirandom", retries=0)
    with pytest.raises(ValueError):
        construct_immersion(complete_graph(3), 3, "greedy")


def test_non_critical_input_is_reduced():
    g = join(cycle_graph(5), complete_graph(8))
    padded = SimpleGraph(14, g.edge_list() + [(0, 13)])
    imm = construct_immersion(padded, 11)
    assert verify_weak_immersion(padded, imm).ok
    assert 13 not in imm.branch_vertices


# -- semi-random split -----------------------------------------------------------

def test_threshold_boundary():
    g = near_regular_graph(15, 8, 1, np.random.default_rng(0))
    assert max(g.degrees()) < degree_threshold(8)
    s = semirandom_split(g, 8, 1)
    assert s.U_d == () and s.ell == 0 and len(s.U) == 8 and s.rewire_log == ()


def test_threshold_heavy_hits_cap():
    k = 40
    g = threshold_heavy_graph(2 * k - 1, k, 2, 3, np.random.default_rng(5))
    s = semirandom_split(g, k, 2)
    assert s.ell == k - phi(k)
    assert check_semirandom_invariants(g, s).ok


def test_preconditions():
    with pytest.raises(ValueError):
        semirandom_split(complete_graph(4), 3, 0)
    with pytest.raises(ValueError):
        semirandom_split(cycle_graph(7), 4, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 30), st.sampled_from(["near", "heavy"]), st.integers(0, 2 ** 32 - 1),
       st.sampled_from(["high-degree", "all"]))
def test_invariants_property(k, kind, seed, scope):
    rng = np.random.default_rng(seed)
    n = 2 * k - 1 + int(rng.integers(0, 5))
    g = (near_regular_graph(n, k, 4, rng) if kind == "near"
         else threshold_heavy_graph(n, k, 2, int(rng.integers(0, 4)), rng))
    cfg = SemiRandomConfig(rewire_scope=scope)
    s = semirandom_split(g, k, seed, cfg)
    rep = check_semirandom_invariants(g, s)
    assert rep.ok, rep.messages
    assert s == semirandom_split(g, k, seed, cfg)


def test_config_overrides():
    g = near_regular_graph(21, 11, 3, np.random.default_rng(1))
    s = semirandom_split(g, 11, 0, SemiRandomConfig(d=0, phi_k=5))
    assert (s.d, s.phi_k, s.ell) == (0, 5, 6) and s.U_d == tuple(range(6))
    with pytest.raises(ValueError):
        semirandom_split(g, 11, 0, SemiRandomConfig(rewire_scope="some"))
