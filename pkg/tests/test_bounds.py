from fractions import Fraction
from math import comb

import pytest

from cliqueimmersion.bounds import (C, DELTA, DELTA_PRIME, BoundError, albertson_case_report,
                                    auxiliary_bounds, case_predicates, hill_number,
                                    hill_ratio_nondecreasing, lower_bounds)
from cliqueimmersion.gallai import gallai_decompose
from cliqueimmersion.graphs import complete_graph, cycle_graph, join


def test_hill_values():
    assert [hill_number(k) for k in range(5, 13)] == [1, 3, 9, 18, 36, 60, 100, 150]
    assert hill_number(3) == hill_number(0) == 0
    with pytest.raises(BoundError):
        hill_number(-1)


def test_hill_integrality_and_monotone():
    for k in range(0, 10 ** 4 + 1):
        p = (k // 2) * ((k - 1) // 2) * ((k - 2) // 2) * ((k - 3) // 2)
        assert p % 4 == 0
    assert hill_ratio_nondecreasing(10 ** 4)
    assert hill_number(100) * comb(101, 4) <= hill_number(101) * comb(100, 4)


def test_lower_bounds():
    b = lower_bounds("complete", k=100)
    assert b.value == Fraction(10 ** 8, 65) and b.asymptotic
    assert float(b.value) == pytest.approx(1538461.538, rel=1e-9)
    bp = lower_bounds("bipartite", a=100, b=100)
    assert bp.value == Fraction(9118, 10000) * 10 ** 8 / 16 and bp.asymptotic
    with pytest.raises(BoundError):
        lower_bounds("crossing-lemma", n=100, m=600)
    cl = lower_bounds("crossing-lemma", n=100, m=695)
    assert cl.value == Fraction(695 ** 3 * 100, 2748 * 100 ** 2) and not cl.asymptotic
    with pytest.raises(BoundError):
        lower_bounds("planar", k=3)


def test_auxiliary_bounds():
    assert auxiliary_bounds("sampled-edges", n=10, m=20, a=5).value == Fraction(40, 9)
    assert auxiliary_bounds("add-edge", cr=0, m=0).value == 0
    assert auxiliary_bounds("add-edge", cr=3, m=7).value == 10
    ov = auxiliary_bounds("immersion-overhead", n=9, k=7)
    assert ov.value == Fraction(207, 4) and ov.extra["at_most_k3_over_2"]
    for bad in ({"n": 10, "m": 20, "a": 11}, {"n": 10, "m": 20, "a": 0}, {"n": 4, "m": 7, "a": 2}):
        with pytest.raises(BoundError):
            auxiliary_bounds("sampled-edges", **bad)
    with pytest.raises(BoundError):
        auxiliary_bounds("add-edge", cr=-1, m=2)
    with pytest.raises(BoundError):
        auxiliary_bounds("immersion-overhead", n=5, k=7)


def test_constants():
    assert (DELTA, DELTA_PRIME, C) == (Fraction(1, 11), Fraction(1, 4096), Fraction(1, 2 ** 60))


def test_base_case_and_from_decomposition():
    rep = albertson_case_report(7, 7, gallai_decompose(complete_graph(7), 7))
    assert rep.case == "base" and rep.quantities["H(k)"] == 9
    g = join(cycle_graph(5), complete_graph(4))
    rep = albertson_case_report(7, 9, gallai_decompose(g, 7))
    assert rep.case == "2"


def test_case_quantities_exact():
    k = 10 ** 4
    rep = albertson_case_report(k, 15000, [(500, 100), (9200, 4600)] + [(1, 1)] * 5300)
    assert rep.case == "1" and rep.part == 0
    assert rep.quantities["k'"] == 10400
    assert rep.quantities["added_edge_cost"] == Fraction(15000 ** 2 * 500 * 400, 4)
    assert rep.quantities["(4/65-c)k^3(k'-k)"] == (Fraction(4, 65) - C) * k ** 3 * 400
    assert all(isinstance(q.slack, Fraction) for q in rep.inequalities)
    rep2 = albertson_case_report(k, 15000, [(5008, 8)] + [(1, 1)] * 9992)
    assert rep2.case == "2" and rep2.part == 0
    assert rep2.quantities["m_i"] == Fraction(7 * 5000 * 4999, 2 * 5007)
    assert rep2.quantities["2^-11 k_i^3 (n_i-k_i)"] == Fraction(512 * 5000, 2048)


def test_malformed():
    with pytest.raises(BoundError):
        albertson_case_report(5, 6, [(3, 2), (2, 2)])
    with pytest.raises(BoundError):
        albertson_case_report(5, 6, [(3, 4), (3, 1)])
    with pytest.raises(BoundError):
        albertson_case_report(5, 6, [])


def test_predicates_literal():
    # for k <= 4096 every singleton already has k_i >= k/4096
    pred = case_predicates(100, 120, [(30, 10)] + [(1, 1)] * 90)
    assert pred["2"][0] == 0 and len(pred["2"]) == 91 and not pred["1"] and pred["3"] == []


def test_serialisation():
    rep = albertson_case_report(10 ** 4, 15000, [(5008, 8)] + [(1, 1)] * 9992)
    d = rep.to_dict()
    assert d["constants"]["c"] == "1/1152921504606846976"
    assert "case=2" in rep.to_text()
    assert '"case": "2"' in rep.to_json()
