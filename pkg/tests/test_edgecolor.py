import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliqueimmersion.edgecolor import (BudgetError, EdgeColoring, EdgeColoringError,
                                       chromatic_index_bruteforce, edge_color, guaranteed_colors,
                                       shannon_bound, verify_proper, vizing_gupta_bound)
from cliqueimmersion.graphs import Multigraph, random_multigraph

FAT_TRIANGLE = Multigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])


def test_bounds():
    assert shannon_bound(4) == 6 and shannon_bound(5) == 7
    assert vizing_gupta_bound(5, 1) == 6
    assert guaranteed_colors(FAT_TRIANGLE) == 6


def test_fat_triangle():
    col = edge_color(FAT_TRIANGLE)
    assert verify_proper(FAT_TRIANGLE, col) and col.colors_used == 6
    assert chromatic_index_bruteforce(FAT_TRIANGLE) == 6
    with pytest.raises(BudgetError):
        edge_color(FAT_TRIANGLE, budget=5)
    with pytest.raises(EdgeColoringError):
        edge_color(FAT_TRIANGLE, budget=5, attempt=True)


def test_empty_and_budget_above_bound():
    assert edge_color(Multigraph(4)).assignment == {}
    h = Multigraph(3, [(0, 1), (1, 2)])
    assert edge_color(h, budget=10).colors_used == 2


def test_verify_proper_rejects():
    h = Multigraph(3, [(0, 1), (1, 2)])
    e1, e2 = h.edge_ids
    assert not verify_proper(h, EdgeColoring({e1: 0, e2: 0}))
    assert not verify_proper(h, EdgeColoring({e1: 0}))
    assert verify_proper(h, EdgeColoring({e1: 0, e2: 1}))


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 10), st.integers(1, 8), st.integers(1, 3), st.integers(0, 2 ** 32 - 1))
def test_random_within_bound(n, d, mu, seed):
    h = random_multigraph(n, d, mu, np.random.default_rng(seed))
    col = edge_color(h)
    assert verify_proper(h, col)
    assert col.colors_used <= guaranteed_colors(h)
    assert all(0 <= c < max(guaranteed_colors(h), 1) for c in col.assignment.values())


def test_bruteforce_agrees_on_small(rng):
    for _ in range(40):
        h = random_multigraph(5, 4, 2, rng, attempts=9)
        if len(h) > 9:
            continue
        chi = chromatic_index_bruteforce(h)
        assert h.max_degree <= chi <= edge_color(h).colors_used or len(h) == 0


def test_large_instance(rng):
    h = random_multigraph(300, 40, 3, rng, attempts=20000)
    col = edge_color(h)
    assert verify_proper(h, col) and col.colors_used <= guaranteed_colors(h)
