import numpy as np
import pytest
from conftest import PETERSEN_COLORING

from cliqueimmersion.graphs import (SimpleGraph, complete_graph, cycle_graph, path_graph,
                                    petersen_graph, random_graph)
from cliqueimmersion.immersion import verify_weak_immersion
from cliqueimmersion.oracle import OracleCapError, bruteforce_chromatic, bruteforce_weak_immersion


def test_chromatic_oracle():
    assert bruteforce_chromatic(cycle_graph(5)) == 3
    assert bruteforce_chromatic(complete_graph(4)) == 4
    assert bruteforce_chromatic(SimpleGraph(3)) == 1
    with pytest.raises(OracleCapError):
        bruteforce_chromatic(petersen_graph())
    assert bruteforce_chromatic(petersen_graph(), cap=10) == 3 == len(set(PETERSEN_COLORING))


def test_immersion_oracle_examples():
    k4 = complete_graph(4)
    imm = bruteforce_weak_immersion(k4, 4)
    assert imm.branch_vertices == (0, 1, 2, 3) and set(imm.path_lengths().values()) == {1}
    assert bruteforce_weak_immersion(path_graph(3), 3) is None
    c5 = bruteforce_weak_immersion(cycle_graph(5), 3)
    assert c5 is not None and verify_weak_immersion(cycle_graph(5), c5).ok
    assert bruteforce_weak_immersion(cycle_graph(5), 4) is None
    with pytest.raises(OracleCapError):
        bruteforce_weak_immersion(complete_graph(8), 3)
    with pytest.raises(OracleCapError):
        bruteforce_weak_immersion(complete_graph(6), 4)


def test_immersion_oracle_random():
    rng = np.random.default_rng(3)
    found = 0
    for _ in range(60):
        g = random_graph(int(rng.integers(3, 8)), 0.45, rng)
        if g.edge_count > 12:
            continue
        for k in range(2, 5):
            imm = bruteforce_weak_immersion(g, k)
            if imm is not None:
                found += 1
                assert verify_weak_immersion(g, imm).ok
    assert found > 20
