import pytest
from conftest import raw_dag_oracle

from compnum.ecc import theta_e
from compnum.fixtures import effective_cover_example_graph
from compnum.graph import Graph, add_isolated, competition_graph
from compnum.realizer import (competition_number, dag_oracle,
                              max_predators_with, min_prey_count,
                              primary_predator_index, realizable_with)
from compnum.smallgraphs import enumerate_small_graphs

K2 = Graph.from_edges(2, [(0, 1)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_realizable_with_k2():
    assert realizable_with(K2, 0) is None
    witness = realizable_with(K2, 1)
    assert witness.digraph.arcs == ((0, 2), (1, 2))
    assert witness.prey_count == 1 and witness.predator_count == 2


def test_realizable_witnesses_verify():
    for n in range(1, 6):
        for g in enumerate_small_graphs(n):
            k, witness = competition_number(g)
            assert competition_graph(witness.digraph) == add_isolated(g, k)
            assert witness.labeling.validates(witness.digraph)
            assert witness.prey_count + witness.predator_count == g.n + k


def test_competition_number_values():
    assert competition_number(Graph(4, (0,) * 4))[0] == 0
    assert competition_number(K3)[0] == 1
    assert competition_number(P3)[0] == 1
    assert competition_number(C4)[0] == 2
    assert competition_number(effective_cover_example_graph())[0] == 1


def test_competition_number_with_graph_isolates():
    # a graph that carries its own isolated vertex absorbs the added one
    g = Graph.from_edges(3, [(0, 1)])
    k, witness = competition_number(g)
    assert k == 0
    assert competition_graph(witness.digraph) == g


def test_primary_predator_index_values():
    assert primary_predator_index(Graph(4, (0,) * 4))[0] == 4
    assert primary_predator_index(K3)[0] == 3
    assert primary_predator_index(C4)[0] == 2
    assert primary_predator_index(effective_cover_example_graph())[0] == 4


def test_min_prey_values():
    assert min_prey_count(K3) == 1
    assert min_prey_count(C4) == 4
    assert min_prey_count(Graph(3, (0, 0, 0))) == 0


def test_max_predators_with_examples():
    assert max_predators_with(K2, 1)[0] == 2
    assert max_predators_with(K3, 1)[0] == 3
    assert max_predators_with(P3, 1)[0] == 2
    assert max_predators_with(C4, 1) is None


def test_oracle_examples():
    assert dag_oracle(K2, 1) == dag_oracle(K2, 1)
    assert dag_oracle(K2, 1).max_predators == 2
    assert dag_oracle(K3, 1).max_predators == 3
    assert dag_oracle(P3, 1).max_predators == 2
    assert dag_oracle(K2, 0).realizable is False


def test_oracle_cap():
    with pytest.raises(ValueError):
        dag_oracle(C4, 3, cap=6)


def test_oracle_matches_raw_enumeration():
    # the memoized oracle against a literal sweep of every placement
    for n in range(1, 4):
        for g in enumerate_small_graphs(n):
            for k in range(0, 5 - n):
                fast = dag_oracle(g, k)
                raw = raw_dag_oracle(g, k)
                assert fast.realizable == raw[0]
                assert fast.max_predators == raw[1]


def test_search_matches_oracle_small():
    for n in range(1, 4):
        for g in enumerate_small_graphs(n):
            for k in range(3):
                oracle = dag_oracle(g, k)
                witness = realizable_with(g, k)
                assert (witness is not None) == oracle.realizable
                best = max_predators_with(g, k)
                if oracle.realizable:
                    assert best[0] == oracle.max_predators
                else:
                    assert best is None


def test_search_matches_oracle_everywhere_the_oracle_reaches():
    for n in range(1, 6):
        for g in enumerate_small_graphs(n):
            for k in range(0, 7 - n):
                oracle = dag_oracle(g, k, cap=6)
                assert (realizable_with(g, k) is not None) == oracle.realizable
                if oracle.realizable:
                    assert max_predators_with(g, k)[0] == oracle.max_predators


def test_theorem_floors_all_graphs_up_to_six():
    # the floors hold on every isomorphism class, disconnected ones included
    for n in range(1, 7):
        for g in enumerate_small_graphs(n):
            theta = theta_e(g)
            k, _ = competition_number(g)
            p, witness = primary_predator_index(g)
            if n >= 2:
                assert p >= 2
            assert k >= theta - g.n + p
            assert witness.prey_count >= theta
            assert witness.prey_count == g.n + k - p
