import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclespec import families
from cyclespec.coloring import (
    CONSTRAINED_INFEASIBLE,
    GOOD_BAD_ADJACENCY,
    LAYER_OVERFLOW,
    Coloring,
    ConflictWitness,
    chromatic_number,
    chromatic_number_exhaustive,
    constrained_three_coloring,
    is_k_critical,
    is_proper,
    k_coloring,
    layer_lemma_violations,
    layered_five_coloring,
    structural_criticality_check,
)
from cyclespec.decomposition import bfs_layering, bipartition, connected_components, good_bad_partition
from cyclespec.graph import Graph, delete_edge, induced_subgraph

from strategies import connected_graphs, graphs


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_chi_matches_exhaustive(g):
    chi, col = chromatic_number(g)
    assert chi == chromatic_number_exhaustive(g)
    assert is_proper(g, col)
    assert len(col.used()) == chi


def test_chi_examples():
    assert chromatic_number(Graph.empty(0))[0] == 0
    assert chromatic_number(Graph.empty(3))[0] == 1
    assert chromatic_number(families.petersen())[0] == 3
    assert chromatic_number(families.complete(7))[0] == 7
    assert chromatic_number(families.cycle(7))[0] == 3
    w5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
    assert chromatic_number(w5)[0] == 3
    w6 = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)])
    assert chromatic_number(w6)[0] == 4


@given(graphs(max_n=8), st.integers(1, 4))
def test_k_coloring(g, k):
    col = k_coloring(g, k)
    chi = chromatic_number_exhaustive(g)
    assert (col is not None) == (chi <= k)
    if col is not None:
        assert all(1 <= c <= k for c in col.values())
        assert all(col[u] != col[v] for u, v in g.edges())


def _critical_oracle(g: Graph, k: int) -> bool:
    if chromatic_number_exhaustive(g) != k:
        return False
    return all(chromatic_number_exhaustive(delete_edge(g, e)) == k - 1 for e in g.edges())


@settings(max_examples=100)
@given(graphs(max_n=7), st.integers(2, 5))
def test_criticality_matches_oracle(g, k):
    res = is_k_critical(g, k)
    assert res.verdict == _critical_oracle(g, k)
    if res.verdict:
        assert set(res.edge_colorings) == set(g.edges())
        for e, col in res.edge_colorings.items():
            assert is_proper(delete_edge(g, e), col) and len(col.used()) <= k - 1


def test_join_c5_k3_is_six_critical():
    g = families.join(families.cycle(5), families.complete(3))
    res = is_k_critical(g, 6)
    assert res.verdict and res.chi == 6 and len(res.edge_colorings) == g.m == 23


def test_petersen_is_not_three_critical():
    res = is_k_critical(families.petersen(), 3)
    assert not res.verdict and res.failing_edge is not None


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_complete_graphs_are_critical(n):
    assert is_k_critical(families.complete(n), n).verdict


def test_structural_check():
    rep = structural_criticality_check(families.join(families.cycle(5), families.complete(3)), 5)
    assert rep.ok and rep.min_degree == 5
    rep = structural_criticality_check(families.path(4), 1)
    assert rep.min_degree_ok and not rep.two_connected and not rep.ok


@settings(max_examples=150)
@given(connected_graphs(max_n=10))
def test_constrained_three_coloring(g):
    part = good_bad_partition(g)
    res = constrained_three_coloring(g)
    if isinstance(res, ConflictWitness):
        assert res.kind == CONSTRAINED_INFEASIBLE
        core, _ = induced_subgraph(g, part.bad)
        assert chromatic_number_exhaustive(core) > 3
        return
    assert is_proper(g, res)
    assert all(res.colors[v] in (1, 2) for v in part.good)
    assert all(res.colors[v] in (1, 2, 3) for v in part.bad)


def test_constrained_rejects_foreign_partition():
    g = families.cycle(5)
    other = good_bad_partition(families.path(5))
    with pytest.raises(ValueError):
        constrained_three_coloring(g, other)
    with pytest.raises(ValueError):
        constrained_three_coloring(Graph.empty(2))


def test_k4_constrained_is_infeasible():
    res = constrained_three_coloring(families.complete(4))
    assert isinstance(res, ConflictWitness) and res.kind == CONSTRAINED_INFEASIBLE


def _check_layered(g: Graph, r: int, res) -> None:
    layering = bfs_layering(g, r)
    if isinstance(res, Coloring):
        assert all(res.colors[u] != res.colors[v] for u, v in g.edges())
        for v in range(g.n):
            palette = {3, 4, 5} if layering.layer_of(v) % 2 else {1, 2, 3}
            assert res.colors[v] in palette
        return
    if res.kind == LAYER_OVERFLOW:
        comp = res.location["component"]
        assert set(comp) <= layering.layers[res.location["layer"]]
        assert chromatic_number_exhaustive(induced_subgraph(g, comp)[0]) == res.location["chi"] > 3
    else:
        assert res.kind == GOOD_BAD_ADJACENCY
        lo, hi = res.location["edge"]
        assert g.has_edge(lo, hi)
        i, j = res.location["layers"]
        assert j == i + 1
        for key in ("lower_component", "upper_component"):
            sub, relabel = induced_subgraph(g, res.location[key])
            assert bipartition(sub).sides is None
        low_sub, low_relabel = induced_subgraph(g, res.location["lower_component"])
        assert low_relabel.index(lo) in good_bad_partition(low_sub).bad


@settings(max_examples=150)
@given(connected_graphs(max_n=10), st.data())
def test_layered_five_coloring_or_witness(g, data):
    r = data.draw(st.integers(0, g.n - 1))
    res = layered_five_coloring(g, r)
    _check_layered(g, r, res)
    if isinstance(res, ConflictWitness):
        assert layer_lemma_violations(g, r)


def test_petersen_layered_every_root():
    p = families.petersen()
    for r in range(10):
        res = layered_five_coloring(p, r)
        assert isinstance(res, Coloring)
        _check_layered(p, r, res)
        assert layer_lemma_violations(p, r) == []


def test_k6_overflow():
    res = layered_five_coloring(families.complete(6), 0)
    assert res.kind == LAYER_OVERFLOW
    assert res.location == {"component": [1, 2, 3, 4, 5], "chi": 5, "layer": 1}


def test_layer_lemma_violations_on_random_graphs():
    rng = random.Random(7)
    for _ in range(100):
        g = families.random_graph(rng.randint(3, 11), rng.uniform(0.2, 0.7), rng)
        if len(connected_components(g)) != 1:
            continue
        for w in layer_lemma_violations(g, 0):
            if w.kind == LAYER_OVERFLOW:
                assert w.location["chi"] > 3
            else:
                h1 = w.location["lower_component"]
                sub, relabel = induced_subgraph(g, h1)
                bad = {relabel[v] for v in good_bad_partition(sub).bad}
                assert set(w.location["bad_vertices"]) <= bad
                assert all(g.adj[v] & set(w.location["upper_component"]) for v in w.location["bad_vertices"])
