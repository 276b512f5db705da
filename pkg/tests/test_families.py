import networkx as nx
import pytest

from cyclespec import families
from cyclespec.cycles import cycle_spectrum_mod
from cyclespec.decomposition import is_bipartite, is_two_connected
from cyclespec.families import FamilySpec, generate, join, random_graph
from cyclespec.graph import degree_stats, encode_graph6

from strategies import to_nx


@pytest.mark.parametrize("t", [1, 2, 3])
def test_ht_shape(t):
    g = families.ht(t)
    assert (g.n, g.m) == (4 * t + 4, 6 * t + 6)
    assert degree_stats(g)[:2] == (3, 3)
    assert is_two_connected(g) and not is_bipartite(g)
    assert cycle_spectrum_mod(g, 4, limit=g.n).missing == {1}


def test_petersen_matches_networkx():
    assert nx.is_isomorphic(to_nx(families.petersen()), nx.petersen_graph())


def test_basic_families():
    assert families.complete(5).m == 10
    assert families.complete_bipartite(3, 4).m == 12
    assert families.complete_multipartite(2, 2, 2).m == 12
    assert families.cycle(6).m == 6
    assert families.path(6).m == 5


@pytest.mark.parametrize(
    "family, params",
    [("ht", ()), ("ht", (0,)), ("cycle", (2,)), ("complete", (1, 2)), ("nope", (1,)), ("complete_multipartite", ())],
)
def test_bad_specs(family, params):
    with pytest.raises(ValueError):
        FamilySpec(family, params)


def test_generate_dispatch():
    assert str(FamilySpec("complete_bipartite", (2, 3))) == "complete_bipartite:2:3"
    assert generate(FamilySpec("petersen")) == families.petersen()
    assert generate(FamilySpec("ht", (2,))) == families.ht(2)


def test_join():
    g = join(families.cycle(5), families.complete(3))
    assert (g.n, g.m) == (8, 23)
    with pytest.raises(ValueError):
        join(families.complete(40), families.complete(30))


def test_random_graph_is_seeded():
    a = random_graph(9, 0.5, 11)
    b = random_graph(9, 0.5, 11)
    assert encode_graph6(a) == encode_graph6(b)
    assert random_graph(6, 0.0, 1).m == 0 and random_graph(6, 1.0, 1).m == 15
