from itertools import combinations

import pytest

from ocsm.density import free_rider_gap, weighted_subgraph_density
from ocsm.errors import DomainError
from ocsm.graph import Graph
from ocsm.link_graph import LinkSubgraph, build_link_skein, build_link_space
from tests.helpers import link_subgraph, make_graph


def _graph_with_clique(rng, n, clique_size, p):
    """G(n, p) with a planted clique on the first clique_size nodes."""
    adjacency = [set() for _ in range(n)]
    for u, v in combinations(range(n), 2):
        if (v < clique_size) or rng.random() < p:
            adjacency[u].add(v)
            adjacency[v].add(u)
    return Graph([sorted(a) for a in adjacency], [str(u) for u in range(n)]), range(clique_size)


def _extra_density(space, skein, nodes):
    """Density of the link-space edges the skein drops, over the subgraph induced by nodes."""
    space_h = LinkSubgraph(space, frozenset(nodes))
    skein_h = LinkSubgraph(skein, frozenset(nodes))
    return weighted_subgraph_density(space_h) - weighted_subgraph_density(skein_h)


def test_skein_gains_less_from_merging_the_optimum(rng):
    pairs = 0
    while pairs < 1000:
        n = rng.randint(6, 25)
        g, clique = _graph_with_clique(rng, n, rng.randint(3, 5), rng.uniform(0.1, 0.4))
        space, skein = build_link_space(g), build_link_skein(g)
        clique_edges = [space.link_node(u, v) for u, v in combinations(clique, 2)]
        for _ in range(20):
            c = LinkSubgraph(skein, frozenset(rng.sample(clique_edges, rng.randint(1, len(clique_edges)))))
            opt = LinkSubgraph(
                skein, frozenset(rng.sample(range(skein.node_count), rng.randint(1, skein.node_count)))
            )
            f_delta, g_delta = free_rider_gap(space, skein, c, opt)
            assert f_delta >= g_delta - 1e-9
            pairs += 1


def test_gap_difference_is_the_dropped_edge_density(rng):
    for _ in range(200):
        g, _ = _graph_with_clique(rng, rng.randint(5, 15), 3, 0.4)
        space, skein = build_link_space(g), build_link_skein(g)
        nodes = range(skein.node_count)
        c = frozenset(rng.sample(nodes, rng.randint(1, skein.node_count)))
        opt = frozenset(rng.sample(nodes, rng.randint(1, skein.node_count)))
        f_delta, g_delta = free_rider_gap(space, skein, LinkSubgraph(skein, c), LinkSubgraph(skein, opt))
        expected = _extra_density(space, skein, c | opt) - _extra_density(space, skein, c)
        assert f_delta - g_delta == pytest.approx(expected, abs=1e-12)


def test_gap_can_favor_the_skein_outside_cliques():
    # a bare path plus a disjoint triangle; only the space graph links 1-2 with 2-3
    g = make_graph([(1, 2), (2, 3), (4, 5), (4, 6), (5, 6)])
    space, skein = build_link_space(g), build_link_skein(g)
    c = link_subgraph(skein, "1,2", "2,3")
    opt = link_subgraph(skein, "4,5", "4,6", "5,6")
    f_delta, g_delta = free_rider_gap(space, skein, c, opt)
    assert f_delta - g_delta == pytest.approx(1 / 15 - 1 / 6)
    assert g_delta == pytest.approx(3 / 5)
    assert f_delta == pytest.approx(0.5)


def test_gap_checks_its_link_graphs(triangle, diamond):
    space, skein = build_link_space(triangle), build_link_skein(triangle)
    c = LinkSubgraph(skein, frozenset([0]))
    with pytest.raises(DomainError):
        free_rider_gap(skein, space, c, c)
    with pytest.raises(DomainError):
        free_rider_gap(build_link_space(diamond), skein, c, c)
