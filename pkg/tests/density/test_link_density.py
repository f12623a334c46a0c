import numpy as np
import pytest

from ocsm.density import (
    MarginalDensity,
    Solution,
    link_density,
    member_contributions,
    ratio_bound,
    weighted_subgraph_density,
)
from ocsm.errors import DomainError
from ocsm.link_graph import LinkGraph, LinkMode, LinkSubgraph, build_link_skein
from tests.helpers import link_subgraph, make_graph, random_graph


def _weighted_link_graph(edges):
    """A link graph with hand-picked weights over the link-node ids 0..5."""
    carrier = make_graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)])
    return LinkGraph(carrier, LinkMode.SKEIN, [pair for pair, _ in edges], [w for _, w in edges])


def _members(lg, *node_sets):
    return [LinkSubgraph(lg, frozenset(nodes)) for nodes in node_sets]


def test_disjoint_triangles_add_up():
    lg = _weighted_link_graph(
        [((0, 1), 0.5), ((0, 2), 0.5), ((1, 2), 1.0), ((3, 4), 0.5), ((3, 5), 0.5), ((4, 5), 1.0)]
    )
    sol = Solution(lg, _members(lg, {0, 1, 2}, {3, 4, 5}))
    assert link_density(sol) == pytest.approx(1.3333, abs=1e-4)
    assert member_contributions(sol) == pytest.approx([2 / 3, 2 / 3])


def test_nested_members_share_their_edges():
    lg = _weighted_link_graph(
        [((0, 1), 0.5), ((0, 2), 0.5), ((1, 2), 1.0), ((2, 3), 0.5), ((2, 4), 0.5), ((3, 4), 1.0)]
    )
    sol = Solution(lg, _members(lg, {0, 1, 2}, {0, 1, 2, 3, 4}))
    assert link_density(sol) == pytest.approx(0.9333, abs=1e-4)
    assert member_contributions(sol) == pytest.approx([(0.25 + 0.25 + 0.5) / 3, 3.0 / 5])


def test_single_member_is_weighted_density(rng):
    for _ in range(50):
        lg = build_link_skein(random_graph(rng, 12, 0.5))
        if lg.node_count == 0:
            continue
        h = LinkSubgraph(lg, frozenset(rng.sample(range(lg.node_count), rng.randint(1, lg.node_count))))
        assert link_density(Solution(lg, [h])) == pytest.approx(weighted_subgraph_density(h))


def test_repeated_member_does_not_double(bowtie):
    lg = build_link_skein(bowtie)
    h = link_subgraph(lg, "1,2", "1,3", "2,3")
    single = link_density(Solution(lg, [h]))
    assert single == pytest.approx(2.2 / 3)
    assert link_density(Solution(lg, [h, h])) == pytest.approx(single)
    assert link_density(Solution(lg, [h, h, h])) == pytest.approx(single)


def test_empty_solution_has_zero_density(triangle):
    assert link_density(Solution(build_link_skein(triangle))) == 0.0


def test_empty_member_is_rejected(triangle):
    lg = build_link_skein(triangle)
    with pytest.raises(DomainError):
        link_density(Solution(lg, [LinkSubgraph(lg, frozenset())]))
    with pytest.raises(DomainError):
        weighted_subgraph_density(LinkSubgraph(lg, frozenset()))


def test_members_must_share_a_link_graph(triangle):
    first = build_link_skein(triangle)
    second = build_link_skein(triangle)
    with pytest.raises(DomainError):
        Solution(first, [LinkSubgraph(second, frozenset([0]))])


def test_ratio_bound(bowtie):
    lg = build_link_skein(bowtie)
    assert ratio_bound(lg, 0.5) == pytest.approx(2.0)
    with pytest.raises(DomainError):
        ratio_bound(lg, 0.0)


def test_marginal_density_matches_recomputation(rng):
    checked = 0
    while checked < 100:
        lg = build_link_skein(random_graph(rng, 10, 0.6))
        if lg.node_count < 3:
            continue
        nodes = range(lg.node_count)
        members = [
            LinkSubgraph(lg, frozenset(rng.sample(nodes, rng.randint(1, lg.node_count))))
            for _ in range(rng.randint(0, 3))
        ]
        sol = Solution(lg, members)
        candidate = LinkSubgraph(lg, frozenset(rng.sample(nodes, rng.randint(1, lg.node_count))))
        expected = link_density(sol.with_member(candidate))
        assert MarginalDensity(sol).density_with_member(candidate) == pytest.approx(expected)
        checked += 1


def test_marginal_density_of_empty_solution(diamond):
    lg = build_link_skein(diamond)
    h = link_subgraph(lg, "1,2", "1,3", "2,3")
    marginal = MarginalDensity(Solution(lg))
    assert marginal.base_total == 0.0
    assert np.all(marginal.a == 0.0)
    assert marginal.density_with_member(h) == pytest.approx(weighted_subgraph_density(h))
    with pytest.raises(DomainError):
        marginal.density_with(h.induced_edges(), 0)
