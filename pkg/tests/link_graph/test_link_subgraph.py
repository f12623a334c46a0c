import numpy as np
import pytest

from ocsm.errors import DomainError
from ocsm.link_graph import (
    EffectiveWeights,
    LinkSubgraph,
    build_link_skein,
    link_subgraph_from_labels,
    min_occurrence,
    occurrence_profile,
    r_connected,
    restore,
)
from tests.helpers import link_subgraph, make_graph


@pytest.fixture
def tailed_triangle():
    return build_link_skein(make_graph([(1, 2), (1, 3), (2, 3), (3, 4)]))


def test_restore(tailed_triangle):
    g = tailed_triangle.graph
    h = link_subgraph(tailed_triangle, "1,2", "1,3", "2,3")
    assert g.labels_of(restore(h)) == ["1", "2", "3"]
    h = link_subgraph(tailed_triangle, "1,2", "1,3", "2,3", "3,4")
    assert g.labels_of(restore(h)) == ["1", "2", "3", "4"]


def test_minimum_occurrence(tailed_triangle):
    assert min_occurrence(link_subgraph(tailed_triangle, "1,2", "1,3", "2,3")) == 2
    assert min_occurrence(link_subgraph(tailed_triangle, "1,2", "1,3", "2,3", "3,4")) == 1
    assert min_occurrence(link_subgraph(tailed_triangle, "1,2")) == 1


def test_occurrence_profile(tailed_triangle):
    g = tailed_triangle.graph
    profile = occurrence_profile(link_subgraph(tailed_triangle, "1,2", "1,3", "2,3", "3,4"))
    assert {g.label(i): count for i, count in profile.items()} == {"1": 2, "2": 2, "3": 3, "4": 1}


def test_r_connected(path):
    lg = build_link_skein(path)
    assert not r_connected(link_subgraph(lg, "1,2", "3,4"))
    assert r_connected(link_subgraph(lg, "1,2", "2,3"))
    assert r_connected(link_subgraph(lg, "1,2", "2,3", "3,4"))


@pytest.mark.parametrize("operation", [restore, occurrence_profile, min_occurrence, r_connected])
def test_empty_link_subgraph_is_a_domain_error(tailed_triangle, operation):
    with pytest.raises(DomainError):
        operation(LinkSubgraph(tailed_triangle, frozenset()))


def test_out_of_range_link_node(tailed_triangle):
    with pytest.raises(DomainError):
        LinkSubgraph(tailed_triangle, frozenset([99]))


def test_induced_edges(diamond):
    lg = build_link_skein(diamond)
    h = link_subgraph(lg, "1,2", "1,3", "2,3")
    edges = h.induced_edges()
    assert len(edges) == 3
    assert np.all(np.diff(edges) > 0)
    assert len(link_subgraph(lg, "1,2", "3,4").induced_edges()) == 0


def test_from_labels_round_trips_labels(diamond):
    lg = build_link_skein(diamond)
    h = link_subgraph_from_labels(lg, ["2,1", "1,3", "2,3"])
    assert h.labels() == ["1,2", "1,3", "2,3"]
    with pytest.raises(DomainError):
        link_subgraph_from_labels(lg, ["1-2"])
    with pytest.raises(DomainError):
        link_subgraph_from_labels(lg, ["1,4"])


def test_link_subgraphs_compare_by_nodes(diamond):
    lg = build_link_skein(diamond)
    assert link_subgraph(lg, "1,2", "1,3") == link_subgraph(lg, "1,3", "1,2")
    assert len({link_subgraph(lg, "1,2"), link_subgraph(lg, "1,2")}) == 1


def test_effective_weights_discount_and_zero(bowtie):
    lg = build_link_skein(bowtie)
    left = link_subgraph(lg, "1,2", "1,3", "2,3")
    right = link_subgraph(lg, "3,4", "3,5", "4,5")
    weights = EffectiveWeights(lg)

    weights.record_member(left)
    inside = left.induced_edges()
    assert np.allclose(weights.values[inside], lg.edge_weights[inside] / 2)
    weights.record_member(left)
    assert np.allclose(weights.values[inside], lg.edge_weights[inside] / 3)

    weights.zero_out(right)
    assert np.all(weights.values[right.induced_edges()] == 0.0)
    # the link graph itself never changes
    assert lg.edge_weights.sum() == pytest.approx(4.4)
