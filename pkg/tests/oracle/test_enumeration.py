from collections import deque

import pytest
from pydantic import ValidationError

from ocsm.errors import DomainError, OracleLimitError
from ocsm.graph import is_connected, min_degree
from ocsm.oracle import OracleLimitsModel, enumerate_feasible_subgraphs, threshold_counts
from tests.helpers import labelled_sets, make_graph, random_graph

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def _naive_enumeration(g, k):
    found = []
    n = g.node_count
    for mask in range(1, 1 << n):
        nodes = {v for v in range(n) if mask >> v & 1}
        if any(sum(1 for u in g.neighbors(v) if u in nodes) < k for v in nodes):
            continue
        start = min(nodes)
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u in nodes and u not in seen:
                    seen.add(u)
                    queue.append(u)
        if seen == nodes:
            found.append(frozenset(nodes))
    return found


def test_triangle(triangle):
    assert labelled_sets(triangle, enumerate_feasible_subgraphs(triangle, 2)) == [("1", "2", "3")]


def test_bowtie(bowtie):
    candidates = enumerate_feasible_subgraphs(bowtie, 2)
    assert [tuple(bowtie.labels_of(s)) for s in candidates] == [
        ("1", "2", "3"),
        ("3", "4", "5"),
        ("1", "2", "3", "4", "5"),
    ]


def test_k4():
    g = make_graph(K4_EDGES)
    # every subset of two or more nodes
    assert len(enumerate_feasible_subgraphs(g, 1)) == 11
    assert len(enumerate_feasible_subgraphs(g, 2)) == 5
    assert len(enumerate_feasible_subgraphs(g, 3)) == 1
    assert enumerate_feasible_subgraphs(g, 4) == []


def test_matches_naive_enumeration(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(4, 12), rng.uniform(0.3, 0.7))
        for k in (2, 3):
            expected = _naive_enumeration(g, k)
            found = enumerate_feasible_subgraphs(g, k)
            assert len(found) == len(set(found))
            assert set(found) == set(expected)


def test_every_candidate_is_connected_and_feasible(rng):
    g = random_graph(rng, 14, 0.45)
    for s in enumerate_feasible_subgraphs(g, 3):
        assert is_connected(g, s)
        assert min_degree(g, s) >= 3


def test_bad_k(triangle):
    with pytest.raises(DomainError):
        enumerate_feasible_subgraphs(triangle, 0)


def test_limits(bowtie):
    with pytest.raises(OracleLimitError):
        enumerate_feasible_subgraphs(bowtie, 2, OracleLimitsModel(max_graph_nodes=4))
    with pytest.raises(OracleLimitError) as info:
        enumerate_feasible_subgraphs(bowtie, 2, OracleLimitsModel(max_candidates=2))
    assert info.value.partial_count == 3
    assert "3 candidates" in str(info.value)
    with pytest.raises(ValidationError):
        OracleLimitsModel(max_graph_nodes=0)


def test_threshold_counts():
    g = make_graph(K4_EDGES)
    counts = threshold_counts(g, 2, reference_count=5)
    assert counts.counts == {2: 5, 3: 1}
    assert counts.matching_thresholds == [2]
    assert counts.as_dict() == {
        "k": 2,
        "counts": {"min_degree>=2": 5, "min_degree>=3": 1},
        "reference_count": 5,
        "matching_thresholds": [2],
    }


def test_threshold_counts_without_a_higher_core(bowtie):
    counts = threshold_counts(bowtie, 2)
    assert counts.counts == {2: 3, 3: 0}
    assert counts.matching_thresholds == []


def test_threshold_counts_reuse_known_counts():
    g = make_graph(K4_EDGES)
    # a stale value shows the known count is taken as given
    counts = threshold_counts(g, 2, known_counts={2: 99})
    assert counts.counts == {2: 99, 3: 1}
