import numpy as np
import pytest

from ocsm.errors import DomainError, EdgeListParseError
from ocsm.graph import Graph, load_edge_list, load_edge_list_file


def test_load_edge_list_skips_comments_and_collapses_duplicates():
    g = load_edge_list(
        """
        # a comment
        % another comment
        1 2
        2 1
        2\t3

        3 1
        """
    )
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.labels == ("1", "2", "3")


def test_self_loop_is_dropped_but_node_is_kept():
    g = load_edge_list("1 2\n5 5\n")
    assert g.node_count == 3
    assert g.edge_count == 1
    assert g.degree(g.node_id("5")) == 0


def test_malformed_line_reports_its_number():
    with pytest.raises(EdgeListParseError) as info:
        load_edge_list("1 2\n2 3 4\n")
    assert info.value.line_number == 2
    assert isinstance(info.value, ValueError)


def test_load_edge_list_file(tmp_path):
    path = tmp_path / "g.tsv"
    path.write_text("a b\nb c\n")
    g = load_edge_list_file(str(path))
    assert g.edge_count == 2
    assert g.has_edge(g.node_id("a"), g.node_id("b"))
    assert not g.has_edge(g.node_id("a"), g.node_id("c"))


def test_undecodable_line_reports_its_number(tmp_path):
    path = tmp_path / "g.tsv"
    path.write_bytes(b"1 2\r\n2 3\n\xff\xfe 1\n")
    with pytest.raises(EdgeListParseError) as info:
        load_edge_list_file(str(path))
    assert info.value.line_number == 3
    assert "not valid UTF-8" in str(info.value)


def test_edges_are_ordered_pairs():
    g = load_edge_list("3 1\n2 3\n1 2\n")
    edges = list(g.edges())
    assert edges == sorted(edges)
    assert all(u < v for u, v in edges)
    assert len(edges) == 3


def test_labels_of_sorts_numerically():
    g = load_edge_list("10 2\n2 1\n")
    assert g.labels_of(g.nodes()) == ["1", "2", "10"]


def test_degrees_array(bowtie):
    degrees = bowtie.degrees()
    assert isinstance(degrees, np.ndarray)
    assert degrees[bowtie.node_id("3")] == 4
    assert degrees.sum() == 2 * bowtie.edge_count


def test_unknown_label_is_a_domain_error(triangle):
    with pytest.raises(DomainError):
        triangle.node_id("42")


def test_asymmetric_adjacency_is_rejected():
    with pytest.raises(DomainError):
        Graph([[1], []], ["a", "b"])


def test_duplicate_labels_are_rejected():
    with pytest.raises(DomainError):
        Graph([[], []], ["a", "a"])
