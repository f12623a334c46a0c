"""
File: graph.py

Description:
    The simple undirected graph every other module works on, plus the edge-list
    reader. Nodes are dense integer ids in first-seen order; the external labels
    read from the input are kept so results can be reported in the caller's terms.
"""

import io
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Sequence,
    TextIO,
    Tuple,
    Union,
)

import numpy as np

from ..errors import DomainError, EdgeListParseError

NodeSet = FrozenSet[int]

COMMENT_PREFIXES = ("#", "%")


def label_sort_key(label: str):
    # integer-looking labels sort numerically, everything else lexicographically after them
    stripped = label[1:] if label.startswith("-") else label
    if stripped.isdigit():
        return (0, int(label), "")
    return (1, 0, label)


class Graph:
    __slots__ = ("_adjacency", "_adjacency_sets", "_labels", "_ids", "_edge_count")

    def __init__(self, adjacency: Sequence[Iterable[int]], labels: Sequence[str]):
        """
        :param adjacency: adjacency[v] holds the neighbor ids of node v.
        :param labels: labels[v] is the external label of node v.
        """
        if len(adjacency) != len(labels):
            raise DomainError(
                f"got {len(adjacency)} adjacency lists for {len(labels)} labels"
            )
        node_count = len(labels)
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(set(nbrs))) for nbrs in adjacency
        )
        self._adjacency_sets: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(nbrs) for nbrs in self._adjacency
        )
        self._labels: Tuple[str, ...] = tuple(str(label) for label in labels)
        self._ids: Dict[str, int] = {label: v for v, label in enumerate(self._labels)}
        if len(self._ids) != node_count:
            raise DomainError("node labels must be unique")

        degree_sum = 0
        for v, nbrs in enumerate(self._adjacency):
            for u in nbrs:
                if u == v:
                    raise DomainError(f"self-loop on node {self._labels[v]}")
                if not 0 <= u < node_count:
                    raise DomainError(f"neighbor id {u} out of range")
                if v not in self._adjacency_sets[u]:
                    raise DomainError(
                        f"edge {self._labels[v]}-{self._labels[u]} is not symmetric"
                    )
            degree_sum += len(nbrs)
        self._edge_count = degree_sum // 2

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[str, str]]) -> "Graph":
        """
        Build a graph from labelled edges. Self-loops are dropped, duplicates are
        collapsed, and dense ids follow the order in which labels first appear.
        """
        ids: Dict[str, int] = {}
        labels: List[str] = []
        adjacency: List[set] = []

        def node_id(label: str) -> int:
            v = ids.get(label)
            if v is None:
                v = len(labels)
                ids[label] = v
                labels.append(label)
                adjacency.append(set())
            return v

        for a, b in edges:
            u = node_id(str(a))
            v = node_id(str(b))
            if u == v:
                continue
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(adjacency, labels)

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def nodes(self) -> range:
        return range(len(self._labels))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._adjacency_sets[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter(
            (len(nbrs) for nbrs in self._adjacency),
            dtype=np.int64,
            count=len(self._adjacency),
        )

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency_sets[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self._adjacency):
            for v in nbrs:
                if v > u:
                    yield u, v

    def label(self, v: int) -> str:
        return self._labels[v]

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def node_id(self, label: str) -> int:
        try:
            return self._ids[str(label)]
        except KeyError:
            raise DomainError(f"unknown node label {label!r}") from None

    def labels_of(self, nodes: Iterable[int]) -> List[str]:
        """Serialization of a node set: its external labels, sorted."""
        return sorted((self._labels[v] for v in nodes), key=label_sort_key)

    def __repr__(self):
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def load_edge_list(text: Union[str, TextIO, Iterable[str]]) -> Graph:
    """
    Parse an edge list. Blank lines and lines starting with '#' or '%' are skipped;
    every other line must hold exactly two whitespace-separated node labels.
    """
    if isinstance(text, str):
        text = io.StringIO(text)

    def parsed_edges():
        for line_number, raw in enumerate(text, start=1):
            line = raw.strip()
            if not line or line.startswith(COMMENT_PREFIXES):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise EdgeListParseError(line_number, line)
            yield tokens[0], tokens[1]

    return Graph.from_edges(parsed_edges())


def _decoded_lines(f) -> Iterator[str]:
    for line_number, raw in enumerate(f, start=1):
        try:
            yield raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise EdgeListParseError(
                line_number, raw.decode("utf-8", errors="replace").strip(), "not valid UTF-8"
            ) from e


def load_edge_list_file(path: str) -> Graph:
    with open(path, "rb") as f:
        return load_edge_list(_decoded_lines(f))
