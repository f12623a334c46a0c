import random
from itertools import combinations

from ocsm.graph import Graph
from ocsm.link_graph import LinkGraph, LinkSubgraph


def make_graph(edges) -> Graph:
    return Graph.from_edges((str(a), str(b)) for a, b in edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p) with every node registered, isolated ones included."""
    adjacency = [[] for _ in range(n)]
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            adjacency[u].append(v)
            adjacency[v].append(u)
    return Graph(adjacency, [str(u) for u in range(n)])


def random_edge_graph(rng: random.Random, n: int, m: int) -> Graph:
    """m distinct random edges over n nodes, for graphs too large for G(n, p)."""
    edges = set()
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    adjacency = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(adjacency, [str(u) for u in range(n)])


def link_nodes(lg: LinkGraph, *pairs):
    """Link-node ids for "i,j" label pairs."""
    g = lg.graph
    ids = []
    for pair in pairs:
        i, j = pair.split(",")
        ids.append(lg.link_node(g.node_id(i), g.node_id(j)))
    return ids


def link_subgraph(lg: LinkGraph, *pairs) -> LinkSubgraph:
    return LinkSubgraph(lg, frozenset(link_nodes(lg, *pairs)))


def labelled_sets(g: Graph, node_sets):
    """Node sets as sorted label tuples, for readable comparisons."""
    return sorted(tuple(g.labels_of(s)) for s in node_sets)


def planted_graph(
    rng: random.Random,
    n: int,
    m: int,
    community_size: int,
    p_in: float,
    dense_block: int = 0,
    dense_edges: int = 0,
) -> Graph:
    """
    m distinct edges over n nodes. The first dense_block nodes carry dense_edges
    random edges, the following nodes are cut into communities whose pairs are
    linked with probability p_in, and the rest of the edges are spread at random.
    """
    edges = set()

    def add(u, v):
        if u != v:
            edges.add((min(u, v), max(u, v)))

    while len(edges) < dense_edges:
        add(rng.randrange(dense_block), rng.randrange(dense_block))
    start = dense_block
    while start + community_size <= n and len(edges) < m:
        for u, v in combinations(range(start, start + community_size), 2):
            if rng.random() < p_in:
                add(u, v)
        start += community_size
    while len(edges) < m:
        add(rng.randrange(n), rng.randrange(n))
    adjacency = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(adjacency, [str(u) for u in range(n)])
