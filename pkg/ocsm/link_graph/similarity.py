from ..errors import DomainError
from ..graph import Graph


def closed_neighborhood_similarity(g: Graph, i: int, j: int) -> float:
    """
    Jaccard similarity of the closed neighborhoods of i and j,
    |G(i) & G(j)| / |G(i) | G(j)| where G(v) = {v} | N(v).
    """
    if i == j:
        raise DomainError(f"similarity needs two distinct nodes, got {i} twice")
    nbrs_i = g.neighbor_set(i)
    nbrs_j = g.neighbor_set(j)
    # G(i) & G(j) = (N(i) & N(j)) plus i and j themselves when they are adjacent
    intersection = len(nbrs_i & nbrs_j)
    if j in nbrs_i:
        intersection += 2
    union = (len(nbrs_i) + 1) + (len(nbrs_j) + 1) - intersection
    return intersection / union
