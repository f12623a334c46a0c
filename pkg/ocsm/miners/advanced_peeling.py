"""
File: advanced_peeling.py

Description:
    The advanced peeling miner. Each round takes the densest feasible component
    under the current effective weights and peels it one link-node at a time
    (lowest average incident effective weight first, cascading to the
    minimum-occurrence constraint after each deletion). Every intermediate set is
    a candidate. The candidate that most improves the link-density of the current
    solution is accepted, after which the weights inside it are discounted.
"""

import heapq
import math
from collections import defaultdict, deque
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ..density import MarginalDensity, Solution, weighted_subgraph_density
from ..link_graph import EffectiveWeights, LinkGraph, LinkSubgraph
from .miner import Miner, register_miner
from .peeling import feasible_components


def _denser(a: float, b: float) -> bool:
    return a > b and not math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12)


def _prefer(density: float, smallest: int, other_density: float, other_smallest: int) -> bool:
    """Higher density wins; on a tie the piece holding the smaller link-node id."""
    if _denser(density, other_density):
        return True
    if _denser(other_density, density):
        return False
    return smallest < other_smallest


class _Checkpoint:
    __slots__ = ("removed", "size", "a_sum", "b_sum")

    def __init__(self, removed: int, size: int, a_sum: float, b_sum: float):
        self.removed = removed
        self.size = size
        self.a_sum = a_sum
        self.b_sum = b_sum


class PeelingSequence:
    """
    Peels one feasible component to nothing, recording the state after every step.

    A checkpoint only stores how many link-nodes were removed so far together with
    the sums of MarginalDensity's a and b terms over the induced edges, so the
    marginal link-density of every intermediate set is known without rebuilding it.
    """

    def __init__(
        self,
        lg: LinkGraph,
        component: FrozenSet[int],
        k: int,
        weights: EffectiveWeights,
        marginal: MarginalDensity,
    ):
        self.lg = lg
        self.component = component
        self.k = k
        self.weights = weights
        self.marginal = marginal

        self.alive: Set[int] = set(component)
        self.removed: List[int] = []
        self.split_offs: List[FrozenSet[int]] = []
        self.checkpoints: List[_Checkpoint] = []

        endpoints = lg.endpoints
        self._incident: Dict[int, List[int]] = defaultdict(list)
        for v in component:
            for i in endpoints[v]:
                self._incident[i].append(v)
        self._occurrence = {i: len(vs) for i, vs in self._incident.items()}

        values = weights.values
        self._weight_sum: Dict[int, float] = {}
        self._degree: Dict[int, int] = {}
        self._version: Dict[int, int] = {}
        self._heap: List[Tuple[float, int, int]] = []
        self.a_sum = 0.0
        self.b_sum = 0.0
        # induced effective weight of the live set
        self.weight_total = 0.0
        for v in component:
            total = 0.0
            degree = 0
            for u, e in zip(lg.neighbors(v), lg.incident_edges(v)):
                if u in self.alive:
                    total += values[e]
                    degree += 1
                    if u > v:
                        self.a_sum += marginal.a[e]
                        self.b_sum += marginal.b[e]
                        self.weight_total += values[e]
            self._weight_sum[v] = total
            self._degree[v] = degree
            self._version[v] = 0
            self._push(v)

    def _average(self, v: int) -> float:
        degree = self._degree[v]
        return self._weight_sum[v] / degree if degree else 0.0

    def _push(self, v: int):
        heapq.heappush(self._heap, (self._average(v), v, self._version[v]))

    def _remove(self, v: int, below_k: List[int]):
        self.alive.remove(v)
        self.removed.append(v)
        values = self.weights.values
        for u, e in zip(self.lg.neighbors(v), self.lg.incident_edges(v)):
            if u not in self.alive:
                continue
            self.a_sum -= self.marginal.a[e]
            self.b_sum -= self.marginal.b[e]
            self.weight_total -= values[e]
            self._weight_sum[u] -= values[e]
            self._degree[u] -= 1
            self._version[u] += 1
            self._push(u)
        for i in self.lg.endpoints[v]:
            self._occurrence[i] -= 1
            if self._occurrence[i] == self.k - 1:
                below_k.append(i)

    def _delete(self, v: int):
        """Removes v, then every link-node of an original node left below k, transitively."""
        below_k: List[int] = []
        self._remove(v, below_k)
        while below_k:
            i = below_k.pop()
            for u in self._incident[i]:
                if u in self.alive:
                    self._remove(u, below_k)

    def _frontier(self, removed: List[int]) -> List[int]:
        """Live neighbors of the removed link-nodes; every piece of the live set holds one."""
        frontier = set()
        for r in removed:
            for u in self.lg.neighbors(r):
                if u in self.alive:
                    frontier.add(int(u))
        return sorted(frontier)

    def _pop_lightest(self) -> Optional[int]:
        while self._heap:
            _, v, version = heapq.heappop(self._heap)
            if v in self.alive and version == self._version[v]:
                return v
        return None

    def _walk_pieces(self, frontier: List[int]) -> List[FrozenSet[int]]:
        """
        Grows one breadth-first search per frontier link-node in lockstep, merging
        searches that meet. A search whose queue runs dry has walked a whole piece of
        the live set. Stops once one search is left, so the largest piece is never
        walked in full.
        """
        parent = list(range(len(frontier)))

        def find(s: int) -> int:
            while parent[s] != s:
                parent[s] = parent[parent[s]]
                s = parent[s]
            return s

        owner = {u: s for s, u in enumerate(frontier)}
        queues = [deque([u]) for u in frontier]
        members = [[u] for u in frontier]
        running = list(range(len(frontier)))
        pieces: List[FrozenSet[int]] = []
        while len(running) > 1:
            finished = set()
            for s in running:
                if len(running) - len(finished) <= 1:
                    break
                if parent[s] != s or s in finished:
                    continue
                if not queues[s]:
                    pieces.append(frozenset(members[s]))
                    finished.add(s)
                    continue
                u = queues[s].popleft()
                for w in self.lg.neighbors(u):
                    if w not in self.alive:
                        continue
                    root = find(s)
                    other = owner.get(w)
                    if other is None:
                        owner[w] = root
                        members[root].append(w)
                        queues[root].append(w)
                        continue
                    other = find(other)
                    if other == root:
                        continue
                    big, small = root, other
                    if len(members[small]) > len(members[big]):
                        big, small = small, big
                    parent[small] = big
                    members[big].extend(members[small])
                    queues[big].extend(queues[small])
                    members[small] = []
                    queues[small].clear()
                    finished.add(small)
            running = [s for s in running if parent[s] == s and s not in finished]
        return pieces

    def _piece_weight(self, piece: FrozenSet[int]) -> float:
        return sum(self._weight_sum[v] for v in piece) / 2

    def _keep_densest_piece(self, frontier: List[int]):
        """On a split continue with the densest piece; the others become split-offs."""
        while len(frontier) > 1:
            pieces = self._walk_pieces(frontier)
            if not pieces:
                return
            walked = frozenset().union(*pieces)
            rest_weight = self.weight_total
            keep, keep_density = None, 0.0
            for piece in pieces:
                weight = self._piece_weight(piece)
                rest_weight -= weight
                density = weight / len(piece)
                if keep is None or _prefer(density, min(piece), keep_density, min(keep)):
                    keep, keep_density = piece, density
            rest_density = rest_weight / (len(self.alive) - len(walked))
            if not _denser(keep_density, rest_density):
                rest_min = min(v for v in self.alive if v not in walked)
                if _prefer(rest_density, rest_min, keep_density, min(keep)):
                    keep = None

            if keep is None:
                split = list(pieces)
            else:
                split = [p for p in pieces if p is not keep]
                split.append(frozenset(self.alive.difference(walked)))
            split.sort(key=min)
            start = len(self.removed)
            for piece in split:
                self.split_offs.append(piece)
                for v in sorted(piece):
                    if v in self.alive:
                        self._delete(v)
            frontier = self._frontier(self.removed[start:])

    def _checkpoint(self):
        self.checkpoints.append(
            _Checkpoint(len(self.removed), len(self.alive), self.a_sum, self.b_sum)
        )

    def run(self) -> "PeelingSequence":
        self._checkpoint()
        while self.alive:
            v = self._pop_lightest()
            if v is None:
                break
            start = len(self.removed)
            self._delete(v)
            self._keep_densest_piece(self._frontier(self.removed[start:]))
            if self.alive:
                self._checkpoint()
        return self

    def candidate(self, checkpoint: _Checkpoint) -> FrozenSet[int]:
        return self.component.difference(self.removed[: checkpoint.removed])

    def ranked_candidates(self) -> List[Tuple[float, _Checkpoint]]:
        """Checkpoints by marginal link-density, best first; earlier checkpoints win ties."""
        base = self.marginal.base_total
        scored = [
            (base + c.a_sum + c.b_sum / c.size, index, c)
            for index, c in enumerate(self.checkpoints)
        ]
        scored.sort(key=lambda item: (-item[0], item[1]))
        return [(score, c) for score, _, c in scored]


@register_miner("apa")
class AdvancedPeelingMiner(Miner):
    def _search(self, lg, restrict):
        k, t = self.config.k, self.config.t
        weights = EffectiveWeights(lg)
        pool: Dict[FrozenSet[int], None] = dict.fromkeys(feasible_components(lg, restrict, k))
        retired: Set[FrozenSet[int]] = set()
        accepted: List[LinkSubgraph] = []
        accepted_sets: Set[FrozenSet[int]] = set()
        iterations = 0

        while len(accepted) < t and pool:
            iterations += 1
            component = max(
                pool,
                key=lambda c: (
                    weighted_subgraph_density(LinkSubgraph(lg, c), weights),
                    -min(c),
                ),
            )
            marginal = MarginalDensity(Solution(lg, accepted))
            sequence = PeelingSequence(lg, component, k, weights, marginal).run()
            for piece in sequence.split_offs:
                for candidate in feasible_components(lg, piece, k):
                    if candidate not in retired and candidate not in pool:
                        pool[candidate] = None

            chosen = None
            for _, checkpoint in sequence.ranked_candidates():
                nodes = sequence.candidate(checkpoint)
                if nodes not in accepted_sets:
                    chosen = nodes
                    break
            if chosen is None:
                del pool[component]
                retired.add(component)
                continue

            member = LinkSubgraph(lg, chosen)
            accepted.append(member)
            accepted_sets.add(chosen)
            weights.record_member(member)

        return accepted, iterations
