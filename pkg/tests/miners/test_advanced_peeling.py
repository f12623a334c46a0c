import time

import pytest

from ocsm.density import MarginalDensity, Solution, weighted_subgraph_density
from ocsm.link_graph import EffectiveWeights, LinkSubgraph, build_link_skein, link_components
from ocsm.miners import MinerConfigModel, PeelingSequence, apa_mine, check_member, feasible_components
from tests.helpers import link_subgraph, make_graph, random_edge_graph, random_graph


@pytest.fixture
def k4_skein():
    return build_link_skein(make_graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]))


class GlobalSplitSequence(PeelingSequence):
    """Recomputes every component of the live set after each deletion."""

    def _keep_densest_piece(self, frontier):
        while self.alive:
            pieces = link_components(self.lg, self.alive)
            if len(pieces) == 1:
                return
            keep = max(
                pieces,
                key=lambda p: (
                    round(weighted_subgraph_density(LinkSubgraph(self.lg, p), self.weights), 9),
                    -min(p),
                ),
            )
            for piece in pieces:
                if piece is keep:
                    continue
                self.split_offs.append(piece)
                for v in sorted(piece):
                    if v in self.alive:
                        self._delete(v)


def _sequence(lg, accepted=(), k=2, component=None, sequence_type=PeelingSequence):
    weights = EffectiveWeights(lg)
    for member in accepted:
        weights.record_member(member)
    marginal = MarginalDensity(Solution(lg, accepted))
    if component is None:
        component = frozenset(lg.nodes())
    return sequence_type(lg, component, k, weights, marginal).run()


def test_checkpoints_follow_the_cascade(k4_skein):
    sequence = _sequence(k4_skein)
    assert [c.size for c in sequence.checkpoints] == [6, 5, 3]
    assert [c.removed for c in sequence.checkpoints] == [0, 1, 3]
    assert sequence.candidate(sequence.checkpoints[2]) == link_subgraph(k4_skein, "2,3", "2,4", "3,4").nodes
    assert not sequence.alive
    assert sequence.split_offs == []


def test_candidates_ranked_by_marginal_density(k4_skein):
    ranked = _sequence(k4_skein).ranked_candidates()
    assert [score for score, _ in ranked] == pytest.approx([2.0, 1.6, 1.0])

    whole = LinkSubgraph(k4_skein, frozenset(k4_skein.nodes()))
    ranked = _sequence(k4_skein, [whole]).ranked_candidates()
    # adding the full skein again only redistributes its own weight
    assert [c.size for _, c in ranked] == [3, 5, 6]
    assert ranked[0][0] == pytest.approx(2.25)


def test_split_offs_are_reported(diamond):
    lg = build_link_skein(diamond)
    sequence = _sequence(lg)
    # removing 2-3 cuts the diamond into two link-node pairs that cannot survive alone
    assert sequence.split_offs == [link_subgraph(lg, "2,4", "3,4").nodes]
    assert [c.size for c in sequence.checkpoints] == [5]


def test_weight_total_tracks_the_live_set(k4_skein):
    sequence = _sequence(k4_skein)
    assert sequence.weight_total == pytest.approx(0.0, abs=1e-12)
    fresh = PeelingSequence(
        k4_skein,
        frozenset(k4_skein.nodes()),
        2,
        EffectiveWeights(k4_skein),
        MarginalDensity(Solution(k4_skein, [])),
    )
    whole = LinkSubgraph(k4_skein, frozenset(k4_skein.nodes()))
    assert fresh.weight_total == pytest.approx(weighted_subgraph_density(whole) * len(whole))


def test_local_split_search_matches_global_components(rng):
    compared = 0
    for _ in range(40):
        g = random_graph(rng, rng.randint(10, 30), rng.uniform(0.15, 0.45))
        lg = build_link_skein(g)
        k = rng.randint(2, 3)
        components = feasible_components(lg, lg.nodes(), k)
        accepted = [LinkSubgraph(lg, c) for c in components[:1]]
        for component in components:
            local = _sequence(lg, accepted, k, component)
            reference = _sequence(lg, accepted, k, component, GlobalSplitSequence)
            assert local.removed == reference.removed
            assert local.split_offs == reference.split_offs
            assert [c.size for c in local.checkpoints] == [c.size for c in reference.checkpoints]
            compared += 1
    assert compared > 0


@pytest.mark.slow
def test_apa_on_a_giant_feasible_component(rng):
    g = random_edge_graph(rng, 700, 10_000)
    started = time.perf_counter()
    outcome = apa_mine(g, MinerConfigModel(k=3, t=20))
    assert time.perf_counter() - started < 120
    assert len(outcome.solution) > 0
    assert all(check_member(g, m, 3) for m in outcome.solution)
