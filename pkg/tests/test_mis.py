"""Exact and heuristic independent-set back ends."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from twopack import Deadline, StaticGraph, TwoLevelGraph, exact_mis, heuristic_mis, square
from twopack.oracle import brute_alpha
from twopack.transform import SquareGraph

from conftest import complete_graph, cycle_graph, gnp_graph, path_graph

LONG = Deadline(seconds=30.0)


def as_square(g: StaticGraph) -> SquareGraph:
    """Wrap a plain graph so the solvers treat its edges as the conflict graph."""
    return SquareGraph.from_adjacency(g.adjacency)


def assert_independent(sq: SquareGraph, vertices):
    adj = [set(sq.adjacency[v]) for v in range(sq.n)]
    for v in vertices:
        assert not adj[v] & set(vertices)


def assert_maximal(sq: SquareGraph, vertices):
    chosen = set(vertices)
    for v in range(sq.n):
        if v not in chosen:
            assert set(sq.adjacency[v]) & chosen, f"vertex {v} could be added"


class TestExact:
    def test_k3(self):
        res = exact_mis(as_square(complete_graph(3)), LONG)
        assert res.size == 1 and res.proven_optimal

    def test_square_p5(self):
        res = exact_mis(square(TwoLevelGraph(path_graph(5))), LONG)
        assert res.size == 2 and res.proven_optimal
        assert res.vertices in ({0, 3}, {0, 4}, {1, 4})

    def test_square_c9(self):
        res = exact_mis(square(TwoLevelGraph(cycle_graph(9))), LONG)
        assert res.size == 3 and res.proven_optimal

    def test_empty_graph(self):
        res = exact_mis(as_square(StaticGraph.from_edges(0, [])), LONG)
        assert res.size == 0 and res.proven_optimal

    def test_nonpositive_deadline_returns_empty_unproven(self):
        res = exact_mis(as_square(complete_graph(3)), Deadline(seconds=0.0))
        assert res.size == 0 and res.vertices == frozenset()
        assert not res.proven_optimal

    def test_node_budget_abort_keeps_incumbent_valid(self):
        # needs a few hundred nodes to prove, so a 5-node budget must abort
        sq = as_square(gnp_graph(60, 0.2, 0))
        res = exact_mis(sq, Deadline(seconds=30.0, poll=10**9, max_nodes=5))
        assert not res.proven_optimal
        assert_independent(sq, res.vertices)
        assert res.size == len(res.vertices) >= 1
        full = exact_mis(sq, Deadline(seconds=30.0))
        assert full.proven_optimal
        assert res.size <= full.size == 16

    def test_time_to_best_within_elapsed(self):
        res = exact_mis(as_square(gnp_graph(12, 0.4, 3)), LONG)
        assert 0.0 <= res.time_to_best <= res.elapsed

    @settings(max_examples=70, deadline=None)
    @given(st.integers(1, 16), st.sampled_from([0.1, 0.25, 0.5, 0.8]), st.integers(0, 10**6))
    def test_matches_brute_force(self, n, p, seed):
        g = gnp_graph(n, p, seed)
        sq = as_square(g)
        res = exact_mis(sq, LONG)
        assert res.proven_optimal
        assert res.size == brute_alpha(g)
        assert_independent(sq, res.vertices)

    def test_deterministic_with_node_budget(self):
        sq = square(TwoLevelGraph(gnp_graph(13, 0.3, 11)))
        a = exact_mis(sq, Deadline(seconds=60.0, max_nodes=50), seed=4)
        b = exact_mis(sq, Deadline(seconds=60.0, max_nodes=50), seed=4)
        assert a.vertices == b.vertices and a.size == b.size
        assert a.nodes_explored == b.nodes_explored


class TestHeuristic:
    def test_empty_graph_proven(self):
        res = heuristic_mis(as_square(StaticGraph.from_edges(0, [])), LONG)
        assert res.size == 0 and res.proven_optimal

    def test_edgeless_graph_proven(self):
        res = heuristic_mis(as_square(StaticGraph.from_edges(4, [])), LONG)
        assert res.size == 4 and res.proven_optimal

    def test_square_c6_finds_antipodal_pair(self):
        res = heuristic_mis(square(TwoLevelGraph(cycle_graph(6))), Deadline(2.0))
        assert res.size == 2
        assert not res.proven_optimal

    def test_always_maximal_and_independent(self):
        for seed in range(12):
            g = gnp_graph(11, 0.25, 900 + seed)
            sq = square(TwoLevelGraph(g))
            res = heuristic_mis(sq, Deadline(seconds=5.0, max_nodes=30), seed=seed)
            assert_independent(sq, res.vertices)
            assert_maximal(sq, res.vertices)

    def test_never_beats_exact_and_mostly_matches(self):
        matches = 0
        trials = 50
        for seed in range(trials):
            g = gnp_graph(12, 0.3, 3000 + seed)
            sq = square(TwoLevelGraph(g))
            heur = heuristic_mis(sq, Deadline(seconds=5.0, max_nodes=60), seed=0)
            exact = exact_mis(sq, LONG)
            assert heur.size <= exact.size
            matches += heur.size == exact.size
        rate = matches / trials
        print(f"heuristic equality rate over {trials} squares: {rate:.2f}")
        assert rate >= 0.9

    def test_deterministic_with_node_budget(self):
        sq = square(TwoLevelGraph(gnp_graph(13, 0.35, 77)))
        a = heuristic_mis(sq, Deadline(seconds=60.0, max_nodes=40), seed=9)
        b = heuristic_mis(sq, Deadline(seconds=60.0, max_nodes=40), seed=9)
        assert a.vertices == b.vertices

    def test_swaps_gain_exactly_one_and_stay_independent(self):
        g = gnp_graph(14, 0.25, 123)
        sq = square(TwoLevelGraph(g))
        adj = [set(sq.adjacency[v]) for v in range(sq.n)]
        accepted = 0

        def observer(before: int, after: int) -> None:
            nonlocal accepted
            accepted += 1
            assert after.bit_count() == before.bit_count() + 1
            chosen = {v for v in range(sq.n) if after >> v & 1}
            for v in chosen:
                assert not adj[v] & chosen
        heuristic_mis(sq, Deadline(seconds=2.0, max_nodes=25), seed=1, _swap_observer=observer)
        assert accepted >= 1
