import random

import pytest

from orientgame.engine import (
    GameError,
    apply_answer,
    edge_status,
    empty_state,
    play_match,
)
from orientgame.graph import Graph, complete, complete_multipartite, gnp, max_cut, turan
from orientgame.poset import Poset, linear_extension
from orientgame.reduction import build_cut_poset, build_reduction
from orientgame.solver import Solver
from orientgame.strategist import (
    GreedyAdversary,
    OptimalStrategist,
    PosetStrategist,
    TripartiteAdversary,
    cut_poset_strategist,
    linear_order_strategist,
    turan_h_strategist,
)

from . import oracles


def walk_all_games(g, strategist, max_states=200000):
    """Exhaustively walk every questioner behavior against one answerer,
    verifying each reply is legal by a raw acyclicity check. States are
    keyed by the exact arc set (the strategies are stateless)."""
    seen = set()
    stack = [(empty_state(g), frozenset())]
    seen.add(frozenset())
    while stack:
        state, arcs = stack.pop()
        for e in g.edges:
            if e in state.oriented:
                continue
            d = tuple(strategist.answer(state, e))
            assert oracles.acyclic(g.n, list(arcs) + [d]), (e, d, arcs)
            child_arcs = arcs | {d}
            if child_arcs in seen:
                continue
            seen.add(child_arcs)
            stack.append((apply_answer(state, e, d), child_arcs))
        assert len(seen) <= max_states
    return len(seen)


class TestPosetStrategist:
    def test_linear_order_answers(self):
        strat = linear_order_strategist([2, 0, 1])
        s = empty_state(complete(3))
        assert strat.answer(s, (0, 1)) == (0, 1)
        assert strat.answer(s, (0, 2)) == (2, 0)
        assert strat.answer(s, (1, 2)) == (2, 1)

    def test_uncovered_pair_rejected(self):
        p = Poset.from_arcs(3, [(0, 1)])
        strat = PosetStrategist(p)
        with pytest.raises(GameError):
            strat.answer(empty_state(complete(3)), (1, 2))

    def test_non_adaptive(self):
        rng = random.Random(41)
        g = gnp(7, 0.6, 9)
        strat = linear_order_strategist([3, 1, 4, 0, 6, 2, 5])
        baseline = {e: strat.answer(empty_state(g), e) for e in g.edges}
        for _ in range(10):
            order = list(g.edges)
            rng.shuffle(order)
            s = empty_state(g)
            for e in order:
                d = strat.answer(s, e)
                assert d == baseline[e]
                s = apply_answer(s, e, d)

    def test_legal_on_full_tree(self):
        walk_all_games(complete(4), linear_order_strategist([2, 3, 0, 1]))


class TestTuranH:
    def test_requires_turan_structure(self):
        with pytest.raises(ValueError):
            turan_h_strategist(complete(4), ())

    def test_u1_inside_v1(self):
        with pytest.raises(ValueError):
            turan_h_strategist(turan(6), (4,))

    def test_rejects_second_part_edges(self):
        g = Graph(4, turan(4).edges + ((2, 3),))
        with pytest.raises(ValueError):
            turan_h_strategist(g, ())

    def test_plain_turan_all_edges_queried(self):
        from orientgame.algy import ExhaustiveAlgy

        g = turan(8)
        t = play_match(g, ExhaustiveAlgy(), turan_h_strategist(g, ()))
        assert t.total == g.m

    def test_with_inner_bipartite_layer(self):
        # Turan board plus edges {0,2},{1,2} inside the first part
        from orientgame.algy import ExhaustiveAlgy, GreedyForcingAlgy, TwoRoundAlgy

        base = turan(8)  # parts {0..3}, {4..7}
        g = Graph(8, base.edges + ((0, 2), (1, 2)))
        strat = turan_h_strategist(g, (0, 1))
        cross = set(base.edges)
        for algy in (ExhaustiveAlgy(), GreedyForcingAlgy(), TwoRoundAlgy(g, seed=7)):
            t = play_match(g, algy, strat)
            assert cross <= {m.edge for m in t.moves}

    def test_explicit_v1_override(self):
        # parts swapped: v1 on the high indices
        g = turan(4)  # parts {0,1}, {2,3}
        strat = turan_h_strategist(g, (), v1=(2, 3))
        s = empty_state(g)
        assert strat.answer(s, (0, 2)) == (0, 2)  # v2={0,1} orients into v1

    def test_value_at_least_turan_bound_small(self):
        for n in range(3, 7):
            g = turan(n)
            assert Solver(g).game_value().value >= n * n // 4

    def test_value_with_inner_layer_still_meets_bound(self):
        # adding a bipartite layer inside one part keeps the bound: the
        # adversary certifies it, the exact solver confirms it
        cases = [
            (4, ((0, 1),), (0,)),
            (5, ((0, 1),), (0,)),
            (6, ((0, 1), (0, 2)), (0,)),
        ]
        for n, extra, u1 in cases:
            g = Graph(n, turan(n).edges + extra)
            turan_h_strategist(g, u1)  # structure accepted
            assert Solver(g).game_value().value >= n * n // 4

    def test_legal_on_full_tree(self):
        g = Graph(4, turan(4).edges + ((0, 1),))
        walk_all_games(g, turan_h_strategist(g, (0,)))


class TestTripartite:
    def make(self):
        g = complete_multipartite([2, 2, 1])
        return g, TripartiteAdversary(g, (2, 2, 1))

    def test_validates_structure(self):
        with pytest.raises(ValueError):
            TripartiteAdversary(complete(5), (2, 2, 1))
        with pytest.raises(ValueError):
            TripartiteAdversary(complete_multipartite([2, 2, 1]), (2, 1, 2))

    def test_x_to_y_orientation(self):
        g, strat = self.make()
        s = empty_state(g)
        assert strat.answer(s, (0, 2)) == (0, 2)
        assert strat.answer(s, (1, 3)) == (1, 3)

    def test_commitment_from_x_side(self):
        g, strat = self.make()
        s = empty_state(g)
        d = strat.answer(s, (0, 4))
        assert d == (0, 4)  # first z-touch from X: z becomes a sink
        s = apply_answer(s, (0, 4), d)
        for e in ((1, 4), (2, 4), (3, 4)):
            assert strat.answer(s, e) == e
        # spec walk-through: the Y-side z edges stay open until queried
        assert edge_status(s, (2, 4)).kind == "open"
        assert edge_status(s, (3, 4)).kind == "open"

    def test_commitment_from_y_side(self):
        g, strat = self.make()
        s = empty_state(g)
        d = strat.answer(s, (2, 4))
        assert d == (4, 2)  # first z-touch from Y: z becomes a source
        s = apply_answer(s, (2, 4), d)
        assert strat.answer(s, (0, 4)) == (4, 0)

    def test_legal_on_full_tree(self):
        g, strat = self.make()
        walk_all_games(g, strat)

    def test_extracts_proposition_bound(self):
        from orientgame.algy import OptimalAlgy

        for parts in ([1, 1, 2], [2, 2, 1]):
            g = complete_multipartite(parts)
            strat = TripartiteAdversary(g, tuple(parts))
            t = play_match(g, OptimalAlgy(g), strat)
            assert t.total >= g.n * g.n // 4 + 1


class TestCutPoset:
    def test_answers_follow_figure_placement(self):
        g = complete(2)
        p = build_cut_poset(g, max_cut(g), 1)
        strat = cut_poset_strategist(p)
        red = build_reduction(g, 1)
        s = empty_state(red.h)
        assert strat.answer(s, (0, 4)) == (0, 4)  # x below the gadget
        assert strat.answer(s, (2, 4)) == (4, 2)  # gadget below x'
        assert strat.answer(s, (1, 4)) == (4, 1)  # gadget below y
        assert strat.answer(s, (3, 4)) == (3, 4)  # y' below the gadget

    def test_legal_on_full_tree(self):
        g = complete(2)
        p = build_cut_poset(g, max_cut(g), 1)
        red = build_reduction(g, 1)
        walk_all_games(red.h, cut_poset_strategist(p))

    def test_non_adaptive(self):
        g = complete(2)
        red = build_reduction(g, 1)
        strat = cut_poset_strategist(build_cut_poset(g, max_cut(g), 1))
        s = empty_state(red.h)
        answers = {e: strat.answer(s, e) for e in red.h.edges}
        s2 = empty_state(red.h)
        for e in reversed(red.h.edges):
            d = strat.answer(s2, e)
            assert d == answers[e]
            s2 = apply_answer(s2, e, d)


class TestGreedyAdversary:
    def test_k3_example(self):
        g = complete(3)
        s = apply_answer(empty_state(g), (0, 1), (0, 1))
        assert GreedyAdversary().answer(s, (1, 2)) == (2, 1)

    def test_forced_edge_unique_answer(self):
        g = complete(4)
        s = apply_answer(empty_state(g), (0, 1), (0, 1))
        s = apply_answer(s, (1, 2), (1, 2))
        assert GreedyAdversary().answer(s, (0, 2)) == (0, 2)

    def test_legal_on_full_tree_k4(self):
        walk_all_games(complete(4), GreedyAdversary())

    def test_legal_on_full_tree_k5(self):
        walk_all_games(complete(5), GreedyAdversary(), max_states=250000)


class TestOptimalStrategist:
    def test_legal_and_consistent(self):
        g = turan(4)
        solver = Solver(g)
        walk_all_games(g, OptimalStrategist(g, solver=solver))


class TestRandomMatchLegality:
    def test_ten_thousand_matches(self):
        from orientgame.algy import ExhaustiveAlgy, GreedyForcingAlgy, TwoRoundAlgy

        rng = random.Random(42)
        played = 0
        while played < 10000:
            g = gnp(rng.randint(2, 7), 0.55, rng.getrandbits(32))
            if g.m == 0:
                continue
            order = list(range(g.n))
            rng.shuffle(order)
            for strat in (linear_order_strategist(order), GreedyAdversary()):
                algys = [
                    ExhaustiveAlgy(),
                    GreedyForcingAlgy(),
                    TwoRoundAlgy(g, seed=rng.getrandbits(16)),
                ]
                for algy in algys:
                    t = play_match(g, algy, strat)
                    assert t.total <= g.m
                    t.replay()
                    played += 1


class TestTournament:
    def test_greedy_vs_order_recorded_not_asserted(self, capsys):
        """Whether greedy dominates the identity order everywhere is an open
        matter; the tournament result is printed for the record only. The
        forcing-prone questioner separates the two adversaries; the
        lexicographic one ties them on every sampled board."""
        from orientgame.algy import GreedyForcingAlgy

        rng = random.Random(43)
        greedy_wins = order_wins = ties = 0
        for _ in range(200):
            g = gnp(rng.randint(4, 8), 0.7, rng.getrandbits(32))
            t_greedy = play_match(g, GreedyForcingAlgy(), GreedyAdversary()).total
            t_order = play_match(
                g, GreedyForcingAlgy(), linear_order_strategist(range(g.n))
            ).total
            if t_greedy > t_order:
                greedy_wins += 1
            elif t_order > t_greedy:
                order_wins += 1
            else:
                ties += 1
        print(
            f"tournament (200 graphs, greedy-forcing questioner): greedy "
            f"adversary extracts more on {greedy_wins}, order on {order_wins}, "
            f"ties {ties}"
        )


class TestLinearExtensionOnAdversaryPoset:
    def test_claim1_poset_extension(self):
        g = complete(2)
        p = build_cut_poset(g, max_cut(g), 1)
        order = linear_extension(p)
        pos = {v: i for i, v in enumerate(order)}
        # x before gadget before x'; y' before gadget before y
        assert pos[0] < pos[4] < pos[2]
        assert pos[3] < pos[4] < pos[1]
