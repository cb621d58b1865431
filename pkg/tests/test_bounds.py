import json
import math
import random

import pytest

from orientgame.bounds import approx_estimate, bound_report
from orientgame.graph import Graph, complete, cycle, gnp, path, star, turan
from orientgame.solver import game_value

from . import oracles


class TestBoundReport:
    def test_k3(self):
        rep = bound_report(complete(3), C=10)
        assert rep.n_half == 2
        assert rep.info == 3  # ceil(log2 6)
        assert rep.edge_upper == 3

    def test_c4_info_tight(self):
        rep = bound_report(cycle(4))
        assert rep.info == 4  # ceil(log2 14)
        assert game_value(cycle(4)).value == 4

    def test_star_info_tight(self):
        g = star(5)
        rep = bound_report(g)
        assert rep.n_half == 3 and rep.info == 4 and rep.edge_upper == 4
        assert game_value(g).value == 4

    def test_k4_info_equals_value(self):
        rep = bound_report(complete(4))
        assert rep.info == 5 == game_value(complete(4)).value  # ceil(log2 24)

    def test_isolated_vertices_stripped(self):
        g = Graph(6, ((0, 2), (2, 4)))  # P3 plus three isolated vertices
        rep = bound_report(g)
        assert rep.n_half == 2 and rep.edge_upper == 2

    def test_edgeless(self):
        rep = bound_report(Graph(4, ()))
        assert rep.n_half == 0 and rep.info == 0 and rep.best_upper == 0.0

    def test_info_omitted_beyond_guard(self):
        rep = bound_report(gnp(10, 1.0, 0))  # 45 edges
        assert rep.info is None

    def test_degeneracy_at_most_info(self):
        rng = random.Random(61)
        for _ in range(60):
            g = gnp(rng.randint(1, 7), 0.6, rng.getrandbits(32))
            rep = bound_report(g)
            if rep.info is not None:
                assert rep.degeneracy <= rep.info

    def test_entries_nonnegative_and_consistent(self):
        rng = random.Random(62)
        for _ in range(60):
            g = gnp(rng.randint(1, 8), 0.5, rng.getrandbits(32))
            rep = bound_report(g)
            doc = rep.to_json_dict()
            for key, value in doc.items():
                if value is not None:
                    assert value >= 0, key
            assert rep.best_lower <= rep.best_upper

    def test_bounds_vs_exact_values(self):
        graphs = [
            complete(2), complete(3), complete(4), cycle(4), cycle(5),
            path(4), star(5), turan(5), turan(6),
        ]
        for g in graphs:
            rep = bound_report(g)
            value = game_value(g).value
            assert rep.best_lower <= value <= rep.best_upper
            assert rep.n_half <= value
            assert rep.info <= value <= rep.edge_upper
            assert rep.degeneracy <= rep.info

    def test_moon_moser_below_true_triangles(self):
        rng = random.Random(63)
        for _ in range(40):
            g = gnp(rng.randint(1, 12), 0.6, rng.getrandbits(32))
            rep = bound_report(g)
            assert rep.moon_moser_triangles <= oracles.triangle_count(g)

    def test_moon_moser_tight_on_k4(self):
        assert bound_report(complete(4)).moon_moser_triangles == pytest.approx(4.0)

    def test_thm51_scales_exactly_with_c(self):
        g = turan(10)
        for C in (1.0, 2.0, 8.0):
            assert bound_report(g, C=2 * C).thm51 == bound_report(g, C=C).thm51 / 2

    def test_thm51_dominated_flag(self):
        # default C leaves the entry far below the others on small boards
        assert bound_report(complete(4)).thm51_dominated
        # a tiny C inflates it past every alternative
        assert not bound_report(complete(4), C=0.01).thm51_dominated

    def test_rejects_bad_c(self):
        with pytest.raises(ValueError):
            bound_report(complete(3), C=0)

    def test_json_field_names(self):
        doc = bound_report(complete(3)).to_json_dict()
        assert list(doc) == [
            "n_half", "info", "degeneracy", "thm51", "edge_upper",
            "jiang_upper", "moon_moser_triangles", "best_lower", "best_upper",
        ]
        json.dumps(doc)


class TestApproxEstimate:
    def test_k4(self):
        lower, upper, ratio = approx_estimate(complete(4), C=1.0)
        assert lower == pytest.approx(3.0)
        assert upper == 6
        assert ratio == pytest.approx(2.0)

    def test_turan10(self):
        lower, upper, ratio = approx_estimate(turan(10), C=1.0)
        assert lower == pytest.approx(25 * math.log2(10) / 10)
        assert upper == 25

    def test_edgeless(self):
        lower, upper, _ = approx_estimate(Graph(3, ()), C=1.0)
        assert lower == 0.0 and upper == 0

    def test_sandwiches_exact_value(self):
        for g in [complete(4), turan(5), cycle(5), star(6)]:
            lower, upper, _ = approx_estimate(g, C=8.0)
            value = game_value(g).value
            assert lower <= value <= upper

    def test_scales_with_c(self):
        g = turan(8)
        l1, _, _ = approx_estimate(g, C=1.0)
        l2, _, _ = approx_estimate(g, C=2.0)
        assert l2 == l1 / 2

    def test_needs_two_vertices(self):
        with pytest.raises(ValueError):
            approx_estimate(Graph(1, ()), C=1.0)
