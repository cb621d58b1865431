import pytest

from orientgame.poset import Poset, linear_extension, load_poset, save_poset


class TestPoset:
    def test_validation_rejects_reflexive(self):
        with pytest.raises(ValueError):
            Poset(2, (0b01, 0))

    def test_validation_rejects_open_transitivity(self):
        # 0<1 and 1<2 without 0<2
        with pytest.raises(ValueError):
            Poset(3, (0b010, 0b100, 0))

    def test_from_arcs_closes(self):
        p = Poset.from_arcs(3, [(0, 1), (1, 2)])
        assert p.less(0, 2)

    def test_from_arcs_rejects_cycle(self):
        with pytest.raises(ValueError):
            Poset.from_arcs(3, [(0, 1), (1, 2), (2, 0)])

    def test_from_order(self):
        p = Poset.from_order([2, 0, 1])
        assert p.less(2, 0) and p.less(2, 1) and p.less(0, 1)
        assert not p.less(1, 0)

    def test_hasse_of_chain(self):
        p = Poset.from_order([0, 1, 2, 3])
        assert p.hasse_arcs() == [(0, 1), (1, 2), (2, 3)]

    def test_comparable(self):
        p = Poset.from_arcs(3, [(0, 1)])
        assert p.comparable(0, 1) and not p.comparable(0, 2)


class TestLinearExtension:
    def test_empty_order(self):
        assert linear_extension(Poset(3, (0, 0, 0))) == [0, 1, 2]

    def test_chain(self):
        assert linear_extension(Poset.from_order([2, 1, 0])) == [2, 1, 0]

    def test_extends_relation(self):
        p = Poset.from_arcs(5, [(3, 1), (4, 0), (1, 0)])
        order = linear_extension(p)
        pos = {v: i for i, v in enumerate(order)}
        for i in range(5):
            for j in range(5):
                if p.less(i, j):
                    assert pos[i] < pos[j]


class TestPosetFile:
    def test_round_trip(self):
        p = Poset.from_arcs(4, [(0, 1), (1, 2), (0, 3)])
        assert load_poset(save_poset(p)) == p

    def test_load_takes_closure(self):
        p = load_poset("3\n0 1\n1 2")
        assert p.less(0, 2)

    def test_load_rejects_cycle(self):
        with pytest.raises(ValueError):
            load_poset("2\n0 1\n1 0")
