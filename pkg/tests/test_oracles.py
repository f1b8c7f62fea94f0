"""Sanity checks for the brute-force oracles themselves."""
import pytest

from skeinf import oracles
from skeinf.coloring import GammaGraph
from skeinf.presentations import FNWord
from skeinf.trees import serialize


class TestEnumeration:
    def test_counts(self):
        # Cumulative counts of reduced pairs with at most n leaves; the
        # 3-leaf value (identity, x_0, x_0^-1) is checkable by hand.
        counts = [sum(1 for _ in oracles.enumerate_elements(n))
                  for n in range(1, 8)]
        assert counts == [1, 1, 3, 17, 125, 1055, 9755]

    def test_all_reduced_and_distinct(self):
        seen = set()
        for p in oracles.enumerate_elements(5):
            assert p.is_reduced
            key = (serialize(p.plus), serialize(p.minus))
            assert key not in seen
            seen.add(key)

    def test_bound(self):
        with pytest.raises(ValueError):
            list(oracles.enumerate_elements(10))


class TestNaryModel:
    def test_relations(self):
        for arity in (2, 3, 4):
            shift = arity - 1
            for n in range(1, 5):
                for k in range(n):
                    lhs = FNWord(arity, ((k, -1), (n, 1), (k, 1)))
                    rhs = FNWord(arity, ((n + shift, 1),))
                    assert oracles.nary_word_equal(lhs, rhs)

    def test_distinguishes_generators(self):
        for arity in (2, 3, 4):
            a = FNWord(arity, ((0, 1),))
            b = FNWord(arity, ((1, 1),))
            assert not oracles.nary_word_equal(a, b)
            assert oracles.nary_word_equal(a, a)

    def test_inverse_cancels(self):
        w = FNWord(3, ((0, 1), (2, 1), (1, -1)))
        assert oracles.nary_word_equal(w * w.inverse(), FNWord(3))

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            oracles.nary_word_equal(FNWord(2), FNWord(3))


class TestCountColorings:
    def test_small_graphs(self):
        triangle = GammaGraph(3, ((0, 1), (1, 2), (0, 2)))
        assert oracles.count_colorings(triangle, 3) == 6
        assert oracles.count_colorings(triangle, 2) == 0
        empty = GammaGraph(3, ())
        assert oracles.count_colorings(empty, 2) == 8

    def test_bound(self):
        with pytest.raises(ValueError):
            oracles.count_colorings(GammaGraph(17, ()), 2)
