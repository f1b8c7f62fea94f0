"""Grafting algebras Alg(X) and the groups G_X.

The two working patterns are X_vecF = (L(LL)) with 3 leaves and
X_3col = ((LL)(LL)) with 4 leaves; several tests also run over random
patterns to keep the code honest about arity.
"""
import random

import pytest

from skeinf import oracles, trees
from skeinf.grafting import (GXElement, GraftWord, PATTERN_3COL, PATTERN_VECF,
                             Pattern, basic_form, decompose, decompose_basic,
                             default_pattern, graft, gx_generator, gx_identity,
                             gx_inverse, gx_multiply, gx_to_word, phi, realize,
                             vertical_commute)
from skeinf.presentations import FNWord
from skeinf.trees import parse_tree, serialize

PATTERNS = [PATTERN_VECF, PATTERN_3COL, default_pattern(2),
            Pattern(parse_tree("((LL)L)"))]


def random_graft_word(rng, pattern, max_len=6):
    shift = pattern.arity - 1
    positions = []
    for j in range(rng.randint(0, max_len)):
        positions.append(rng.randint(0, j * shift))
    return GraftWord(pattern, tuple(positions))


class TestRealize:
    def test_empty_word(self):
        for pattern in PATTERNS:
            assert realize(GraftWord(pattern, ())) == trees.LEAF

    def test_single_graft(self):
        for pattern in PATTERNS:
            assert realize(GraftWord(pattern, (0,))) == pattern.tree

    def test_graft_positions(self):
        # Grafting (L(LL)) at position 1 of itself expands the middle leaf.
        t = realize(GraftWord(PATTERN_VECF, (0, 1)))
        assert serialize(t) == "(L((L(LL))L))"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            graft(trees.LEAF, 1, PATTERN_VECF)
        with pytest.raises(ValueError):
            GraftWord(PATTERN_VECF, (-1,))

    def test_unanchored_words_pad_right(self):
        # A word may overshoot; realize supplies through-strands on the
        # right, so [2,0] and [0,4] describe the same tree over X_vecF.
        w = GraftWord(PATTERN_VECF, (2, 0))
        assert not w.is_anchored
        assert realize(w) == realize(GraftWord(PATTERN_VECF, (0, 4)))


class TestVerticalIsotopy:
    def test_swap_rule(self):
        # X_n . X_k = X_k . X_{n+N-1} for k < n (Eq. of vertical isotopy).
        rng = random.Random(37)
        for pattern in PATTERNS:
            shift = pattern.arity - 1
            for n in range(1, 6):
                for k in range(n):
                    for _ in range(5):
                        tail = tuple(rng.randint(0, 8) for _ in range(3))
                        a = GraftWord(pattern, (n, k) + tail)
                        b = GraftWord(pattern, (k, n + shift) + tail)
                        assert realize(a) == realize(b)

    def test_commute_sorts_and_preserves(self):
        rng = random.Random(41)
        for pattern in PATTERNS:
            for _ in range(100):
                w = random_graft_word(rng, pattern)
                c = vertical_commute(w)
                assert list(c.positions) == sorted(c.positions)
                assert realize(c) == realize(w)

    def test_worked_example(self):
        c = vertical_commute(GraftWord(PATTERN_VECF, (2, 0)))
        assert c.positions == (0, 4)


class TestDecompose:
    def test_roundtrip(self):
        rng = random.Random(43)
        for pattern in PATTERNS:
            for _ in range(100):
                w = random_graft_word(rng, pattern)
                t = realize(w)
                d = decompose(t, pattern)
                assert d is not None
                assert realize(d) == t
                assert d == vertical_commute(w)

    def test_rejects_foreign_trees(self):
        assert decompose(parse_tree("(LL)"), PATTERN_VECF) is None
        assert decompose(parse_tree("((LL)L)"), PATTERN_VECF) is None
        assert decompose(parse_tree("(L(LL))"), PATTERN_3COL) is None

    def test_leaf(self):
        for pattern in PATTERNS:
            assert decompose(trees.LEAF, pattern).positions == ()

    def test_basic_form(self):
        for pattern in PATTERNS:
            shift = pattern.arity - 1
            for n in range(4):
                w = basic_form(n, pattern)
                assert w.positions == tuple(j * shift for j in range(n + 1))
                t = realize(w)
                alpha, rest = decompose_basic(t, pattern)
                assert alpha == n and rest.positions == ()

    def test_decompose_basic_general(self):
        rng = random.Random(47)
        for pattern in PATTERNS:
            for _ in range(60):
                w = random_graft_word(rng, pattern, max_len=5)
                if not w.positions:
                    continue
                t = realize(w)
                alpha, rest = decompose_basic(t, pattern)
                full = GraftWord(pattern,
                                 basic_form(alpha, pattern).positions
                                 + rest.positions)
                assert realize(full) == t


class TestGXGroup:
    def test_generator_shapes(self):
        # x_0 over X_vecF reduces to the standard F picture.
        g = gx_generator(0, PATTERN_VECF)
        assert trees.format_pair(g.tree_pair()) == "((L(LL))L)|(L(L(LL)))"

    def test_generator_index_arithmetic(self):
        # The comb index a(n) = n // (N-1) steps by one every N-1 grafts.
        for pattern in PATTERNS:
            shift = pattern.arity - 1
            for n in range(0, 101 - shift):
                a = n // shift
                b = (n + shift) // shift
                assert b == a + 1
                g = gx_generator(n, pattern)
                assert g.plus.leaf_count == (a + 2) * shift + 1

    def test_group_axioms(self):
        rng = random.Random(53)
        for pattern in (PATTERN_VECF, PATTERN_3COL):
            e = gx_identity(pattern)
            gens = [gx_generator(i, pattern) for i in range(5)]
            for _ in range(60):
                g, h, k = (rng.choice(gens) for _ in range(3))
                assert gx_multiply(g, e) == g
                assert gx_multiply(e, g) == g
                assert gx_multiply(g, gx_inverse(g)) == e
                assert gx_multiply(gx_multiply(g, h), k) == \
                    gx_multiply(g, gx_multiply(h, k))

    def test_agrees_with_binary_multiply(self):
        # The forgetful map G_X -> F is a homomorphism.
        rng = random.Random(59)
        for pattern in (PATTERN_VECF, PATTERN_3COL):
            gens = [gx_generator(i, pattern) for i in range(6)]
            for _ in range(80):
                g, h = rng.choice(gens), rng.choice(gens)
                prod = gx_multiply(g, h)
                assert prod.tree_pair() == trees.multiply(g.tree_pair(),
                                                          h.tree_pair())

    def test_relation_in_gx(self):
        # x_0^-1 x_2 x_0 = x_4 over X_vecF (shift N-1 = 2).
        p = PATTERN_VECF
        lhs = gx_multiply(gx_multiply(gx_inverse(gx_generator(0, p)),
                                      gx_generator(2, p)), gx_generator(0, p))
        assert lhs == gx_generator(4, p)

    def test_rejects_undecomposable(self):
        with pytest.raises(ValueError):
            GXElement(PATTERN_VECF, parse_tree("(LL)"), parse_tree("(LL)"))


class TestPhi:
    def test_presentation_relations(self):
        # phi(t_k^-1 t_n t_k) = phi(t_{n+N-1}) for 0 <= k < n <= 7.
        for pattern in (PATTERN_VECF, PATTERN_3COL):
            arity = pattern.arity
            for n in range(1, 8):
                for k in range(n):
                    w = FNWord(arity, ((k, -1), (n, 1), (k, 1)))
                    t = FNWord(arity, ((n + arity - 1, 1),))
                    assert phi(w, pattern) == phi(t, pattern)

    def test_to_word_roundtrip_generators(self):
        for pattern in (PATTERN_VECF, PATTERN_3COL):
            for n in range(8):
                g = gx_generator(n, pattern)
                w = gx_to_word(g)
                assert phi(w, pattern) == g

    def test_to_word_roundtrip_random(self):
        rng = random.Random(61)
        for pattern in (PATTERN_VECF, PATTERN_3COL):
            for _ in range(60):
                letters = tuple((rng.randint(0, 5), rng.choice((-1, 1)))
                                for _ in range(rng.randint(0, 5)))
                w = FNWord(pattern.arity, letters)
                g = phi(w, pattern)
                back = gx_to_word(g)
                assert phi(back, pattern) == g

    def test_worked_words(self):
        # Frozen word images, verified against the N-ary oracle model.
        g = phi(FNWord(3, ((0, 1), (1, 1), (5, 1))), PATTERN_VECF)
        assert phi(gx_to_word(g), PATTERN_VECF) == g
        h = phi(FNWord(4, ((0, 1), (3, 1))), PATTERN_3COL)
        assert phi(gx_to_word(h), PATTERN_3COL) == h

    def test_identity_word(self):
        for pattern in (PATTERN_VECF, PATTERN_3COL):
            g = phi(FNWord(pattern.arity), pattern)
            assert g.is_identity
            assert gx_to_word(g).is_empty

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            phi(FNWord(3), PATTERN_3COL)
