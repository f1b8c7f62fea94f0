"""Naive brute-force oracles used to validate the main modules.

Everything here is deliberately independent of the production code paths
(no shared algorithms), so that a disagreement localizes the bug: an
N-ary tree-pair model of F_N for the word problem, exhaustive coloring
enumeration, and exhaustive enumeration of reduced tree pairs.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .trees import Tree, TreePair, serialize

# N-ary trees as nested tuples: a leaf is None, an internal node is a
# tuple of exactly N children.


def _nleaves(t):
    if t is None:
        return 1
    return sum(_nleaves(c) for c in t)


def _nmerge(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return tuple(_nmerge(x, y) for x, y in zip(a, b))


def _nforest(coarse, fine):
    if coarse is None:
        return [fine]
    out = []
    for c, f in zip(coarse, fine):
        out.extend(_nforest(c, f))
    return out


def _nattach(t, forest):
    it = iter(forest)

    def walk(node):
        if node is None:
            return next(it)
        return tuple(walk(c) for c in node)

    return walk(t)


def _bottom_carets(t):
    """Leaf offsets at which an all-leaf caret sits."""
    out = set()

    def walk(node, offset):
        if node is None:
            return
        if all(c is None for c in node):
            out.add(offset)
            return
        for c in node:
            walk(c, offset)
            offset += _nleaves(c)

    walk(t, 0)
    return out


def _remove_caret(t, target):
    def walk(node, offset):
        if node is None:
            return node
        if all(c is None for c in node) and offset == target:
            return None
        children = []
        for c in node:
            children.append(walk(c, offset))
            offset += _nleaves(c)
        return tuple(children)

    return walk(t, 0)


def _nreduce(plus, minus):
    while True:
        common = _bottom_carets(plus) & _bottom_carets(minus)
        if not common:
            return plus, minus
        i = min(common)
        plus = _remove_caret(plus, i)
        minus = _remove_caret(minus, i)


def _nmultiply(g, h):
    z = _nmerge(g[1], h[0])
    plus = _nattach(g[0], _nforest(g[1], z))
    minus = _nattach(h[1], _nforest(h[0], z))
    return _nreduce(plus, minus)


def _comb(m, arity):
    """Right comb of m+1 N-ary carets (the basic form); m = -1 is a leaf."""
    t = None
    for _ in range(m + 1):
        t = (None,) * (arity - 1) + (t,)
    return t


def _ngraft_caret(t, position, arity):
    """Replace the leaf at 0-based position by an N-ary caret."""
    caret = (None,) * arity

    def walk(node, offset):
        if node is None:
            return caret if offset == position else node
        children = []
        for c in node:
            children.append(walk(c, offset))
            offset += _nleaves(c)
        return tuple(children)

    return walk(t, 0)


def _ngenerator(n, arity):
    a = n // (arity - 1)
    plus = _ngraft_caret(_comb(a, arity), n, arity)
    minus = _comb(a + 1, arity)
    return _nreduce(plus, minus)


def _nary_pair(word):
    arity = word.arity
    out = (None, None)
    for index, exp in word.letters:
        gen = _ngenerator(index, arity)
        if exp < 0:
            gen = (gen[1], gen[0])
        for _ in range(abs(exp)):
            out = _nmultiply(out, gen)
    return out


def nary_word_equal(w1, w2):
    """Decide w1 = w2 in F_N on the standard N-ary tree-pair model."""
    if w1.arity != w2.arity:
        raise ValueError("arity mismatch: %d vs %d" % (w1.arity, w2.arity))
    return _nary_pair(w1) == _nary_pair(w2)


@lru_cache(maxsize=None)
def all_trees(leaves):
    """All binary trees with the given leaf count, sorted by serialization."""
    if leaves == 1:
        return (Tree(),)
    out = []
    for i in range(1, leaves):
        for left in all_trees(i):
            for right in all_trees(leaves - i):
                out.append(Tree(left, right))
    return tuple(sorted(out, key=serialize))


def _binary_bottom_carets(t):
    out = set()

    def walk(node, offset):
        if node.is_leaf:
            return
        if node.left.is_leaf and node.right.is_leaf:
            out.add(offset)
            return
        walk(node.left, offset)
        walk(node.right, offset + node.left.leaf_count)

    walk(t, 0)
    return out


def enumerate_elements(max_leaves):
    """Every reduced tree pair with at most max_leaves leaves, exactly once,
    ordered by leaf count then by the serializations of the two trees."""
    if max_leaves > 9:
        raise ValueError("enumeration bound is 9 leaves")
    for leaves in range(1, max_leaves + 1):
        for plus in all_trees(leaves):
            plus_carets = _binary_bottom_carets(plus)
            for minus in all_trees(leaves):
                if plus_carets & _binary_bottom_carets(minus):
                    continue
                yield TreePair(plus, minus)


def count_colorings(g, q):
    """Exhaustive count of proper q-colorings over all q^V assignments.

    The full assignment grid is materialized and filtered edge by edge,
    so this is a literal census, just vectorized.
    """
    if g.vertex_count > 16:
        raise ValueError("vertex bound is 16")
    total = q ** g.vertex_count
    if total > 20_000_000:
        raise ValueError("assignment space too large")
    if total == 0:
        return 0
    grid = np.indices((q,) * g.vertex_count).reshape(g.vertex_count, -1)
    ok = np.ones(total, dtype=bool)
    for i, j in g.edges:
        ok &= grid[i] != grid[j]
    return int(ok.sum())
