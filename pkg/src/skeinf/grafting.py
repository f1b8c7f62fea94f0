"""The grafting algebra Alg(X) and the group G_X for a fixed N-leaf pattern.

Fix a pattern X with N >= 2 leaves.  Alg(X) is the set of binary trees
obtainable from a single leaf by repeatedly replacing a leaf with a copy
of X; a tree lies in Alg(X) iff X sits at its top and the N hanging
subtrees lie in Alg(X) recursively, so membership and the graft-word
decomposition are computed by structural recursion.

G_X is the group of pairs of equal-leaf Alg(X) trees modulo common
grafts.  The natural map into F (forget the X-block structure) is a
homomorphism with trivial kernel, so elements are canonicalized and
compared through their reduced binary tree pairs.  The generators x_n
present G_X as F_N with the relation x_k^-1 x_n x_k = x_{n+N-1}.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import trees
from .presentations import FNWord
from .trees import (LEAF, Tree, TreePair, attach_forest, parse_tree,
                    refinement_forest, replace_leaf, serialize)


@dataclass(frozen=True)
class Pattern:
    """The fixed N-leaf tree whose grafts generate Alg(X)."""

    tree: Tree

    def __post_init__(self):
        if self.tree.leaf_count < 2:
            raise ValueError("pattern needs at least 2 leaves")

    @property
    def arity(self):
        return self.tree.leaf_count

    def __str__(self):
        return serialize(self.tree)


PATTERN_VECF = Pattern(parse_tree("(L(LL))"))
PATTERN_3COL = Pattern(parse_tree("((LL)(LL))"))


def default_pattern(arity):
    """Right-comb pattern with the given number of leaves."""
    t = LEAF
    for _ in range(arity - 1):
        t = Tree(LEAF, t)
    return Pattern(t)


def pattern_by_name(name):
    if name == "vecf":
        return PATTERN_VECF
    if name == "3col":
        return PATTERN_3COL
    return Pattern(parse_tree(name))


@dataclass(frozen=True)
class GraftWord:
    """A sequence of graft positions over a fixed pattern.

    Graft j is applied at leaf k_j + 1 of the current tree.  A word is
    anchored when it grows from a single leaf, i.e. k_j <= j*(N-1) for
    all j; general words carry through-strands on the right and realize
    against the minimal right comb that makes every graft land.
    """

    pattern: Pattern
    positions: tuple

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        for j, k in enumerate(self.positions):
            if k < 0:
                raise ValueError("graft %d at negative position %d" % (j, k))

    @property
    def is_anchored(self):
        shift = self.pattern.arity - 1
        return all(k <= j * shift for j, k in enumerate(self.positions))

    def __str__(self):
        return ",".join(str(k) for k in self.positions)


def graft(t, k, pattern):
    """Replace leaf k+1 of t by a copy of the pattern (the k-shift of X)."""
    if not 0 <= k <= t.leaf_count - 1:
        raise ValueError("graft position %d out of range 0..%d"
                         % (k, t.leaf_count - 1))
    return replace_leaf(t, k + 1, pattern.tree)


def _right_comb(leaves):
    t = LEAF
    for _ in range(leaves - 1):
        t = Tree(LEAF, t)
    return t


def realize(w):
    """Left-to-right fold of the grafts of w.

    Anchored words grow from a single leaf.  A word whose positions
    overshoot is read with its through-strands made explicit: the start
    is the minimal right comb on which every graft lands.
    """
    shift = w.pattern.arity - 1
    start = 1
    for j, k in enumerate(w.positions):
        start = max(start, k + 1 - j * shift)
    t = _right_comb(start)
    for k in w.positions:
        t = graft(t, k, w.pattern)
    return t


# Block trees: an Alg(X) tree re-read as an N-ary tree whose nodes are
# X-blocks.  Leaf = None, node = tuple of N children.

_NOT_DECOMPOSABLE = object()


@lru_cache(maxsize=None)
def _block_tree(t, pattern):
    """N-ary block structure of t over the pattern: None for a bare leaf,
    a tuple of N child block trees for an X-block, or the sentinel
    `_NOT_DECOMPOSABLE` when t is not in Alg(X)."""
    if t.is_leaf:
        return None
    if not trees.is_prefix(pattern.tree, t):
        return _NOT_DECOMPOSABLE
    children = []
    for sub in refinement_forest(pattern.tree, t):
        b = _block_tree(sub, pattern)
        if b is _NOT_DECOMPOSABLE:
            return _NOT_DECOMPOSABLE
        children.append(b)
    return tuple(children)


def _block_tree_strict(t, pattern):
    bt = _block_tree(t, pattern)
    if bt is _NOT_DECOMPOSABLE:
        raise ValueError("tree %s is not decomposable over %s"
                         % (serialize(t), pattern))
    return bt


def _realize_block(bt, pattern):
    if bt is None:
        return LEAF
    return attach_forest(pattern.tree,
                         [_realize_block(c, pattern) for c in bt])


def _emit_word(bt, base, shift, out):
    # Children are emitted rightmost first so that grafts inside child i
    # never shift the root leaves of children < i.
    if bt is None:
        return
    out.append(base)
    for i in range(len(bt), 0, -1):
        _emit_word(bt[i - 1], base + i - 1, shift, out)


def is_decomposable(t, pattern):
    return _block_tree(t, pattern) is not _NOT_DECOMPOSABLE


def decompose(t, pattern):
    """Graft word w with realize(w) = t, in canonical sorted form, or None
    if t is not in Alg(X)."""
    if t.is_leaf:
        return GraftWord(pattern, ())
    bt = _block_tree(t, pattern)
    if bt is _NOT_DECOMPOSABLE:
        return None
    out = []
    _emit_word(bt, 0, pattern.arity - 1, out)
    return vertical_commute(GraftWord(pattern, tuple(out)))


def vertical_commute(w):
    """Canonical sorted form of a graft word.

    Uses the vertical isotopy X_n . X_k = X_k . X_{n+N-1} for k < n to
    sort the positions non-decreasingly; the realized tree is unchanged.
    Insertion sort: bubbling an element left leaves the sorted prefix
    sorted, so the pass count is bounded by the word length.
    """
    shift = w.pattern.arity - 1
    seq = list(w.positions)
    for j in range(1, len(seq)):
        i = j
        while i > 0 and seq[i - 1] > seq[i]:
            seq[i - 1], seq[i] = seq[i], seq[i - 1] + shift
            i -= 1
    return GraftWord(w.pattern, tuple(seq))


def basic_form(n, pattern):
    """S_n = X_0 . X_{N-1} . X_{2(N-1)} ... X_{n(N-1)}, the right comb of
    n+1 X-blocks."""
    if n < 0:
        raise ValueError("basic form index must be >= 0")
    shift = pattern.arity - 1
    return GraftWord(pattern, tuple(j * shift for j in range(n + 1)))


def decompose_basic(t, pattern):
    """Maximal alpha with t = S_alpha . rest; returns (alpha, rest word).

    alpha + 1 is the length of the chain of X-blocks along the rightmost
    spine of the block tree; the remaining grafts are emitted against the
    leaf positions they occupy in the realized S_alpha.
    """
    if t.is_leaf:
        raise ValueError("a bare leaf has no basic decomposition")
    bt = _block_tree_strict(t, pattern)
    n_ary = pattern.arity
    shift = n_ary - 1
    chain = [bt]
    while chain[-1][-1] is not None:
        chain.append(chain[-1][-1])
    alpha = len(chain) - 1
    rest = []
    for j in range(alpha, -1, -1):
        block = chain[j]
        top = n_ary if j == alpha else n_ary - 1
        for i in range(top, 0, -1):
            _emit_word(block[i - 1], j * shift + i - 1, shift, rest)
    full = GraftWord(pattern, basic_form(alpha, pattern).positions + tuple(rest))
    assert realize(full) == t
    return alpha, GraftWord(pattern, tuple(rest))


class GXElement:
    """An element of G_X as a pair of equal-leaf Alg(X) trees.

    Stored representatives stay X-decomposable; equality and hashing go
    through the reduced binary tree pair, which is faithful because the
    forgetful homomorphism G_X -> F has trivial kernel.
    """

    __slots__ = ("pattern", "plus", "minus", "_reduced")

    def __init__(self, pattern, plus, minus):
        if plus.leaf_count != minus.leaf_count:
            raise ValueError("leaf-count mismatch: %d vs %d"
                             % (plus.leaf_count, minus.leaf_count))
        _block_tree_strict(plus, pattern)
        _block_tree_strict(minus, pattern)
        self.pattern = pattern
        self.plus = plus
        self.minus = minus
        self._reduced = None

    def tree_pair(self):
        """The reduced TreePair underlying this element (its F-image)."""
        if self._reduced is None:
            self._reduced = trees.reduce(TreePair(self.plus, self.minus))
        return self._reduced

    @property
    def is_identity(self):
        return self.tree_pair() == trees.identity()

    def __eq__(self, other):
        if not isinstance(other, GXElement):
            return NotImplemented
        return (self.pattern == other.pattern
                and self.tree_pair() == other.tree_pair())

    def __hash__(self):
        return hash((self.pattern, self.tree_pair()))

    def __repr__(self):
        return "GXElement(%s | %s over %s)" % (
            serialize(self.plus), serialize(self.minus), self.pattern)


def gx_identity(pattern):
    return GXElement(pattern, LEAF, LEAF)


def gx_from_pair(p, pattern, max_nodes=50000, seeds=None):
    """A GXElement with the same F-image as the tree pair p.

    Representatives are searched breadth-first by inserting common carets
    (which leaves the group element unchanged) until both trees lie in
    Alg(X).  `seeds` may supply extra starting representatives; raises
    ValueError when the search budget runs out, in particular when p is
    not in the image of G_X.
    """
    target = trees.reduce(p)
    shift = pattern.arity - 1
    reps = list(seeds or [])
    if target not in reps:
        reps.append(target)
    max_leaves = 2 * max(target.leaf_count, 2) + pattern.arity
    caret = Tree(LEAF, LEAF)
    queue = deque(reps)
    seen = set(reps)
    nodes = 0
    while queue:
        rep = queue.popleft()
        nodes += 1
        if nodes > max_nodes:
            break
        if ((rep.leaf_count - 1) % shift == 0
                and is_decomposable(rep.plus, pattern)
                and is_decomposable(rep.minus, pattern)):
            return GXElement(pattern, rep.plus, rep.minus)
        if rep.leaf_count >= max_leaves:
            continue
        for leaf in range(1, rep.leaf_count + 1):
            child = TreePair(replace_leaf(rep.plus, leaf, caret),
                             replace_leaf(rep.minus, leaf, caret))
            if child not in seen:
                seen.add(child)
                queue.append(child)
    raise ValueError("no Alg(%s) representative found for %s"
                     % (pattern, trees.format_pair(target)))


def gx_inverse(g):
    return GXElement(g.pattern, g.minus, g.plus)


def _merge_blocks(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return tuple(_merge_blocks(x, y) for x, y in zip(a, b))


def _common_multiple(a, b, pattern):
    """A tree in Alg(X) that both a and b reach by further grafting.

    Computed as the node-wise union of the block trees; this realizes the
    common-multiple step of the group law directly, with no search.
    """
    merged = _merge_blocks(_block_tree_strict(a, pattern),
                           _block_tree_strict(b, pattern))
    return _realize_block(merged, pattern)


def _contractible_blocks(bt, n_ary):
    """Positions (0-based, = first leaf index - 1) of blocks whose children
    are all leaves, with their access paths."""
    out = []

    def width(node):
        if node is None:
            return 1
        return sum(width(c) for c in node)

    def walk(node, offset, path):
        if node is None:
            return
        if all(c is None for c in node):
            out.append((offset, path))
            return
        for i, child in enumerate(node):
            walk(child, offset, path + (i,))
            offset += width(child)

    walk(bt, 0, ())
    return out


def _contract(bt, path):
    if not path:
        return None
    i = path[0]
    return bt[:i] + (_contract(bt[i], path[1:]),) + bt[i + 1:]


def gx_reduce(g):
    """Cancel X-blocks grafted at the same final position in both trees."""
    pattern = g.pattern
    bp = _block_tree_strict(g.plus, pattern)
    bm = _block_tree_strict(g.minus, pattern)
    changed = True
    while changed and bp is not None and bm is not None:
        changed = False
        plus_blocks = dict(_contractible_blocks(bp, pattern.arity))
        for pos, path in _contractible_blocks(bm, pattern.arity):
            if pos in plus_blocks:
                bp = _contract(bp, plus_blocks[pos])
                bm = _contract(bm, path)
                changed = True
                break
    return GXElement(pattern, _realize_block(bp, pattern),
                     _realize_block(bm, pattern))


def gx_multiply(g, h):
    """The group law of G_X: lift both pairs over a common multiple of
    g.minus and h.plus, compose, and cancel common final grafts."""
    if g.pattern != h.pattern:
        raise ValueError("pattern mismatch")
    z = _common_multiple(g.minus, h.plus, g.pattern)
    plus = attach_forest(g.plus, refinement_forest(g.minus, z))
    minus = attach_forest(h.minus, refinement_forest(h.plus, z))
    return gx_reduce(GXElement(g.pattern, plus, minus))


def gx_generator(n, pattern):
    """x_n = (S_{a(n)} . X_n, S_{a(n)+1}) with a(n) = n // (N-1)."""
    if n < 0:
        raise ValueError("generator index must be >= 0")
    a = n // (pattern.arity - 1)
    plus = realize(GraftWord(pattern, basic_form(a, pattern).positions + (n,)))
    minus = realize(basic_form(a + 1, pattern))
    return GXElement(pattern, plus, minus)


def phi(word, pattern):
    """The isomorphism F_N -> G_X sending t_k to x_k."""
    if word.arity != pattern.arity:
        raise ValueError("word arity %d != pattern arity %d"
                         % (word.arity, pattern.arity))
    out = gx_identity(pattern)
    for index, exp in word.letters:
        gen = gx_generator(index, pattern)
        if exp < 0:
            gen = gx_inverse(gen)
        for _ in range(abs(exp)):
            out = gx_multiply(out, gen)
    return out


def _positive_word(bt, n, pattern):
    """Word for the positive element (realize(bt), S_n), emitted by peeling
    final grafts.

    A contractible block at position n*(N-1) matches the final graft of
    S_n and cancels; peeling any other final graft X_k factors off x_k on
    the right.
    """
    shift = pattern.arity - 1
    if bt is None:
        assert n == -1
        return []
    blocks = _contractible_blocks(bt, pattern.arity)
    assert blocks
    last = n * shift
    for pos, path in blocks:
        if pos == last:
            return _positive_word(_contract(bt, path), n - 1, pattern)
    pos, path = max(blocks)
    assert pos < last
    return _positive_word(_contract(bt, path), n - 1, pattern) + [pos]


def gx_to_word(g):
    """Express g as a word in the generators: g = pos . neg^-1 with both
    parts positive.  Round trip: phi(gx_to_word(g), X) == g."""
    shift = g.pattern.arity - 1
    m = (g.plus.leaf_count - 1) // shift
    bp = _block_tree_strict(g.plus, g.pattern)
    bm = _block_tree_strict(g.minus, g.pattern)
    pos = _positive_word(bp, m - 1, g.pattern)
    neg = _positive_word(bm, m - 1, g.pattern)
    letters = [(k, 1) for k in pos] + [(k, -1) for k in reversed(neg)]
    return FNWord(g.pattern.arity, tuple(letters))
