"""Binary trees, dyadic partitions, and exact arithmetic in Thompson's group F.

An element of F is a reduced pair of full binary trees with equal leaf
counts.  The pair (plus, minus) acts on [0,1] as the piecewise-linear
homeomorphism carrying the standard dyadic partition of `minus` (domain)
onto the partition of `plus` (range), interval by interval.  All
arithmetic is exact; no floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class TreeSyntaxError(ValueError):
    """Malformed tree text; `offset` is the byte offset of the error."""

    def __init__(self, message, offset):
        super().__init__("%s (offset %d)" % (message, offset))
        self.offset = offset


class Dyadic:
    """A dyadic rational a/2^p in [0,1], stored in lowest terms.

    Text form is ``a/2^p`` with a odd, or the bare endpoints ``0``/``1``.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num, exp=0):
        if num < 0 or exp < 0:
            raise ValueError("dyadic must be nonnegative")
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        if num == 0:
            exp = 0
        if num > (1 << exp):
            raise ValueError("dyadic %d/2^%d exceeds 1" % (num, exp))
        self.num = num
        self.exp = exp

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        den = fr.denominator
        exp = den.bit_length() - 1
        if den != 1 << exp:
            raise ValueError("%s is not dyadic" % fr)
        return cls(fr.numerator, exp)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "0":
            return cls(0)
        if text == "1":
            return cls(1)
        try:
            a, p = text.split("/2^")
            return cls(int(a), int(p))
        except ValueError:
            raise ValueError("bad dyadic %r (want a/2^p, 0 or 1)" % text)

    @property
    def fraction(self):
        return Fraction(self.num, 1 << self.exp)

    def __eq__(self, other):
        return isinstance(other, Dyadic) and (self.num, self.exp) == (other.num, other.exp)

    def __hash__(self):
        return hash((self.num, self.exp))

    def __lt__(self, other):
        return self.fraction < other.fraction

    def __le__(self, other):
        return self.fraction <= other.fraction

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return "%d/2^%d" % (self.num, self.exp)

    def __repr__(self):
        return "Dyadic(%d, %d)" % (self.num, self.exp)


class Tree:
    """A full binary tree.  Leaves are indexed 1..n left to right; the gaps
    between and outside the leaves are indexed 0..n."""

    __slots__ = ("left", "right", "_leaf_count", "_hash")

    def __init__(self, left=None, right=None):
        if (left is None) != (right is None):
            raise ValueError("a caret needs exactly two children")
        self.left = left
        self.right = right
        if left is None:
            self._leaf_count = 1
        else:
            self._leaf_count = left._leaf_count + right._leaf_count
        self._hash = None

    @property
    def is_leaf(self):
        return self.left is None

    @property
    def leaf_count(self):
        return self._leaf_count

    @property
    def caret_count(self):
        return self._leaf_count - 1

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        if self._leaf_count != other._leaf_count:
            return False
        if self.is_leaf:
            return other.is_leaf
        if other.is_leaf:
            return False
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        if self._hash is None:
            if self.is_leaf:
                self._hash = hash("L")
            else:
                self._hash = hash((hash(self.left), hash(self.right)))
        return self._hash

    def __repr__(self):
        return "Tree(%r)" % serialize(self)


LEAF = Tree()


def serialize(t):
    """Render a tree in the grammar  T ::= "L" | "(" T T ")"."""
    parts = []

    def walk(node):
        if node.is_leaf:
            parts.append("L")
        else:
            parts.append("(")
            walk(node.left)
            walk(node.right)
            parts.append(")")

    walk(t)
    return "".join(parts)


def parse_tree(text):
    """Parse the grammar  T ::= "L" | "(" T T ")".  Whitespace-free."""
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(text):
            raise TreeSyntaxError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "L":
            pos += 1
            return LEAF
        if ch == "(":
            pos += 1
            left = node()
            right = node()
            if pos >= len(text) or text[pos] != ")":
                raise TreeSyntaxError("expected ')'", pos)
            pos += 1
            return Tree(left, right)
        raise TreeSyntaxError("expected 'L' or '('", pos)

    t = node()
    if pos != len(text):
        raise TreeSyntaxError("trailing input", pos)
    return t


def carets(t):
    """List (first, split, last) for every caret of t, in preorder.

    `first`..`last` are the 1-based leaf indices spanned by the caret and
    `split` is the last leaf of its left subtree; each internal gap
    b in 1..n-1 is split(c) for exactly one caret c.
    """
    out = []

    def walk(node, offset):
        if node.is_leaf:
            return
        out.append((offset + 1,
                    offset + node.left.leaf_count,
                    offset + node.leaf_count))
        walk(node.left, offset)
        walk(node.right, offset + node.left.leaf_count)

    walk(t, 0)
    return out


def bottom_caret_positions(t):
    """Set of i such that leaves (i, i+1) are the two children of a caret."""
    out = set()

    def walk(node, offset):
        if node.is_leaf:
            return
        if node.left.is_leaf and node.right.is_leaf:
            out.add(offset + 1)
            return
        walk(node.left, offset)
        walk(node.right, offset + node.left.leaf_count)

    walk(t, 0)
    return out


def remove_bottom_caret(t, i):
    """Collapse the caret over leaves (i, i+1) back to a single leaf."""

    def walk(node, offset):
        if (not node.is_leaf and node.left.is_leaf and node.right.is_leaf
                and offset + 1 == i):
            return LEAF
        if node.is_leaf:
            return node
        return Tree(walk(node.left, offset),
                    walk(node.right, offset + node.left.leaf_count))

    out = walk(t, 0)
    if out.leaf_count != t.leaf_count - 1:
        raise ValueError("no bottom caret at leaves (%d, %d)" % (i, i + 1))
    return out


def replace_leaf(t, leaf, subtree):
    """Replace the leaf with 1-based index `leaf` by `subtree`."""
    if not 1 <= leaf <= t.leaf_count:
        raise ValueError("leaf index %d out of range 1..%d" % (leaf, t.leaf_count))

    def walk(node, offset):
        if node.is_leaf:
            return subtree if offset + 1 == leaf else node
        if leaf <= offset + node.left.leaf_count:
            return Tree(walk(node.left, offset), node.right)
        return Tree(node.left, walk(node.right, offset + node.left.leaf_count))

    return walk(t, 0)


def merge(a, b):
    """Least common refinement: the union of the caret sets of a and b."""
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return Tree(merge(a.left, b.left), merge(a.right, b.right))


def refinement_forest(coarse, fine):
    """Per-leaf subtrees of `fine` hanging under the leaves of `coarse`.

    Raises ValueError if `fine` does not refine `coarse`.
    """
    out = []

    def walk(c, f):
        if c.is_leaf:
            out.append(f)
            return
        if f.is_leaf:
            raise ValueError("tree does not refine the coarser tree")
        walk(c.left, f.left)
        walk(c.right, f.right)

    walk(coarse, fine)
    return out


def attach_forest(t, forest):
    """Replace leaf i of t by forest[i-1]."""
    if len(forest) != t.leaf_count:
        raise ValueError("forest size %d != leaf count %d" % (len(forest), t.leaf_count))
    it = iter(forest)

    def walk(node):
        if node.is_leaf:
            return next(it)
        return Tree(walk(node.left), walk(node.right))

    return walk(t)


def is_prefix(a, t):
    """True iff every caret of a is a caret of t at the same position."""
    if a.is_leaf:
        return True
    if t.is_leaf:
        return False
    return is_prefix(a.left, t.left) and is_prefix(a.right, t.right)


@dataclass(frozen=True)
class TreePair:
    """An element of F as an ordered pair of equal-leaf trees."""

    plus: Tree
    minus: Tree

    def __post_init__(self):
        if self.plus.leaf_count != self.minus.leaf_count:
            raise ValueError("leaf-count mismatch: %d vs %d"
                             % (self.plus.leaf_count, self.minus.leaf_count))

    @property
    def leaf_count(self):
        return self.plus.leaf_count

    @property
    def is_reduced(self):
        return not (bottom_caret_positions(self.plus)
                    & bottom_caret_positions(self.minus))

    def __str__(self):
        return format_pair(self)


def parse_pair(text):
    """Parse ``<tree> "|" <tree>``."""
    if "|" not in text:
        raise TreeSyntaxError("expected '<tree>|<tree>'", len(text))
    left, right = text.split("|", 1)
    return TreePair(parse_tree(left), parse_tree(right))


def format_pair(p):
    return "%s|%s" % (serialize(p.plus), serialize(p.minus))


def identity():
    return TreePair(LEAF, LEAF)


def reduce(p):
    """Remove carets present at the same leaf positions in both trees.

    The result is the unique reduced pair representing the same group
    element; idempotent.
    """
    plus, minus = p.plus, p.minus
    while True:
        common = bottom_caret_positions(plus) & bottom_caret_positions(minus)
        if not common:
            return TreePair(plus, minus)
        i = min(common)
        plus = remove_bottom_caret(plus, i)
        minus = remove_bottom_caret(minus, i)


def inverse(g):
    return TreePair(g.minus, g.plus)


def multiply(g, h):
    """Group product: (g*h)(x) = g(h(x)) on the PL-map side.

    The common refinement of g.minus and h.plus is computed by a
    recursive tree merge, both pairs are lifted to it, and the composed
    pair is reduced.
    """
    z = merge(g.minus, h.plus)
    lifted_plus = attach_forest(g.plus, refinement_forest(g.minus, z))
    lifted_minus = attach_forest(h.minus, refinement_forest(h.plus, z))
    return reduce(TreePair(lifted_plus, lifted_minus))


def partition_of(t):
    """Standard dyadic partition carried by t: breakpoints 0=b_0<...<b_n=1."""
    pts = [Fraction(0)]

    def walk(node, lo, hi):
        if node.is_leaf:
            pts.append(hi)
            return
        mid = (lo + hi) / 2
        walk(node.left, lo, mid)
        walk(node.right, mid, hi)

    walk(t, Fraction(0), Fraction(1))
    return [Dyadic.from_fraction(b) for b in pts]


def eval_pl(g, x):
    """Evaluate the PL homeomorphism of g at the dyadic point x."""
    if isinstance(x, Dyadic):
        xf = x.fraction
    else:
        xf = Fraction(x)
    if not 0 <= xf <= 1:
        raise ValueError("point %s outside [0,1]" % xf)
    dom = [b.fraction for b in partition_of(g.minus)]
    ran = [b.fraction for b in partition_of(g.plus)]
    for i in range(len(dom) - 1):
        if dom[i] <= xf <= dom[i + 1]:
            y = ran[i] + (xf - dom[i]) * (ran[i + 1] - ran[i]) / (dom[i + 1] - dom[i])
            return Dyadic.from_fraction(y)
    raise AssertionError("unreachable: %s not located in partition" % xf)


_X0 = TreePair(parse_tree("((LL)L)"), parse_tree("(L(LL))"))


def x_generator(i):
    """The standard generator x_i of F (0-based indexing).

    x_0 = ((LL)L | L(LL)); x_i for i >= 1 hangs x_{i-1}'s trees under i
    left spine edges.  These satisfy x_k^-1 x_n x_k = x_{n+1} for k < n.
    """
    if i < 0:
        raise ValueError("generator index must be >= 0")
    plus, minus = _X0.plus, _X0.minus
    for _ in range(i):
        plus = Tree(LEAF, plus)
        minus = Tree(LEAF, minus)
    return TreePair(plus, minus)
