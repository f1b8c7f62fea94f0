"""Gap graphs of tree pairs, coloring oracles, and subgroup membership.

For a tree pair (T+, T-) drawn with T+ above and T- below a common leaf
line, the regions between consecutive leaves (and outside the extreme
leaves) are the gaps 0..n.  Each caret contributes adjacency between the
gap left of its span and the gap under its split leaf; the resulting
multigraph decides membership in the vacuum-stabilizer subgroups:
bipartiteness for the Jones subgroup, 3-colorability of the dual of the
glued cubic graph for the 3-colorable subgroup.  Members factor
constructively into F_3 / F_4 generator words.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import grafting, trees
from .grafting import PATTERN_3COL, PATTERN_VECF
from .trees import LEAF, Tree, TreePair, carets, replace_leaf

SUBGROUPS = ("vecf", "3col")


class NotAMemberError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


def _check_subgroup(subgroup):
    if subgroup not in SUBGROUPS:
        raise ValueError("unknown subgroup %r (want 'vecf' or '3col')" % subgroup)


@dataclass(frozen=True)
class GammaGraph:
    """Loop-free multigraph on the gap vertices 0..n of a tree pair."""

    vertex_count: int
    edges: tuple  # sorted pairs (i, j) with i < j, repeated per multiplicity

    def __post_init__(self):
        n = self.vertex_count
        norm = []
        for i, j in self.edges:
            if i > j:
                i, j = j, i
            if i == j:
                raise ValueError("loop at vertex %d" % i)
            if i < 0 or j >= n:
                raise ValueError("edge (%d,%d) out of range" % (i, j))
            norm.append((i, j))
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))

    def adjacency(self):
        adj = {v: set() for v in range(self.vertex_count)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_json(self):
        return {"vertices": self.vertex_count,
                "edges": [[i, j] for i, j in self.edges]}

    def to_dot(self):
        lines = ["graph gamma {"]
        for v in range(self.vertex_count):
            lines.append("  %d;" % v)
        for i, j in self.edges:
            lines.append("  %d -- %d;" % (i, j))
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Coloring:
    """A proper coloring, vertex -> color index."""

    colors: tuple

    def __getitem__(self, v):
        return self.colors[v]


@dataclass(frozen=True)
class OddCycleWitness:
    """A closed walk of odd length certifying non-bipartiteness."""

    vertices: tuple


def gamma_vecf(p):
    """Gap graph for the Jones subgroup: one edge {first(c)-1, split(c)} per
    caret of either tree (2(n-1) edges for n leaves)."""
    n = p.leaf_count
    edges = []
    for t in (p.plus, p.minus):
        for first, split, _last in carets(t):
            edges.append((first - 1, split))
    return GammaGraph(n + 1, tuple(edges))


def gamma_3col(p):
    """Dual graph of the glued cubic graph: per caret of either tree the two
    edges {first(c)-1, split(c)} and {split(c), last(c)}, plus the closure
    edge {0, n}."""
    n = p.leaf_count
    edges = [(0, n)]
    for t in (p.plus, p.minus):
        for first, split, last in carets(t):
            edges.append((first - 1, split))
            edges.append((split, last))
    return GammaGraph(n + 1, tuple(edges))


def two_color(g):
    """BFS 2-coloring per component, or an explicit odd closed walk."""
    adj = {v: sorted(n) for v, n in g.adjacency().items()}
    color = {}
    parent = {}
    for start in range(g.vertex_count):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    return OddCycleWitness(_odd_walk(parent, v, u))
    return Coloring(tuple(color[v] for v in range(g.vertex_count)))


def _odd_walk(parent, v, u):
    def ancestry(x):
        path = [x]
        while parent[x] is not None:
            x = parent[x]
            path.append(x)
        return path

    pv, pu = ancestry(v), ancestry(u)
    while len(pv) > 1 and len(pu) > 1 and pv[-2] == pu[-2]:
        pv.pop()
        pu.pop()
    walk = pv + pu[-2::-1] + [v]
    assert len(walk) % 2 == 0  # closed walk with an odd number of edges
    return tuple(walk)


def three_color(g):
    """Exact backtracking 3-coloring with forward pruning, or None.

    Vertices are assigned in index order, so only the already-colored
    earlier neighbors constrain each choice.
    """
    n = g.vertex_count
    earlier = [[] for _ in range(n)]
    for i, j in g.edges:  # normalized i < j
        earlier[j].append(i)
    colors = [None] * n

    def assign(v):
        if v == n:
            return True
        for c in range(3):
            for u in earlier[v]:
                if colors[u] == c:
                    break
            else:
                colors[v] = c
                if assign(v + 1):
                    return True
        return False

    if assign(0):
        return Coloring(tuple(colors))
    return None


def proper_colorings(g, q=3, fix_first=None, limit=None):
    """Lexicographic stream of proper q-colorings (as tuples).

    `fix_first` pins the color of vertex 0; `limit` caps the output.
    """
    adj = g.adjacency()
    n = g.vertex_count
    colors = [None] * n
    count = 0

    def assign(v):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if v == n:
            count += 1
            yield tuple(colors)
            return
        choices = [fix_first] if v == 0 and fix_first is not None else range(q)
        for c in choices:
            if all(colors[u] != c for u in adj[v] if u < v):
                colors[v] = c
                yield from assign(v + 1)
                colors[v] = None

    yield from assign(0)


def chromatic(g, q):
    """Exact number of proper q-colorings, by deletion-contraction.

    Multi-edges collapse to simple edges; a contraction that would create
    a loop contributes 0.  Isolated vertices factor out as powers of q.
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    simple = frozenset((i, j) for i, j in g.edges)
    isolated = g.vertex_count - len(_support(simple))
    return q ** isolated * _chrom(simple, q, _CHROM_MEMO.setdefault(q, {}))


_CHROM_MEMO = {}  # q -> {edge set -> count}; subgraphs recur heavily


def _support(edges):
    return {v for e in edges for v in e}


def _is_connected(edges, support):
    adj = {v: set() for v in support}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    start = next(iter(support))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(support)


def _chrom(edges, q, memo):
    """Proper q-colorings of the graph induced on the support of `edges`."""
    if not edges:
        return 1
    hit = memo.get(edges)
    if hit is not None:
        return hit
    support = _support(edges)
    v, m = len(support), len(edges)
    if _is_connected(edges, support):
        if m == v - 1:  # tree
            out = q * (q - 1) ** m
            memo[edges] = out
            return out
        if m == v:
            degree = {}
            for i, j in edges:
                degree[i] = degree.get(i, 0) + 1
                degree[j] = degree.get(j, 0) + 1
            if all(d == 2 for d in degree.values()):  # the cycle C_v
                out = (q - 1) ** v + ((-1) ** v) * (q - 1)
                memo[edges] = out
                return out
    a, b = min(edges)
    deleted = edges - {(a, b)}
    contracted = frozenset(
        pair for x, y in deleted
        for pair in [tuple(sorted((a if x == b else x, a if y == b else y)))]
        if pair[0] != pair[1])
    d_iso = len(support) - len(_support(deleted))
    c_iso = (len(support) - 1) - len(_support(contracted))
    out = (q ** d_iso * _chrom(deleted, q, memo)
           - q ** c_iso * _chrom(contracted, q, memo))
    memo[edges] = out
    return out


def membership(p, subgroup):
    """Vacuum-stabilizer membership: bipartiteness of the vecf gap graph,
    3-colorability of the 3col gap graph."""
    _check_subgroup(subgroup)
    if subgroup == "vecf":
        return isinstance(two_color(gamma_vecf(p)), Coloring)
    return three_color(gamma_3col(p)) is not None


def coefficient(p, subgroup):
    """Normalized vacuum matrix coefficient: the membership indicator."""
    return 1 if membership(p, subgroup) else 0


def coefficient_raw(p):
    """The raw vecf matrix coefficient (1/2) * Chr(Gamma, 2).

    Evaluates to 2 (not 1) on the identity because the two outer gaps are
    kept distinct; `coefficient` is the normalized indicator.
    """
    return Fraction(chromatic(gamma_vecf(p), 2), 2)


def insert_caret(p, leaf):
    """Replace the given leaf by a caret in both trees; the group element
    is unchanged and the gap graph gains one vertex."""
    if not 1 <= leaf <= p.leaf_count:
        raise ValueError("leaf %d out of range 1..%d" % (leaf, p.leaf_count))
    caret = Tree(LEAF, LEAF)
    return TreePair(replace_leaf(p.plus, leaf, caret),
                    replace_leaf(p.minus, leaf, caret))


def _alternating_coloring(g):
    """2-coloring with each component flipped so its leftmost vertex matches
    the target parity; assumes g is bipartite."""
    base = two_color(g)
    assert isinstance(base, Coloring)
    adj = g.adjacency()
    colors = list(base.colors)
    seen = set()
    for start in range(g.vertex_count):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        if colors[start] != start % 2:
            for v in comp:
                colors[v] = 1 - colors[v]
    return colors


def _cyclic_prefix(colors):
    """Longest prefix of gaps following a constant cyclic step (+1 or +2
    mod 3, i.e. the acb pattern up to relabeling); returns (length, full)."""
    n = len(colors) - 1
    best = 0
    for step in (1, 2):
        i = 0
        while i < n and colors[i + 1] == (colors[i] + step) % 3:
            i += 1
        best = max(best, i)
    return best, best == n


_COLORING_ENUM_CAP = 4000


def normalize_coloring(p, subgroup, budget=None):
    """Equivalent representative whose gap graph colors as the canonical
    left-to-right pattern: strict alternation for vecf, the period-3
    pattern for 3col.  Built by inserting carets at pattern violations.
    """
    _check_subgroup(subgroup)
    if not membership(p, subgroup):
        raise NotAMemberError("element is not a %s member" % subgroup)
    if budget is None:
        budget = 2 * p.leaf_count + 8
    cur = p
    for _ in range(budget + 1):
        if subgroup == "vecf":
            colors = _alternating_coloring(gamma_vecf(cur))
            viol = next((i for i in range(len(colors) - 1)
                         if colors[i] == colors[i + 1]), None)
            if viol is None:
                return cur
        else:
            g = gamma_3col(cur)
            viol = None
            best = -1
            for colors in proper_colorings(g, 3, fix_first=0,
                                           limit=_COLORING_ENUM_CAP):
                plen, full = _cyclic_prefix(colors)
                if full:
                    return cur
                if plen > best:
                    best, viol = plen, plen
            if viol is None:
                raise NotAMemberError("no proper 3-coloring")
        cur = insert_caret(cur, viol + 1)
    raise BudgetExceededError("normalization budget exceeded for %s" % p)


def factor_member(p, subgroup, max_nodes=50000):
    """Factor a subgroup member into F_3 / F_4 generators.

    Searches representatives of p (normalized first, then by breadth-first
    caret insertion) until both trees decompose over the subgroup pattern,
    then reads the word off the grafting-group element.  Round trip: the
    F-image of phi(result) equals reduce(p).
    """
    _check_subgroup(subgroup)
    pattern = PATTERN_VECF if subgroup == "vecf" else PATTERN_3COL
    if not membership(p, subgroup):
        raise NotAMemberError("element is not a %s member" % subgroup)
    target = trees.reduce(p)
    seeds = []
    try:
        seeds.append(normalize_coloring(target, subgroup))
    except BudgetExceededError:
        pass
    try:
        g = grafting.gx_from_pair(target, pattern, max_nodes=max_nodes,
                                  seeds=seeds)
    except ValueError:
        raise BudgetExceededError(
            "factorization search budget exceeded for %s" % p)
    word = grafting.gx_to_word(g)
    assert grafting.phi(word, pattern).tree_pair() == target
    return word
