"""Words in the infinite presentation of F_N and their normal forms.

F_N = < t_0, t_1, ... | t_k^-1 t_n t_k = t_{n+N-1}, k < n >.  A word is a
sequence of letters t_i^e with free reduction applied eagerly.  Equality
of words is decided through the faithful grafting-group image; an
independent N-ary oracle lives in `skeinf.oracles`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field


def _normalize(letters):
    out = []
    for index, exp in letters:
        if index < 0:
            raise ValueError("generator index must be >= 0")
        if exp == 0:
            continue
        if out and out[-1][0] == index:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((index, merged))
        else:
            out.append((index, exp))
    return tuple(out)


@dataclass(frozen=True)
class FNWord:
    """A freely reduced word in the generators t_0, t_1, ... of F_N."""

    arity: int
    letters: tuple = field(default=())

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError("arity must be >= 2")
        object.__setattr__(self, "letters", _normalize(self.letters))

    @property
    def is_positive(self):
        return all(e > 0 for _, e in self.letters)

    @property
    def is_empty(self):
        return not self.letters

    def __mul__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch: %d vs %d" % (self.arity, other.arity))
        return FNWord(self.arity, self.letters + other.letters)

    def inverse(self):
        return FNWord(self.arity,
                      tuple((i, -e) for i, e in reversed(self.letters)))

    def __str__(self):
        return format_word(self)


_TOKEN = re.compile(r"t(\d+)(?:\^(-?\d+))?$")


def parse_word(text, arity):
    """Parse whitespace-separated tokens ``t<k>``, ``t<k>^-1``, ``t<k>^<e>``;
    the bare text ``1`` is the empty word."""
    if text.strip() == "1":
        return FNWord(arity)
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError("bad word token %r" % tok)
        letters.append((int(m.group(1)), int(m.group(2) or 1)))
    return FNWord(arity, tuple(letters))


def format_word(w):
    if not w.letters:
        return "1"
    return " ".join("t%d" % i if e == 1 else "t%d^%d" % (i, e)
                    for i, e in w.letters)


def free_reduce(w):
    """Merge adjacent equal-index letters and drop zero exponents."""
    return FNWord(w.arity, w.letters)


def positive_normal_form(w):
    """Split w = pos * neg^-1 with pos, neg positive (or empty) words.

    Inverse letters are pushed rightward with the derived rules
    t_k^-1 t_n = t_{n+N-1} t_k^-1 and t_n^-1 t_k = t_k t_{n+N-1}^-1 for
    k < n.  Each push either cancels a pair or strictly decreases the
    number of (negative, positive) inversions, so the loop terminates.
    """
    shift = w.arity - 1
    seq = []
    for index, exp in w.letters:
        seq.extend([(index, 1 if exp > 0 else -1)] * abs(exp))
    while True:
        for i in range(len(seq) - 1):
            (a, ea), (b, eb) = seq[i], seq[i + 1]
            if ea == -1 and eb == 1:
                break
        else:
            break
        if a == b:
            del seq[i:i + 2]
        elif a < b:
            seq[i:i + 2] = [(b + shift, 1), (a, -1)]
        else:
            seq[i:i + 2] = [(b, 1), (a + shift, -1)]
    pos = [(idx, 1) for idx, e in seq if e == 1]
    neg = [(idx, 1) for idx, e in reversed(seq) if e == -1]
    return FNWord(w.arity, tuple(pos)), FNWord(w.arity, tuple(neg))


def words_equal(w1, w2):
    """True iff w1 = w2 in F_N, decided on grafting-group images."""
    if w1.arity != w2.arity:
        raise ValueError("arity mismatch: %d vs %d" % (w1.arity, w2.arity))
    from . import grafting

    pattern = grafting.default_pattern(w1.arity)
    return grafting.phi(w1, pattern) == grafting.phi(w2, pattern)
