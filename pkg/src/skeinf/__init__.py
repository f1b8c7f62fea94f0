"""Exact computation in Thompson's group F and its skein-theoretic subgroups:
tree-pair arithmetic, grafting groups G_X with their F_N presentations, and
graph-coloring membership tests for the Jones and 3-colorable subgroups."""

from .trees import (Dyadic, Tree, TreePair, TreeSyntaxError, eval_pl, identity,
                    inverse, multiply, parse_pair, parse_tree, partition_of,
                    reduce, serialize, x_generator)
from .presentations import (FNWord, format_word, free_reduce, parse_word,
                            positive_normal_form, words_equal)
from .grafting import (GXElement, GraftWord, Pattern, PATTERN_3COL,
                       PATTERN_VECF, basic_form, decompose, decompose_basic,
                       default_pattern, graft, gx_from_pair, gx_generator,
                       gx_identity,
                       gx_inverse, gx_multiply, gx_to_word, phi, realize,
                       vertical_commute)
from .coloring import (BudgetExceededError, Coloring, GammaGraph,
                       NotAMemberError, OddCycleWitness, chromatic,
                       coefficient, coefficient_raw, factor_member,
                       gamma_3col, gamma_vecf, insert_caret, membership,
                       normalize_coloring, three_color, two_color)

__all__ = [name for name in dir() if not name.startswith("_")]
