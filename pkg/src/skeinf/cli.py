"""Command-line front end.

Elements are accepted in two notations, auto-detected by the leading
character: tree-pair text ``<tree>|<tree>`` (leading ``(`` or ``L``) and
generator-word text ``x0 x1^-1`` (leading ``x``).  All output is
deterministic; ``--json`` emits machine-readable records.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import coloring, grafting, oracles, presentations, trees

_XTOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


def parse_element(text):
    text = text.strip()
    if text.startswith(("(", "L")):
        return trees.parse_pair(text)
    if text.startswith("x"):
        out = trees.identity()
        for tok in text.split():
            m = _XTOKEN.match(tok)
            if not m:
                raise ValueError("bad generator token %r" % tok)
            gen = trees.x_generator(int(m.group(1)))
            exp = int(m.group(2) or 1)
            if exp < 0:
                gen = trees.inverse(gen)
            for _ in range(abs(exp)):
                out = trees.multiply(out, gen)
        return out
    raise ValueError("element must be '<tree>|<tree>' or an x-generator word")


def _element_json(p):
    return {"plus": trees.serialize(p.plus), "minus": trees.serialize(p.minus)}


def _word_json(w):
    return {"arity": w.arity, "letters": [[k, e] for k, e in w.letters]}


def _emit_pair(p, args):
    if getattr(args, "json", False):
        print(json.dumps(_element_json(p), sort_keys=True))
    else:
        print(trees.format_pair(p))


def _emit_word(w, args):
    if getattr(args, "json", False):
        print(json.dumps(_word_json(w), sort_keys=True))
    else:
        print(presentations.format_word(w))


def _gamma_of(args):
    p = parse_element(args.element)
    if args.subgroup == "vecf":
        return coloring.gamma_vecf(p)
    return coloring.gamma_3col(p)


def cmd_mul(args):
    _emit_pair(trees.multiply(parse_element(args.g), parse_element(args.h)), args)


def cmd_inv(args):
    _emit_pair(trees.inverse(parse_element(args.element)), args)


def cmd_reduce(args):
    _emit_pair(trees.reduce(parse_element(args.element)), args)


def cmd_eval(args):
    p = parse_element(args.element)
    print(trees.eval_pl(p, trees.Dyadic.parse(args.point)))


def cmd_gen(args):
    m = _XTOKEN.match(args.name)
    if m and not m.group(2):
        _emit_pair(trees.x_generator(int(m.group(1))), args)
        return
    m = re.match(r"t(\d+)$", args.name)
    if m:
        pattern = grafting.pattern_by_name(args.pattern)
        word = presentations.FNWord(pattern.arity, ((int(m.group(1)), 1),))
        _emit_pair(grafting.phi(word, pattern).tree_pair(), args)
        return
    raise ValueError("generator must be x<i> or t<i>")


def cmd_gamma(args):
    g = _gamma_of(args)
    if args.dot:
        print(g.to_dot())
    else:
        print(json.dumps(g.to_json(), sort_keys=True))


def cmd_chromatic(args):
    print(coloring.chromatic(_gamma_of(args), args.q))


def cmd_member(args):
    print("true" if coloring.membership(parse_element(args.element),
                                        args.subgroup) else "false")


def cmd_coefficient(args):
    print(coloring.coefficient(parse_element(args.element), args.subgroup))


def cmd_normalize(args):
    p = coloring.normalize_coloring(parse_element(args.element), args.subgroup)
    _emit_pair(p, args)


def cmd_factor(args):
    w = coloring.factor_member(parse_element(args.element), args.subgroup)
    _emit_word(w, args)


def cmd_phi(args):
    pattern = grafting.pattern_by_name(args.pattern)
    word = presentations.parse_word(args.word, pattern.arity)
    _emit_pair(grafting.phi(word, pattern).tree_pair(), args)


def cmd_toword(args):
    pattern = grafting.pattern_by_name(args.pattern)
    p = parse_element(args.element)
    element = grafting.gx_from_pair(p, pattern)
    _emit_word(grafting.gx_to_word(element), args)


def cmd_enumerate(args):
    if args.stats:
        print("leaves\telements\tvecf\t3col")
        for leaves in range(1, args.max_leaves + 1):
            pairs = [p for p in oracles.enumerate_elements(leaves)
                     if p.leaf_count == leaves]
            vecf = sum(coloring.membership(p, "vecf") for p in pairs)
            col3 = sum(coloring.membership(p, "3col") for p in pairs)
            print("%d\t%d\t%d\t%d" % (leaves, len(pairs), vecf, col3))
        return
    for p in oracles.enumerate_elements(args.max_leaves):
        print(trees.format_pair(p))


def _build_parser():
    top = argparse.ArgumentParser(
        prog="skeinf",
        description="Exact arithmetic in Thompson's group F and its "
                    "coloring subgroups.")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, *specs, subgroup=False, pattern=False, jsonable=True):
        p = sub.add_parser(name)
        for spec in specs:
            p.add_argument(*spec[0], **spec[1])
        if subgroup:
            p.add_argument("--subgroup", choices=coloring.SUBGROUPS,
                           default="vecf")
        if pattern:
            p.add_argument("--pattern", default="vecf",
                           help="vecf, 3col, or inline tree text")
        if jsonable:
            p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)
        return p

    elem = (["element"], {})
    add("mul", cmd_mul, (["g"], {}), (["h"], {}))
    add("inv", cmd_inv, elem)
    add("reduce", cmd_reduce, elem)
    add("eval", cmd_eval, elem, (["point"], {"help": "dyadic a/2^p, 0 or 1"}),
        jsonable=False)
    add("gen", cmd_gen, (["name"], {"help": "x<i> or t<i>"}), pattern=True)
    g = add("gamma", cmd_gamma, elem, subgroup=True)
    g.add_argument("--dot", action="store_true")
    add("chromatic", cmd_chromatic, elem,
        (["--q"], {"type": int, "required": True}), subgroup=True,
        jsonable=False)
    add("member", cmd_member, elem, subgroup=True, jsonable=False)
    add("coefficient", cmd_coefficient, elem, subgroup=True, jsonable=False)
    add("normalize", cmd_normalize, elem, subgroup=True)
    add("factor", cmd_factor, elem, subgroup=True)
    add("phi", cmd_phi, (["--word"], {"required": True}), pattern=True)
    add("toword", cmd_toword, elem, pattern=True)
    add("enumerate", cmd_enumerate,
        (["--max-leaves"], {"type": int, "required": True}),
        (["--stats"], {"action": "store_true"}), jsonable=False)
    return top


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        args.func(args)
    except (ValueError, coloring.NotAMemberError,
            coloring.BudgetExceededError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
