"""Command-line front end.

Every subcommand reads formulas from -e/--expr flags or from files named
as positional arguments (one formula per file), prints deterministic
text or JSON, and signals its verdict through the exit code: 0 for a
successful affirmative or neutral result, 1 for a negative verdict
(unsat, non-entailment, not prime, not a member), 2 for usage, parse,
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decision import entails, sat
from .dnf import cnf4, dnf4
from .families import FamilySpec, generate, parse_qbf_file, qbf_encode
from .formulas import And, Box, Dia, Formula, Neg, Or, fold_or, nnf, unparse
from .generate import gen_implicants, gen_pi
from .grammar import DefId, SyntacticKind, is_member
from .parser import parse
from .recognize import test_implicant_report, test_pi_report
from .semantics import holds, parse_model


def _collapse(f: Formula) -> Formula:
    """Drop duplicate disjuncts, recursively; display helper only."""
    if isinstance(f, Or):
        parts: list[Formula] = []
        stack = [f.right, f.left]
        while stack:
            g = stack.pop()
            if isinstance(g, Or):
                stack.append(g.right)
                stack.append(g.left)
                continue
            g = _collapse(g)
            if g not in parts:
                parts.append(g)
        return fold_or(parts)
    if isinstance(f, And):
        return And(_collapse(f.left), _collapse(f.right))
    if isinstance(f, Neg):
        return Neg(_collapse(f.child))
    if isinstance(f, Box):
        return Box(_collapse(f.child))
    if isinstance(f, Dia):
        return Dia(_collapse(f.child))
    return f


def _show(f: Formula, args) -> str:
    if getattr(args, "simplify", False):
        f = _collapse(f)
    return unparse(f)


def _formulas(args) -> list[Formula]:
    out = [parse(text) for text in (args.expr or [])]
    for path in getattr(args, "files", []) or []:
        with open(path, "r", encoding="utf-8") as fh:
            out.append(parse(fh.read()))
    return out


def _one_formula(args) -> Formula:
    fs = _formulas(args)
    if len(fs) != 1:
        raise ValueError("expected exactly one formula, got %d" % len(fs))
    return fs[0]


def _emit_lines(args, formulas) -> None:
    texts = [_show(f, args) for f in formulas]
    if args.json:
        print(json.dumps(texts))
    else:
        for t in texts:
            print(t)


def _cmd_sat(args) -> int:
    ok = sat(_one_formula(args))
    print(json.dumps({"sat": ok}) if args.json else ("sat" if ok else "unsat"))
    return 0 if ok else 1


def _cmd_entail(args) -> int:
    fs = _formulas(args)
    if len(fs) != 2:
        raise ValueError("expected exactly two formulas, got %d" % len(fs))
    ok = entails(fs[0], fs[1])
    print(json.dumps({"entails": ok}) if args.json else ("yes" if ok else "no"))
    return 0 if ok else 1


def _cmd_eval(args) -> int:
    f = _one_formula(args)
    with open(args.model, "r", encoding="utf-8") as fh:
        model = parse_model(fh.read())
    ok = holds(model, args.world, f)
    print(json.dumps({"holds": ok}) if args.json else ("true" if ok else "false"))
    return 0 if ok else 1


def _cmd_nnf(args) -> int:
    text = _show(nnf(_one_formula(args)), args)
    print(json.dumps({"formula": text}) if args.json else text)
    return 0


def _cmd_dnf4(args) -> int:
    _emit_lines(args, [t.assemble() for t in dnf4(_one_formula(args))])
    return 0


def _cmd_cnf4(args) -> int:
    _emit_lines(args, cnf4(_one_formula(args)))
    return 0


def _cmd_genpi(args) -> int:
    f = _one_formula(args)
    mode = "iterative" if args.iter else "eager"
    _emit_lines(args, gen_pi(f, mode=mode))
    return 0


def _cmd_implicants(args) -> int:
    _emit_lines(args, gen_implicants(_one_formula(args)))
    return 0


def _report(args, out) -> int:
    verdict = "yes" if out.verdict else "no"
    if args.json:
        obj = {"verdict": verdict, "step": out.step}
        if out.witness is not None:
            obj["universe"] = [unparse(x) for x in out.witness.x_set]
            obj["subset"] = (None if out.witness.subset is None
                             else [unparse(x) for x in out.witness.subset])
        print(json.dumps(obj))
    else:
        print(verdict)
        if args.trace:
            print("step %d" % out.step)
            if out.witness is not None:
                print("universe: %s"
                      % ", ".join(unparse(x) for x in out.witness.x_set))
                if out.witness.subset is not None:
                    shown = ", ".join(unparse(x) for x in out.witness.subset)
                    print("subset: %s" % (shown if shown else "(empty)"))
    return 0 if out.verdict else 1


def _cmd_testpi(args) -> int:
    return _report(args, test_pi_report(parse(args.clause), parse(args.formula)))


def _cmd_testimplicant(args) -> int:
    return _report(args, test_implicant_report(parse(args.term), parse(args.formula)))


def _cmd_classify(args) -> int:
    f = _one_formula(args)
    ok = is_member(f, DefId(args.definition), SyntacticKind(args.kind))
    print(json.dumps({"member": ok}) if args.json else ("yes" if ok else "no"))
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    if args.family == "qbf":
        if not args.file:
            raise ValueError("the qbf family needs --file")
        with open(args.file, "r", encoding="utf-8") as fh:
            formula = qbf_encode(parse_qbf_file(fh.read()))
        distinguished: list[Formula] = []
    else:
        if args.file:
            raise ValueError("only the qbf family reads --file")
        spec = FamilySpec(args.family, n=args.n, k=args.k,
                          vars=args.n, seed=args.seed)
        formula, distinguished = generate(spec)
    if args.json:
        print(json.dumps({
            "formula": _show(formula, args),
            "distinguished": [_show(d, args) for d in distinguished],
        }))
    else:
        print(_show(formula, args))
        for d in distinguished:
            print(_show(d, args))
    return 0


def _add_formula_inputs(sub, two=False):
    sub.add_argument("-e", "--expr", action="append", metavar="EXPR",
                     help="inline formula" + (" (repeatable)" if two else ""))
    sub.add_argument("files", nargs="*", metavar="FILE",
                     help="file holding one formula")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpi",
        description="Prime implicates and implicants for the modal logic K.")
    subs = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sub = subs.add_parser(name, help=help_text)
        sub.set_defaults(func=func)
        sub.add_argument("--json", action="store_true",
                         help="machine-readable output")
        return sub

    sub = add("sat", _cmd_sat, "decide satisfiability")
    _add_formula_inputs(sub)

    sub = add("entail", _cmd_entail, "decide entailment between two formulas")
    _add_formula_inputs(sub, two=True)

    sub = add("eval", _cmd_eval, "evaluate a formula at a world of a model")
    _add_formula_inputs(sub)
    sub.add_argument("--model", required=True, metavar="FILE",
                     help="model fixture file")
    sub.add_argument("--world", required=True, metavar="NAME",
                     help="world to evaluate at")

    sub = add("nnf", _cmd_nnf, "print the negation normal form")
    _add_formula_inputs(sub)
    sub.add_argument("--simplify", action="store_true",
                     help="collapse duplicate disjuncts in the output")

    sub = add("dnf4", _cmd_dnf4, "print the disjunctive terms, one per line")
    _add_formula_inputs(sub)
    sub.add_argument("--simplify", action="store_true",
                     help="collapse duplicate disjuncts in the output")

    sub = add("cnf4", _cmd_cnf4, "print the conjunctive clauses, one per line")
    _add_formula_inputs(sub)
    sub.add_argument("--simplify", action="store_true",
                     help="collapse duplicate disjuncts in the output")

    sub = add("genpi", _cmd_genpi, "print the prime implicates, one per line")
    _add_formula_inputs(sub)
    sub.add_argument("--iter", action="store_true",
                     help="stream candidates instead of materializing")
    sub.add_argument("--simplify", action="store_true",
                     help="collapse duplicate disjuncts in the output")

    sub = add("implicants", _cmd_implicants,
              "print the prime implicants, one per line")
    _add_formula_inputs(sub)
    sub.add_argument("--simplify", action="store_true",
                     help="collapse duplicate disjuncts in the output")

    sub = add("testpi", _cmd_testpi, "decide whether a clause is a prime implicate")
    sub.add_argument("--clause", required=True, metavar="EXPR")
    sub.add_argument("--formula", required=True, metavar="EXPR")
    sub.add_argument("--trace", action="store_true",
                     help="print the deciding step and witness")

    sub = add("testimplicant", _cmd_testimplicant,
              "decide whether a term is a prime implicant")
    sub.add_argument("--term", required=True, metavar="EXPR")
    sub.add_argument("--formula", required=True, metavar="EXPR")
    sub.add_argument("--trace", action="store_true",
                     help="print the deciding step and witness")

    sub = add("classify", _cmd_classify,
              "check membership in a clause/term grammar")
    _add_formula_inputs(sub)
    sub.add_argument("--def", dest="definition", required=True,
                     choices=[d.value for d in DefId])
    sub.add_argument("--kind", required=True,
                     choices=[k.value for k in SyntacticKind])

    sub = add("gen", _cmd_gen, "emit a formula family instance")
    sub.add_argument("--family", required=True,
                     choices=["thm11", "thm18", "thm19", "thm21", "random", "qbf"])
    sub.add_argument("--n", type=int, default=1,
                     help="family index (variable count for random)")
    sub.add_argument("--k", type=int, default=1, help="chain depth for thm11")
    sub.add_argument("--seed", type=int, default=0, help="seed for random")
    sub.add_argument("--file", metavar="FILE", help="QBF instance file")
    sub.add_argument("--simplify", action="store_true",
                     help="collapse duplicate disjuncts in the output")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
