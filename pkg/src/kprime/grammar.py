"""Membership tests for the D1-D5 literal/clause/term grammars and the
structured D4 clause/term views used by the decomposition algorithms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .formulas import And, Box, Dia, Formula, Neg, Or, Var, fold_and, fold_or


class DefId(Enum):
    D1 = "d1"
    D2 = "d2"
    D3A = "d3a"
    D3B = "d3b"
    D4 = "d4"
    D5 = "d5"


class SyntacticKind(Enum):
    LITERAL = "literal"
    CLAUSE = "clause"
    TERM = "term"


class GrammarError(ValueError):
    """The formula is not derivable from the required nonterminal."""


def _prop_lit(f):
    return isinstance(f, Var) or (isinstance(f, Neg) and isinstance(f.child, Var))


def is_nnf(f) -> bool:
    if isinstance(f, Var):
        return True
    if isinstance(f, Neg):
        return isinstance(f.child, Var)
    if isinstance(f, (And, Or)):
        return is_nnf(f.left) and is_nnf(f.right)
    if isinstance(f, (Box, Dia)):
        return is_nnf(f.child)
    return False


# D1: literals close under both modalities, clauses/terms recurse through them

def _lit_d1(f):
    if _prop_lit(f):
        return True
    if isinstance(f, (Box, Dia)):
        return _lit_d1(f.child)
    return False


def _clause_d1(f):
    if _prop_lit(f):
        return True
    if isinstance(f, (Box, Dia)):
        return _clause_d1(f.child)
    if isinstance(f, Or):
        return _clause_d1(f.left) and _clause_d1(f.right)
    return False


def _term_d1(f):
    if _prop_lit(f):
        return True
    if isinstance(f, (Box, Dia)):
        return _term_d1(f.child)
    if isinstance(f, And):
        return _term_d1(f.left) and _term_d1(f.right)
    return False


# D2: clauses/terms are disjunctions/conjunctions of D1 literals

def _clause_d2(f):
    if isinstance(f, Or):
        return _clause_d2(f.left) and _clause_d2(f.right)
    return _lit_d1(f)


def _term_d2(f):
    if isinstance(f, And):
        return _term_d2(f.left) and _term_d2(f.right)
    return _lit_d1(f)


# D3 clause grammar, shared by D3a and D3b

def _clause_d3(f):
    if _prop_lit(f):
        return True
    if isinstance(f, Box):
        return _clause_d3(f.child)
    if isinstance(f, Dia):
        return _conj_d3(f.child)
    if isinstance(f, Or):
        return _clause_d3(f.left) and _clause_d3(f.right)
    return False


def _conj_d3(f):
    if isinstance(f, And):
        return _conj_d3(f.left) and _conj_d3(f.right)
    return _clause_d3(f)


def _term_d3a(f):
    if _prop_lit(f):
        return True
    if isinstance(f, Box):
        return _disj_d3a(f.child)
    if isinstance(f, Dia):
        return _term_d3a(f.child)
    if isinstance(f, And):
        return _term_d3a(f.left) and _term_d3a(f.right)
    return False


def _disj_d3a(f):
    if isinstance(f, Or):
        return _disj_d3a(f.left) and _disj_d3a(f.right)
    return _term_d3a(f)


def _lit_d3b(f):
    if _prop_lit(f):
        return True
    if isinstance(f, Box):
        return _clause_d3(f.child)
    if isinstance(f, Dia):
        return _conj_d3(f.child)
    return False


def _term_d3b(f):
    if isinstance(f, And):
        return _term_d3b(f.left) and _term_d3b(f.right)
    return _lit_d3b(f)


# D4: modal literals wrap arbitrary NNF bodies

def _lit_d4(f):
    if _prop_lit(f):
        return True
    if isinstance(f, (Box, Dia)):
        return is_nnf(f.child)
    return False


def _clause_d4(f):
    if isinstance(f, Or):
        return _clause_d4(f.left) and _clause_d4(f.right)
    return _lit_d4(f)


def _term_d4(f):
    if isinstance(f, And):
        return _term_d4(f.left) and _term_d4(f.right)
    return _lit_d4(f)


# D5: box bodies are clauses, diamond bodies are terms

def _lit_d5(f):
    if _prop_lit(f):
        return True
    if isinstance(f, Box):
        return _clause_d5(f.child)
    if isinstance(f, Dia):
        return _term_d5(f.child)
    return False


def _clause_d5(f):
    if isinstance(f, Or):
        return _clause_d5(f.left) and _clause_d5(f.right)
    return _lit_d5(f)


def _term_d5(f):
    if isinstance(f, And):
        return _term_d5(f.left) and _term_d5(f.right)
    return _lit_d5(f)


_MEMBERS = {
    (DefId.D1, SyntacticKind.LITERAL): _lit_d1,
    (DefId.D1, SyntacticKind.CLAUSE): _clause_d1,
    (DefId.D1, SyntacticKind.TERM): _term_d1,
    (DefId.D2, SyntacticKind.LITERAL): _lit_d1,
    (DefId.D2, SyntacticKind.CLAUSE): _clause_d2,
    (DefId.D2, SyntacticKind.TERM): _term_d2,
    (DefId.D3A, SyntacticKind.LITERAL): _lit_d1,
    (DefId.D3A, SyntacticKind.CLAUSE): _clause_d3,
    (DefId.D3A, SyntacticKind.TERM): _term_d3a,
    (DefId.D3B, SyntacticKind.LITERAL): _lit_d3b,
    (DefId.D3B, SyntacticKind.CLAUSE): _clause_d3,
    (DefId.D3B, SyntacticKind.TERM): _term_d3b,
    (DefId.D4, SyntacticKind.LITERAL): _lit_d4,
    (DefId.D4, SyntacticKind.CLAUSE): _clause_d4,
    (DefId.D4, SyntacticKind.TERM): _term_d4,
    (DefId.D5, SyntacticKind.LITERAL): _lit_d5,
    (DefId.D5, SyntacticKind.CLAUSE): _clause_d5,
    (DefId.D5, SyntacticKind.TERM): _term_d5,
}


def is_member(f: Formula, d: DefId, k: SyntacticKind) -> bool:
    """True iff f is derivable from nonterminal k of grammar d, with And/Or
    read n-ary."""
    return _MEMBERS[(d, k)](f)


def _flatten(f, node):
    out = []
    todo = [f]
    while todo:
        g = todo.pop()
        if isinstance(g, node):
            todo.append(g.right)
            todo.append(g.left)
        else:
            out.append(g)
    return out


def _dedup(parts):
    return tuple(dict.fromkeys(parts))


@dataclass(frozen=True)
class ClauseView4:
    """A D4 clause split into propositional, diamond, and box disjuncts.

    gammas/diamonds/boxes keep source order; diamonds and boxes store the
    bodies. parts keeps the deduplicated disjuncts themselves, in source
    order, so assemble() rebuilds the clause faithfully.
    """

    gammas: tuple[Formula, ...]
    diamonds: tuple[Formula, ...]
    boxes: tuple[Formula, ...]
    parts: tuple[Formula, ...]

    def assemble(self) -> Formula:
        return fold_or(self.parts)

    def __str__(self) -> str:
        return str(self.assemble())


@dataclass(frozen=True)
class TermView4:
    """A D4 term split into propositional literals L_T, diamond bodies D_T,
    and box bodies B_T; beta() is the conjunction of B_T (None for the
    empty conjunction, read as the tautology)."""

    lits: tuple[Formula, ...]
    diamonds: tuple[Formula, ...]
    boxes: tuple[Formula, ...]
    parts: tuple[Formula, ...]

    def beta(self):
        return fold_and(self.boxes)

    def assemble(self) -> Formula:
        return fold_and(self.parts)

    def __str__(self) -> str:
        return str(self.assemble())


def view4(f: Formula, k: SyntacticKind):
    """Structured view of a D4 clause or term; raises GrammarError
    otherwise. Duplicate disjuncts/conjuncts collapse to the first copy."""
    if k is SyntacticKind.CLAUSE:
        if not _clause_d4(f):
            raise GrammarError("not a d4 clause: %s" % f)
        parts = _dedup(_flatten(f, Or))
        gammas = tuple(p for p in parts if _prop_lit(p))
        diamonds = tuple(p.child for p in parts if isinstance(p, Dia))
        boxes = tuple(p.child for p in parts if isinstance(p, Box))
        return ClauseView4(gammas, diamonds, boxes, parts)
    if k is SyntacticKind.TERM:
        if not _term_d4(f):
            raise GrammarError("not a d4 term: %s" % f)
        parts = _dedup(_flatten(f, And))
        lits = tuple(p for p in parts if _prop_lit(p))
        diamonds = tuple(p.child for p in parts if isinstance(p, Dia))
        boxes = tuple(p.child for p in parts if isinstance(p, Box))
        return TermView4(lits, diamonds, boxes, parts)
    raise GrammarError("view4 needs kind clause or term, got %s" % k)
