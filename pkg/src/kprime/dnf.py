"""Decomposition of a formula into satisfiable D4 terms, the dual clausal
form, and the per-term candidate entries used by implicate generation."""

from __future__ import annotations

from dataclasses import dataclass

from .decision import _sat_nnf, surface_branches
from .formulas import And, Box, Dia, Formula, Neg, dual_negate, fold_and, nnf
from .grammar import TermView4


def _prop_consistent(lits):
    sign: dict[str, bool] = {}
    for p in lits:
        name, v = (p.child.name, False) if isinstance(p, Neg) else (p.name, True)
        if sign.setdefault(name, v) != v:
            return False
    return True


def _split(parts):
    lits = tuple(p for p in parts if not isinstance(p, (Box, Dia)))
    diamonds = tuple(p.child for p in parts if isinstance(p, Dia))
    boxes = tuple(p.child for p in parts if isinstance(p, Box))
    return lits, diamonds, boxes


def _modally_consistent(diamonds, boxes):
    # propositional consistency is already guaranteed by the branch stream
    if not diamonds:
        return True
    chi = fold_and(boxes)
    return all(_sat_nnf(p if chi is None else And(p, chi)) for p in diamonds)


def dnf4(f: Formula):
    """Stream the satisfiable D4 terms whose disjunction is equivalent to f.

    Terms come in surface-branch order of nnf(f); structurally identical
    terms are emitted once; an empty stream means f is unsatisfiable.
    """
    seen = set()
    for parts in surface_branches(nnf(f)):
        if parts in seen:
            continue
        seen.add(parts)
        lits, diamonds, boxes = _split(parts)
        if not _modally_consistent(diamonds, boxes):
            continue
        yield TermView4(lits, diamonds, boxes, parts)


def cnf4(f: Formula) -> tuple[Formula, ...]:
    """D4 clauses whose conjunction is equivalent to f, by duality; the
    empty tuple iff f is a tautology."""
    return tuple(
        dual_negate(t.assemble()) for t in dnf4(dual_negate(f))
    )


@dataclass(frozen=True)
class DeltaSet:
    """Candidate entries contributed by one D4 term: its propositional
    literals, the box over beta, and one diamond per diamond body, each
    strengthened by beta."""

    entries: tuple[Formula, ...]


def delta_set(t: TermView4) -> DeltaSet:
    """Entries implied by the satisfiable term t, in canonical order:
    L_T first, then the box over beta_T when boxes exist, then one
    diamond entry per member of D_T."""
    if not (_prop_consistent(t.lits) and _modally_consistent(t.diamonds, t.boxes)):
        raise ValueError("delta_set needs a satisfiable term: %s" % t.assemble())
    beta = t.beta()
    entries = list(t.lits)
    if t.boxes:
        entries.append(Box(beta))
    for zeta in t.diamonds:
        entries.append(Dia(zeta if beta is None else And(zeta, beta)))
    return DeltaSet(tuple(dict.fromkeys(entries)))
