"""Recognition of prime implicates and prime implicants.

The main test splits a clause into its propositional, box, and diamond
parts and checks each against a strengthened remainder of the input
formula.  The diamond check searches subsets of the modal bodies found at
the top propositional level of the formula; a qualifying subset witnesses
a strictly stronger implicate.
"""

from dataclasses import dataclass
from itertools import combinations

from .decision import entails, is_tautology, sat
from .dnf import dnf4
from .formulas import (
    And,
    Box,
    Dia,
    Formula,
    Or,
    bottom,
    dual_negate,
    fold_and,
    fold_or,
    nnf,
)
from .grammar import (
    ClauseView4,
    DefId,
    GrammarError,
    SyntacticKind,
    is_member,
    view4,
)


@dataclass(frozen=True, slots=True)
class WitnessUniverse:
    """Top-level modal bodies of a formula, plus an optional chosen subset."""

    x_set: tuple[Formula, ...]
    subset: tuple[Formula, ...] | None = None


@dataclass(frozen=True, slots=True)
class TestOutcome:
    """Verdict of a recognition run and the step that settled it."""

    verdict: bool
    step: int
    witness: WitnessUniverse | None = None


def witness_universe(f: Formula) -> WitnessUniverse:
    """Bodies of modal literals outside any modal scope in nnf(f)."""
    seen: dict[Formula, None] = {}
    todo = [nnf(f)]
    while todo:
        g = todo.pop()
        if isinstance(g, (And, Or)):
            todo.append(g.right)
            todo.append(g.left)
        elif isinstance(g, (Box, Dia)):
            seen.setdefault(g.child, None)
    return WitnessUniverse(tuple(seen))


def normalize_clause(l: ClauseView4) -> ClauseView4:
    """Equivalent clause with no redundant disjunct and absorbing boxes.

    Redundant disjuncts are deleted first (left-to-right, restarting after
    each hit), then every box body absorbs the diamond bodies, then the
    deletion scan runs once more; a deletion after absorption cannot break
    the absorption property, so the result satisfies both.
    """
    parts = _delete_redundant(list(l.parts))
    psis = [p.child for p in parts if isinstance(p, Dia)]
    if psis:
        parts = [
            Box(fold_or([p.child] + psis)) if isinstance(p, Box) else p
            for p in parts
        ]
        parts = _delete_redundant(parts)
    return view4(fold_or(parts), SyntacticKind.CLAUSE)


def _delete_redundant(parts: list[Formula]) -> list[Formula]:
    while len(parts) > 1:
        whole = fold_or(parts)
        for idx in range(len(parts)):
            rest = parts[:idx] + parts[idx + 1 :]
            if entails(whole, fold_or(rest)):
                parts = rest
                break
        else:
            break
    return parts


def test_prop_pi(l: ClauseView4, phi: Formula) -> bool:
    """No iff dropping some propositional literal keeps l an implicate."""
    whole = l.assemble()
    if not entails(phi, whole):
        raise ValueError("not an implicate: %s" % whole)
    for g in l.gammas:
        rest = [p for p in l.parts if p != g]
        if entails(phi, fold_or(rest, bottom())):
            return False
    return True


def test_box_pi(chi: Formula, psis: list[Formula], phi_prime: Formula) -> bool:
    """Whether the box clause built from chi is strongest over phi_prime.

    The clause tested is box(chi and not-psi_1 and ... and not-psi_m); it
    passes iff its body entails the box conjunction of some term of
    dnf4(phi_prime).  A term without boxes passes trivially; an empty term
    stream fails.
    """
    body = fold_and([chi] + [dual_negate(p) for p in psis])
    clause = Box(body)
    if is_tautology(clause):
        raise ValueError("tautologous box clause: %s" % clause)
    if not entails(phi_prime, clause):
        raise ValueError("not an implicate: %s" % clause)
    for t in dnf4(phi_prime):
        beta = t.beta()
        if beta is None or entails(body, beta):
            return True
    return False


def test_dia_pi(psi: Formula, phi: Formula) -> bool:
    return test_dia_pi_report(psi, phi).verdict


def test_dia_pi_report(psi: Formula, phi: Formula) -> TestOutcome:
    """Prime test for a diamond clause, with the refuting subset if any.

    A subset S of the witness universe refutes primeness when psi does not
    entail the disjunction of S and every term of dnf4(phi) offers a
    diamond conjunct eta with ({eta} union boxes) meeting S whose
    strengthening dia(eta and beta) entails dia(psi).  Subsets are tried by
    size, then lexicographically by position; terms are re-streamed per
    subset.
    """
    if not entails(phi, Dia(psi)):
        raise ValueError("not an implicate: <>%s" % psi)
    if not sat(phi):
        return TestOutcome(not sat(psi), 1)
    uni = witness_universe(phi)
    xs = uni.x_set
    for size in range(len(xs) + 1):
        for combo in combinations(range(len(xs)), size):
            chosen = tuple(xs[k] for k in combo)
            if entails(psi, fold_or(list(chosen), bottom())):
                continue
            if _all_terms_reach(phi, frozenset(chosen), psi):
                return TestOutcome(False, 3, WitnessUniverse(xs, chosen))
    return TestOutcome(True, 3, uni)


def _all_terms_reach(phi: Formula, s_set: frozenset, psi: Formula) -> bool:
    target = Dia(psi)
    for t in dnf4(phi):
        beta = t.beta()
        boxes_hit = any(mu in s_set for mu in t.boxes)
        for eta in t.diamonds:
            if not (boxes_hit or eta in s_set):
                continue
            body = eta if beta is None else And(eta, beta)
            if entails(Dia(body), target):
                break
        else:
            return False
    return True


def test_pi(l: Formula, phi: Formula) -> bool:
    return test_pi_report(l, phi).verdict


def test_pi_report(l: Formula, phi: Formula) -> TestOutcome:
    """Decide whether clause l is a prime implicate of phi.

    Steps: 1 implicate check, 2 limit cases, 3 normalization, 4
    propositional literals, 5 box disjuncts against the remainder, 6 the
    diamond disjuncts merged into one body.
    """
    if not is_member(l, DefId.D4, SyntacticKind.CLAUSE):
        raise GrammarError("not a clause: %s" % l)
    if not entails(phi, l):
        return TestOutcome(False, 1)
    if not sat(phi):
        return TestOutcome(not sat(l), 2)
    if is_tautology(l):
        return TestOutcome(is_tautology(phi), 2)
    view = normalize_clause(view4(l, SyntacticKind.CLAUSE))
    if not test_prop_pi(view, phi):
        return TestOutcome(False, 4)
    psis = list(view.diamonds)
    for chi in view.boxes:
        rest = [p for p in view.parts if p != Box(chi)]
        phi_prime = And(phi, dual_negate(fold_or(rest))) if rest else phi
        if not test_box_pi(chi, psis, phi_prime):
            return TestOutcome(False, 5)
    if psis:
        rest = [p for p in view.parts if not isinstance(p, Dia)]
        phi_prime = And(phi, dual_negate(fold_or(rest))) if rest else phi
        sub = test_dia_pi_report(fold_or(psis), phi_prime)
        return TestOutcome(sub.verdict, 6, sub.witness)
    return TestOutcome(True, 5 if view.boxes else 4)


def test_implicant(t: Formula, phi: Formula) -> bool:
    return test_implicant_report(t, phi).verdict


def test_implicant_report(t: Formula, phi: Formula) -> TestOutcome:
    """Decide whether term t is a prime implicant of phi, by duality."""
    if not is_member(t, DefId.D4, SyntacticKind.TERM):
        raise GrammarError("not a term: %s" % t)
    return test_pi_report(dual_negate(t), dual_negate(phi))
