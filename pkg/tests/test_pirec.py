import random
from itertools import product

import pytest

from kprime import And, Box, Dia, Neg, Or, Var, bottom, parse
from kprime.decision import entails, equivalent, is_tautology, sat
from kprime.dnf import delta_set, dnf4
from kprime.formulas import dual_negate, fold_or
from kprime.generate import gen_pi
from kprime.grammar import GrammarError, SyntacticKind, view4
from kprime import recognize as rec
from kprime.recognize import normalize_clause, witness_universe

from helpers import random_formula, random_surface_clause

a, b, c, d, e, f = (Var(n) for n in "abcdef")

PHI33 = "a & (([](b & c)) | ([](e | f))) & (<>(a & b))"
PHI31 = PHI33 + " & !([](e | f | (a & b & c)))"
LAM5 = "(<>(a & b & c)) | (<>(a & b & c & f)) | ([](e | f))"


def clause_view(text):
    return view4(parse(text), SyntacticKind.CLAUSE)


def test_witness_universe_golden():
    xs = witness_universe(parse(PHI33)).x_set
    assert xs == (And(b, c), Or(e, f), And(a, b))
    xs31 = witness_universe(parse(PHI31)).x_set
    neg_tail = And(Neg(e), And(Neg(f), Or(Neg(a), Or(Neg(b), Neg(c)))))
    assert xs31 == (And(b, c), Or(e, f), And(a, b), neg_tail)


def test_witness_universe_skips_nested_bodies():
    xs = witness_universe(parse("([](<>a)) & b")).x_set
    assert xs == (Dia(a),)
    assert witness_universe(parse("a & !b")).x_set == ()


def test_normalize_deletes_then_absorbs():
    out = normalize_clause(clause_view(LAM5))
    abc = And(a, And(b, c))
    assert out.parts == (Dia(abc), Box(Or(Or(e, f), abc)))
    assert equivalent(out.assemble(), parse(LAM5))


def test_normalize_untouched_cases():
    v = clause_view("([]b) | ([](e | f))")
    assert normalize_clause(v).parts == (Box(b), Box(Or(e, f)))
    v = clause_view("a")
    assert normalize_clause(v).parts == (a,)


def test_normalize_collapses_duplicates():
    out = normalize_clause(clause_view("a | a"))
    assert out.parts == (a,)


def test_normalize_properties():
    rng = random.Random(71)
    for _ in range(60):
        cl = random_surface_clause(rng, "abc", width=rng.randint(1, 3))
        view = view4(cl, SyntacticKind.CLAUSE)
        out = normalize_clause(view)
        whole = out.assemble()
        assert equivalent(whole, cl)
        # no remaining redundant disjunct
        if len(out.parts) > 1:
            for idx in range(len(out.parts)):
                rest = out.parts[:idx] + out.parts[idx + 1 :]
                assert not entails(whole, fold_or(list(rest)))
        # every box absorbs all diamond bodies
        for chi in out.boxes:
            assert equivalent(chi, fold_or([chi] + list(out.diamonds)))


def test_prop_pi_examples():
    phi = parse(PHI33)
    assert rec.test_prop_pi(clause_view("a | <>c"), phi)
    assert rec.test_prop_pi(clause_view("a"), a)
    assert not rec.test_prop_pi(clause_view("a | b"), a)
    with pytest.raises(ValueError):
        rec.test_prop_pi(clause_view("b"), a)


def test_box_pi_examples():
    phi = parse(PHI33)
    # box b inside clause []b | [](e | f)
    phi_p = And(phi, dual_negate(Box(Or(e, f))))
    assert not rec.test_box_pi(b, [], phi_p)
    # the absorbed box of lam5
    abc = And(a, And(b, c))
    phi_p5 = And(phi, dual_negate(Dia(abc)))
    assert rec.test_box_pi(Or(Or(e, f), abc), [abc], phi_p5)
    # single box against itself
    assert rec.test_box_pi(Or(a, b), [], Box(Or(a, b)))
    # empty term stream
    assert not rec.test_box_pi(a, [], And(c, Neg(c)))
    with pytest.raises(ValueError):
        rec.test_box_pi(Or(a, Neg(a)), [], a)
    with pytest.raises(ValueError):
        rec.test_box_pi(a, [], b)


def test_dia_pi_first_example():
    r = rec.test_dia_pi_report(And(a, b), parse(PHI33))
    assert not r.verdict
    assert r.witness.subset == (And(b, c), Or(e, f))


def test_dia_pi_second_example():
    assert rec.test_dia_pi(And(a, And(b, c)), parse(PHI31))


def test_dia_pi_limit_step():
    unsat = And(a, Neg(a))
    assert not rec.test_dia_pi(c, unsat)
    assert rec.test_dia_pi(And(b, Neg(b)), unsat)
    with pytest.raises(ValueError):
        rec.test_dia_pi(c, a)


def test_pi_example_traces():
    phi = parse(PHI33)
    r1 = rec.test_pi_report(b, phi)
    assert (r1.verdict, r1.step) == (False, 1)
    r2 = rec.test_pi_report(parse("([]b) | ([](e | f))"), phi)
    assert (r2.verdict, r2.step) == (False, 5)
    r3 = rec.test_pi_report(parse("a | <>c"), phi)
    assert (r3.verdict, r3.step) == (False, 6)
    assert r3.witness is None
    r4 = rec.test_pi_report(parse("<>(a & b)"), phi)
    assert (r4.verdict, r4.step) == (False, 6)
    assert r4.witness.subset == (And(b, c), Or(e, f))
    r5 = rec.test_pi_report(parse(LAM5), phi)
    assert (r5.verdict, r5.step) == (True, 6)


def test_pi_limit_cases():
    unsat = And(a, Neg(a))
    taut = Or(a, Neg(a))
    assert not rec.test_pi(Dia(And(a, Neg(a))), a)
    assert rec.test_pi(Dia(And(a, Neg(a))), unsat)
    assert not rec.test_pi(taut, a)
    assert rec.test_pi(taut, Or(b, Neg(b)))


def test_pi_rejects_non_clauses():
    with pytest.raises(GrammarError):
        rec.test_pi(And(a, b), a)
    with pytest.raises(GrammarError):
        rec.test_pi(Neg(Neg(a)), a)


def test_implicant_examples():
    assert rec.test_implicant(a, a)
    assert not rec.test_implicant(And(a, b), a)
    assert rec.test_implicant(parse("[](a | b)"), parse("(([](a | b)) -> c) -> c"))
    with pytest.raises(GrammarError):
        rec.test_implicant(Or(a, b), a)


def test_pspace_fixture():
    rng = random.Random(72)
    contradiction = Dia(And(a, Neg(a)))
    for _ in range(40):
        g = random_formula(rng, "ab", rng.randint(0, 2), rng.randint(1, 6))
        for phi in (g, And(g, dual_negate(g))):
            assert rec.test_pi(contradiction, phi) == (not sat(phi))


def _candidates(phi):
    deltas = [delta_set(t).entries for t in dnf4(phi)]
    n = 1
    for entries in deltas:
        n *= len(entries)
    if n > 200:
        return None
    return [fold_or(list(pick)) for pick in product(*deltas)]


def test_generation_agreement():
    rng = random.Random(73)
    checked = 0
    for _ in range(150):
        phi = random_formula(rng, "abc", rng.randint(0, 2), rng.randint(1, 7))
        if not sat(phi) or is_tautology(phi):
            continue
        pis = list(gen_pi(phi))
        cands = _candidates(phi)
        if cands is None:
            continue
        for lam in cands:
            expected = any(equivalent(lam, pi) for pi in pis)
            assert rec.test_pi(lam, phi) == expected
            checked += 1
    assert checked > 100


def test_agreement_on_weakened_members():
    rng = random.Random(74)
    for _ in range(30):
        phi = random_formula(rng, "ab", rng.randint(0, 2), rng.randint(1, 6))
        if not sat(phi) or is_tautology(phi):
            continue
        pis = list(gen_pi(phi))
        for pi in pis:
            for lam in (Or(pi, Var("z")), Or(pi, Dia(Var("z")))):
                if is_tautology(lam):
                    continue
                expected = any(equivalent(lam, p) for p in pis)
                assert rec.test_pi(lam, phi) == expected


def _dia_prime_bruteforce(psi, phi):
    delta_dias = []
    for t in dnf4(phi):
        bodies = [x.child for x in delta_set(t).entries if isinstance(x, Dia)]
        delta_dias.append(bodies)
    space = 1
    for bodies in delta_dias:
        space *= max(len(bodies), 1)
    if space > 10**4:
        return None
    for choice in product(*delta_dias):
        clause = fold_or([Dia(x) for x in choice])
        if entails(clause, Dia(psi)) and not entails(psi, fold_or(list(choice))):
            return False
    return True


def test_dia_pi_matches_definition():
    rng = random.Random(75)
    fixtures = [
        (And(a, b), parse(PHI33)),
        (And(a, And(b, c)), parse(PHI31)),
    ]
    checked = 0
    for _ in range(120):
        phi = random_formula(rng, "abc", rng.randint(1, 2), rng.randint(2, 8))
        psi = random_formula(rng, "abc", rng.randint(0, 1), rng.randint(1, 4))
        if not sat(phi) or not entails(phi, Dia(psi)):
            continue
        fixtures.append((psi, phi))
    for psi, phi in fixtures:
        expected = _dia_prime_bruteforce(psi, phi)
        if expected is None:
            continue
        assert rec.test_dia_pi(psi, phi) == expected
        checked += 1
    assert checked >= 2
