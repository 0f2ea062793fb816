"""Generation of prime implicates and prime implicants.

Candidate clauses pick one delta entry per term of the modal DNF; the
candidate index runs lexicographically with the first term's entry as the
most significant digit.  A candidate survives when no earlier candidate
strictly entails it and it entails back every later candidate that entails
it, so each equivalence class is represented by its lowest index.
"""

from dataclasses import dataclass
from math import prod
from typing import Callable, Iterator

from .decision import clause_entails_fast, is_tautology, sat
from .dnf import delta_set, dnf4
from .formulas import And, Dia, Formula, Neg, Or, Var, dual_negate, fold_or, metrics
from .grammar import SyntacticKind, view4

MATERIALIZE_CAP = 10**6


@dataclass(frozen=True, slots=True)
class PiSet:
    """Ordered set of pairwise non-equivalent clauses (or terms)."""

    clauses: tuple[Formula, ...]

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)


def _limit_case(f: Formula) -> tuple[Formula, ...] | None:
    if not sat(f):
        v = Var(min(metrics(f).vars))
        return (Dia(And(v, Neg(v))),)
    if is_tautology(f):
        v = Var(min(metrics(f).vars))
        return (Or(v, Neg(v)),)
    return None


class _Comparer:
    """Entailment between candidate clauses, cached when memory allows."""

    def __init__(self, get: Callable[[int], Formula], cached: bool):
        self._get = get
        self._cached = cached
        self._taut: dict[int, bool] = {}
        self._view: dict[int, object] = {}
        self._ent: dict[tuple[int, int], bool] = {}

    def _is_taut(self, i: int) -> bool:
        r = self._taut.get(i)
        if r is None:
            r = is_tautology(self._get(i))
            if self._cached:
                self._taut[i] = r
        return r

    def _view4(self, i: int):
        v = self._view.get(i)
        if v is None:
            v = view4(self._get(i), SyntacticKind.CLAUSE)
            if self._cached:
                self._view[i] = v
        return v

    def entails(self, i: int, j: int) -> bool:
        key = (i, j)
        r = self._ent.get(key)
        if r is None:
            if self._is_taut(j):
                r = True
            elif self._is_taut(i):
                r = False
            else:
                r = clause_entails_fast(self._view4(i), self._view4(j))
            if self._cached:
                self._ent[key] = r
        return r


def _stream(f: Formula, cap: int) -> Iterator[Formula]:
    limit = _limit_case(f)
    if limit is not None:
        yield from limit
        return
    deltas = [delta_set(t).entries for t in dnf4(f)]
    counts = [len(d) for d in deltas]
    total = prod(counts)
    weights = [0] * len(counts)
    w = 1
    for t in range(len(counts) - 1, -1, -1):
        weights[t] = w
        w *= counts[t]

    def build(i: int) -> Formula:
        picks = [deltas[t][(i // weights[t]) % counts[t]] for t in range(len(counts))]
        return fold_or(picks)

    if total <= cap:
        cands = [build(i) for i in range(total)]
        get: Callable[[int], Formula] = cands.__getitem__
        cmp = _Comparer(get, cached=True)
    else:
        get = build
        cmp = _Comparer(get, cached=False)

    for i in range(total):
        keep = True
        for j in range(total):
            if j == i:
                continue
            if cmp.entails(j, i) and (j < i or not cmp.entails(i, j)):
                keep = False
                break
        if keep:
            yield get(i)


def gen_pi(f: Formula, mode: str = "eager", cap: int = MATERIALIZE_CAP):
    """All prime implicates of f, one representative per equivalence class.

    Eager mode returns a PiSet; iterative mode returns a generator yielding
    the same clauses in the same order.
    """
    if mode not in ("eager", "iterative"):
        raise ValueError("mode must be 'eager' or 'iterative': %r" % mode)
    stream = _stream(f, cap)
    if mode == "iterative":
        return stream
    return PiSet(tuple(stream))


def gen_implicants(f: Formula) -> PiSet:
    """All prime implicants of f, as negations of the prime implicates of ~f."""
    pis = gen_pi(dual_negate(f))
    return PiSet(tuple(dual_negate(l) for l in pis.clauses))
