"""Prime implicate and prime implicant engine for the modal logic K."""

from .decision import entails, equivalent, is_tautology, sat
from .dnf import cnf4, delta_set, dnf4
from .families import (
    FamilySpec,
    QbfInstance,
    XcInstance,
    parse_qbf_file,
    qbf_encode,
    qbf_valid_bruteforce,
    xc_encode,
)
from .formulas import (
    And,
    Box,
    Dia,
    Formula,
    Metrics,
    Neg,
    Or,
    Var,
    bottom,
    dual_negate,
    metrics,
    nnf,
    top,
    unparse,
)
from .generate import PiSet, gen_implicants, gen_pi
from .grammar import ClauseView4, DefId, SyntacticKind, TermView4, is_member, view4
from .parser import ParseError, ReservedNameError, parse
from .recognize import test_implicant, test_pi, test_pi_report
from .semantics import KripkeModel, holds, parse_model, sat_bruteforce, tree_model

__all__ = [
    "And",
    "Box",
    "ClauseView4",
    "DefId",
    "Dia",
    "FamilySpec",
    "Formula",
    "KripkeModel",
    "Metrics",
    "Neg",
    "Or",
    "ParseError",
    "PiSet",
    "QbfInstance",
    "ReservedNameError",
    "SyntacticKind",
    "TermView4",
    "Var",
    "XcInstance",
    "bottom",
    "cnf4",
    "delta_set",
    "dnf4",
    "dual_negate",
    "entails",
    "equivalent",
    "gen_implicants",
    "gen_pi",
    "holds",
    "is_member",
    "is_tautology",
    "metrics",
    "nnf",
    "parse",
    "parse_model",
    "parse_qbf_file",
    "qbf_encode",
    "qbf_valid_bruteforce",
    "sat",
    "sat_bruteforce",
    "test_implicant",
    "test_pi",
    "test_pi_report",
    "top",
    "tree_model",
    "unparse",
    "view4",
    "xc_encode",
]
