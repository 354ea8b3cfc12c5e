"""Fault-tolerance algebra for series/parallel composed systems."""

from .analysis import NEG_INF, POS_INF, Report, Tolerance, analyze, fin, phi_best, phi_worst, tol_add
from .expr import (
    ONE,
    ZERO,
    Atom,
    GroundedSystem,
    One,
    Product,
    Sum,
    SystemExpr,
    Zero,
    ac_canonical,
    ac_equal,
    component_count,
    ground,
)
from .generate import GenConfig, generate
from .normalize import iso_equal, simplify_identities, to_sop
from .oracle import fails, minimal_cut_sets, oracle_phi_best, oracle_phi_worst
from .order import Metric, check_law, find_counterexample, leq
from .parser import ParseError, format_expr, parse
from .quotient import FtClass, class_leq, class_of, class_prod, class_sum, representative

__all__ = [
    "NEG_INF", "POS_INF", "Report", "Tolerance", "analyze", "fin", "phi_best", "phi_worst", "tol_add",
    "ONE", "ZERO", "Atom", "GroundedSystem", "One", "Product", "Sum", "SystemExpr", "Zero",
    "ac_canonical", "ac_equal", "component_count", "ground",
    "GenConfig", "generate",
    "iso_equal", "simplify_identities", "to_sop",
    "fails", "minimal_cut_sets", "oracle_phi_best", "oracle_phi_worst",
    "Metric", "check_law", "find_counterexample", "leq",
    "ParseError", "format_expr", "parse",
    "FtClass", "class_leq", "class_of", "class_prod", "class_sum", "representative",
]
