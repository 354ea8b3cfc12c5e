"""Equivalence classes of systems by fault tolerance.

A class is identified by its tolerance label, so the quotient under the
worst-case metric is the label set with ``min`` as sum and ``j + k + 1`` as
product.  Under the best-case metric only the sum is well defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Literal

from .analysis import NEG_INF, POS_INF, Tolerance, tol_add
from .expr import ONE, ZERO, Atom, Product, Sum, SystemExpr
from .generate import GenConfig, rng_for, sample
from .order import Check, Clause, Counterexample, LawReport, LawSummary, Metric, _Ctx, phi
from .parser import format_expr, repeat


class MetricMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class FtClass:
    metric: Metric
    label: Tolerance

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric(self.metric))
        if not isinstance(self.label, Tolerance):
            object.__setattr__(self, "label", Tolerance(self.label))

    def __str__(self) -> str:
        return f"[{self.label}]_{self.metric.value}"


def class_of(e: SystemExpr, m: Metric = Metric.WORST) -> FtClass:
    return FtClass(Metric(m), phi(e, m))


def _same_metric(c1: FtClass, c2: FtClass) -> Metric:
    if c1.metric is not c2.metric:
        raise MetricMismatchError(f"cannot combine {c1.metric.value} and {c2.metric.value} classes")
    return c1.metric


def label_sum(m: Metric, j: Tolerance, k: Tolerance) -> Tolerance:
    return min(j, k) if Metric(m) is Metric.WORST else tol_add(j, k)


def label_prod(j: Tolerance, k: Tolerance) -> Tolerance:
    return tol_add(tol_add(j, k), Tolerance(1))


def class_sum(c1: FtClass, c2: FtClass) -> FtClass:
    m = _same_metric(c1, c2)
    return FtClass(m, label_sum(m, c1.label, c2.label))


def class_prod(c1: FtClass, c2: FtClass) -> FtClass:
    m = _same_metric(c1, c2)
    if m is Metric.BEST:
        raise MetricMismatchError(
            "best-case equivalence is not a congruence for products; no class product exists"
        )
    return FtClass(m, label_prod(c1.label, c2.label))


def class_leq(c1: FtClass, c2: FtClass) -> bool:
    _same_metric(c1, c2)
    return c1.label >= c2.label


def representative(c: FtClass, atom: str = "X") -> SystemExpr:
    """A canonical member: ``X^(k+1)`` for finite k >= 0, else Zero or One."""
    if c.label == POS_INF:
        if c.metric is Metric.BEST:
            raise ValueError("no system has infinite best-case tolerance")
        return ZERO
    if c.label == NEG_INF:
        if c.metric is Metric.WORST:
            raise ValueError("no system has worst-case tolerance -inf")
        return ONE
    k = c.label.value
    if k == -1 and c.metric is Metric.WORST:
        return ONE
    if k < 0:
        raise ValueError(f"no system is labelled {k} under {c.metric.value}")
    return repeat(Product, Atom(atom), k + 1)


Op = Literal["sum", "product"]


def _compose(op: Op, a: SystemExpr, b: SystemExpr) -> SystemExpr:
    return Sum((a, b)) if op == "sum" else Product((a, b))


def check_congruence(m: Metric, op: Op, quad: tuple) -> LawReport:
    """``A1 ~ B1 and A2 ~ B2  ->  A1 op A2 ~ B1 op B2``."""
    a1, a2, b1, b2 = quad
    x = _Ctx(Metric(m))
    clause = Clause(
        (x.equiv(a1, b1), x.equiv(a2, b2)),
        (x.equiv(_compose(op, a1, a2), _compose(op, b1, b2)),),
    )
    return LawReport(f"congruence_{op}", tuple(quad), Metric(m), (clause,))


# --- label-level laws -----------------------------------------------------

WORST_LABELS: tuple[Tolerance, ...] = tuple(Tolerance(k) for k in range(-1, 9)) + (POS_INF,)
BEST_LABELS: tuple[Tolerance, ...] = (NEG_INF,) + tuple(Tolerance(k) for k in range(0, 9))

_ZERO_W = POS_INF  # class of the always-up system under worst case
_ONE_W = Tolerance(-1)  # class of the always-down system under worst case


@dataclass(frozen=True)
class LabelLaw:
    law_id: str
    arity: int
    holds: Callable[..., bool]


def _w_plus(j, k):
    return label_sum(Metric.WORST, j, k)


_leq = lambda j, k: j >= k  # noqa: E731

LABEL_LAWS: tuple[LabelLaw, ...] = (
    LabelLaw("plus_assoc", 3, lambda j, k, l: _w_plus(j, _w_plus(k, l)) == _w_plus(_w_plus(j, k), l)),
    LabelLaw("plus_comm", 2, lambda j, k: _w_plus(j, k) == _w_plus(k, j)),
    LabelLaw("plus_identity", 1, lambda j: _w_plus(j, _ZERO_W) == j == _w_plus(_ZERO_W, j)),
    LabelLaw("times_assoc", 3, lambda j, k, l: label_prod(j, label_prod(k, l)) == label_prod(label_prod(j, k), l)),
    LabelLaw("times_comm", 2, lambda j, k: label_prod(j, k) == label_prod(k, j)),
    LabelLaw("times_identity", 1, lambda j: label_prod(j, _ONE_W) == j == label_prod(_ONE_W, j)),
    LabelLaw(
        "distributive",
        3,
        lambda j, k, l: _w_plus(label_prod(j, k), label_prod(j, l)) == label_prod(j, _w_plus(k, l))
        and _w_plus(label_prod(k, j), label_prod(l, j)) == label_prod(_w_plus(k, l), j),
    ),
    LabelLaw("annihilation", 1, lambda j: label_prod(_ZERO_W, j) == _ZERO_W == label_prod(j, _ZERO_W)),
    LabelLaw("zerosumfree", 2, lambda j, k: _w_plus(j, k) != _ZERO_W or j == k == _ZERO_W),
    LabelLaw("entire", 2, lambda j, k: label_prod(j, k) != _ZERO_W or _ZERO_W in (j, k)),
    LabelLaw("simple", 1, lambda j: _w_plus(j, _ONE_W) == _ONE_W),
    # order laws restated over classes
    LabelLaw("order_antisymmetric", 2, lambda j, k: not (_leq(j, k) and _leq(k, j)) or j == k),
    LabelLaw("order_transitive", 3, lambda j, k, l: not (_leq(j, k) and _leq(k, l)) or _leq(j, l)),
    LabelLaw("order_boundary", 1, lambda j: _leq(_ZERO_W, j) and _leq(j, _ONE_W)),
    LabelLaw("order_monotony_add", 3, lambda j, k, l: not _leq(j, k) or _leq(_w_plus(j, l), _w_plus(k, l))),
    LabelLaw("order_monotony_mul", 3, lambda j, k, l: not _leq(j, k) or _leq(label_prod(j, l), label_prod(k, l))),
    LabelLaw("order_cone", 2, lambda j, k: _leq(j, _w_plus(j, k)) and _leq(label_prod(j, k), j)),
    LabelLaw("order_sum_consistency", 3, lambda j, k, l: not _leq(_w_plus(j, k), l) or (_leq(j, l) and _leq(k, l))),
    LabelLaw("order_prod_consistency", 3, lambda j, k, l: not _leq(j, label_prod(k, l)) or (_leq(j, k) and _leq(j, l))),
)


@dataclass(frozen=True)
class LabelLawResult:
    law_id: str
    cases: int
    violations: int
    first_counterexample: tuple | None

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "instances": self.cases,
            "violations": self.violations,
            "first_counterexample": None
            if self.first_counterexample is None
            else [t.label() for t in self.first_counterexample],
        }


def check_label_laws(labels: Iterable[Tolerance] = WORST_LABELS) -> list[LabelLawResult]:
    """Exhaustively check the worst-case quotient semiring and order laws on ``labels``."""
    labels = tuple(labels)
    results = []
    for law in LABEL_LAWS:
        cases = violations = 0
        first = None
        for args in itertools.product(labels, repeat=law.arity):
            cases += 1
            if not law.holds(*args):
                violations += 1
                first = first or args
        results.append(LabelLawResult(law.law_id, cases, violations, first))
    return results


def soundness_report(a: SystemExpr, b: SystemExpr, m: Metric = Metric.WORST) -> LawReport:
    """Class of each composition against the operation on classes."""
    m = Metric(m)
    ca, cb = class_of(a, m), class_of(b, m)
    checks = [
        Check("equiv", format_expr(a + b), "class sum", class_of(a + b, m).label, class_sum(ca, cb).label)
    ]
    if m is Metric.WORST:
        checks.append(
            Check("equiv", format_expr(a * b), "class product", class_of(a * b, m).label, class_prod(ca, cb).label)
        )
    return LawReport("quotient_soundness", (a, b), m, (Clause((), tuple(checks)),))


def _match(rng, config, e: SystemExpr, m: Metric, tries: int) -> SystemExpr:
    target = phi(e, m)
    for _ in range(tries):
        cand = sample(rng, config)
        if phi(cand, m) == target:
            return cand
    return representative(FtClass(m, target))


def congruence_quad(rng, config: GenConfig, m: Metric, tries: int = 50) -> tuple:
    """``(A1, A2, B1, B2)`` with ``Bi`` drawn to share ``Ai``'s class when possible."""
    a1, a2 = sample(rng, config), sample(rng, config)
    return a1, a2, _match(rng, config, a1, m, tries), _match(rng, config, a2, m, tries)


def run_congruence(m: Metric, op: Op, config: GenConfig, n: int, stop_at_first: bool = False) -> LawSummary:
    m = Metric(m)
    summary = LawSummary(f"congruence_{op}", m)
    for i in range(n):
        quad = congruence_quad(rng_for(config, i, salt=f"congruence_{op}"), config, m)
        report = check_congruence(m, op, quad)
        summary.instances += 1
        summary.vacuous += report.vacuous
        if not report.holds:
            summary.violations += 1
            if summary.first_counterexample is None:
                summary.first_counterexample = Counterexample(i, report)
                if stop_at_first:
                    break
    return summary


def run_soundness(m: Metric, config: GenConfig, n: int) -> LawSummary:
    m = Metric(m)
    summary = LawSummary("quotient_soundness", m)
    for i in range(n):
        rng = rng_for(config, i, salt="quotient_soundness")
        report = soundness_report(sample(rng, config), sample(rng, config), m)
        summary.instances += 1
        if not report.holds:
            summary.violations += 1
            if summary.first_counterexample is None:
                summary.first_counterexample = Counterexample(i, report)
    return summary
