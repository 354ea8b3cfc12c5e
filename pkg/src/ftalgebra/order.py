"""Fault-tolerance preorders and a catalog of algebraic laws to check against them.

``leq(a, b, m)`` reads "a is at least as fault tolerant as b under metric m":
a smaller position in the order means a lower fault metric, so Zero sits at
the bottom and One at the top.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

from .analysis import Tolerance, phi_best, phi_worst
from .expr import ONE, ZERO, Product, Sum, SystemExpr
from .generate import GenConfig, rng_for, sample
from .normalize import sop_key
from .parser import format_expr, repeat


class Metric(str, Enum):
    WORST = "worst"
    BEST = "best"


def phi(e: SystemExpr, m: Metric) -> Tolerance:
    return phi_worst(e) if Metric(m) is Metric.WORST else phi_best(e)


def leq(e1: SystemExpr, e2: SystemExpr, m: Metric = Metric.WORST) -> bool:
    """``e1`` tolerates at least as many faults as ``e2``."""
    return phi(e1, m) >= phi(e2, m)


_RELATIONS: dict[str, Callable[[Any, Any], bool]] = {
    "leq": lambda a, b: a >= b,  # on tolerance values: more tolerant is smaller
    "equiv": lambda a, b: a == b,
    "iso": lambda a, b: a == b,
    "nleq": lambda a, b: a < b,
    "lt": lambda a, b: a < b,
    "le": lambda a, b: a <= b,
}


@dataclass(frozen=True)
class Check:
    """One atomic comparison, with the values it was decided on."""

    relation: str
    left: str
    right: str
    left_value: Any
    right_value: Any

    @property
    def ok(self) -> bool:
        return _RELATIONS[self.relation](self.left_value, self.right_value)

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Tolerance):
                return v.label()
            if isinstance(v, tuple):
                # sum-of-products key
                return " + ".join("*".join(t) for t in v)
            return v

        return {
            "relation": self.relation,
            "left": self.left,
            "right": self.right,
            "left_value": enc(self.left_value),
            "right_value": enc(self.right_value),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class Clause:
    """``all(hypothesis) -> all(conclusion)``."""

    hypothesis: tuple[Check, ...]
    conclusion: tuple[Check, ...]

    @property
    def vacuous(self) -> bool:
        return not all(c.ok for c in self.hypothesis)

    @property
    def holds(self) -> bool:
        return self.vacuous or all(c.ok for c in self.conclusion)


@dataclass(frozen=True)
class LawReport:
    law_id: str
    instance: tuple
    metric: Metric
    clauses: tuple[Clause, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.clauses)

    @property
    def vacuous(self) -> bool:
        return all(c.vacuous for c in self.clauses)

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "metric": self.metric.value,
            "instance": [format_expr(x) if isinstance(x, SystemExpr) else x for x in self.instance],
            "holds": self.holds,
            "clauses": [
                {
                    "hypothesis": [c.to_dict() for c in cl.hypothesis],
                    "conclusion": [c.to_dict() for c in cl.conclusion],
                }
                for cl in self.clauses
            ],
        }


class UnknownLawError(KeyError):
    pass


@dataclass(frozen=True)
class Law:
    law_id: str
    statement: str
    sampler: Callable[[random.Random, GenConfig, Metric], tuple]
    body: Callable[[tuple, "_Ctx"], list[Clause]]
    arity: int


class _Ctx:
    """Builds checks under one metric, caching tolerance values by expression."""

    def __init__(self, metric: Metric):
        self.metric = Metric(metric)
        self._cache: dict[SystemExpr, Tolerance] = {}

    def phi(self, e: SystemExpr) -> Tolerance:
        v = self._cache.get(e)
        if v is None:
            v = self._cache[e] = phi(e, self.metric)
        return v

    def leq(self, a: SystemExpr, b: SystemExpr) -> Check:
        return Check("leq", format_expr(a), format_expr(b), self.phi(a), self.phi(b))

    def equiv(self, a: SystemExpr, b: SystemExpr) -> Check:
        return Check("equiv", format_expr(a), format_expr(b), self.phi(a), self.phi(b))


def _ints(relation: str, m: int, n: int) -> Check:
    return Check(relation, "m", "n", m, n)


def _clause(conclusion, hypothesis=()) -> Clause:
    return Clause(tuple(hypothesis), tuple(conclusion))


def nsum(e: SystemExpr, n: int) -> SystemExpr:
    return repeat(Sum, e, n)


def npow(e: SystemExpr, n: int) -> SystemExpr:
    return repeat(Product, e, n)


# --- samplers -------------------------------------------------------------

MAX_MULTIPLE = 4


def _exprs(k: int):
    def s(rng, config, metric):
        return tuple(sample(rng, config) for _ in range(k))

    return s


def _oriented_pair(rng, config, metric):
    a, b = sample(rng, config), sample(rng, config)
    return (a, b) if leq(a, b, metric) else (b, a)


def _s_monotony(rng, config, metric):
    a, b = _oriented_pair(rng, config, metric)
    return a, b, sample(rng, config)


def _s_expr_n(rng, config, metric):
    return sample(rng, config), rng.randint(1, MAX_MULTIPLE)


def _s_expr_m_lt_n(rng, config, metric):
    n = rng.randint(2, MAX_MULTIPLE)
    return sample(rng, config), rng.randint(1, n - 1), n


def _s_expr_m_le_n(rng, config, metric):
    n = rng.randint(1, MAX_MULTIPLE)
    return sample(rng, config), rng.randint(1, n), n


def _s_pair_n(rng, config, metric):
    a, b = sample(rng, config), sample(rng, config)
    return a, b, rng.randint(1, MAX_MULTIPLE)


def _s_oriented_pair_n(rng, config, metric):
    a, b = _oriented_pair(rng, config, metric)
    return a, b, rng.randint(1, MAX_MULTIPLE)


def _s_mixed(rng, config, metric):
    a, b = _oriented_pair(rng, config, metric)
    n = rng.randint(1, MAX_MULTIPLE)
    return a, b, rng.randint(1, n), n


def _s_compose(rng, config, metric):
    a, b = _oriented_pair(rng, config, metric)
    c, d = _oriented_pair(rng, config, metric)
    return a, b, c, d


def _s_compose_n(rng, config, metric):
    k = rng.randint(2, 3)
    pairs = [_oriented_pair(rng, config, metric) for _ in range(k)]
    return tuple(p[0] for p in pairs) + tuple(p[1] for p in pairs)


def _s_chain(rng, config, metric):
    es = [sample(rng, config) for _ in range(3)]
    return tuple(sorted(es, key=lambda e: phi(e, metric), reverse=True))


# --- law bodies -----------------------------------------------------------


def _b_monotony_add(i, x):
    a, b, c = i
    return [_clause([x.leq(a + c, b + c)], [x.leq(a, b)])]


def _b_monotony_mul(i, x):
    a, b, c = i
    return [_clause([x.leq(a * c, b * c)], [x.leq(a, b)])]


def _b_lemma1_sum(i, x):
    a, b = i
    return [_clause([x.leq(a, a + b)])]


def _b_lemma1_prod(i, x):
    a, b = i
    return [_clause([x.leq(a * b, a)])]


def _b_lemma2_sum(i, x):
    a, n = i
    return [_clause([x.leq(a, nsum(a, n))])]


def _b_lemma2_prod(i, x):
    a, n = i
    return [_clause([x.leq(npow(a, n), a)])]


def _b_corollary1(i, x):
    a, m, n = i
    hyp = [_ints("lt", m, n)]
    return [_clause([x.leq(nsum(a, m), nsum(a, n)), x.leq(npow(a, n), npow(a, m))], hyp)]


def _b_sum_consistency(i, x):
    a, b, c = i
    return [_clause([x.leq(a, c), x.leq(b, c)], [x.leq(a + b, c)])]


def _b_prod_consistency(i, x):
    a, b, c = i
    return [_clause([x.leq(a, b), x.leq(a, c)], [x.leq(a, b * c)])]


def _b_gen_consistency(i, x):
    a, b, n = i
    return [
        _clause([x.leq(a, b)], [x.leq(nsum(a, n), b)]),
        _clause([x.leq(a, b)], [x.leq(a, npow(b, n))]),
    ]


def _b_compose(i, x):
    a, b, c, d = i
    return [_clause([x.leq(a + c, b + d), x.leq(a * c, b * d)], [x.leq(a, b), x.leq(c, d)])]


def _b_compose_n(i, x):
    k = len(i) // 2
    lhs, rhs = i[:k], i[k:]
    hyp = [x.leq(p, q) for p, q in zip(lhs, rhs)]
    return [_clause([x.leq(Sum(lhs), Sum(rhs)), x.leq(Product(lhs), Product(rhs))], hyp)]


def _b_power_corollary2(i, x):
    a, b, n = i
    return [_clause([x.leq(nsum(a, n), nsum(b, n)), x.leq(npow(a, n), npow(b, n))], [x.leq(a, b)])]


def _b_mixed(i, x):
    a, b, m, n = i
    hyp = [x.leq(a, b), _ints("le", m, n)]
    return [_clause([x.leq(nsum(a, m), nsum(b, n)), x.leq(npow(a, n), npow(b, m))], hyp)]


def _b_final_corollary(i, x):
    a, m, n = i
    return [_clause([x.leq(nsum(npow(a, n), m), nsum(npow(a, m), n))], [_ints("le", m, n)])]


def _b_boundary(i, x):
    (a,) = i
    return [_clause([x.leq(ZERO, a), x.leq(a, ONE)])]


def _b_transitive(i, x):
    a, b, c = i
    return [_clause([x.leq(a, c)], [x.leq(a, b), x.leq(b, c)])]


def _b_total(i, x):
    a, b = i
    fwd = x.leq(a, b)
    negated = Check("nleq", fwd.left, fwd.right, fwd.left_value, fwd.right_value)
    return [_clause([x.leq(b, a)], [negated])]


ORDER_LAWS: dict[str, Law] = {
    law.law_id: law
    for law in [
        Law("monotony_add", "A <= B -> A + C <= B + C", _s_monotony, _b_monotony_add, 3),
        Law("monotony_mul", "A <= B -> A * C <= B * C", _s_monotony, _b_monotony_mul, 3),
        Law("lemma1_sum", "A <= A + B", _exprs(2), _b_lemma1_sum, 2),
        Law("lemma1_prod", "A * B <= A", _exprs(2), _b_lemma1_prod, 2),
        Law("lemma2_sum", "A <= nA", _s_expr_n, _b_lemma2_sum, 2),
        Law("lemma2_prod", "A^n <= A", _s_expr_n, _b_lemma2_prod, 2),
        Law("corollary1", "m < n -> mA <= nA and A^n <= A^m", _s_expr_m_lt_n, _b_corollary1, 3),
        Law("sum_consistency", "A + B <= C -> A <= C and B <= C", _exprs(3), _b_sum_consistency, 3),
        Law("prod_consistency", "A <= B * C -> A <= B and A <= C", _exprs(3), _b_prod_consistency, 3),
        Law("gen_consistency", "nA <= B -> A <= B; A <= B^n -> A <= B", _s_pair_n, _b_gen_consistency, 3),
        Law("compose_monotone", "A <= B, C <= D -> A + C <= B + D and A * C <= B * D", _s_compose, _b_compose, 4),
        Law("compose_monotone_n", "A_i <= B_i -> sum A_i <= sum B_i and prod A_i <= prod B_i", _s_compose_n, _b_compose_n, -1),
        Law("power_corollary2", "A <= B -> nA <= nB and A^n <= B^n", _s_oriented_pair_n, _b_power_corollary2, 3),
        Law("mixed_theorem", "A <= B, m <= n -> mA <= nB and A^n <= B^m", _s_mixed, _b_mixed, 4),
        Law("final_corollary", "m <= n -> mA^n <= nA^m", _s_expr_m_le_n, _b_final_corollary, 3),
        Law("cone_positive", "A <= A + B for every B", _exprs(2), _b_lemma1_sum, 2),
        Law("cone_negative", "A * B <= A for every B", _exprs(2), _b_lemma1_prod, 2),
        Law("boundary", "0 <= A <= 1", _exprs(1), _b_boundary, 1),
        Law("transitive", "A <= B, B <= C -> A <= C", _s_chain, _b_transitive, 3),
        Law("total", "A <= B or B <= A", _exprs(2), _b_total, 2),
    ]
}


def _check_arity(law: Law, instance: tuple) -> None:
    if law.arity == -1:
        ok = len(instance) >= 4 and len(instance) % 2 == 0
    else:
        ok = len(instance) == law.arity
    if not ok:
        raise ValueError(f"{law.law_id}: instance of length {len(instance)} does not fit the law")


def _lookup(catalog: dict[str, Law], law_id: str) -> Law:
    try:
        return catalog[law_id]
    except KeyError:
        raise UnknownLawError(law_id) from None


def check_law(law_id: str, instance: tuple, m: Metric = Metric.WORST) -> LawReport:
    law = _lookup(ORDER_LAWS, law_id)
    _check_arity(law, instance)
    m = Metric(m)
    return LawReport(law_id, tuple(instance), m, tuple(law.body(tuple(instance), _Ctx(m))))


# --- semiring laws (metric independent) -----------------------------------


def _iso(a: SystemExpr, b: SystemExpr) -> Check:
    return Check("iso", format_expr(a), format_expr(b), sop_key(a), sop_key(b))


def _sides(*pairs):
    def body(i, x):
        return [_clause([_iso(l, r), x.equiv(l, r)]) for l, r in (p(*i) for p in pairs)]

    return body


SEMIRING_LAWS: dict[str, Law] = {
    law.law_id: law
    for law in [
        Law("sum_comm", "A + B = B + A", _exprs(2), _sides(lambda a, b: (a + b, b + a)), 2),
        Law("prod_comm", "A * B = B * A", _exprs(2), _sides(lambda a, b: (a * b, b * a)), 2),
        Law("sum_assoc", "A + (B + C) = (A + B) + C", _exprs(3), _sides(lambda a, b, c: (a + (b + c), (a + b) + c)), 3),
        Law("prod_assoc", "A * (B * C) = (A * B) * C", _exprs(3), _sides(lambda a, b, c: (a * (b * c), (a * b) * c)), 3),
        Law("distrib_left", "A * (B + C) = A * B + A * C", _exprs(3), _sides(lambda a, b, c: (a * (b + c), a * b + a * c)), 3),
        Law("distrib_right", "(B + C) * A = B * A + C * A", _exprs(3), _sides(lambda a, b, c: ((b + c) * a, b * a + c * a)), 3),
        Law("sum_identity", "A + 0 = 0 + A = A", _exprs(1), _sides(lambda a: (a + ZERO, a), lambda a: (ZERO + a, a)), 1),
        Law("prod_identity", "A * 1 = 1 * A = A", _exprs(1), _sides(lambda a: (a * ONE, a), lambda a: (ONE * a, a)), 1),
        Law("annihilation", "0 * A = 0 = A * 0", _exprs(1), _sides(lambda a: (ZERO * a, ZERO), lambda a: (a * ZERO, ZERO)), 1),
        Law("one_absorbs_sum", "A + 1 = 1", _exprs(1), _sides(lambda a: (a + ONE, ONE)), 1),
    ]
}


def check_semiring_law(law_id: str, instance: tuple) -> LawReport:
    """Both sides must have the same canonical form and the same worst-case tolerance."""
    law = _lookup(SEMIRING_LAWS, law_id)
    _check_arity(law, instance)
    return LawReport(law_id, tuple(instance), Metric.WORST, tuple(law.body(tuple(instance), _Ctx(Metric.WORST))))


# --- driving a law over a generated stream --------------------------------


@dataclass(frozen=True)
class Counterexample:
    index: int
    report: LawReport


@dataclass
class LawSummary:
    law_id: str
    metric: Metric
    instances: int = 0
    vacuous: int = 0
    violations: int = 0
    first_counterexample: Counterexample | None = None

    def to_dict(self) -> dict:
        d = {
            "law_id": self.law_id,
            "metric": self.metric.value,
            "instances": self.instances,
            "vacuous": self.vacuous,
            "violations": self.violations,
        }
        if self.first_counterexample is not None:
            d["first_counterexample"] = {
                "index": self.first_counterexample.index,
                **self.first_counterexample.report.to_dict(),
            }
        return d


def instance_for(law_id: str, m: Metric, config: GenConfig, index: int) -> tuple:
    law = ORDER_LAWS.get(law_id) or _lookup(SEMIRING_LAWS, law_id)
    return law.sampler(rng_for(config, index, salt=law_id), config, Metric(m))


def _checker(law_id: str) -> Callable[[tuple, Metric], LawReport]:
    if law_id in ORDER_LAWS:
        return lambda inst, m: check_law(law_id, inst, m)
    _lookup(SEMIRING_LAWS, law_id)
    return lambda inst, m: check_semiring_law(law_id, inst)


def run_law(law_id: str, m: Metric, config: GenConfig, n: int, stop_at_first: bool = False) -> LawSummary:
    check = _checker(law_id)
    summary = LawSummary(law_id, Metric(m))
    for i in range(n):
        report = check(instance_for(law_id, m, config, i), m)
        summary.instances += 1
        summary.vacuous += report.vacuous
        if not report.holds:
            summary.violations += 1
            if summary.first_counterexample is None:
                summary.first_counterexample = Counterexample(i, report)
                if stop_at_first:
                    break
    return summary


def find_counterexample(law_id: str, m: Metric, config: GenConfig, budget: int = 10_000) -> Counterexample | None:
    """First generated instance (lowest index) that violates the law, or None."""
    return run_law(law_id, m, config, budget, stop_at_first=True).first_counterexample
