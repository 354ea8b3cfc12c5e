import itertools

import pytest
from hypothesis import given

from ftalgebra.analysis import NEG_INF, POS_INF, fin
from ftalgebra.expr import ONE, ZERO, Atom, atoms
from ftalgebra.generate import GenConfig
from ftalgebra.oracle import oracle_phi_best
from ftalgebra.order import Metric
from ftalgebra.parser import format_expr, parse
from ftalgebra.quotient import (
    BEST_LABELS,
    WORST_LABELS,
    FtClass,
    MetricMismatchError,
    check_congruence,
    check_label_laws,
    class_leq,
    class_of,
    class_prod,
    class_sum,
    label_prod,
    label_sum,
    representative,
    run_congruence,
    run_soundness,
    soundness_report,
)

from strategies import exprs

W, B = Metric.WORST, Metric.BEST
X, Y = atoms("X", "Y")


def w(label):
    return FtClass(W, label)


def test_class_of():
    assert class_of(parse("A^3"), W) == w(fin(2))
    assert class_of(ZERO, W) == w(POS_INF)
    assert class_of(parse("2B^3"), W) == class_of(parse("A^3"), W)


def test_class_sum():
    assert class_sum(w(2), w(0)) == w(0)
    assert class_sum(w(3), w(POS_INF)) == w(3)
    assert class_sum(FtClass(B, 1), FtClass(B, 2)) == FtClass(B, 3)


def test_class_prod():
    assert class_prod(w(1), w(2)) == w(4)
    assert class_prod(w(3), w(-1)) == w(3)
    assert class_prod(w(5), w(POS_INF)) == w(POS_INF)


def test_class_errors():
    with pytest.raises(MetricMismatchError):
        class_sum(w(1), FtClass(B, 1))
    with pytest.raises(MetricMismatchError, match="not a congruence"):
        class_prod(FtClass(B, 1), FtClass(B, 1))
    with pytest.raises(MetricMismatchError):
        class_leq(w(1), FtClass(B, 1))


def test_representatives():
    assert representative(w(0)) == Atom("X")
    assert format_expr(representative(w(2))) == "X^3"
    assert representative(w(POS_INF)) == ZERO
    assert representative(w(-1)) == ONE
    assert representative(FtClass(B, NEG_INF)) == ONE


@pytest.mark.parametrize("c", [w(t) for t in WORST_LABELS] + [FtClass(B, t) for t in BEST_LABELS])
def test_representative_is_a_member(c):
    assert class_of(representative(c), c.metric) == c


def test_class_leq():
    assert class_leq(w(POS_INF), w(5))
    assert class_leq(w(0), w(0))
    assert not class_leq(w(1), w(3))


def test_class_leq_is_a_partial_order():
    for a, b in itertools.product(WORST_LABELS, repeat=2):
        if class_leq(w(a), w(b)) and class_leq(w(b), w(a)):
            assert a == b


def test_congruence_examples():
    a1, b1 = X, parse("2X")
    r = check_congruence(B, "product", (a1, Y, b1, Y))
    assert not r.vacuous and not r.holds
    assert oracle_phi_best(X * Y) == fin(1)
    assert oracle_phi_best(b1 * Y) == fin(2)
    assert check_congruence(W, "product", (parse("A^2"), X, parse("2B^2"), Y)).holds
    assert check_congruence(B, "sum", (a1, Y, b1, Y)).holds


@pytest.mark.parametrize("op", ["sum", "product"])
def test_worst_congruence_stream(op):
    s = run_congruence(W, op, GenConfig(seed=2), 500)
    assert s.violations == 0
    assert s.vacuous < s.instances / 2


def test_best_sum_congruence_stream():
    assert run_congruence(B, "sum", GenConfig(seed=2), 500).violations == 0


def test_best_product_congruence_fails():
    s = run_congruence(B, "product", GenConfig(seed=2), 10_000, stop_at_first=True)
    assert s.first_counterexample is not None


@given(exprs(), exprs())
def test_quotient_soundness(a, b):
    assert soundness_report(a, b, W).holds
    assert soundness_report(a, b, B).holds


def test_soundness_stream():
    assert run_soundness(W, GenConfig(seed=4), 500).violations == 0


def test_label_laws_exhaustive():
    results = check_label_laws()
    assert {r.law_id for r in results} >= {
        "plus_assoc", "times_comm", "distributive", "annihilation", "zerosumfree", "entire", "simple",
    }
    for r in results:
        assert r.violations == 0, r


def test_label_laws_on_a_subset():
    assert all(r.violations == 0 for r in check_label_laws([fin(0), fin(1), fin(2)]))


def test_label_arithmetic():
    assert label_sum(W, fin(2), fin(0)) == fin(0)
    assert label_prod(fin(-1), fin(-1)) == fin(-1)
