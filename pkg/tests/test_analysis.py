import math

import pytest
from hypothesis import given

from ftalgebra.analysis import (
    NEG_INF,
    POS_INF,
    Report,
    Tolerance,
    UndefinedFormError,
    analyze,
    fin,
    phi_best,
    phi_best_binary,
    phi_worst,
    phi_worst_binary,
    tol_add,
)
from ftalgebra.expr import ONE, ZERO, Atom, Product, Sum, component_count, ground
from ftalgebra.parser import parse

from strategies import brute_force, exprs


class TestTolerance:
    def test_add(self):
        assert tol_add(fin(2), fin(3)) == fin(5)
        assert tol_add(POS_INF, fin(7)) == POS_INF
        assert tol_add(NEG_INF, fin(0)) == NEG_INF

    def test_undefined_form(self):
        with pytest.raises(UndefinedFormError):
            tol_add(POS_INF, NEG_INF)
        with pytest.raises(UndefinedFormError):
            tol_add(NEG_INF, POS_INF)

    def test_order(self):
        chain = [NEG_INF, fin(-1), fin(0), fin(1), fin(100), POS_INF]
        assert chain == sorted(reversed(chain))
        assert all(a < b for a, b in zip(chain, chain[1:]))

    def test_labels_round_trip(self):
        for t in [NEG_INF, fin(-1), fin(3), POS_INF]:
            assert Tolerance.from_label(t.label()) == t
        assert POS_INF.label() == "+inf"
        assert NEG_INF.label() == "-inf"

    def test_rejects_finite_floats(self):
        with pytest.raises(ValueError):
            Tolerance(1.5)
        with pytest.raises(TypeError):
            Tolerance(True)

    def test_compares_with_int(self):
        assert fin(3) == 3
        assert fin(3) < 4
        assert POS_INF > 10**9


@pytest.mark.parametrize("n", range(1, 6))
def test_power_worst(n):
    assert phi_worst(parse(f"A^{n}")) == fin(n - 1)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_mA_n(m, n):
    e = parse(f"{m}A^{n}")
    assert analyze(e) == Report(m * n, fin(m * (n - 1)), fin(n - 1))


def test_worked_example():
    # recursion: worst 0 + 1 + 1, best max{2 + 10, 6 + 5}
    assert analyze(parse("(P^3 + 3Q) * 5R^2")) == Report(16, fin(12), fin(2))


def test_identities():
    assert phi_worst(ZERO) == POS_INF
    assert phi_worst(ONE) == fin(-1)
    assert phi_best(ZERO) == fin(0)
    assert phi_best(ONE) == NEG_INF


def test_small_reports():
    assert analyze(Atom("A")) == Report(1, fin(0), fin(0))
    assert analyze(parse("3Q")) == Report(3, fin(0), fin(0))
    assert analyze(parse("A^2 + B")) == Report(3, fin(1), fin(0))


def test_annihilation_keeps_components_in_best_case():
    e = parse("A^2 * 0")
    assert phi_best(e) == fin(2)
    assert phi_best(ZERO) == fin(0)
    assert phi_worst(e) == POS_INF


def test_all_always_down_product():
    assert phi_best(parse("1*(1 + A)")) == NEG_INF
    assert phi_best(parse("1*0")) == fin(0)


@given(exprs())
def test_worst_never_exceeds_best(e):
    worst, best = phi_worst(e), phi_best(e)
    if worst == POS_INF:
        # a system that never fails survives losing everything
        assert best == fin(component_count(e))
    elif worst == fin(-1):
        # already down with nothing failed
        assert best == NEG_INF
    else:
        assert worst <= best


def test_never_failing_systems_break_the_naive_bound():
    e = parse("A*0")
    assert phi_worst(e) == POS_INF
    assert phi_best(e) == fin(1)
    assert (phi_worst(ONE), phi_best(ONE)) == (fin(-1), NEG_INF)


@given(exprs(identities=False))
def test_bounds_without_identities(e):
    n = component_count(e)
    assert phi_best(e) <= fin(n - 1)
    assert phi_worst(e) >= fin(0)


@given(exprs(max_leaves=10))
def test_recursion_matches_brute_force(e):
    assert (phi_best(e), phi_worst(e)) == brute_force(ground(e))


@given(exprs())
def test_binary_fold_matches_nary(e):
    assert phi_worst_binary(e) == phi_worst(e)
    assert phi_best_binary(e) == phi_best(e)


@given(exprs())
def test_identity_laws(a):
    for phi in (phi_best, phi_worst):
        assert phi(a + ZERO) == phi(a)
        assert phi(ZERO + a) == phi(a)
        assert phi(a * ONE) == phi(a)
        assert phi(ONE * a) == phi(a)


def test_deep_tree_has_no_recursion_limit():
    e = Atom("A")
    for i in range(3000):
        e = Sum((e, Atom("B"))) if i % 2 else Product((e, Atom("C")))
    assert component_count(e) == 3001
    assert phi_worst(e) == fin(0)
    assert phi_best(e).is_finite
    assert not math.isnan(phi_best(e).value)
