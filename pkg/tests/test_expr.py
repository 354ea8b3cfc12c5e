import pytest
from hypothesis import given

from ftalgebra.analysis import phi_best, phi_worst
from ftalgebra.expr import (
    ONE,
    ZERO,
    Atom,
    Product,
    Sum,
    ac_canonical,
    ac_equal,
    atoms,
    component_count,
    ground,
    relabel_instances,
)
from ftalgebra.oracle import oracle_phis
from ftalgebra.parser import parse

from strategies import exprs

A, B, C = atoms("A", "B", "C")


def test_component_count_leaves():
    assert component_count(Atom("P")) == 1
    assert component_count(ZERO) == 0
    assert component_count(ONE) == 0


def test_component_count_worked_example():
    e = parse("(P^3 + 3Q) * 5R^2")
    # leaf count of the expanded tree: 3 + 3 + 5 * 2
    assert component_count(e) == 16


def test_composites_need_two_children():
    with pytest.raises(ValueError):
        Sum((A,))
    with pytest.raises(ValueError):
        Product(())


@pytest.mark.parametrize("name", ["", "1A", "0", "1", "a-b", "x"])
def test_bad_atom_names(name):
    with pytest.raises(ValueError):
        Atom(name)


def test_ground_ids():
    assert ground(A).instance_ids == [(0, "A")]
    g = ground(Sum((A, A)))
    assert g.instance_ids == [(0, "A"), (1, "A")]
    assert g.component_count == 2
    g = ground(parse("A*(B+C)"))
    assert g.names == ("A", "B", "C")


@given(exprs())
def test_ground_is_a_bijection(e):
    g = ground(e)
    assert [i for i, _ in g.instance_ids] == list(range(component_count(e)))


def test_relabel_instances():
    e = relabel_instances(parse("A*(A+B)"))
    assert e == parse("c0*(c1+c2)")


def test_ac_flattening_and_sorting():
    assert ac_canonical(Sum((Sum((A, B)), C))) == Sum((A, B, C))
    assert ac_canonical(Sum((B, A))) == ac_canonical(Sum((A, B)))
    assert ac_canonical(Product((Sum((C, B)), A))) == Product((A, Sum((B, C))))


def test_ac_order_of_kinds():
    e = ac_canonical(parse("(A+B)*C + A*B + B + 1 + 0"))
    assert e.children == (ZERO, ONE, B, Product((A, B)), Product((C, Sum((A, B)))))
    # nested sums flatten into the parent
    assert ac_canonical(parse("(A+B) + A")).children == (A, A, B)


def test_ac_equal_examples():
    assert ac_equal(A + B, B + A)
    assert ac_equal(A * (B * C), (A * B) * C)
    assert not ac_equal(A * (B + C), A * B + A * C)


@given(exprs())
def test_ac_canonical_idempotent(e):
    once = ac_canonical(e)
    assert ac_canonical(once) == once


@given(exprs(), exprs(), exprs())
def test_ac_equal_is_an_equivalence(a, b, c):
    assert ac_equal(a, a)
    assert ac_equal(a, b) == ac_equal(b, a)
    if ac_equal(a, b) and ac_equal(b, c):
        assert ac_equal(a, c)


@given(exprs())
def test_ac_canonical_preserves_semantics(e):
    c = ac_canonical(e)
    assert component_count(c) == component_count(e)
    assert phi_best(c) == phi_best(e)
    assert phi_worst(c) == phi_worst(e)
    assert oracle_phis(c) == oracle_phis(e)


def test_operators_build_binary_nodes():
    assert A + B == Sum((A, B))
    assert A * B == Product((A, B))
    assert A + B != A * B


def test_hash_consistent_with_eq():
    assert hash(parse("A*(B+C)")) == hash(Product((A, Sum((B, C)))))
    assert len({Sum((A, B)), Sum((A, B)), Product((A, B))}) == 2
