"""Identity simplification and canonical sum-of-products form."""

from __future__ import annotations

from itertools import product as cartesian

from .expr import ONE, ZERO, Atom, One, Product, Sum, SystemExpr, Zero, ac_canonical, ac_equal, fold


def _collapse(kind, kids: list[SystemExpr], identity: SystemExpr) -> SystemExpr:
    if not kids:
        return identity
    if len(kids) == 1:
        return kids[0]
    return kind(tuple(kids))


def simplify_identities(e: SystemExpr) -> SystemExpr:
    """Remove identities and apply absorption, innermost first.

    ``A + 0 -> A``, ``A * 1 -> A``, ``A + 1 -> 1``, ``A * 0 -> 0``.  The result
    contains Zero or One only if it is Zero or One.
    """

    def node(n, kids):
        if isinstance(n, Sum):
            if any(isinstance(k, One) for k in kids):
                return ONE
            return _collapse(Sum, [k for k in kids if not isinstance(k, Zero)], ZERO)
        if any(isinstance(k, Zero) for k in kids):
            return ZERO
        return _collapse(Product, [k for k in kids if not isinstance(k, One)], ONE)

    return fold(e, lambda x: x, node)


def drop_neutral(e: SystemExpr) -> SystemExpr:
    """Only the identity-removal rules (``A + 0 -> A``, ``A * 1 -> A``), no absorption."""

    def node(n, kids):
        if isinstance(n, Sum):
            return _collapse(Sum, [k for k in kids if not isinstance(k, Zero)], ZERO)
        return _collapse(Product, [k for k in kids if not isinstance(k, One)], ONE)

    return fold(e, lambda x: x, node)


def sop_terms(e: SystemExpr) -> list[tuple[str, ...]]:
    """Product terms of the distributed form of an identity-free expression.

    Each term is the sorted tuple of its atom names; repeats are kept.
    """

    def leaf(x):
        if not isinstance(x, Atom):
            raise ValueError("sop_terms needs an expression without Zero/One leaves")
        return [(x.name,)]

    def node(n, kids):
        if isinstance(n, Sum):
            return [t for terms in kids for t in terms]
        return [tuple(sorted(a for part in combo for a in part)) for combo in cartesian(*kids)]

    return fold(e, leaf, node)


def _term_key(t: tuple[str, ...]) -> tuple:
    # same order as expr.sort_key: atoms before products
    return (2, t[0]) if len(t) == 1 else (3, tuple((2, a) for a in t))


def to_sop(e: SystemExpr) -> SystemExpr:
    """Canonical sum of products: distribute x over +, then sort.

    Distribution duplicates atom occurrences, so component count and the
    best-case tolerance may change; worst-case tolerance does not.
    """
    e = simplify_identities(e)
    if isinstance(e, (Zero, One)):
        return e
    terms = sorted(sop_terms(e), key=_term_key)
    built = [Atom(t[0]) if len(t) == 1 else Product(tuple(Atom(a) for a in t)) for t in terms]
    return built[0] if len(built) == 1 else Sum(tuple(built))


def sop_key(e: SystemExpr) -> str | tuple[tuple[str, ...], ...]:
    """Cheap comparison key: ``sop_key(a) == sop_key(b)`` iff ``iso_equal(a, b)``."""
    e = simplify_identities(e)
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, One):
        return "1"
    return tuple(sorted(sop_terms(e), key=_term_key))


def is_sop(e: SystemExpr) -> bool:
    if isinstance(e, (Zero, One, Atom)):
        return True
    terms = e.children if isinstance(e, Sum) else (e,)
    for t in terms:
        if isinstance(t, Atom):
            continue
        if not isinstance(t, Product) or not all(isinstance(a, Atom) for a in t.children):
            return False
    return True


def iso_equal(e1: SystemExpr, e2: SystemExpr) -> bool:
    """Equality under the semiring laws: same canonical sum of products."""
    return ac_equal(to_sop(e1), to_sop(e2))
