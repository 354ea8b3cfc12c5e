"""Best- and worst-case fault tolerance computed from the composition tree."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

from .expr import Atom, Product, Sum, SystemExpr, Zero, component_count, fold


@total_ordering
class Tolerance:
    """Extended integer: -inf, a finite integer, or +inf.

    Finite values produced by the fault-tolerance functions are >= -1, but
    intermediate sums may dip lower, so the carrier admits any integer.
    """

    __slots__ = ("_v",)

    def __init__(self, value: int | float):
        if isinstance(value, Tolerance):
            value = value._v
        if isinstance(value, float):
            if not math.isinf(value):
                raise ValueError(f"finite Tolerance must be an int, got {value!r}")
        elif isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"bad Tolerance value {value!r}")
        self._v = value

    @property
    def value(self) -> int | float:
        return self._v

    @property
    def is_finite(self) -> bool:
        return isinstance(self._v, int)

    def __eq__(self, other):
        if isinstance(other, Tolerance):
            return self._v == other._v
        if isinstance(other, int) and not isinstance(other, bool):
            return self._v == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Tolerance):
            return self._v < other._v
        if isinstance(other, int):
            return self._v < other
        return NotImplemented

    def __hash__(self):
        return hash(self._v)

    def __add__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Tolerance(other)
        if not isinstance(other, Tolerance):
            return NotImplemented
        return tol_add(self, other)

    __radd__ = __add__

    def __repr__(self) -> str:
        if self._v == math.inf:
            return "POS_INF"
        if self._v == -math.inf:
            return "NEG_INF"
        return f"Tolerance({self._v})"

    def __str__(self) -> str:
        return str(self.label())

    def label(self) -> int | str:
        """JSON form: an integer, ``"+inf"`` or ``"-inf"``."""
        if self._v == math.inf:
            return "+inf"
        if self._v == -math.inf:
            return "-inf"
        return self._v

    @classmethod
    def from_label(cls, label: int | str) -> Tolerance:
        if label == "+inf":
            return POS_INF
        if label == "-inf":
            return NEG_INF
        return cls(int(label))


POS_INF = Tolerance(math.inf)
NEG_INF = Tolerance(-math.inf)


def fin(k: int) -> Tolerance:
    return Tolerance(k)


class UndefinedFormError(ArithmeticError):
    """+inf + -inf was requested."""


def tol_add(a: Tolerance, b: Tolerance) -> Tolerance:
    if {a._v, b._v} == {math.inf, -math.inf}:
        raise UndefinedFormError("+inf + -inf is undefined")
    return Tolerance(a._v + b._v)


def tol_sum(values) -> Tolerance:
    total = Tolerance(0)
    for v in values:
        total = tol_add(total, v)
    return total


def _worst_leaf(e: SystemExpr) -> Tolerance:
    if isinstance(e, Atom):
        return Tolerance(0)
    if isinstance(e, Zero):
        return POS_INF
    return Tolerance(-1)


def _worst_node(e, kids: list[Tolerance]) -> Tolerance:
    if isinstance(e, Sum):
        return min(kids)
    return tol_add(tol_sum(kids), Tolerance(len(kids) - 1))


def phi_worst(e: SystemExpr) -> Tolerance:
    """One less than the size of the smallest failure set that brings ``e`` down.

    Sums take the minimum over children; a product of n children adds the
    children's values plus n - 1.  Zero is +inf and One is -1.
    """
    return fold(e, _worst_leaf, _worst_node)


def _best_leaf(e: SystemExpr) -> tuple[int, Tolerance]:
    if isinstance(e, Atom):
        return 1, Tolerance(0)
    if isinstance(e, Zero):
        return 0, Tolerance(0)
    return 0, NEG_INF


def _best_node(e, kids: list[tuple[int, Tolerance]]) -> tuple[int, Tolerance]:
    size = sum(n for n, _ in kids)
    if isinstance(e, Sum):
        return size, tol_sum(b for _, b in kids)
    # keep one child up with the smallest deficit, fail all the others
    # first minimal child wins ties; the value does not depend on the choice
    n_k, b_k = min(kids, key=lambda nb: nb[0] - nb[1].value)
    if not b_k.is_finite:
        return size, NEG_INF
    return size, Tolerance(size - n_k + b_k.value)


def phi_best(e: SystemExpr) -> Tolerance:
    """Size of the largest failure set ``e`` survives (-inf if none, not even the empty set)."""
    return fold(e, _best_leaf, _best_node)[1]


def deficit(e: SystemExpr) -> Tolerance:
    """``|e| - phi_best(e)``; +inf when ``e`` is always down."""
    b = phi_best(e)
    if not b.is_finite:
        return POS_INF
    return Tolerance(component_count(e) - b.value)


@dataclass(frozen=True)
class Report:
    components: int
    phi_best: Tolerance
    phi_worst: Tolerance

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "phi_best": self.phi_best.label(),
            "phi_worst": self.phi_worst.label(),
        }


def analyze(e: SystemExpr) -> Report:
    return Report(component_count(e), phi_best(e), phi_worst(e))


def phi_worst_binary(e: SystemExpr) -> Tolerance:
    """Worst case via the two-argument rules folded left over each node's children."""

    def node(n, kids):
        acc = kids[0]
        for k in kids[1:]:
            acc = min(acc, k) if isinstance(n, Sum) else acc + k + 1
        return acc

    return fold(e, _worst_leaf, node)


def phi_best_binary(e: SystemExpr) -> Tolerance:
    """Best case via ``max(b(A) + |B|, |A| + b(B))`` folded left over each product."""

    def node(n, kids):
        size, acc = kids[0]
        for n_k, b_k in kids[1:]:
            if isinstance(n, Sum):
                acc = acc + b_k
            else:
                acc = max(acc + n_k, b_k + size)
            size += n_k
        return size, acc

    return fold(e, _best_leaf, node)[1]
