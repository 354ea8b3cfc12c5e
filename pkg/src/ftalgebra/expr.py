"""System expressions: atoms, the two identity systems, n-ary sums and products.

A ``Sum`` is series composition (fails if any child fails) and a ``Product``
is parallel composition (fails only if every child fails).  Every atom
occurrence is a distinct physical component, even when names repeat.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, TypeVar

T = TypeVar("T")

ATOM_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
# "x" is a product operator in the text grammar
RESERVED_NAMES = frozenset({"x"})


class SystemExpr:
    """Base class of all expression nodes.  Nodes are immutable."""

    __slots__ = ()

    def __add__(self, other: SystemExpr) -> Sum:
        return Sum((self, other))

    def __mul__(self, other: SystemExpr) -> Product:
        return Product((self, other))

    def __str__(self) -> str:
        from .parser import format_expr

        return format_expr(self)


@dataclass(frozen=True, repr=False)
class Atom(SystemExpr):
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_NAME.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        if self.name in RESERVED_NAMES:
            raise ValueError(f"atom name {self.name!r} is reserved")

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


@dataclass(frozen=True, repr=False)
class Zero(SystemExpr):
    """The system that is always up."""

    def __repr__(self) -> str:
        return "Zero()"


@dataclass(frozen=True, repr=False)
class One(SystemExpr):
    """The system that is always down."""

    def __repr__(self) -> str:
        return "One()"


@dataclass(frozen=True, repr=False)
class _Composite(SystemExpr):
    children: tuple[SystemExpr, ...]
    _hash: int = field(default=0, init=False, compare=False)

    def __post_init__(self):
        children = tuple(self.children)
        if len(children) < 2:
            raise ValueError(
                f"{type(self).__name__} needs at least 2 children, got {len(children)}"
            )
        for child in children:
            if not isinstance(child, SystemExpr):
                raise TypeError(f"not a SystemExpr: {child!r}")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_hash", hash((type(self).__name__, children)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(repr(c) for c in self.children)
        return f"{type(self).__name__}([{inner}])"


class Sum(_Composite):
    """Series composition."""


class Product(_Composite):
    """Parallel composition."""


ZERO = Zero()
ONE = One()


def atoms(*names: str) -> tuple[Atom, ...]:
    """``A, B = atoms("A", "B")``."""
    return tuple(Atom(n) for n in names)


def fold(
    e: SystemExpr,
    leaf: Callable[[SystemExpr], T],
    node: Callable[[_Composite, list[T]], T],
) -> T:
    """Bottom-up evaluation with an explicit stack (no recursion limit)."""
    if not isinstance(e, _Composite):
        return leaf(e)
    results: list[T] = []
    stack: list[tuple[SystemExpr, bool]] = [(e, False)]
    while stack:
        cur, expanded = stack.pop()
        if not isinstance(cur, _Composite):
            results.append(leaf(cur))
        elif expanded:
            n = len(cur.children)
            vals = results[-n:]
            del results[-n:]
            results.append(node(cur, vals))
        else:
            stack.append((cur, True))
            for child in reversed(cur.children):
                stack.append((child, False))
    return results[0]


def iter_atoms(e: SystemExpr) -> Iterator[Atom]:
    """Atom occurrences in left-to-right depth-first order."""
    stack = [e]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Atom):
            yield cur
        elif isinstance(cur, _Composite):
            stack.extend(reversed(cur.children))


def component_count(e: SystemExpr) -> int:
    return sum(1 for _ in iter_atoms(e))


def node_count(e: SystemExpr) -> int:
    return fold(e, lambda _: 1, lambda _, vals: 1 + sum(vals))


def depth(e: SystemExpr) -> int:
    return fold(e, lambda _: 0, lambda _, vals: 1 + max(vals))


@dataclass(frozen=True)
class GroundedSystem:
    """An expression whose atom occurrences carry instance IDs 0..N-1.

    IDs follow left-to-right depth-first order, so ``names[i]`` is the atom
    name of instance ``i``.
    """

    expr: SystemExpr
    names: tuple[str, ...]

    @property
    def component_count(self) -> int:
        return len(self.names)

    @property
    def instance_ids(self) -> list[tuple[int, str]]:
        return list(enumerate(self.names))


def ground(e: SystemExpr) -> GroundedSystem:
    return GroundedSystem(e, tuple(a.name for a in iter_atoms(e)))


def relabel_instances(e: SystemExpr, prefix: str = "c") -> SystemExpr:
    """Rename every atom occurrence to ``{prefix}{id}`` using its grounded ID.

    Useful when a rewrite duplicates atoms and the original instance must
    stay recoverable from the name.
    """
    counter = iter(range(1 << 62))
    return map_atoms(e, lambda a: Atom(f"{prefix}{next(counter)}"))


def map_atoms(e: SystemExpr, fn: Callable[[Atom], SystemExpr]) -> SystemExpr:
    return fold(
        e,
        lambda leaf: fn(leaf) if isinstance(leaf, Atom) else leaf,
        lambda n, kids: type(n)(tuple(kids)),
    )


# Canonical ordering: Zero < One < Atom (by name) < Product < Sum.
_RANK = {Zero: 0, One: 1, Atom: 2, Product: 3, Sum: 4}


def sort_key(e: SystemExpr) -> tuple:
    def leaf(x):
        if isinstance(x, Atom):
            return (2, x.name)
        return (_RANK[type(x)],)

    return fold(e, leaf, lambda n, kids: (_RANK[type(n)], tuple(kids)))


def ac_canonical(e: SystemExpr) -> SystemExpr:
    """Flatten nested same-kind composites and sort children."""

    def node(n: _Composite, kids: list[SystemExpr]) -> SystemExpr:
        kind = type(n)
        flat: list[SystemExpr] = []
        for k in kids:
            if type(k) is kind:
                flat.extend(k.children)
            else:
                flat.append(k)
        flat.sort(key=sort_key)
        return kind(tuple(flat))

    return fold(e, lambda x: x, node)


def ac_equal(e1: SystemExpr, e2: SystemExpr) -> bool:
    """Equality modulo associativity and commutativity of + and x."""
    return ac_canonical(e1) == ac_canonical(e2)
