"""Brute-force failure-set semantics.

Every subset of component instances is tried.  The whole truth table is
built at once as a boolean array indexed by the subset bitmask, so a
system with N instances costs O(nodes * 2**N) vectorised operations.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .analysis import NEG_INF, POS_INF, Tolerance
from .expr import Atom, GroundedSystem, One, Product, Sum, SystemExpr, Zero, fold, ground

DEFAULT_CAP = 20


class CapExceededError(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"{n} component instances exceed the enumeration cap of {cap}")
        self.n = n
        self.cap = cap


def _as_grounded(g: GroundedSystem | SystemExpr) -> GroundedSystem:
    return g if isinstance(g, GroundedSystem) else ground(g)


def _mask(s: int | Iterable[int]) -> int:
    if isinstance(s, int):
        return s
    m = 0
    for i in s:
        m |= 1 << i
    return m


def fails(g: GroundedSystem | SystemExpr, s: int | Iterable[int]) -> bool:
    """Does the system fail when exactly the instances in ``s`` have failed?

    ``s`` is a bitmask or an iterable of instance IDs.
    """
    g = _as_grounded(g)
    mask = _mask(s)
    if mask >> g.component_count:
        raise ValueError(f"failure set mentions IDs >= {g.component_count}")
    counter = iter(range(g.component_count))

    def leaf(e):
        if isinstance(e, Atom):
            return bool(mask >> next(counter) & 1)
        return isinstance(e, One)

    return fold(g.expr, leaf, lambda n, kids: any(kids) if isinstance(n, Sum) else all(kids))


def fails_named(e: SystemExpr, failed: Iterable[str]) -> bool:
    """Evaluate ``e`` with every atom whose name is in ``failed`` down."""
    failed = set(failed)

    def leaf(x):
        if isinstance(x, Atom):
            return x.name in failed
        return isinstance(x, One)

    return fold(e, leaf, lambda n, kids: any(kids) if isinstance(n, Sum) else all(kids))


def _check_cap(g: GroundedSystem, cap: int) -> None:
    if g.component_count > cap:
        raise CapExceededError(g.component_count, cap)


def truth_table(g: GroundedSystem | SystemExpr, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Boolean array ``t`` with ``t[mask] == fails(g, mask)`` for all 2**N masks."""
    g = _as_grounded(g)
    _check_cap(g, cap)
    n = g.component_count
    masks = np.arange(1 << n, dtype=np.uint32)
    counter = iter(range(n))

    def leaf(e):
        if isinstance(e, Atom):
            return ((masks >> np.uint32(next(counter))) & np.uint32(1)).astype(bool)
        return np.full(masks.shape, isinstance(e, One))

    def node(e, kids):
        reduce = np.logical_or if isinstance(e, Sum) else np.logical_and
        return reduce.reduce(kids)

    return fold(g.expr, leaf, node)


def popcounts(n: int) -> np.ndarray:
    counts = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        counts[1 << i : 1 << (i + 1)] = counts[: 1 << i] + 1
    return counts


def _tables(g, cap):
    g = _as_grounded(g)
    table = truth_table(g, cap)
    return g, table, popcounts(g.component_count)


def oracle_phi_best(g: GroundedSystem | SystemExpr, cap: int = DEFAULT_CAP) -> Tolerance:
    """Largest number of failed instances the system survives."""
    _, table, counts = _tables(g, cap)
    survivors = counts[~table]
    if survivors.size == 0:
        return NEG_INF
    return Tolerance(int(survivors.max()))


def oracle_phi_worst(g: GroundedSystem | SystemExpr, cap: int = DEFAULT_CAP) -> Tolerance:
    """Smallest failing set size minus one."""
    _, table, counts = _tables(g, cap)
    failing = counts[table]
    if failing.size == 0:
        return POS_INF
    return Tolerance(int(failing.min()) - 1)


def oracle_phis(g: GroundedSystem | SystemExpr, cap: int = DEFAULT_CAP) -> tuple[Tolerance, Tolerance]:
    """``(best, worst)`` from a single truth table."""
    _, table, counts = _tables(g, cap)
    survivors = counts[~table]
    failing = counts[table]
    best = Tolerance(int(survivors.max())) if survivors.size else NEG_INF
    worst = Tolerance(int(failing.min()) - 1) if failing.size else POS_INF
    return best, worst


def minimal_cut_sets(g: GroundedSystem | SystemExpr, cap: int = DEFAULT_CAP) -> list[frozenset[int]]:
    """Inclusion-minimal failing sets, ordered by size and then lexicographically."""
    g, table, _ = _tables(g, cap)
    n = g.component_count
    minimal = table.copy()
    idx = np.arange(1 << n, dtype=np.uint32)
    for i in range(n):
        bit = np.uint32(1 << i)
        has = (idx & bit) != 0
        # a failing set stays minimal only if dropping any member survives
        minimal[has] &= ~table[idx[has] ^ bit]
    cuts = [tuple(i for i in range(n) if m >> i & 1) for m in np.flatnonzero(minimal).tolist()]
    cuts.sort(key=lambda c: (len(c), c))
    return [frozenset(c) for c in cuts]
