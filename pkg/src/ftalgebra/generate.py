"""Seeded random expressions for law checking.

Instance ``i`` of a stream with seed ``s`` is drawn from its own generator
seeded with ``"s/i"``, so any reported counterexample can be rebuilt from
``(seed, index)`` alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .expr import ONE, ZERO, Atom, Product, Sum, SystemExpr, component_count

# atoms make up half of the leaves when identities are allowed
_LEAF_KINDS = ("atom", "atom", "zero", "one")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_depth: int = 3
    max_children: int = 3
    atom_pool: tuple[str, ...] = ("A", "B", "C", "D")
    allow_identities: bool = True
    # resample until the tree has at most this many atom occurrences
    max_atoms: int | None = None

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.max_children < 2:
            raise ValueError("max_children must be >= 2")
        if not self.atom_pool:
            raise ValueError("atom_pool must not be empty")
        object.__setattr__(self, "atom_pool", tuple(self.atom_pool))


def rng_for(config: GenConfig, index: int, salt: str = "") -> random.Random:
    return random.Random(f"{config.seed}/{index}{salt}")


def random_expr(rng: random.Random, config: GenConfig, depth: int | None = None) -> SystemExpr:
    """Depth-bounded tree: leaf, sum or product chosen uniformly at each level."""
    depth = config.max_depth if depth is None else depth
    kind = rng.choice(("leaf", "sum", "product")) if depth > 0 else "leaf"
    if kind == "leaf":
        kind = rng.choice(_LEAF_KINDS) if config.allow_identities else "atom"
    if kind == "atom":
        return Atom(rng.choice(config.atom_pool))
    if kind == "zero":
        return ZERO
    if kind == "one":
        return ONE
    n = rng.randint(2, config.max_children)
    children = tuple(random_expr(rng, config, depth - 1) for _ in range(n))
    return Sum(children) if kind == "sum" else Product(children)


def sample(rng: random.Random, config: GenConfig) -> SystemExpr:
    while True:
        e = random_expr(rng, config)
        if config.max_atoms is None or component_count(e) <= config.max_atoms:
            return e


def generate(config: GenConfig, index: int) -> SystemExpr:
    return sample(rng_for(config, index), config)


def generate_many(config: GenConfig, n: int, start: int = 0) -> list[SystemExpr]:
    return [generate(config, i) for i in range(start, start + n)]
