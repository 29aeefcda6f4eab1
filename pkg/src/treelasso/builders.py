"""Constructions of cord sets of each lasso type.

Minimum-size builders pick, under every child edge, the lexicographically
smallest leaf as the representative of that edge, so outputs are
deterministic.  The circular and bipartition constructions build the two
classical families: consecutive pairs of a planar leaf ordering, and all
pairs crossing a 2-coloring of the leaves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .cords import Cord, all_cords, cord
from .tree import XTree

__all__ = [
    "Bipartition",
    "CircularOrdering",
    "bipartition_lasso",
    "circular_lasso",
    "circular_order",
    "min_equidistant_lasso",
    "min_topological_lasso",
    "min_weak_lasso",
    "random_cord_set",
]


@dataclass(frozen=True)
class CircularOrdering:
    """A cyclic leaf sequence, as produced by walking a planar embedding."""

    order: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.order)) != len(self.order):
            raise ValueError("a circular ordering must not repeat labels")
        if not self.order:
            raise ValueError("a circular ordering must be nonempty")


@dataclass(frozen=True)
class Bipartition:
    """A split of the leaf set into two disjoint nonempty blocks."""

    a_side: frozenset[str]
    b_side: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_side", frozenset(self.a_side))
        object.__setattr__(self, "b_side", frozenset(self.b_side))
        if not self.a_side or not self.b_side:
            raise ValueError("both sides of a bipartition must be nonempty")
        if self.a_side & self.b_side:
            raise ValueError("the two sides of a bipartition must be disjoint")


def _representative(tree: XTree, child: int) -> str:
    return min(tree.leaves_below(child))


def min_equidistant_lasso(tree: XTree) -> frozenset[Cord]:
    """One cord per interior vertex, pinning that vertex as a cord's meeting point.

    The output has exactly one cord for each interior vertex (the two
    lexicographically smallest child representatives), which is the minimum
    possible size for an equidistant lasso.
    """
    _require(tree)
    out = set()
    for v in tree.interior_vertices():
        reps = sorted(_representative(tree, c) for c in tree.children(v))
        out.add(cord(reps[0], reps[1]))
    return frozenset(out)


def min_topological_lasso(tree: XTree) -> frozenset[Cord]:
    """All representative pairs across distinct child edges, per interior vertex.

    Realizes the clique condition at every vertex with the fewest cords:
    the size is the sum over interior vertices of (children choose 2).
    """
    _require(tree)
    out = set()
    for v in tree.interior_vertices():
        reps = sorted(_representative(tree, c) for c in tree.children(v))
        for a, b in combinations(reps, 2):
            out.add(cord(a, b))
    return frozenset(out)


def min_weak_lasso(tree: XTree) -> frozenset[Cord]:
    """A smallest corralling cord set; empty for the star tree.

    Pseudo-cherry parents get a spanning path over their leaves (children
    minus one cords); every other interior vertex gets the representative
    cords realizing the subtree-edge clique plus all leaf-to-subtree pairs.
    """
    _require(tree)
    if tree.is_star():
        return frozenset()
    pc_parents = {v for v, _ in tree.pseudo_cherries()}
    out = set()
    for v in tree.interior_vertices():
        if v in pc_parents:
            leaves = sorted(tree.leaves_below(v))
            for a, b in zip(leaves, leaves[1:]):
                out.add(cord(a, b))
        else:
            leaf_reps = sorted(
                tree.label(c) for c in tree.children(v) if tree.is_leaf(c)
            )
            sub_reps = sorted(
                _representative(tree, c)
                for c in tree.children(v)
                if not tree.is_leaf(c)
            )
            for a, b in combinations(sub_reps, 2):
                out.add(cord(a, b))
            for a in leaf_reps:
                for b in sub_reps:
                    out.add(cord(a, b))
    return frozenset(out)


def circular_order(tree: XTree, seed: int | None = None) -> CircularOrdering:
    """Leaf sequence of a depth-first traversal of one planar embedding.

    With ``seed=None`` the canonical child order is used; an integer seed
    deterministically shuffles the child order at every vertex, choosing a
    different embedding.
    """
    rng = random.Random(seed) if seed is not None else None
    order: list[str] = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        if tree.is_leaf(v):
            order.append(tree.label(v))
            continue
        kids = list(tree.children(v))
        if rng is not None:
            rng.shuffle(kids)
        stack.extend(reversed(kids))
    return CircularOrdering(tuple(order))


def circular_lasso(ordering: CircularOrdering) -> frozenset[Cord]:
    """The consecutive-pair cords of a circular ordering, wraparound included."""
    n = len(ordering.order)
    if n < 3:
        raise ValueError("a circular lasso needs at least 3 leaves")
    return frozenset(
        cord(ordering.order[i], ordering.order[(i + 1) % n]) for i in range(n)
    )


def bipartition_lasso(bipartition: Bipartition) -> frozenset[Cord]:
    """All cords with one endpoint on each side of the bipartition."""
    return frozenset(
        cord(a, b) for a in bipartition.a_side for b in bipartition.b_side
    )


def random_cord_set(labels: Iterable[str], k: int, seed: int) -> frozenset[Cord]:
    """A uniform random k-subset of all cords, deterministic per seed."""
    pool = sorted(all_cords(labels))
    if k < 0 or k > len(pool):
        raise ValueError(f"cannot sample {k} cords from {len(pool)} available")
    return frozenset(random.Random(seed).sample(pool, k))


def _require(tree: XTree) -> None:
    if len(tree.leaf_labels) < 3:
        raise ValueError("lasso constructions need at least 3 leaves")
