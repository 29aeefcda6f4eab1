"""Equidistant proper edge-weightings, stored as interior-vertex heights.

An equidistant weighting puts every leaf at the same distance from the root
and keeps distances monotone along root-to-leaf paths.  Such a weighting is
the same thing as a height function on the interior vertices: the height of
a vertex is its distance to any leaf below it (leaves sit at height zero),
the weight of an edge is the height difference of its endpoints, and
properness (strictly positive interior edges) becomes strict monotonicity of
heights along interior edges.  Heights make distance queries trivial: the
distance between two leaves is twice the height of their last common vertex.

All values are exact rationals; strict inequalities are never approximated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .cords import validate_cords
from .tree import XTree

__all__ = [
    "EdgeWeighting",
    "HeightMap",
    "NegativeWeightError",
    "NotEquidistantError",
    "NotProperError",
    "WeightingError",
    "random_proper_heights",
]


class WeightingError(ValueError):
    """An edge-weighting violates the equidistant/proper contract."""


class NegativeWeightError(WeightingError):
    """Some edge carries a negative weight."""


class NotProperError(WeightingError):
    """Some interior edge carries weight <= 0."""


class NotEquidistantError(WeightingError):
    """Two leaves below the same vertex sit at different distances from it."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("edge weights and heights must be exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class EdgeWeighting:
    """Edge weights of a tree, keyed by the child endpoint of each edge.

    Every non-root vertex identifies its parent edge, so ``by_child`` must
    have exactly the non-root vertex ids as keys.  Values are not validated
    beyond being exact rationals; nonnegativity, properness and equidistance
    are checked by :meth:`HeightMap.from_edge_weights`.
    """

    tree: XTree
    by_child: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        weights = {v: _as_fraction(w) for v, w in self.by_child.items()}
        expected = set(self.tree.vertices()) - {self.tree.root}
        if set(weights) != expected:
            raise ValueError("weighting must cover exactly the non-root vertices")
        object.__setattr__(self, "by_child", weights)

    def weight(self, child: int) -> Fraction:
        return self.by_child[child]

    def __hash__(self) -> int:
        return hash((self.tree, tuple(sorted(self.by_child.items()))))


@dataclass(frozen=True)
class HeightMap:
    """Nonnegative rational heights on the interior vertices of a tree.

    Valid height maps are strictly decreasing along interior edges away
    from the root (that is the properness condition) and nonnegative
    everywhere; a pendant edge may have weight zero.
    """

    tree: XTree
    heights: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        h = {v: _as_fraction(x) for v, x in self.heights.items()}
        if set(h) != set(self.tree.interior_vertices()):
            raise ValueError("heights must cover exactly the interior vertices")
        for v, x in h.items():
            if x < 0:
                raise ValueError(f"height of vertex {v} is negative: {x}")
        for v in self.tree.interior_vertices():
            p = self.tree.parent(v)
            if p is not None and h[v] >= h[p]:
                raise ValueError(
                    f"heights must strictly decrease along interior edges "
                    f"({p} -> {v}: {h[p]} -> {h[v]})"
                )
        object.__setattr__(self, "heights", h)

    def __hash__(self) -> int:
        return hash((self.tree, tuple(sorted(self.heights.items()))))

    def height(self, v: int) -> Fraction:
        """Height of a vertex; leaves are at height zero."""
        if self.tree.is_leaf(v):
            return Fraction(0)
        return self.heights[v]

    def to_edge_weights(self) -> EdgeWeighting:
        """The per-edge weights: weight of an edge = height drop across it."""
        t = self.tree
        weights = {
            v: self.height(t.parent(v)) - self.height(v)
            for v in t.vertices()
            if v != t.root
        }
        return EdgeWeighting(t, weights)

    @classmethod
    def from_edge_weights(cls, weighting: EdgeWeighting) -> "HeightMap":
        """Recover heights from per-edge weights, validating the contract.

        Raises :class:`NegativeWeightError` if any weight is negative,
        :class:`NotProperError` if an interior edge has weight <= 0, and
        :class:`NotEquidistantError` if two leaves below some vertex end up
        at different distances from it.
        """
        t = weighting.tree
        w = weighting.by_child
        for v, value in w.items():
            if value < 0:
                raise NegativeWeightError(f"edge into vertex {v} has weight {value}")
        for v in t.interior_vertices():
            if v != t.root and w[v] <= 0:
                raise NotProperError(f"interior edge into vertex {v} has weight {w[v]}")
        heights: dict[int, Fraction] = {}
        for v in reversed(t.interior_vertices()):
            candidates = set()
            for c in t.children(v):
                below = Fraction(0) if t.is_leaf(c) else heights[c]
                candidates.add(w[c] + below)
            if len(candidates) > 1:
                raise NotEquidistantError(
                    f"leaves below vertex {v} are at distances {sorted(candidates)} from it"
                )
            heights[v] = candidates.pop()
        return cls(t, heights)

    def leaf_distance(self, a: str, b: str) -> Fraction:
        """Induced distance between two distinct leaves: 2 * height(lca)."""
        return 2 * self.heights[self.tree.lca(a, b)]

    def is_l_isometric(self, other: "HeightMap", cords: Iterable[tuple[str, str]]) -> bool:
        """True iff the two weighted trees induce equal distances on every cord."""
        if self.tree.leaf_labels != other.tree.leaf_labels:
            raise ValueError("height maps are over different leaf sets")
        checked = validate_cords(cords, self.tree.leaf_labels)
        return all(
            self.leaf_distance(a, b) == other.leaf_distance(a, b) for a, b in checked
        )


def random_proper_heights(tree: XTree, seed: int) -> HeightMap:
    """A seeded random valid height map with small-denominator rationals.

    Deterministic per seed; heights strictly increase toward the root along
    interior edges by construction.
    """
    rng = random.Random(seed)
    heights: dict[int, Fraction] = {}
    for v in reversed(tree.interior_vertices()):
        base = Fraction(0)
        for c in tree.children(v):
            if not tree.is_leaf(c):
                base = max(base, heights[c])
        heights[v] = base + Fraction(rng.randint(1, 8), rng.randint(1, 4))
    return HeightMap(tree, heights)
