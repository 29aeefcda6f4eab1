"""Rooted leaf-labeled trees without unary vertices.

An :class:`XTree` is a rooted tree whose leaves carry distinct string labels
and whose interior vertices (root included) all have at least two children.
Instances are immutable and canonically ordered: children are stored sorted
by their canonical encoding, vertex ids are assigned in preorder over that
ordering, and two trees compare equal exactly when a root-preserving,
label-fixing isomorphism exists between them.  Equal trees therefore have
identical vertex numbering, which makes ids safe cache keys downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

__all__ = ["Triplet", "XTree", "triplet"]

_FORBIDDEN = set("(),:;")


def _check_label(label: object) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"leaf label must be a nonempty string, got {label!r}")
    if any(ch.isspace() or ch in _FORBIDDEN for ch in label):
        raise ValueError(
            f"invalid leaf label {label!r}: whitespace and '(),:;' are reserved"
        )
    return label


def _canonical(shape) -> tuple[str, object]:
    """Return (canonical key, normalized shape) for a nested tree description.

    A shape is either a leaf label (str) or an iterable of two or more
    shapes.  Children are sorted by their canonical keys so that any two
    isomorphic shapes normalize identically.
    """
    if isinstance(shape, str):
        label = _check_label(shape)
        return label, label
    try:
        entries = tuple(shape)
    except TypeError:
        raise ValueError(f"tree shape must be a label or an iterable, got {shape!r}")
    if len(entries) == 0:
        raise ValueError("interior vertex with no children")
    if len(entries) == 1:
        raise ValueError("unary interior vertex is not allowed")
    pairs = sorted((_canonical(entry) for entry in entries), key=lambda p: p[0])
    key = "(" + ",".join(p[0] for p in pairs) + ")"
    return key, tuple(p[1] for p in pairs)


@dataclass(frozen=True)
class Triplet:
    """Rooted triplet ``ab|c``: the binary shape on three leaves with cherry {a, b}."""

    cherry: frozenset[str]
    outlier: str

    def __post_init__(self) -> None:
        if len(self.cherry) != 2 or self.outlier in self.cherry:
            raise ValueError("a triplet needs three pairwise distinct labels")

    def __repr__(self) -> str:
        a, b = sorted(self.cherry)
        return f"{a}{b}|{self.outlier}"


def triplet(a: str, b: str, c: str) -> Triplet:
    """The triplet ``ab|c`` (cherry {a, b}, outlier c)."""
    return Triplet(frozenset((a, b)), c)


class XTree:
    """Immutable rooted tree on a labeled leaf set, no unary vertices.

    Construct from a nested shape: a leaf is a string label, an interior
    vertex is a tuple (or list) of two or more child shapes::

        XTree(((("a", "b"), "c"), "d"))     # caterpillar on four leaves
        XTree(("a", "b", "c"))              # star on three leaves

    Vertices are integer ids; the root is always id 0.
    """

    def __init__(self, shape) -> None:
        key, normalized = _canonical(shape)
        parent: list[int] = []
        children: list[tuple[int, ...]] = []
        vlabel: list[str | None] = []

        def emit(node, par: int) -> int:
            vid = len(parent)
            parent.append(par)
            children.append(())
            vlabel.append(node if isinstance(node, str) else None)
            if not isinstance(node, str):
                children[vid] = tuple(emit(child, vid) for child in node)
            return vid

        emit(normalized, -1)
        self._key = key
        self._parent = tuple(parent)
        self._children = tuple(children)
        self._vlabel = tuple(vlabel)

        leaf_id: dict[str, int] = {}
        for vid, lab in enumerate(vlabel):
            if lab is not None:
                if lab in leaf_id:
                    raise ValueError(f"duplicate leaf label {lab!r}")
                leaf_id[lab] = vid
        self._leaf_id = leaf_id

        depth = [0] * len(parent)
        for vid in range(1, len(parent)):
            depth[vid] = depth[parent[vid]] + 1
        self._depth = tuple(depth)

        below: list[frozenset[str]] = [frozenset()] * len(parent)
        for vid in range(len(parent) - 1, -1, -1):
            if vlabel[vid] is not None:
                below[vid] = frozenset((vlabel[vid],))
            else:
                acc: set[str] = set()
                for c in children[vid]:
                    acc |= below[c]
                below[vid] = frozenset(acc)
        self._below = tuple(below)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_nested(cls, shape) -> "XTree":
        """Alias for the constructor, for symmetry with other factories."""
        return cls(shape)

    @classmethod
    def star(cls, labels: Iterable[str]) -> "XTree":
        """The tree with a single interior vertex adjacent to every leaf."""
        return cls(tuple(labels))

    # -- basic structure ------------------------------------------------------

    @property
    def root(self) -> int:
        return 0

    @property
    def n_vertices(self) -> int:
        return len(self._parent)

    @property
    def leaf_labels(self) -> frozenset[str]:
        """The leaf-label set X."""
        return self._below[0]

    def vertices(self) -> range:
        return range(len(self._parent))

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def parent(self, v: int) -> int | None:
        """Parent id of ``v``, or None for the root."""
        p = self._parent[v]
        return None if p < 0 else p

    def depth(self, v: int) -> int:
        return self._depth[v]

    def is_leaf(self, v: int) -> bool:
        return self._vlabel[v] is not None

    def label(self, v: int) -> str:
        lab = self._vlabel[v]
        if lab is None:
            raise ValueError(f"vertex {v} is interior and has no leaf label")
        return lab

    def leaf_vertex(self, label: str) -> int:
        try:
            return self._leaf_id[label]
        except KeyError:
            raise ValueError(f"unknown leaf label {label!r}") from None

    @cached_property
    def _interior(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices() if self._vlabel[v] is None)

    def interior_vertices(self) -> tuple[int, ...]:
        """All non-leaf vertex ids, in canonical (preorder) order."""
        return self._interior

    def leaves_below(self, v: int) -> frozenset[str]:
        """Labels of the leaves that are descendants of ``v`` (itself, for a leaf)."""
        return self._below[v]

    # -- ancestry queries -----------------------------------------------------

    def _lca_ids(self, u: int, v: int) -> int:
        du, dv = self._depth[u], self._depth[v]
        while du > dv:
            u = self._parent[u]
            du -= 1
        while dv > du:
            v = self._parent[v]
            dv -= 1
        while u != v:
            u = self._parent[u]
            v = self._parent[v]
        return u

    @cached_property
    def _lca_table(self) -> dict[tuple[str, str], int]:
        table: dict[tuple[str, str], int] = {}
        for a, b in combinations(sorted(self._leaf_id), 2):
            table[(a, b)] = self._lca_ids(self._leaf_id[a], self._leaf_id[b])
        return table

    def lca(self, a: str, b: str) -> int:
        """Last common vertex of the root-to-``a`` and root-to-``b`` paths."""
        if a == b:
            raise ValueError("lca requires two distinct leaf labels")
        self.leaf_vertex(a)
        self.leaf_vertex(b)
        key = (a, b) if a < b else (b, a)
        return self._lca_table[key]

    @cached_property
    def _route(self) -> dict[tuple[int, str], int]:
        # (ancestor vertex, leaf label) -> child of ancestor on the path to leaf
        route: dict[tuple[int, str], int] = {}
        for label, leaf in self._leaf_id.items():
            w = leaf
            p = self._parent[w]
            while p >= 0:
                route[(p, label)] = w
                w = p
                p = self._parent[w]
        return route

    def child_toward(self, v: int, label: str) -> int:
        """The child of ``v`` whose subtree contains the leaf ``label``."""
        try:
            return self._route[(v, label)]
        except KeyError:
            raise ValueError(f"leaf {label!r} is not below vertex {v}") from None

    # -- restriction and triplets ---------------------------------------------

    def restrict(self, labels: Iterable[str]) -> "XTree":
        """The tree induced on a nonempty label subset, unary vertices suppressed."""
        keep = set(labels)
        if not keep:
            raise ValueError("cannot restrict to the empty leaf set")
        unknown = keep - set(self._leaf_id)
        if unknown:
            raise ValueError(f"labels not in this tree: {sorted(unknown)}")

        def prune(v: int):
            lab = self._vlabel[v]
            if lab is not None:
                return lab if lab in keep else None
            kept = [r for r in (prune(c) for c in self._children[v]) if r is not None]
            if not kept:
                return None
            if len(kept) == 1:
                return kept[0]
            return tuple(kept)

        return XTree(prune(0))

    @cached_property
    def _triplets(self) -> frozenset[Triplet]:
        table = self._lca_table
        depth = self._depth
        out = []
        for a, b, c in combinations(sorted(self._leaf_id), 3):
            dab = depth[table[(a, b)]]
            dac = depth[table[(a, c)]]
            dbc = depth[table[(b, c)]]
            top = max(dab, dac, dbc)
            if dab == dac == dbc:
                continue
            if dab == top:
                out.append(triplet(a, b, c))
            elif dac == top:
                out.append(triplet(a, c, b))
            else:
                out.append(triplet(b, c, a))
        return frozenset(out)

    def triplets(self) -> frozenset[Triplet]:
        """All triplets ``ab|c`` whose restriction to {a, b, c} has cherry {a, b}."""
        return self._triplets

    # -- comparisons ------------------------------------------------------------

    def is_equivalent(self, other: "XTree") -> bool:
        """True iff a root-preserving isomorphism fixing all labels exists."""
        if self.leaf_labels != other.leaf_labels:
            raise ValueError("trees are on different leaf sets")
        return self._key == other._key

    def refines(self, other: "XTree") -> bool:
        """True iff ``other`` can be obtained from this tree by collapsing edges.

        Equivalent formulation: every triplet of ``other`` is a triplet of
        this tree.  Every tree refines itself.
        """
        if self.leaf_labels != other.leaf_labels:
            raise ValueError("trees are on different leaf sets")
        return other._triplets <= self._triplets

    # -- degenerate-shape queries -----------------------------------------------

    def pseudo_cherries(self) -> tuple[tuple[int, frozenset[str]], ...]:
        """All (parent vertex, leaf set) pairs where the leaf set is a maximal
        proper subset of X whose members all share that parent."""
        out = []
        for v in self._interior:
            if all(self._vlabel[c] is not None for c in self._children[v]):
                leaves = self._below[v]
                if leaves != self.leaf_labels:
                    out.append((v, leaves))
        return tuple(out)

    def interior_minus(self) -> frozenset[int]:
        """Interior vertices that are not the parent of a pseudo-cherry."""
        pc_parents = {v for v, _ in self.pseudo_cherries()}
        return frozenset(self._interior) - pc_parents

    def is_binary(self) -> bool:
        """True iff every interior vertex has exactly two children."""
        return all(len(self._children[v]) == 2 for v in self._interior)

    def is_star(self) -> bool:
        """True iff the tree has exactly one interior vertex."""
        return len(self._interior) == 1

    # -- canonical form -----------------------------------------------------------

    def canonical_newick(self) -> str:
        """Topology-only Newick text in canonical child order."""
        return self._key + ";"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, XTree) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"<XTree {self._key};>"
