"""Definition-level ground truth for lasso decisions on small leaf sets.

The characterizations in :mod:`treelasso.lasso` read lasso status off the
child-edge graphs.  This module answers the same questions straight from the
definitions instead: it enumerates every tree on the leaf set (up to
equivalence), encodes "both trees fit the cord distances" as an exact linear
system over the two interior height vectors, and asks for strict
feasibility.  A cord set fails to corral a tree exactly when some rival that
is not a refinement admits a jointly feasible pair of proper weightings; it
fails to be a topological lasso when some non-equivalent rival does; and it
fails to be an equidistant lasso when the same tree carries two distinct
weightings fitting the cords.

Rivals are scanned in canonical order and the first feasible violator is
returned as a witness, so results are reproducible.  The scan decides
feasibility through the same exact machinery as :func:`strict_feasible`
(cord equalities only ever identify two heights, and properness is a set of
two-variable strict differences, so feasibility reduces to acyclicity of the
merged difference digraph); the full system route is kept for witness
extraction and is cross-checked against the scan in the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .cords import Cord, validate_cords
from .feasibility import StrictLinearSystem, linear_system, strict_feasible
from .heights import HeightMap
from .tree import XTree

__all__ = [
    "Witness",
    "enumerate_binary_xtrees",
    "enumerate_xtrees",
    "joint_isometry_system",
    "oracle_equidistant",
    "oracle_topological",
    "oracle_weak",
    "verify_witness",
]

_MAX_LEAVES = 6
_MAX_EXHAUSTIVE = 5


# --------------------------------------------------------------------------
# enumeration of all trees on a labeled leaf set
# --------------------------------------------------------------------------


def _set_partitions(items: tuple) -> Iterator[list[list]]:
    """All partitions of ``items`` into unordered nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


@lru_cache(maxsize=None)
def _shapes(labels: tuple[str, ...]) -> tuple:
    """Every tree shape on ``labels`` (nested-tuple form), one per equivalence class."""
    if len(labels) == 1:
        return (labels[0],)
    out = []
    for blocks in _set_partitions(labels):
        if len(blocks) < 2:
            continue
        options = [_shapes(tuple(sorted(b))) for b in blocks]
        for combo in product(*options):
            out.append(tuple(combo))
    return tuple(out)


def _check_enumeration_domain(labels: Sequence[str]) -> tuple[str, ...]:
    ordered = tuple(sorted(set(labels)))
    if len(ordered) != len(tuple(labels)):
        raise ValueError("duplicate labels in leaf set")
    if not 2 <= len(ordered) <= _MAX_LEAVES:
        raise ValueError(
            f"enumeration supports 2..{_MAX_LEAVES} leaves, got {len(ordered)}"
        )
    return ordered


@lru_cache(maxsize=None)
def _enumerate(labels: tuple[str, ...]) -> tuple[XTree, ...]:
    trees = [XTree(shape) for shape in _shapes(labels)]
    trees.sort(key=lambda t: t.canonical_newick())
    return tuple(trees)


def enumerate_xtrees(labels: Iterable[str]) -> tuple[XTree, ...]:
    """Every tree on the label set, one per equivalence class, canonical order."""
    return _enumerate(_check_enumeration_domain(tuple(labels)))


def enumerate_binary_xtrees(labels: Iterable[str]) -> tuple[XTree, ...]:
    """The binary trees on the label set, filtered out of the full enumeration."""
    return tuple(t for t in enumerate_xtrees(labels) if t.is_binary())


# --------------------------------------------------------------------------
# joint feasibility of two trees against one cord set
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _tables(tree: XTree):
    """Dense per-tree tables: interior index, interior edges, leaf-pair lca index."""
    interior = tree.interior_vertices()
    index = {v: i for i, v in enumerate(interior)}
    edges = tuple(
        (index[tree.parent(v)], index[v]) for v in interior if v != tree.root
    )
    lca_index = {}
    labels = sorted(tree.leaf_labels)
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            lca_index[(a, b)] = index[tree.lca(a, b)]
    return index, edges, lca_index, len(interior)


def _merged_acyclic(
    size: int, edges: list[tuple[int, int]], merges: list[tuple[int, int]]
) -> bool:
    """Acyclicity of the strict-difference digraph after identifications.

    ``edges`` are (higher, lower) height constraints; ``merges`` are
    equalities.  Feasibility of the joint height system is exactly the
    absence of a directed cycle among the merged classes.
    """
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in merges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    adj: dict[int, list[int]] = {}
    indeg: dict[int, int] = {}
    for u, w in edges:
        ru, rw = find(u), find(w)
        if ru == rw:
            return False
        adj.setdefault(ru, []).append(rw)
        indeg[rw] = indeg.get(rw, 0) + 1
        indeg.setdefault(ru, indeg.get(ru, 0))
    queue = [u for u, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for w in adj.get(u, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(indeg)


def joint_isometry_system(
    tree: XTree, rival: XTree, cords: Iterable[Cord]
) -> StrictLinearSystem:
    """The exact system "both trees carry proper weightings fitting every cord".

    Variables are the interior heights of both trees (tagged "T" and "R"),
    all nonnegative; properness contributes a strict difference along every
    interior edge; every cord contributes one equality between the heights
    of its two meeting vertices.
    """
    if tree.leaf_labels != rival.leaf_labels:
        raise ValueError("trees are on different leaf sets")
    checked = validate_cords(cords, tree.leaf_labels)
    variables = [("T", v) for v in tree.interior_vertices()]
    variables += [("R", v) for v in rival.interior_vertices()]
    strict = []
    for v in tree.interior_vertices():
        p = tree.parent(v)
        if p is not None:
            strict.append(({("T", p): 1, ("T", v): -1}, 0))
    for v in rival.interior_vertices():
        p = rival.parent(v)
        if p is not None:
            strict.append(({("R", p): 1, ("R", v): -1}, 0))
    equalities = []
    for a, b in sorted(checked):
        equalities.append(
            ({("T", tree.lca(a, b)): 1, ("R", rival.lca(a, b)): -1}, 0)
        )
    return linear_system(
        variables, equalities=equalities, strict=strict, nonneg=variables
    )


# --------------------------------------------------------------------------
# oracle decisions with witnesses
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Two jointly fitting weightings that exhibit a lasso failure.

    ``rival`` equals the reference tree for equidistant failures (two
    distinct weightings of the same tree); for weak/topological failures it
    is a non-refining / non-equivalent tree fitting the same cord distances.
    """

    rival: XTree
    heights_t: HeightMap
    heights_rival: HeightMap


def _heights_from_point(tree: XTree, point: dict, tag: str) -> HeightMap:
    return HeightMap(
        tree, {v: point[(tag, v)] for v in tree.interior_vertices()}
    )


def _rival_witness(tree: XTree, rival: XTree, cords: frozenset[Cord]) -> Witness:
    point = strict_feasible(joint_isometry_system(tree, rival, cords))
    if point is None:
        raise AssertionError("scan found a feasible rival the full system rejects")
    return Witness(
        rival=rival,
        heights_t=_heights_from_point(tree, point, "T"),
        heights_rival=_heights_from_point(rival, point, "R"),
    )


def _require_lasso_domain(tree: XTree) -> None:
    if len(tree.leaf_labels) < 3:
        raise ValueError("lasso oracles need at least 3 leaves")


def _rival_scan(
    tree: XTree,
    cords: frozenset[Cord],
    skip,
    rival_sample: int | None,
    seed: int,
) -> XTree | None:
    """First rival in canonical order that is not skipped and fits the cords."""
    n = len(tree.leaf_labels)
    if rival_sample is None and n > _MAX_EXHAUSTIVE:
        raise ValueError(
            f"leaf set too large for exhaustive rival enumeration "
            f"(>{_MAX_EXHAUSTIVE}); pass rival_sample for a sampled, "
            f"non-exhaustive answer"
        )
    rivals = enumerate_xtrees(sorted(tree.leaf_labels))
    if rival_sample is not None and rival_sample < len(rivals):
        picked = random.Random(seed).sample(rivals, rival_sample)
        rivals = tuple(sorted(picked, key=lambda t: t.canonical_newick()))
    _, t_edges, t_lca, k1 = _tables(tree)
    cord_list = sorted(cords)
    t_side = [t_lca[c] for c in cord_list]
    for rival in rivals:
        if skip(rival):
            continue
        _, r_edges, r_lca, k2 = _tables(rival)
        edges = list(t_edges) + [(k1 + a, k1 + b) for a, b in r_edges]
        merges = [(t_side[i], k1 + r_lca[c]) for i, c in enumerate(cord_list)]
        if _merged_acyclic(k1 + k2, edges, merges):
            return rival
    return None


def oracle_weak(
    tree: XTree,
    cords: Iterable[Cord],
    *,
    rival_sample: int | None = None,
    seed: int = 0,
) -> tuple[bool, Witness | None]:
    """Does every tree fitting the cord distances refine this one?  By definition.

    Exhaustive over all rivals up to 5 leaves.  With ``rival_sample`` set, a
    random rival subset is scanned instead (allowed up to 6 leaves): a False
    answer is still certain, a True answer is sampled, not exhaustive.
    """
    _require_lasso_domain(tree)
    checked = validate_cords(cords, tree.leaf_labels)
    violator = _rival_scan(
        tree, checked, skip=lambda r: r.refines(tree), rival_sample=rival_sample, seed=seed
    )
    if violator is None:
        return True, None
    return False, _rival_witness(tree, violator, checked)


def oracle_topological(
    tree: XTree,
    cords: Iterable[Cord],
    *,
    rival_sample: int | None = None,
    seed: int = 0,
) -> tuple[bool, Witness | None]:
    """Is the tree shape forced up to equivalence?  Decided by definition.

    Same sampling contract as :func:`oracle_weak`.
    """
    _require_lasso_domain(tree)
    checked = validate_cords(cords, tree.leaf_labels)
    violator = _rival_scan(
        tree, checked, skip=lambda r: r == tree, rival_sample=rival_sample, seed=seed
    )
    if violator is None:
        return True, None
    return False, _rival_witness(tree, violator, checked)


def _equidistant_witness_system(
    tree: XTree, cords: frozenset[Cord], vertex: int
) -> StrictLinearSystem:
    variables = [("T", v) for v in tree.interior_vertices()]
    variables += [("R", v) for v in tree.interior_vertices()]
    strict = []
    for v in tree.interior_vertices():
        p = tree.parent(v)
        if p is not None:
            strict.append(({("T", p): 1, ("T", v): -1}, 0))
            strict.append(({("R", p): 1, ("R", v): -1}, 0))
    strict.append(({("T", vertex): 1, ("R", vertex): -1}, 0))
    equalities = []
    for a, b in sorted(cords):
        v = tree.lca(a, b)
        equalities.append(({("T", v): 1, ("R", v): -1}, 0))
    return linear_system(
        variables, equalities=equalities, strict=strict, nonneg=variables
    )


def oracle_equidistant(
    tree: XTree, cords: Iterable[Cord]
) -> tuple[bool, Witness | None]:
    """Is the proper weighting unique given the cord distances?  By definition.

    False exactly when, for some interior vertex, two valid height vectors
    on the same tree agree on every cord's meeting height yet differ at that
    vertex; the witness carries such a pair of weightings.
    """
    _require_lasso_domain(tree)
    checked = validate_cords(cords, tree.leaf_labels)
    index, edges, lca_index, k = _tables(tree)
    both = list(edges) + [(k + a, k + b) for a, b in edges]
    merges = [(lca_index[c], k + lca_index[c]) for c in sorted(checked)]
    for v in tree.interior_vertices():
        i = index[v]
        if _merged_acyclic(2 * k, both + [(i, k + i)], merges):
            point = strict_feasible(_equidistant_witness_system(tree, checked, v))
            if point is None:
                raise AssertionError("scan found a feasible split the full system rejects")
            return False, Witness(
                rival=tree,
                heights_t=_heights_from_point(tree, point, "T"),
                heights_rival=_heights_from_point(tree, point, "R"),
            )
    return True, None


def verify_witness(
    tree: XTree, cords: Iterable[Cord], witness: Witness, kind: str
) -> bool:
    """Re-check a witness: valid weightings, cord distances match, claim violated."""
    checked = validate_cords(cords, tree.leaf_labels)
    if not witness.heights_t.is_l_isometric(witness.heights_rival, checked):
        return False
    if kind == "equidistant":
        return witness.rival == tree and (
            witness.heights_t.heights != witness.heights_rival.heights
        )
    if kind == "weak":
        return not witness.rival.refines(tree)
    if kind == "topological":
        return not tree.is_equivalent(witness.rival)
    raise ValueError(f"unknown witness kind {kind!r}")
