"""Lasso classification from child-edge graphs, reductions, diagnostics."""

import pytest

from conftest import LABELS4, all_cord_subsets
from treelasso import (
    LassoReport,
    XTree,
    all_cords,
    classify,
    cord_graph,
    cord_set,
    enumerate_binary_xtrees,
    enumerate_xtrees,
    is_covering,
    is_equidistant_lasso,
    is_topological_lasso,
    is_weak_lasso,
    reduce_by_cherry,
    reduction_check,
)

CAT = XTree(((("a", "b"), "c"), "d"))
T4 = XTree((("a", "b", "c"), "d"))
STAR3 = XTree(("a", "b", "c"))


def c(*pairs):
    return cord_set(pairs)


def test_equidistant_examples():
    assert not is_equidistant_lasso(CAT, frozenset())
    assert is_equidistant_lasso(STAR3, c(("a", "b")))
    assert is_equidistant_lasso(CAT, c(("a", "b"), ("a", "c"), ("a", "d")))
    assert not is_equidistant_lasso(CAT, c(("a", "b"), ("a", "c")))


def test_weak_examples():
    assert is_weak_lasso(STAR3, frozenset())
    assert is_weak_lasso(XTree(("a", "b", "c", "d")), c(("a", "c")))
    assert is_weak_lasso(T4, c(("a", "b"), ("b", "c"), ("a", "d")))
    assert not is_weak_lasso(T4, c(("a", "b"), ("a", "d")))
    assert not is_weak_lasso(T4, frozenset())


def test_topological_examples():
    assert is_topological_lasso(STAR3, all_cords("abc"))
    for missing_one in all_cords("abc"):
        assert not is_topological_lasso(
            STAR3, all_cords("abc") - {missing_one}
        )
    assert is_topological_lasso(CAT, c(("a", "b"), ("a", "c"), ("a", "d")))
    assert not is_topological_lasso(T4, c(("a", "b"), ("b", "c"), ("a", "d")))


def test_classify_example_report():
    report = classify(T4, c(("a", "b"), ("b", "c"), ("a", "d")))
    assert (report.equidistant, report.weak, report.topological, report.strong) == (
        True,
        True,
        False,
        False,
    )
    assert report.failing_vertices["topological"] == (T4.lca("a", "b"),)
    assert report.failing_vertices["weak"] == ()


def test_classify_full_cord_set_gives_every_flag():
    for labels in (("a", "b", "c"), LABELS4):
        for t in enumerate_xtrees(labels):
            report = classify(t, all_cords(labels))
            assert report.equidistant and report.weak and report.topological and report.strong


def test_classify_flags_are_internally_consistent_everywhere():
    for t in enumerate_xtrees(LABELS4):
        for cords in all_cord_subsets(LABELS4)[::3]:
            report = classify(t, cords)
            assert report.strong == (report.equidistant and report.topological)
            if report.topological:
                assert report.weak
            if report.weak and cords:
                assert report.equidistant


def test_binary_trees_collapse_the_hierarchy():
    for t in enumerate_binary_xtrees(LABELS4):
        for cords in all_cord_subsets(LABELS4):
            report = classify(t, cords)
            assert report.equidistant == report.topological == report.weak


def test_adding_cords_never_breaks_a_lasso():
    pool = sorted(all_cords(LABELS4))
    for t in enumerate_xtrees(LABELS4)[::4]:
        for cords in all_cord_subsets(LABELS4)[::5]:
            before = classify(t, cords)
            for extra in pool:
                if extra in cords:
                    continue
                after = classify(t, cords | {extra})
                for kind in ("equidistant", "weak", "topological", "strong"):
                    assert not (getattr(before, kind) and not getattr(after, kind))


def test_report_rejects_inconsistent_flags():
    with pytest.raises(ValueError):
        LassoReport(True, True, True, False, {})
    with pytest.raises(ValueError):
        LassoReport(True, False, True, True, {})


def test_small_leaf_sets_rejected():
    with pytest.raises(ValueError):
        classify(XTree(("a", "b")), frozenset())
    with pytest.raises(ValueError):
        is_weak_lasso(XTree(("a", "b")), frozenset())


def test_reduce_by_cherry():
    assert reduce_by_cherry(c(("a", "b"), ("a", "c"), ("b", "d")), "a", "b") == c(
        ("b", "d"), ("b", "c")
    )
    assert reduce_by_cherry(frozenset(), "a", "b") == frozenset()
    assert reduce_by_cherry(c(("x", "y")), "x", "y") == frozenset()
    with pytest.raises(ValueError):
        reduce_by_cherry(frozenset(), "a", "a")


def test_reduction_check_examples():
    assert reduction_check(T4, c(("a", "b"), ("b", "c"), ("a", "d")), "c", "b", "weak")
    # when the cherry cord is absent both sides of the equivalence are false
    assert reduction_check(CAT, c(("a", "c"), ("a", "d")), "a", "b", "topological")


def test_reduction_equivalence_fails_inside_wide_pseudo_cherries():
    # {ab, ad} pins both interior heights of ((a,b,c),d) without the cord ca,
    # so the biconditional cannot hold for the pair (c, a); same for the
    # clique condition once the rewiring drops the x-z cord.
    assert not reduction_check(T4, c(("a", "b"), ("a", "d")), "c", "a", "equidistant")
    assert not reduction_check(
        T4, c(("a", "b"), ("a", "c"), ("b", "c"), ("a", "d")), "c", "a", "topological"
    )


def test_reduction_equivalence_holds_for_every_cherry_pair():
    for t in enumerate_xtrees(LABELS4):
        pairs = [
            (x, y)
            for _, leaves in t.pseudo_cherries()
            if len(leaves) == 2
            for x in leaves
            for y in leaves
            if x != y
        ]
        for cords in all_cord_subsets(LABELS4)[::9]:
            for x, y in pairs:
                for kind in ("equidistant", "weak", "topological"):
                    if kind == "weak" and not cords:
                        continue
                    assert reduction_check(t, cords, x, y, kind)
    with pytest.raises(ValueError):
        reduction_check(CAT, c(("a", "b")), "a", "c", "weak")  # not a cherry pair
    with pytest.raises(ValueError):
        reduction_check(CAT, frozenset(), "a", "b", "weak")  # weak needs cords
    with pytest.raises(ValueError):
        reduction_check(CAT, frozenset(), "a", "b", "strong")  # unknown kind


def test_is_covering():
    assert is_covering(c(("a", "b"), ("c", "d")), "abcd")
    assert not is_covering(c(("a", "b")), "abc")


def test_cord_graph():
    connected, snb = cord_graph(c(("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")), "abcd")
    assert connected and not snb  # a 4-cycle is bipartite
    assert cord_graph(c(("a", "b"), ("c", "d")), "abcd") == (False, False)
    triangle = c(("a", "b"), ("b", "c"), ("a", "c"))
    assert cord_graph(triangle, "abc") == (True, True)
    assert cord_graph(triangle, "abcd") == (False, False)  # isolated d is bipartite
    two_triangles = triangle | c(("d", "e"), ("e", "f"), ("d", "f"))
    assert cord_graph(two_triangles, "abcdef") == (False, True)
