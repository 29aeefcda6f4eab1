"""Classifying cord sets: equidistant, weak, topological, strong.

A cord set is an equidistant lasso when it forces the weighting, a
topological lasso when it forces the shape, a weak lasso (it "corrals" the
tree) when every tree fitting the same distances refines it, and a strong
lasso when it is both equidistant and topological.

Run:  python3 demos/03_classifying_lassos.py
"""

from treelasso import XTree, all_cords, classify, cord_set

tree = XTree((("a", "b", "c"), "d"))
print("tree:", tree.canonical_newick(), "\n")

examples = [
    ("three cords, a path over the cherry", [("a", "b"), ("b", "c"), ("a", "d")]),
    ("drop bc: leaf c dangles", [("a", "b"), ("a", "d")]),
    ("pairwise cords over the cherry", [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d")]),
    ("every cord", sorted(all_cords("abcd"))),
    ("no cords", []),
]

for title, pairs in examples:
    report = classify(tree, cord_set(pairs))
    flags = " ".join(
        kind
        for kind in ("equidistant", "weak", "topological", "strong")
        if getattr(report, kind)
    )
    print(f"{title:38s} [{' '.join(a + b for a, b in sorted(cord_set(pairs)))}]")
    print(f"  -> {flags or 'none'}")
    for kind, failing in report.failing_vertices.items():
        if failing:
            clades = ", ".join("{" + ",".join(sorted(tree.leaves_below(v))) + "}" for v in failing)
            print(f"     {kind} fails at {clades}")
    print()

# The star tree is corralled by everything, even the empty set: every tree
# on the leaf set refines it.
star = XTree(("a", "b", "c", "d"))
print("star tree, no cords:  weak =", classify(star, frozenset()).weak)
print("star tree, all cords: topological =", classify(star, all_cords("abcd")).topological)

# On binary trees the hierarchy collapses: one cord per interior vertex
# already forces everything.
binary = XTree(((("a", "b"), "c"), "d"))
report = classify(binary, cord_set([("a", "b"), ("a", "c"), ("a", "d")]))
print("\nbinary tree, one cord per vertex:",
      {k: getattr(report, k) for k in ("equidistant", "weak", "topological", "strong")})
