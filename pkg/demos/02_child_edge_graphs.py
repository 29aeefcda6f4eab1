"""Child-edge graphs: the combinatorial core of every lasso decision.

For an interior vertex v, the child-edge graph has one node per child edge
and joins two child edges whenever some cord's leaf-to-leaf path runs
through both, i.e. the cord's endpoints meet exactly at v.  Whether a cord
set pins down the weighting, the shape, or the shape up to refinement is
read off these graphs: at least one edge / a clique / rich-and-connected.

Run:  python3 demos/02_child_edge_graphs.py
"""

from treelasso import XTree, build_child_edge_graph, child_edge_graphs, cord_set

tree = XTree((("a", "b", ("c", "d"), ("e", "f"), ("g", "h")), "i"))
cords = cord_set(
    [("a", "c"), ("a", "e"), ("a", "g"), ("b", "d"), ("b", "e"), ("b", "h"),
     ("c", "e"), ("c", "g"), ("e", "h"), ("c", "d"), ("e", "f"), ("g", "h"),
     ("a", "i")]
)
print("tree:", tree.canonical_newick())
print("cords:", " ".join(a + b for a, b in sorted(cords)))

v = tree.lca("a", "c")  # the vertex with leaf children a, b and three cherries
graph = build_child_edge_graph(tree, cords, v)


def name(child):
    return tree.label(child) if tree.is_leaf(child) else "{" + ",".join(sorted(tree.leaves_below(child))) + "}"


print(f"\nchild-edge graph at the vertex above {sorted(tree.leaves_below(v))}:")
print("  leaf edges:   ", sorted(name(c) for c in graph.leaf_edges))
print("  subtree edges:", sorted(name(c) for c in graph.subtree_edges))
for u, w in sorted(graph.edges()):
    print(f"  {name(u)} -- {name(w)}")

# Rich: the subtree edges form a clique and every leaf edge reaches all of
# them.  Note there is no a--b edge; richness never asks for leaf-to-leaf
# pairs.
print("rich:", graph.is_rich(), "| connected:", graph.is_connected(), "| clique:", graph.is_clique())

# Each cord contributes to exactly one vertex: the one where its path turns.
print("\ngraphs per interior vertex (cord ai only feeds the root):")
for u, g in child_edge_graphs(tree, cord_set([("a", "i")])).items():
    print(f"  vertex over {sorted(tree.leaves_below(u))}: {sum(1 for _ in g.edges())} edge(s)")

# DOT export for quick visual inspection (leaf edges drawn as boxes)
print("\nDOT form of the rich graph:")
print(graph.to_dot())
