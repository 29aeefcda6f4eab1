"""Newick text for rooted trees, with optional exact rational edge weights.

Grammar::

    tree    :=  subtree ";"
    subtree :=  leaf | "(" subtree ("," subtree)+ ")" [":" weight]
    leaf    :=  label [":" weight]
    weight  :=  decimal or rational "p/q"

Unary vertices are rejected, a weight is either present on every edge or on
none, and the root carries no weight (it has no parent edge).  Decimals are
converted exactly (power-of-ten denominators), so parse/print round-trips
preserve rationals bit for bit.
"""

from __future__ import annotations

import re

from .cords import format_rational, parse_rational
from .heights import EdgeWeighting
from .tree import XTree

__all__ = ["NewickParseError", "parse_newick", "print_newick"]

_LABEL_RE = re.compile(r"[^\s(),:;]+")
_WEIGHT_RE = re.compile(r"-?\d+(?:\.\d+)?(?:/\d+)?")


class NewickParseError(ValueError):
    """Syntax or structural error in Newick text, with position information."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> NewickParseError:
        return NewickParseError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {got!r}")
        self.pos += 1

    def subtree(self):
        """Returns (shape, weight | None) with shapes as nested label tuples."""
        if self.peek() == "(":
            self.pos += 1
            children = [self.subtree()]
            while self.peek() == ",":
                self.pos += 1
                children.append(self.subtree())
            if len(children) == 1:
                raise self.error("unary vertex: an interior vertex needs >= 2 children")
            self.expect(")")
            return tuple(children), self.weight()
        m = _LABEL_RE.match(self.text, self.pos)
        if not m:
            got = self.peek() or "end of input"
            raise self.error(f"expected a leaf label or '(', found {got!r}")
        self.pos = m.end()
        return m.group(), self.weight()

    def weight(self):
        if self.peek() != ":":
            return None
        self.pos += 1
        self.skip_ws()
        m = _WEIGHT_RE.match(self.text, self.pos)
        if not m:
            raise self.error("expected a decimal or p/q weight after ':'")
        self.pos = m.end()
        return parse_rational(m.group())


def parse_newick(text: str) -> tuple[XTree, EdgeWeighting | None]:
    """Parse Newick text into a tree and, if weights are given, its weighting.

    Raises :class:`NewickParseError` with line/column on syntax errors,
    unary vertices, duplicate labels, partially weighted input, or a weight
    on the root.
    """
    parser = _Parser(text)
    top, root_weight = parser.subtree()
    parser.expect(";")
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing characters after ';'")
    if root_weight is not None:
        raise NewickParseError("the root cannot carry a weight", text, 0)

    def strip(node):
        shape, _ = node
        if isinstance(shape, str):
            return shape
        return tuple(strip(child) for child in shape)

    try:
        tree = XTree(strip((top, None)))
    except ValueError as exc:
        raise NewickParseError(str(exc), text, 0) from None

    weights: dict[int, object] = {}
    missing = []

    def collect(node) -> frozenset[str]:
        shape, w = node
        if isinstance(shape, str):
            leaves = frozenset((shape,))
        else:
            leaves = frozenset().union(*(collect(child) for child in shape))
        vertex = _vertex_with_leaves(tree, leaves)
        if w is None:
            missing.append(vertex)
        else:
            weights[vertex] = w
        return leaves

    if isinstance(top, tuple):
        for child in top:
            collect(child)
    if weights and missing:
        raise NewickParseError(
            "either every edge carries a weight or none does", text, 0
        )
    if not weights:
        return tree, None
    return tree, EdgeWeighting(tree, weights)


def _vertex_with_leaves(tree: XTree, leaves: frozenset[str]) -> int:
    # Leaf sets identify vertices uniquely in trees without unary vertices.
    for v in tree.vertices():
        if tree.leaves_below(v) == leaves:
            return v
    raise AssertionError("parsed subtree does not map onto the canonical tree")


def print_newick(tree: XTree, weighting: EdgeWeighting | None = None) -> str:
    """Render a tree in canonical child order, with exact weights if given."""
    if weighting is not None and weighting.tree != tree:
        raise ValueError("weighting belongs to a different tree")

    def fmt(v: int) -> str:
        if tree.is_leaf(v):
            body = tree.label(v)
        else:
            body = "(" + ",".join(fmt(c) for c in tree.children(v)) + ")"
        if weighting is not None and v != tree.root:
            body += ":" + format_rational(weighting.by_child[v])
        return body

    return fmt(tree.root) + ";"
