"""Command-line interface.

Subcommands: ``classify`` (lasso report, optional definition-level
cross-check), ``build`` (construct cord sets), ``enumerate`` (all trees on a
leaf set), ``witness`` (two fitting weightings exhibiting a failure), and
``distances`` (cord distances induced by a weighted tree).  Exit codes:
0 success, 1 property violation (classification disagrees with the
definition-level check), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import builders, lasso, oracle
from .cords import CordFileError, format_rational, read_cord_file
from .heights import HeightMap, WeightingError
from .newick import NewickParseError, parse_newick, print_newick
from .tree import XTree

_SCHEMA_VERSION = 1


def _load_tree(path: str):
    return parse_newick(Path(path).read_text())


def _load_cords(path: str, tree: XTree):
    cords, _ = read_cord_file(Path(path).read_text())
    unknown = {lab for c in cords for lab in c} - tree.leaf_labels
    if unknown:
        raise ValueError(f"cord labels not in the tree: {sorted(unknown)}")
    return cords


def _clade(tree: XTree, v: int) -> str:
    return "{" + ",".join(sorted(tree.leaves_below(v))) + "}"


def cmd_classify(args) -> int:
    tree, _ = _load_tree(args.tree)
    cords = _load_cords(args.cords, tree)
    report = lasso.classify(tree, cords)
    for kind in ("equidistant", "weak", "topological", "strong"):
        print(f"{kind:12s} {'yes' if getattr(report, kind) else 'no'}")
    for kind, failing in report.failing_vertices.items():
        if failing:
            clades = " ".join(_clade(tree, v) for v in failing)
            print(f"failing {kind}: {clades}")

    payload = {
        "v": _SCHEMA_VERSION,
        "tree": tree.canonical_newick(),
        "cords": len(cords),
        "equidistant": report.equidistant,
        "weak": report.weak,
        "topological": report.topological,
        "strong": report.strong,
        "failing": {
            kind: [_clade(tree, v) for v in vs]
            for kind, vs in report.failing_vertices.items()
        },
    }

    status = 0
    if args.oracle:
        checks = {
            "equidistant": oracle.oracle_equidistant(tree, cords)[0],
            "weak": oracle.oracle_weak(tree, cords)[0],
            "topological": oracle.oracle_topological(tree, cords)[0],
        }
        agree = all(checks[k] == getattr(report, k) for k in checks)
        payload["oracle"] = {**checks, "agree": agree}
        if not agree:
            print("definition-level check disagrees with the classification", file=sys.stderr)
            status = 1
    print(json.dumps(payload, sort_keys=True))
    return status


def cmd_build(args) -> int:
    tree, _ = _load_tree(args.tree)
    if args.kind == "equidistant":
        cords = builders.min_equidistant_lasso(tree)
    elif args.kind == "weak":
        cords = builders.min_weak_lasso(tree)
    elif args.kind == "topological":
        cords = builders.min_topological_lasso(tree)
    elif args.kind == "circular":
        cords = builders.circular_lasso(builders.circular_order(tree, seed=args.seed))
    else:  # bipartition
        if not args.partition:
            raise ValueError("--kind bipartition requires --partition FILE")
        sides = []
        for raw in Path(args.partition).read_text().splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                sides.append(frozenset(line.split()))
        if len(sides) != 2:
            raise ValueError("partition file must hold exactly two label lines")
        if sides[0] | sides[1] != tree.leaf_labels:
            raise ValueError("partition sides must cover the leaf set exactly")
        cords = builders.bipartition_lasso(builders.Bipartition(*sides))
    for a, b in sorted(cords):
        print(a, b)
    return 0


def cmd_enumerate(args) -> int:
    labels = [s for s in args.leaves.split(",") if s]
    trees = (
        oracle.enumerate_binary_xtrees(labels)
        if args.binary
        else oracle.enumerate_xtrees(labels)
    )
    if args.count_only:
        print(len(trees))
    else:
        for t in trees:
            print(t.canonical_newick())
    return 0


def cmd_witness(args) -> int:
    tree, _ = _load_tree(args.tree)
    cords = _load_cords(args.cords, tree)
    runner = {
        "equidistant": oracle.oracle_equidistant,
        "weak": oracle.oracle_weak,
        "topological": oracle.oracle_topological,
    }[args.kind]
    _, witness = runner(tree, cords)
    if witness is None:
        print("none")
    else:
        print(print_newick(tree, witness.heights_t.to_edge_weights()))
        print(print_newick(witness.rival, witness.heights_rival.to_edge_weights()))
    return 0


def cmd_distances(args) -> int:
    tree, weighting = _load_tree(args.tree)
    if weighting is None:
        raise ValueError("distances needs a weighted tree (every edge ':weight')")
    heights = HeightMap.from_edge_weights(weighting)
    cords = _load_cords(args.cords, tree)
    for a, b in sorted(cords):
        print(a, b, format_rational(heights.leaf_distance(a, b)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treelasso",
        description="Decide whether partial leaf distances pin down an equidistant rooted tree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="lasso report for a tree and a cord set")
    p.add_argument("--tree", required=True, help="Newick file")
    p.add_argument("--cords", required=True, help="cord file, one 'a b' pair per line")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the definition-level decision (<= 5 leaves)",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("build", help="construct a cord set of a given kind")
    p.add_argument("--tree", required=True)
    p.add_argument(
        "--kind",
        required=True,
        choices=["equidistant", "weak", "topological", "circular", "bipartition"],
    )
    p.add_argument("--partition", help="two-line label file for --kind bipartition")
    p.add_argument("--seed", type=int, default=None, help="embedding seed for --kind circular")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("enumerate", help="all trees on a leaf set, one Newick per line")
    p.add_argument("--leaves", required=True, help="comma-separated labels")
    p.add_argument("--binary", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witness", help="exhibit two weightings behind a lasso failure")
    p.add_argument("--tree", required=True)
    p.add_argument("--cords", required=True)
    p.add_argument(
        "--kind", required=True, choices=["equidistant", "weak", "topological"]
    )
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("distances", help="cord distances induced by a weighted tree")
    p.add_argument("--tree", required=True, help="weighted Newick file")
    p.add_argument("--cords", required=True)
    p.set_defaults(func=cmd_distances)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NewickParseError, CordFileError, WeightingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
