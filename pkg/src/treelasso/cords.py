"""Cords (unordered pairs of leaf labels) and their text file format.

A cord stands for one known pairwise distance.  Cords are normalized to
sorted 2-tuples; cord sets are frozensets of those.  The text format is one
cord per line, ``labelA labelB``, with an optional third column holding a
positive rational distance and ``#`` starting a comment.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable

__all__ = [
    "Cord",
    "CordFileError",
    "all_cords",
    "cord",
    "cord_set",
    "format_cord_file",
    "format_rational",
    "parse_rational",
    "read_cord_file",
    "validate_cords",
]

Cord = tuple[str, str]


class CordFileError(ValueError):
    """Malformed cord / partial-distance file."""


def cord(a: str, b: str) -> Cord:
    """Normalize an unordered pair of distinct labels to a sorted tuple."""
    if a == b:
        raise ValueError(f"a cord needs two distinct labels, got {a!r} twice")
    return (a, b) if a < b else (b, a)


def cord_set(pairs: Iterable[tuple[str, str]]) -> frozenset[Cord]:
    """Normalize an iterable of label pairs into a cord set."""
    return frozenset(cord(a, b) for a, b in pairs)


def all_cords(labels: Iterable[str]) -> frozenset[Cord]:
    """Every 2-subset of the given label set."""
    return frozenset(combinations(sorted(set(labels)), 2))


def validate_cords(cords: Iterable[tuple[str, str]], labels: Iterable[str]) -> frozenset[Cord]:
    """Normalize ``cords`` and require every endpoint to belong to ``labels``."""
    known = set(labels)
    out = cord_set(cords)
    for a, b in out:
        if a not in known or b not in known:
            missing = a if a not in known else b
            raise ValueError(f"cord label {missing!r} is not a leaf of this tree")
    return out


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational: an integer, a decimal, or ``p/q``."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Exact text form of a rational: ``p`` or ``p/q``."""
    return str(Fraction(value))


def read_cord_file(text: str) -> tuple[frozenset[Cord], dict[Cord, Fraction] | None]:
    """Parse cord-file text into (cords, distances).

    ``distances`` is None when no line carries a third column; a file must
    either give a distance on every cord line or on none.
    """
    cords: set[Cord] = set()
    distances: dict[Cord, Fraction] = {}
    saw_bare = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise CordFileError(f"line {lineno}: expected 2 or 3 columns, got {len(fields)}")
        try:
            c = cord(fields[0], fields[1])
        except ValueError as exc:
            raise CordFileError(f"line {lineno}: {exc}") from None
        if c in cords:
            raise CordFileError(f"line {lineno}: duplicate cord {c[0]} {c[1]}")
        cords.add(c)
        if len(fields) == 3:
            try:
                d = parse_rational(fields[2])
            except ValueError as exc:
                raise CordFileError(f"line {lineno}: {exc}") from None
            if d <= 0:
                raise CordFileError(f"line {lineno}: distance must be positive, got {d}")
            distances[c] = d
        else:
            saw_bare = True
    if distances and saw_bare:
        raise CordFileError("mixed lines: distances must appear on every cord or on none")
    return frozenset(cords), (distances if distances else None)


def format_cord_file(
    cords: Iterable[Cord], distances: dict[Cord, Fraction] | None = None
) -> str:
    """Render a cord set (optionally with distances) in the text format."""
    lines = []
    for c in sorted(cord_set(cords)):
        if distances is None:
            lines.append(f"{c[0]} {c[1]}")
        else:
            lines.append(f"{c[0]} {c[1]} {format_rational(distances[c])}")
    return "\n".join(lines) + ("\n" if lines else "")
