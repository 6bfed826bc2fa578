"""Reading, writing, and DOT export.

Space files come in two grammars:

  JSON: {"points": ["a", "b"], "distances": [["0", "1"], ["1", "0"]]}
        with matrix entries given as numbers or strings; "0.25" and "1/4"
        both parse to the exact rational 1/4.
  CSV:  a header row of point labels followed by the square matrix.

Path/cycle files are JSON objects {"order": [...], "weights": [...]}; n-1
weights describe a path, n weights a cycle (closing edge last).

Serialization always writes fractions in "p/q" (or plain integer) form so a
parse/serialize round trip is the identity. Decimal rendering exists purely
for display.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .balls import HasseDiagram
from .diametrical import diametrical_decompose
from .errors import ParseError
from .spaces import Space, as_fraction
from .trees import Node, RepTree

__all__ = [
    "parse_space",
    "space_to_json",
    "space_to_csv",
    "load_space",
    "save_space",
    "parse_path_text",
    "format_value",
    "tree_to_text",
    "diametrical_dot",
    "tree_dot",
    "hasse_dot",
]


def parse_space(text: str, fmt: str = "json") -> Space:
    """Parse a space from JSON or CSV text; axioms are validated on the way
    in (AxiomViolation), anything structurally malformed raises ParseError."""
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ParseError(f"unknown format {fmt!r}")


def _exact_loads(text: str):
    # parse_float receives the raw literal, so decimals convert exactly.
    try:
        return json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from None


def _parse_json(text: str) -> Space:
    obj = _exact_loads(text)
    if not isinstance(obj, dict) or "points" not in obj or "distances" not in obj:
        raise ParseError('space JSON needs "points" and "distances"')
    points = obj["points"]
    rows = obj["distances"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise ParseError('"points" must be a list of strings')
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError('"distances" must be a matrix')
    try:
        matrix = tuple(tuple(as_fraction(v) for v in row) for row in rows)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix entry: {exc}") from None
    return Space(tuple(points), matrix)


def _parse_csv(text: str) -> Space:
    rows = [row for row in csv.reader(_io.StringIO(text)) if row]
    if not rows:
        raise ParseError("empty CSV input")
    points = tuple(cell.strip() for cell in rows[0])
    if len(rows) != len(points) + 1:
        raise ParseError(f"expected {len(points)} matrix rows, found {len(rows) - 1}")
    try:
        matrix = tuple(
            tuple(as_fraction(cell.strip()) for cell in row) for row in rows[1:]
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix entry: {exc}") from None
    return Space(points, matrix)


def space_to_json(space: Space) -> str:
    obj = {
        "points": list(space.points),
        "distances": [[str(v) for v in row] for row in space.dist],
    }
    return json.dumps(obj, indent=2) + "\n"


def space_to_csv(space: Space) -> str:
    out = _io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(space.points)
    for row in space.dist:
        writer.writerow([str(v) for v in row])
    return out.getvalue()


def _format_of(path: str, fmt: Optional[str]) -> str:
    if fmt is not None:
        return fmt
    return "csv" if str(path).endswith(".csv") else "json"


def load_space(path, fmt: Optional[str] = None) -> Space:
    """Read a space file; the format comes from the extension unless given."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_space(handle.read(), _format_of(path, fmt))


def save_space(space: Space, path, fmt: Optional[str] = None) -> None:
    text = space_to_csv(space) if _format_of(path, fmt) == "csv" else space_to_json(space)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def parse_path_text(text: str) -> Tuple[Tuple[str, ...], Tuple[Fraction, ...]]:
    """Parse a path/cycle file into (order, weights)."""
    obj = _exact_loads(text)
    if not isinstance(obj, dict) or "order" not in obj or "weights" not in obj:
        raise ParseError('path JSON needs "order" and "weights"')
    order = obj["order"]
    if not isinstance(order, list) or not all(isinstance(p, str) for p in order):
        raise ParseError('"order" must be a list of strings')
    try:
        weights = tuple(as_fraction(w) for w in obj["weights"])
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight: {exc}") from None
    return tuple(order), weights


def format_value(value: Fraction, decimals: Optional[int] = None) -> str:
    """Exact "p/q" rendering, or a rounded K-digit decimal for display."""
    if decimals is None:
        return str(value)
    if decimals < 0:
        raise ValueError("decimals must be nonnegative")
    scaled = value * 10**decimals
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    digits = str(q).rjust(decimals + 1, "0")
    if decimals == 0:
        return digits
    return digits[:-decimals] + "." + digits[-decimals:]


# -- DOT ----------------------------------------------------------------------


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def diametrical_dot(space: Space) -> str:
    """Undirected DOT graph with an edge for every pair realizing the
    diameter."""
    decomposition = diametrical_decompose(space)
    lines = ["graph diametrical {"]
    for p in space.points:
        lines.append(f"  {_quote(p)};")
    diam = decomposition.diameter
    for i, x in enumerate(space.points):
        for y in space.points[i + 1 :]:
            if space.d(x, y) == diam:
                lines.append(f"  {_quote(x)} -- {_quote(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_dot(tree: RepTree) -> str:
    """DOT digraph of a representing tree: internal nodes are ellipses
    labeled with their diameter, leaves are boxes labeled with the point."""
    lines = ["digraph representing_tree {"]
    counter = [0]

    def walk(node: Node) -> str:
        name = f"n{counter[0]}"
        counter[0] += 1
        if node.is_leaf:
            lines.append(f"  {name} [shape=box, label={_quote(node.point)}];")
        else:
            lines.append(f"  {name} [shape=ellipse, label={_quote(str(node.label))}];")
            for child in node.children:
                lines.append(f"  {name} -> {walk(child)};")
        return name

    walk(tree.root)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ball_name(members, points: Sequence[str]) -> str:
    index = {p: i for i, p in enumerate(points)}
    return "{" + ",".join(sorted(members, key=index.get)) + "}"


def hasse_dot(diagram: HasseDiagram, points: Sequence[str]) -> str:
    """DOT digraph of a ball-poset Hasse diagram; balls are rendered as
    sorted member lists."""
    lines = ["digraph hasse {"]
    for ball in diagram.vertices:
        lines.append(f"  {_quote(_ball_name(ball.members, points))};")
    for small, big in diagram.arcs:
        lines.append(
            f"  {_quote(_ball_name(small.members, points))}"
            f" -> {_quote(_ball_name(big.members, points))};"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_text(tree: RepTree) -> str:
    """Indented plain-text rendering of a representing tree."""
    lines: list = []

    def walk(node: Node, depth: int) -> None:
        pad = "  " * depth
        if node.is_leaf:
            lines.append(f"{pad}{node.point}")
        else:
            lines.append(f"{pad}[{node.label}]")
            for child in node.children:
                walk(child, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines) + "\n"
