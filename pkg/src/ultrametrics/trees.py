"""Representing trees of ultrametric spaces, canonical codes, and the
isometry / weak-similarity decision procedures built on them.

The representing tree is produced by recursive diametrical decomposition:
internal nodes carry the diameter of the point set below them (labels
strictly decrease toward the leaves), leaves carry the points. The distance
between two points is the label of their lowest common ancestor, so the tree
determines the space exactly.

Canonical codes flatten a tree into a string that is invariant under child
reordering and point renaming. The "isometry" mode keeps the numeric labels;
the "shape" mode replaces each label by its rank inside the spectrum, which
is precisely the quotient taken by weak similarity (a strictly increasing
bijection between spectra composed with a point bijection).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .diametrical import _decompose_indices
from .errors import InternalError, UnknownPoint
from .spaces import Space, require_ultrametric, spectrum_of

__all__ = [
    "Node",
    "RepTree",
    "CanonicalCode",
    "WeakSimilarityWitness",
    "build_representing_tree",
    "leaf_order",
    "tree_distance",
    "is_strictly_binary",
    "has_equilateral_triangle",
    "canonical_code",
    "are_isometric",
    "are_weakly_similar",
]

LEAF_TOKEN = "*"


@dataclass(frozen=True)
class Node:
    """One tree node: internal nodes have a Fraction `label` and >= 2
    children, leaves have a `point` and no children."""

    children: Tuple["Node", ...]
    label: Optional[Fraction] = None
    point: Optional[str] = None

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class RepTree:
    """A representing tree plus the source point order (the order is the
    tie-break key used whenever sibling subtrees are isomorphic)."""

    root: Node
    points: Tuple[str, ...]


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Totally ordered token string; equal codes mean isomorphic labeled
    rooted trees."""

    code: str


@dataclass
class WeakSimilarityWitness:
    """A point bijection `phi` together with the strictly increasing spectrum
    bijection `f` (target spectrum -> source spectrum) satisfying
    d_X(x, y) = f(d_Y(phi(x), phi(y))) for all points x, y."""

    phi: Dict[str, str]
    f: Dict[Fraction, Fraction]


def _build(dist, points, indices) -> Tuple[Node, str, int, int]:
    # Returns (node, isometry code, leaf count, smallest input index).
    if len(indices) == 1:
        i = indices[0]
        return Node((), point=points[i]), LEAF_TOKEN, 1, i
    diam, parts = _decompose_indices(dist, indices)
    built = [_build(dist, points, tuple(part)) for part in parts]
    built.sort(key=lambda item: (item[2], item[1], item[3]))
    node = Node(tuple(item[0] for item in built), label=diam)
    code = "(" + str(diam) + ":" + "".join(item[1] for item in built) + ")"
    return node, code, len(indices), indices[0]


def build_representing_tree(space: Space) -> RepTree:
    """Construct the representing tree; children are stored in canonical
    order (leaf count, then canonical code, then smallest input index)."""
    require_ultrametric(space)
    root, _, _, _ = _build(space.dist, space.points, tuple(range(len(space))))
    return RepTree(root=root, points=space.points)


def leaf_order(tree: RepTree) -> Tuple[str, ...]:
    """Leaf points in stored (canonical) left-to-right order."""
    out: List[str] = []

    def walk(node: Node) -> None:
        if node.is_leaf:
            out.append(node.point)
        else:
            for child in node.children:
                walk(child)

    walk(tree.root)
    return tuple(out)


def _leaf_set(node: Node) -> frozenset:
    if node.is_leaf:
        return frozenset((node.point,))
    out = set()
    for child in node.children:
        out |= _leaf_set(child)
    return frozenset(out)


def tree_distance(tree: RepTree, x: str, y: str) -> Fraction:
    """Label of the lowest common ancestor of the two leaves (0 when x = y);
    equals the source space's distance."""
    leaves = _leaf_set(tree.root)
    for p in (x, y):
        if p not in leaves:
            raise UnknownPoint(f"no leaf labeled {p!r}")
    if x == y:
        return Fraction(0)
    node = tree.root
    while True:
        for child in node.children:
            members = _leaf_set(child)
            if x in members and y in members:
                node = child
                break
        else:
            return node.label


def is_strictly_binary(tree: RepTree) -> bool:
    """True when every internal node has exactly two children. A single
    leaf counts as strictly binary."""

    def walk(node: Node) -> bool:
        if node.is_leaf:
            return True
        return len(node.children) == 2 and all(walk(c) for c in node.children)

    return walk(tree.root)


def has_equilateral_triangle(space: Space) -> bool:
    """True when some triple of points is pairwise equidistant."""
    require_ultrametric(space)
    dist = space.dist
    n = len(dist)
    for i in range(n):
        for j in range(i + 1, n):
            dij = dist[i][j]
            for k in range(j + 1, n):
                if dij == dist[i][k] == dist[j][k]:
                    return True
    return False


def _internal_labels(node: Node, out: set) -> None:
    if not node.is_leaf:
        out.add(node.label)
        for child in node.children:
            _internal_labels(child, out)


def _code_of(node: Node, ranks: Optional[Dict[Fraction, int]]) -> Tuple[str, int]:
    if node.is_leaf:
        return LEAF_TOKEN, 1
    parts = [_code_of(child, ranks) for child in node.children]
    parts.sort(key=lambda item: (item[1], item[0]))
    token = str(ranks[node.label]) if ranks is not None else str(node.label)
    code = "(" + token + ":" + "".join(item[0] for item in parts) + ")"
    return code, sum(item[1] for item in parts)


def canonical_code(tree: RepTree, mode: str = "isometry") -> CanonicalCode:
    """Canonical code of the tree, invariant under child reordering and
    point renaming.

    mode "isometry" keeps the numeric labels; mode "shape" replaces each
    label by its spectrum rank (0 has rank 0, so internal ranks start at 1).
    """
    if mode not in ("isometry", "shape"):
        raise ValueError(f"unknown mode {mode!r}")
    ranks = None
    if mode == "shape":
        labels: set = set()
        _internal_labels(tree.root, labels)
        ranks = {lab: i + 1 for i, lab in enumerate(sorted(labels))}
    code, _ = _code_of(tree.root, ranks)
    return CanonicalCode(code)


def are_isometric(x: Space, y: Space) -> bool:
    """Decide whether a distance-preserving bijection exists, via equality
    of isometry-mode canonical codes."""
    tx = build_representing_tree(x)
    ty = build_representing_tree(y)
    return canonical_code(tx, "isometry") == canonical_code(ty, "isometry")


def _canonical_leaves(tree: RepTree, ranks: Optional[Dict[Fraction, int]]):
    index = {p: i for i, p in enumerate(tree.points)}

    def walk(node: Node) -> Tuple[List[str], str, int, int]:
        if node.is_leaf:
            return [node.point], LEAF_TOKEN, 1, index[node.point]
        parts = [walk(child) for child in node.children]
        # Equal (leaf count, code) keys mean isomorphic siblings; the input
        # index then fixes which one comes first.
        parts.sort(key=lambda item: (item[2], item[1], item[3]))
        token = str(ranks[node.label]) if ranks is not None else str(node.label)
        code = "(" + token + ":" + "".join(item[1] for item in parts) + ")"
        leaves = [p for item in parts for p in item[0]]
        return leaves, code, sum(item[2] for item in parts), min(item[3] for item in parts)

    return walk(tree.root)[0]


def _shape_ranks(tree: RepTree) -> Dict[Fraction, int]:
    labels: set = set()
    _internal_labels(tree.root, labels)
    return {lab: i + 1 for i, lab in enumerate(sorted(labels))}


def are_weakly_similar(x: Space, y: Space) -> Optional[WeakSimilarityWitness]:
    """Return a witness when the spaces agree up to a strictly increasing
    rescaling of their spectra, else None.

    The witness pairs the canonically sorted leaves of both shape-normalized
    trees and maps spectra rank by rank; it is verified pointwise before
    being returned.
    """
    tx = build_representing_tree(x)
    ty = build_representing_tree(y)
    if canonical_code(tx, "shape") != canonical_code(ty, "shape"):
        return None
    spx = spectrum_of(x)
    spy = spectrum_of(y)
    f = dict(zip(spy, spx))
    leaves_x = _canonical_leaves(tx, _shape_ranks(tx))
    leaves_y = _canonical_leaves(ty, _shape_ranks(ty))
    phi = dict(zip(leaves_x, leaves_y))
    for a in x.points:
        for b in x.points:
            if x.d(a, b) != f[y.d(phi[a], phi[b])]:
                raise InternalError("weak similarity witness failed verification")
    return WeakSimilarityWitness(phi=phi, f=f)
