"""Constructive bridges between semimetric, ultrametric, and extremal
spaces.

`lift_semimetric` unfolds the Hasse diagram of a semimetric space's ball
poset into a rooted tree (a ball reached along two different covering chains
appears twice), realizes that tree as an ultrametric space on its leaves,
and projects each leaf to the point of its singleton ball. The projection is
ball-preserving and induces an arc-surjective homomorphism of Hasse diagrams.

`approximate_extremal` nudges an ultrametric space into an extremal one at
distance at most epsilon per pair: the representing tree is binarized and
every repeated internal label is pushed strictly downward by a multiple of a
step small enough to keep the label order and to stay inside the tolerance.

`compose_pipeline` chains both, exhibiting any finite semimetric space as
the image of an extremal space under (ball-preserving) o (bijective
epsilon-isometry).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .balls import (
    HomVerdict,
    PointMap,
    all_balls,
    check_arc_surjective_hom,
    check_ball_preserving,
    hasse_diagram,
)
from .errors import BadEpsilon, InternalError, NotSurjective
from .extremal import is_extremal
from .spaces import Space, as_fraction, check_ultrametric, require_ultrametric
from .trees import Node, RepTree, build_representing_tree

__all__ = [
    "EpsIsometryWitness",
    "LiftResult",
    "lift_semimetric",
    "approximate_extremal",
    "compose_pipeline",
    "eps_isometry_deviation",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class EpsIsometryWitness:
    """A bijective map whose distance distortion never exceeds `epsilon`;
    `max_deviation` is the exact worst case over all pairs."""

    map: PointMap
    epsilon: Fraction
    max_deviation: Fraction


@dataclass(frozen=True)
class LiftResult:
    """The lifted ultrametric space, the surjective ball-preserving
    projection onto the source, and the representing tree of the lift."""

    lifted: Space
    projection: PointMap
    tree: RepTree


def eps_isometry_deviation(pmap: PointMap) -> Fraction:
    """Largest |d(x, y) - d(F(x), F(y))| over all source pairs; the map is
    an epsilon-isometry exactly when this does not exceed epsilon."""
    if not pmap.is_surjective:
        raise NotSurjective("an epsilon-isometry must cover the target")
    src, tgt, m = pmap.source, pmap.target, pmap.mapping
    worst = _ZERO
    for i, x in enumerate(src.points):
        for y in src.points[i + 1 :]:
            gap = abs(src.d(x, y) - tgt.d(m[x], m[y]))
            if gap > worst:
                worst = gap
    return worst


# -- lifting -----------------------------------------------------------------


def lift_semimetric(space: Space) -> LiftResult:
    """Lift a finite semimetric space to an ultrametric space through a
    surjective ball-preserving projection.

    Leaves of the unfolded ball tree become points y1, y2, ...; an internal
    node's label is its height (longest downward edge count), which strictly
    decreases toward the leaves, so the tree is realized exactly.
    """
    balls = all_balls(space)
    diagram = hasse_diagram(balls)
    preds = {b.members: diagram.predecessors(b) for b in diagram.vertices}
    root = next(b for b in diagram.vertices if b.members == frozenset(space.points))

    names: List[str] = []
    mapping: Dict[str, str] = {}

    def unfold(ball):
        if len(ball.members) == 1:
            name = f"y{len(names) + 1}"
            names.append(name)
            (point,) = ball.members
            mapping[name] = point
            return (name, ())
        return (None, tuple(unfold(p) for p in preds[ball.members]))

    shape = unfold(root)
    matrix: Dict[Tuple[str, str], Fraction] = {}

    def fill(node) -> Tuple[int, List[str]]:
        name, children = node
        if not children:
            return 0, [name]
        filled = [fill(c) for c in children]
        height = 1 + max(h for h, _ in filled)
        value = Fraction(height)
        for i in range(len(filled)):
            for j in range(i + 1, len(filled)):
                for a in filled[i][1]:
                    for b in filled[j][1]:
                        matrix[(a, b)] = value
        return height, [leaf for _, leaves in filled for leaf in leaves]

    fill(shape)
    lifted = Space.from_distances(tuple(names), matrix) if len(names) > 1 else Space(
        tuple(names), ((_ZERO,),)
    )
    projection = PointMap.from_mapping(lifted, space, mapping)

    if not projection.is_surjective:
        raise InternalError("lift projection misses a source point")
    if not check_ball_preserving(projection):
        raise InternalError("lift projection is not ball-preserving")
    verdict = check_arc_surjective_hom(projection)
    if verdict not in (HomVerdict.HOM_ARC_SURJECTIVE, HomVerdict.ISO):
        raise InternalError(f"lift projection classified {verdict.value}")
    return LiftResult(lifted=lifted, projection=projection, tree=build_representing_tree(lifted))


# -- extremal approximation --------------------------------------------------


def _binarize(node: Node) -> Node:
    if node.is_leaf:
        return node
    children = [_binarize(c) for c in node.children]
    if len(children) <= 2:
        return Node(tuple(children), label=node.label)
    # Left fold: children are already in canonical order.
    acc = Node((children[0], children[1]), label=node.label)
    for child in children[2:]:
        acc = Node((acc, child), label=node.label)
    return acc


def _internal_preorder(node: Node, out: List[Node]) -> None:
    if node.is_leaf:
        return
    out.append(node)
    for child in node.children:
        _internal_preorder(child, out)


def _label_floor_gap(root: Node) -> Fraction:
    """Smallest positive difference among internal labels, also counting the
    gap from each label down to its children's labels (leaves count as 0).
    Bounded above by the smallest label, which keeps perturbed labels
    positive."""
    labels = set()
    _collect_labels(root, labels)
    ordered = sorted(labels)
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    gaps.append(ordered[0])
    return min(gaps)


def _collect_labels(node: Node, out: set) -> None:
    if not node.is_leaf:
        out.add(node.label)
        for child in node.children:
            _collect_labels(child, out)


def _matrix_from_tree(root: Node, points: Tuple[str, ...]) -> Space:
    matrix: Dict[Tuple[str, str], Fraction] = {}

    def walk(node: Node) -> List[str]:
        if node.is_leaf:
            return [node.point]
        groups = [walk(c) for c in node.children]
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                for a in groups[i]:
                    for b in groups[j]:
                        matrix[(a, b)] = node.label
        return [p for g in groups for p in g]

    walk(root)
    if len(points) == 1:
        return Space(points, ((_ZERO,),))
    return Space.from_distances(points, matrix)


def approximate_extremal(space: Space, epsilon) -> Tuple[Space, EpsIsometryWitness]:
    """Produce an extremal space within `epsilon` of the given ultrametric
    space, with the identity on point names as the bijective witness.

    Internal labels are made pairwise distinct by downward steps c * delta,
    where c counts earlier nodes carrying the same original label (preorder),
    and delta = min(epsilon, gap) / (2 * collisions). Steps stay below half
    the smallest label gap, so the relative order of distinct labels and the
    strict decrease along root-to-leaf paths survive, and the worst distance
    deviation is at most min(epsilon, gap) / 2.
    """
    require_ultrametric(space)
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise BadEpsilon("epsilon must be strictly positive")

    tree = build_representing_tree(space)
    root = _binarize(tree.root)
    internal: List[Node] = []
    _internal_preorder(root, internal)

    collisions = len(internal) - len({node.label for node in internal})
    if collisions == 0:
        identity = PointMap.from_mapping(space, space, {p: p for p in space.points})
        if not is_extremal(space):
            raise InternalError("collision-free tree should already be extremal")
        return space, EpsIsometryWitness(map=identity, epsilon=eps, max_deviation=_ZERO)

    delta = min(eps, _label_floor_gap(root)) / (2 * collisions)
    seen: Dict[Fraction, int] = {}
    new_label: Dict[int, Fraction] = {}
    for node in internal:
        c = seen.get(node.label, 0)
        seen[node.label] = c + 1
        new_label[id(node)] = node.label - c * delta

    def rebuild(node: Node) -> Node:
        if node.is_leaf:
            return node
        return Node(tuple(rebuild(c) for c in node.children), label=new_label[id(node)])

    approx = _matrix_from_tree(rebuild(root), space.points)

    if check_ultrametric(approx) is not None:
        raise InternalError("perturbed tree lost the strong triangle inequality")
    if not is_extremal(approx):
        raise InternalError("perturbed tree is not extremal")
    identity = PointMap.from_mapping(approx, space, {p: p for p in space.points})
    deviation = eps_isometry_deviation(identity)
    if deviation > eps:
        raise InternalError("perturbation exceeded the requested tolerance")
    build_representing_tree(approx)  # re-validates the strictly decreasing labels
    return approx, EpsIsometryWitness(map=identity, epsilon=eps, max_deviation=deviation)


def compose_pipeline(space: Space, epsilon) -> Tuple[Space, PointMap, PointMap]:
    """Lift, then approximate: returns (Z, phi, f) with Z extremal,
    phi: Z -> Y a bijective epsilon-isometry, f: Y -> X the ball-preserving
    projection, and f(phi(Z)) = X as point sets."""
    lift = lift_semimetric(space)
    approx, witness = approximate_extremal(lift.lifted, epsilon)
    phi = witness.map
    f = lift.projection
    composed = {f.mapping[phi.mapping[z]] for z in approx.points}
    if composed != set(space.points):
        raise InternalError("composition does not cover the source space")
    return approx, phi, f
