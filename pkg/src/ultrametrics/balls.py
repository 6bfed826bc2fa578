"""Closed balls of a finite semimetric space, the Hasse diagram of their
inclusion order, and verification of ball-preserving maps and arc-surjective
homomorphisms between such diagrams.

A closed ball is {x : d(x, t) <= r}. Scanning every center and every radius
in the spectrum produces all distinct balls: growing r past a spectrum value
cannot change any ball until the next one. Balls are identified by their
member sets; the stored (center, radius) pair is just one witness, chosen as
the smallest center index and then the smallest radius.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from .errors import UnknownPoint
from .spaces import Space, spectrum_of

__all__ = [
    "Ball",
    "HasseDiagram",
    "PointMap",
    "HomVerdict",
    "all_balls",
    "hasse_diagram",
    "check_ball_preserving",
    "check_arc_surjective_hom",
]


@dataclass(frozen=True)
class Ball:
    members: FrozenSet[str]
    center: str
    radius: Fraction


@dataclass(frozen=True)
class HasseDiagram:
    """Vertices plus the covering arcs (B1, B2) with B1 strictly inside B2
    and no ball strictly between. Arcs point from the smaller ball up."""

    vertices: Tuple[Ball, ...]
    arcs: Tuple[Tuple[Ball, Ball], ...]

    def predecessors(self, ball: Ball) -> Tuple[Ball, ...]:
        return tuple(a for a, b in self.arcs if b == ball)


@dataclass(frozen=True)
class PointMap:
    """A total map between the points of two spaces.

    The assignment is stored as pairs ordered by source input order, so two
    maps compare equal exactly when they agree pointwise.
    """

    source: Space
    target: Space
    pairs: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        given = dict(self.pairs)
        if set(given) != set(self.source.points):
            raise UnknownPoint("assignment is not total on the source points")
        targets = set(self.target.points)
        for value in given.values():
            if value not in targets:
                raise UnknownPoint(f"image {value!r} is not a target point")
        ordered = tuple((p, given[p]) for p in self.source.points)
        object.__setattr__(self, "pairs", ordered)

    @classmethod
    def from_mapping(cls, source: Space, target: Space, mapping: Mapping[str, str]) -> "PointMap":
        return cls(source, target, tuple(mapping.items()))

    @property
    def mapping(self) -> Dict[str, str]:
        return dict(self.pairs)

    def apply(self, point: str) -> str:
        for p, q in self.pairs:
            if p == point:
                return q
        raise UnknownPoint(f"no point labeled {point!r}")

    def image(self, members) -> FrozenSet[str]:
        m = self.mapping
        return frozenset(m[p] for p in members)

    @property
    def is_surjective(self) -> bool:
        return {q for _, q in self.pairs} == set(self.target.points)

    @property
    def is_bijective(self) -> bool:
        return len({q for _, q in self.pairs}) == len(self.source.points) == len(
            self.target.points
        )


class HomVerdict(enum.Enum):
    """Classification of the map induced on Hasse diagrams."""

    ISO = "iso"
    HOM_ARC_SURJECTIVE = "hom_arc_surjective"
    HOM_ONLY = "hom_only"
    NOT_HOM = "not_hom"


def all_balls(space: Space) -> Tuple[Ball, ...]:
    """Every distinct closed ball, ordered by size and then by the input
    indices of the members."""
    index = {p: i for i, p in enumerate(space.points)}
    spectrum = spectrum_of(space)
    seen: Dict[FrozenSet[str], Ball] = {}
    for t in space.points:
        row = space.dist[index[t]]
        for r in spectrum:
            members = frozenset(p for p in space.points if row[index[p]] <= r)
            if members not in seen:
                seen[members] = Ball(members=members, center=t, radius=r)
    def key(ball: Ball):
        return (len(ball.members), tuple(sorted(index[p] for p in ball.members)))
    return tuple(sorted(seen.values(), key=key))


def hasse_diagram(balls: Sequence[Ball]) -> HasseDiagram:
    """Covering relation of the inclusion order on `balls`.

    Computed by direct triple filtering; the posets here stay small enough
    that asymptotics do not matter.
    """
    vertices: List[Ball] = []
    seen = set()
    for ball in balls:
        if ball.members not in seen:
            seen.add(ball.members)
            vertices.append(ball)
    arcs = []
    for i, small in enumerate(vertices):
        for j, big in enumerate(vertices):
            if not small.members < big.members:
                continue
            covered = True
            for mid in vertices:
                if small.members < mid.members < big.members:
                    covered = False
                    break
            if covered:
                arcs.append((i, j))
    arcs.sort()
    return HasseDiagram(
        vertices=tuple(vertices),
        arcs=tuple((vertices[i], vertices[j]) for i, j in arcs),
    )


def check_ball_preserving(pmap: PointMap) -> bool:
    """True when the image of every ball of the source is a ball of the
    target."""
    target_sets = {b.members for b in all_balls(pmap.target)}
    return all(pmap.image(b.members) in target_sets for b in all_balls(pmap.source))


def check_arc_surjective_hom(pmap: PointMap) -> HomVerdict:
    """Classify the map induced on Hasse diagrams by B -> image of B.

    NOT_HOM when some ball image is not a ball or some covering arc is not
    carried to a covering arc; otherwise the strongest of ISO (bijective
    with homomorphic inverse), HOM_ARC_SURJECTIVE (every target arc has a
    preimage arc), or HOM_ONLY.
    """
    src = hasse_diagram(all_balls(pmap.source))
    tgt = hasse_diagram(all_balls(pmap.target))
    tgt_by_members = {b.members: b for b in tgt.vertices}

    induced: Dict[FrozenSet[str], FrozenSet[str]] = {}
    for ball in src.vertices:
        image = pmap.image(ball.members)
        if image not in tgt_by_members:
            return HomVerdict.NOT_HOM
        induced[ball.members] = image

    tgt_arcs = {(a.members, b.members) for a, b in tgt.arcs}
    src_arc_images = set()
    for a, b in src.arcs:
        pair = (induced[a.members], induced[b.members])
        if pair not in tgt_arcs:
            return HomVerdict.NOT_HOM
        src_arc_images.add(pair)

    image_sets = set(induced.values())
    if len(image_sets) == len(src.vertices) == len(tgt.vertices):
        inverse = {v: k for k, v in induced.items()}
        src_arcs = {(a.members, b.members) for a, b in src.arcs}
        if all((inverse[c], inverse[d]) in src_arcs for c, d in tgt_arcs):
            return HomVerdict.ISO
    if src_arc_images == tgt_arcs:
        return HomVerdict.HOM_ARC_SURJECTIVE
    return HomVerdict.HOM_ONLY
