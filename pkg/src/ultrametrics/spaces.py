"""Finite semimetric and ultrametric spaces over exact rational distances.

A space is a list of named points together with a symmetric matrix of
`fractions.Fraction` values: zero on the diagonal, strictly positive off it.
Ultrametric spaces are the semimetric spaces that additionally satisfy the
strong triangle inequality d(x,y) <= max(d(x,z), d(z,y)); `check_ultrametric`
decides this and reports the first offending triple.

All values are immutable after construction and every operation here is a
pure function, so instances are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .errors import AxiomViolation, EmptySpace, NotUltrametric, UnknownPoint

__all__ = [
    "Space",
    "as_fraction",
    "check_ultrametric",
    "require_ultrametric",
    "spectrum_of",
    "gomory_hu_margin",
]

_ZERO = Fraction(0)

# Labels must survive a CSV round trip unquoted.
_FORBIDDEN_IN_LABEL = (",", "\n", "\r")


def as_fraction(value) -> Fraction:
    """Convert an exact representation (Fraction, int, or a string such as
    "3", "0.25", "3/4") into a Fraction.

    Floats are rejected: binary floats cannot encode most decimal inputs
    exactly, so decimals must arrive as strings.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(
            f"refusing float {value!r}: pass decimals as strings for exactness"
        )
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Space:
    """A finite semimetric space; also carries ultrametric spaces.

    `points` fixes the input order, which acts as the global tie-break order
    for every downstream construction. `dist` is indexed positionally.
    """

    points: Tuple[str, ...]
    dist: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(str(p) for p in self.points)
        if not pts:
            raise EmptySpace("a space needs at least one point")
        for p in pts:
            if not p:
                raise AxiomViolation("empty point label")
            if any(ch in p for ch in _FORBIDDEN_IN_LABEL):
                raise AxiomViolation(f"label {p!r} contains a forbidden character")
        if len(set(pts)) != len(pts):
            raise AxiomViolation("duplicate point labels")
        n = len(pts)
        rows = self.dist
        if len(rows) != n:
            raise AxiomViolation(f"matrix has {len(rows)} rows for {n} points")
        matrix = []
        for row in rows:
            row = tuple(as_fraction(v) for v in row)
            if len(row) != n:
                raise AxiomViolation("matrix is not square")
            matrix.append(row)
        matrix = tuple(matrix)
        for i in range(n):
            if matrix[i][i] != 0:
                raise AxiomViolation(f"nonzero diagonal at {pts[i]!r}")
            for j in range(i + 1, n):
                if matrix[i][j] != matrix[j][i]:
                    raise AxiomViolation(f"asymmetry between {pts[i]!r} and {pts[j]!r}")
                if matrix[i][j] <= 0:
                    raise AxiomViolation(
                        f"distance between {pts[i]!r} and {pts[j]!r} is not positive"
                    )
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dist", matrix)

    @classmethod
    def from_distances(cls, points: Sequence[str], pairs: Mapping) -> "Space":
        """Build a space from `{(x, y): value}` entries (one per unordered pair)."""
        pts = tuple(points)
        index = {p: i for i, p in enumerate(pts)}
        n = len(pts)
        matrix = [[_ZERO] * n for _ in range(n)]
        for (x, y), value in pairs.items():
            if x not in index or y not in index:
                raise UnknownPoint(f"pair ({x!r}, {y!r}) uses an unknown label")
            i, j = index[x], index[y]
            v = as_fraction(value)
            matrix[i][j] = v
            matrix[j][i] = v
        return cls(pts, tuple(tuple(row) for row in matrix))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def index(self, label: str) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise UnknownPoint(f"no point labeled {label!r}") from None

    def d(self, x: str, y: str) -> Fraction:
        """Distance between two points given by label."""
        return self.dist[self.index(x)][self.index(y)]

    def diameter(self) -> Fraction:
        return max(v for row in self.dist for v in row)

    def subspace(self, labels: Iterable[str]) -> "Space":
        """Restriction to `labels`, keeping the order in which they are given.

        Also serves to reorder a space: pass a permutation of all points.
        """
        idx = [self.index(p) for p in labels]
        pts = tuple(self.points[i] for i in idx)
        matrix = tuple(tuple(self.dist[i][j] for j in idx) for i in idx)
        return Space(pts, matrix)

    def same_metric(self, other: "Space") -> bool:
        """True when both spaces have the same labels and identical distances,
        regardless of point order."""
        if set(self.points) != set(other.points) or len(self) != len(other):
            return False
        return other.subspace(self.points) == self


def check_ultrametric(space: Space) -> Optional[Tuple[str, str, str]]:
    """Return None when the strong triangle inequality holds everywhere,
    otherwise the lexicographically first violating triple (x, y, z),
    meaning d(x, z) > max(d(x, y), d(y, z)).

    The fast scan uses the equivalent isosceles form (among the three
    distances of a triple, the maximum is attained at least twice).
    """
    dist = space.dist
    n = len(dist)
    for i in range(n):
        di = dist[i]
        for j in range(i + 1, n):
            a = di[j]
            dj = dist[j]
            for k in range(j + 1, n):
                b = di[k]
                c = dj[k]
                mx = a if a >= b else b
                if c > mx:
                    mx = c
                if (a == mx) + (b == mx) + (c == mx) < 2:
                    return _first_ordered_violation(space)
    return None


def _first_ordered_violation(space: Space) -> Tuple[str, str, str]:
    dist = space.dist
    pts = space.points
    n = len(pts)
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            dij = dist[i][j]
            for k in range(n):
                if k == i or k == j:
                    continue
                if dist[i][k] > max(dij, dist[j][k]):
                    return (pts[i], pts[j], pts[k])
    raise AssertionError("violation vanished between scans")


def require_ultrametric(space: Space) -> None:
    """Raise NotUltrametric (carrying the offending triple) unless the space
    is ultrametric."""
    triple = check_ultrametric(space)
    if triple is not None:
        raise NotUltrametric(triple)


def spectrum_of(space: Space) -> Tuple[Fraction, ...]:
    """The sorted set of realized distance values; always starts with 0."""
    values = {_ZERO}
    for row in space.dist:
        values.update(row)
    return tuple(sorted(values))


def gomory_hu_margin(space: Space) -> Tuple[int, int]:
    """Return (|Sp X|, |X|) for an ultrametric space.

    The first component never exceeds the second; equality characterizes
    the extremal spaces.
    """
    require_ultrametric(space)
    return (len(spectrum_of(space)), len(space))
