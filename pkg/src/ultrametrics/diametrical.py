"""Diametrical decomposition of ultrametric spaces.

The diametrical graph joins exactly the point pairs realizing the diameter.
For an ultrametric space the complementary relation d(x,y) < diam X is an
equivalence, so the graph is complete multipartite and the parts are the
equivalence classes. Everything downstream (representing trees, Hamiltonian
path construction, the extremal census) recurses on this decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import InternalError, TooSmall
from .spaces import Space, require_ultrametric

__all__ = ["DiametricalDecomposition", "diametrical_decompose"]


@dataclass(frozen=True)
class DiametricalDecomposition:
    """Diameter plus the ordered parts (each a tuple of point labels).

    Cross-part distances all equal `diameter`; within a part they are
    strictly smaller. Parts are ordered by their smallest input index.
    """

    diameter: Fraction
    parts: Tuple[Tuple[str, ...], ...]


def _decompose_indices(dist, indices: Sequence[int]) -> Tuple[Fraction, List[List[int]]]:
    """Split `indices` (ascending) into the diametrical classes of the
    induced subspace. Used index-wise by several modules to avoid building
    intermediate Space objects."""
    diam = max(dist[i][j] for a, i in enumerate(indices) for j in indices[a + 1 :])
    parts: List[List[int]] = []
    for i in indices:
        for part in parts:
            if dist[i][part[0]] < diam:
                part.append(i)
                break
        else:
            parts.append([i])
    # The greedy pass above assumed d < diam is transitive; a failure here
    # would contradict the strong triangle inequality of the input.
    for a, pa in enumerate(parts):
        for i in pa:
            for j in pa:
                if i < j and dist[i][j] >= diam:
                    raise InternalError("relation d < diam is not transitive")
            for pb in parts[a + 1 :]:
                for j in pb:
                    if dist[i][j] != diam:
                        raise InternalError("cross-part distance below the diameter")
    return diam, parts


def diametrical_decompose(space: Space) -> DiametricalDecomposition:
    """Decompose an ultrametric space with at least two points.

    Raises NotUltrametric or TooSmall when the preconditions fail.
    """
    require_ultrametric(space)
    if len(space) < 2:
        raise TooSmall("diametrical decomposition needs at least two points")
    diam, parts = _decompose_indices(space.dist, range(len(space)))
    labeled = tuple(tuple(space.points[i] for i in part) for part in parts)
    return DiametricalDecomposition(diameter=diam, parts=labeled)
