"""Extremal spaces and their characteristic Hamiltonian structures.

A finite ultrametric space is extremal when its spectrum is as large as the
Gomory-Hu inequality allows, |Sp X| = |X|. Such spaces are exactly the ones
carrying a characteristic Hamiltonian path (injective, strictly positive
edge weights). Closing a characteristic path yields a Hamiltonian cycle with
exactly two maximal edges, and either structure determines the whole space:
the distance between two path vertices is the maximum weight between them.

Conventions below the paper-sized cases: a one-point path (no edges) and a
two-point path (one edge) are considered characteristic, so the recursive
construction can bottom out and the equivalence with extremality extends
harmlessly to |X| < 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .diametrical import _decompose_indices
from .errors import (
    InternalError,
    NotCharacteristic,
    NotExtremal,
    NotHamiltonian,
    NotInjective,
    NotStrictlyBinary,
    TooSmall,
    UnknownPoint,
)
from .spaces import Space, as_fraction, require_ultrametric, spectrum_of
from .trees import _leaf_set, build_representing_tree, is_strictly_binary

__all__ = [
    "CharacteristicPath",
    "CharacteristicCycle",
    "is_extremal",
    "characteristic_ham_path",
    "path_to_cycle",
    "is_characteristic_cycle",
    "reconstruct_from_path",
    "reconstruct_from_cycle",
    "two_max_cycle_for_subset",
]


def _check_order(order: Sequence[str]) -> Tuple[str, ...]:
    order = tuple(str(p) for p in order)
    if len(set(order)) != len(order):
        raise NotHamiltonian("order visits a point twice")
    return order


@dataclass(frozen=True)
class CharacteristicPath:
    """A Hamiltonian path order with weights[i] = d(order[i], order[i+1]);
    weights must be strictly positive and pairwise distinct."""

    order: Tuple[str, ...]
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        order = _check_order(self.order)
        weights = tuple(as_fraction(w) for w in self.weights)
        if len(weights) != len(order) - 1:
            raise NotInjective(f"{len(order)} points need {len(order) - 1} weights")
        if any(w <= 0 for w in weights):
            raise NotInjective("path weights must be strictly positive")
        if len(set(weights)) != len(weights):
            raise NotInjective("path weights must be pairwise distinct")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "weights", weights)


@dataclass(frozen=True)
class CharacteristicCycle:
    """A Hamiltonian cycle order with weights[i] = d(order[i], order[i+1])
    and the closing weight last; exactly two weights attain the maximum and
    the remaining ones are pairwise distinct and strictly positive."""

    order: Tuple[str, ...]
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        order = _check_order(self.order)
        if len(order) < 3:
            raise TooSmall("a cycle needs at least three points")
        weights = tuple(as_fraction(w) for w in self.weights)
        if len(weights) != len(order):
            raise NotCharacteristic(f"{len(order)} points need {len(order)} cycle weights")
        if not _two_max_rest_injective(weights):
            raise NotCharacteristic(
                "cycle weights need exactly two maxima and otherwise distinct positive values"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "weights", weights)

    def max_edge_positions(self) -> Tuple[int, int]:
        top = max(self.weights)
        i, j = (k for k, w in enumerate(self.weights) if w == top)
        return i, j


def _two_max_rest_injective(weights: Sequence[Fraction]) -> bool:
    top = max(weights)
    rest = [w for w in weights if w != top]
    if len(rest) != len(weights) - 2:
        return False
    return all(w > 0 for w in rest) and len(set(rest)) == len(rest)


def is_extremal(space: Space) -> bool:
    """True when |Sp X| = |X|; requires an ultrametric space."""
    require_ultrametric(space)
    return len(spectrum_of(space)) == len(space)


def _path_indices(dist, indices: Tuple[int, ...]) -> List[int]:
    if len(indices) <= 2:
        return list(indices)
    _, parts = _decompose_indices(dist, indices)
    if len(parts) != 2:
        # Extremal spaces decompose into exactly two parts at every level.
        raise InternalError("extremal space with non-bipartite diametrical graph")
    return _path_indices(dist, tuple(parts[0])) + _path_indices(dist, tuple(parts[1]))


def characteristic_ham_path(space: Space) -> CharacteristicPath:
    """Build a characteristic Hamiltonian path of an extremal space.

    Recursion on the diametrical decomposition: the path of the part holding
    the smallest input index, then the joining diameter edge, then the path
    of the other part.
    """
    if not is_extremal(space):
        raise NotExtremal("no characteristic Hamiltonian path exists")
    idx = _path_indices(space.dist, tuple(range(len(space))))
    order = tuple(space.points[i] for i in idx)
    weights = tuple(space.dist[idx[k]][idx[k + 1]] for k in range(len(idx) - 1))
    return CharacteristicPath(order, weights)


def path_to_cycle(path: CharacteristicPath, space: Space) -> CharacteristicCycle:
    """Close a characteristic path of `space` with the edge between its two
    endpoints; the closing weight always equals the path maximum, so the
    cycle has exactly two maximal edges."""
    require_ultrametric(space)
    if set(path.order) != set(space.points) or len(path.order) != len(space):
        raise NotHamiltonian("path does not visit exactly the points of the space")
    if len(space) < 3:
        raise TooSmall("closing a path needs at least three points")
    for k in range(len(path.order) - 1):
        if space.d(path.order[k], path.order[k + 1]) != path.weights[k]:
            raise NotHamiltonian("path weights disagree with the space")
    closing = space.d(path.order[0], path.order[-1])
    if closing != max(path.weights):
        raise InternalError("closing edge does not realize the path maximum")
    return CharacteristicCycle(path.order, path.weights + (closing,))


def is_characteristic_cycle(order: Sequence[str], space: Space) -> bool:
    """Check whether the Hamiltonian cycle given by `order` has exactly two
    maximal weights and otherwise injective positive weights. Rotations and
    reflections of the same cycle give the same verdict."""
    require_ultrametric(space)
    order = _check_order(order)
    if set(order) != set(space.points) or len(order) != len(space):
        raise NotHamiltonian("order is not a Hamiltonian cycle of the space")
    if len(order) < 3:
        raise NotHamiltonian("a cycle needs at least three points")
    n = len(order)
    weights = [space.d(order[k], order[(k + 1) % n]) for k in range(n)]
    return _two_max_rest_injective(weights)


def reconstruct_from_path(path: CharacteristicPath) -> Space:
    """The unique ultrametric space agreeing with a characteristic path:
    d(x_i, x_j) is the maximum weight strictly between positions i and j.

    The result is extremal and its spectrum is {0} plus the path weights.
    """
    order, weights = path.order, path.weights
    n = len(order)
    zero = Fraction(0)
    matrix = [[zero] * n for _ in range(n)]
    for i in range(n):
        running = zero
        for j in range(i + 1, n):
            w = weights[j - 1]
            if w > running:
                running = w
            matrix[i][j] = running
            matrix[j][i] = running
    return Space(order, tuple(tuple(row) for row in matrix))


def reconstruct_from_cycle(cycle: CharacteristicCycle) -> Space:
    """Reconstruct the unique ultrametric space agreeing with every edge of
    a characteristic cycle.

    One of the two maximal edges is removed and the remaining path is
    extended; the result does not depend on which maximal edge was dropped,
    and both choices are compared as a self-check.
    """
    first = _space_without_edge(cycle, cycle.max_edge_positions()[0])
    second = _space_without_edge(cycle, cycle.max_edge_positions()[1])
    if not first.same_metric(second):
        raise InternalError("cycle reconstruction depends on the removed edge")
    n = len(cycle.order)
    for k in range(n):
        a, b = cycle.order[k], cycle.order[(k + 1) % n]
        if first.d(a, b) != cycle.weights[k]:
            raise InternalError("reconstruction disagrees with a cycle edge")
    return first


def _space_without_edge(cycle: CharacteristicCycle, position: int) -> Space:
    order = cycle.order[position + 1 :] + cycle.order[: position + 1]
    weights = cycle.weights[position + 1 :] + cycle.weights[:position]
    return reconstruct_from_path(CharacteristicPath(order, weights))


def two_max_cycle_for_subset(space: Space, subset: Iterable[str]) -> Tuple[str, ...]:
    """For a space whose representing tree is strictly binary, return a
    Hamiltonian cycle of `subset` having exactly two maximal-weight edges.

    The subset's leaves are split at their lowest common ancestor; listing
    each half in input order and concatenating makes the two edges crossing
    the split the only maximal ones.
    """
    tree = build_representing_tree(space)
    if not is_strictly_binary(tree):
        raise NotStrictlyBinary("the representing tree has a node with k > 2 children")
    wanted = set(subset)
    for p in wanted:
        if p not in set(space.points):
            raise UnknownPoint(f"no point labeled {p!r}")
    if len(wanted) < 3:
        raise TooSmall("a cycle needs at least three points")

    node = tree.root
    while True:
        for child in node.children:
            if wanted <= _leaf_set(child):
                node = child
                break
        else:
            break
    left = _leaf_set(node.children[0]) & wanted
    right = _leaf_set(node.children[1]) & wanted
    order = tuple(p for p in space.points if p in left) + tuple(
        p for p in space.points if p in right
    )

    n = len(order)
    weights = [space.d(order[k], order[(k + 1) % n]) for k in range(n)]
    top = max(weights)
    if sum(1 for w in weights if w == top) != 2:
        raise InternalError("subset cycle does not have exactly two maximal edges")
    return order
