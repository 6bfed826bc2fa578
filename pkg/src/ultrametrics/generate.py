"""Seeded random instance generators used by fuzz checks and demos.

Random ultrametric spaces come from random hierarchy shapes: a point set is
split into k >= 2 parts (biased toward 2), recursively, and labels are drawn
top-down so that they strictly decrease along every branch. Small label
windows cause frequent repeats across branches, so most samples are not
extremal; `arity_weights` controls how often wide nodes (which force
equilateral triangles) appear.

All generators take a `random.Random` so identical seeds give identical
spaces.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from .extremal import is_extremal
from .spaces import Space

__all__ = ["random_ultrametric", "random_nonextremal_ultrametric", "random_semimetric"]

_ZERO = Fraction(0)


def _random_shape(rng: random.Random, items: List[int], arity_weights) -> tuple:
    if len(items) == 1:
        return ("leaf", items[0])
    top = min(len(items), len(arity_weights) + 1)
    ks = list(range(2, top + 1))
    k = rng.choices(ks, weights=arity_weights[: len(ks)])[0] if len(ks) > 1 else 2
    rng.shuffle(items)
    cuts = sorted(rng.sample(range(1, len(items)), k - 1))
    bounds = [0, *cuts, len(items)]
    parts = [sorted(items[a:b]) for a, b in zip(bounds, bounds[1:])]
    return ("node", [_random_shape(rng, part, arity_weights) for part in parts])


def _internal_height(shape) -> int:
    if shape[0] == "leaf":
        return 0
    return 1 + max(_internal_height(c) for c in shape[1])


def _fill(shape, rng, ceiling, dist) -> List[int]:
    if shape[0] == "leaf":
        return [shape[1]]
    height = _internal_height(shape)
    label = rng.randint(height, ceiling)
    groups = [_fill(child, rng, label - 1, dist) for child in shape[1]]
    value = Fraction(label)
    for i in range(len(groups)):
        for j in range(i + 1, len(groups)):
            for a in groups[i]:
                for b in groups[j]:
                    dist[a][b] = value
                    dist[b][a] = value
    return [x for g in groups for x in g]


def random_ultrametric(
    rng: random.Random,
    n: int,
    *,
    span: int | None = None,
    arity_weights: Sequence[int] = (70, 20, 10),
) -> Space:
    """A random n-point ultrametric space with integer-valued distances.

    `span` widens the label window above the structural minimum (wider means
    fewer label collisions); `arity_weights` weighs node arities 2, 3, 4...
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    points = tuple(f"x{i + 1}" for i in range(n))
    if n == 1:
        return Space(points, ((_ZERO,),))
    shape = _random_shape(rng, list(range(n)), tuple(arity_weights))
    if span is None:
        span = n
    dist = [[_ZERO] * n for _ in range(n)]
    _fill(shape, rng, _internal_height(shape) + rng.randint(1, span), dist)
    return Space(points, tuple(tuple(row) for row in dist))


def random_nonextremal_ultrametric(rng: random.Random, n: int) -> Space:
    """Rejection-sample ultrametric spaces until one misses |Sp X| = |X|.
    Only meaningful for n >= 3 (smaller spaces are always extremal)."""
    if n < 3:
        raise ValueError("every space with n < 3 is extremal")
    while True:
        space = random_ultrametric(rng, n)
        if not is_extremal(space):
            return space


def random_semimetric(rng: random.Random, n: int, *, high: int = 9) -> Space:
    """A random n-point semimetric space with integer distances in
    [1, high]; no triangle condition of any kind is imposed."""
    if n < 1:
        raise ValueError("n must be at least 1")
    points = tuple(f"x{i + 1}" for i in range(n))
    dist = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(1, high))
            dist[i][j] = v
            dist[j][i] = v
    return Space(points, tuple(tuple(row) for row in dist))
