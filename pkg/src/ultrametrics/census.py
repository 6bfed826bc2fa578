"""Counting and exhaustive enumeration of extremal spaces up to weak
similarity.

Every weak-similarity class of extremal n-point spaces has exactly one
member with spectrum {0, 1, ..., n-1}, so the census enumerates those. The
recursion mirrors the diametrical decomposition: the diameter joins two
extremal parts whose spectra share only 0, and the part containing the
smallest positive value is taken first. Choosing which of the remaining
values go into the first part gives the recurrence

    count(n) = sum over k of C(n-3, k-2) * count(k) * count(n-k),

with count(1) = count(2) = 1. The resulting numbers 1, 1, 1, 2, 5, 16, 61,
272, ... are the zigzag (alternating permutation) numbers.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import List, Tuple

from .errors import InternalError, Oversize
from .spaces import Space
from .trees import build_representing_tree, canonical_code, leaf_order

__all__ = ["kappa", "enumerate_extremal", "ENUM_LIMIT_ENV"]

# Environment variable overriding the default enumeration size guard.
ENUM_LIMIT_ENV = "ULTRAMETRICS_ENUM_LIMIT"
_DEFAULT_LIMIT = 10

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def kappa(n: int) -> int:
    """Number of extremal n-point spaces up to weak similarity (exact)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n <= 2:
        return 1
    return sum(comb(n - 3, k - 2) * kappa(k) * kappa(n - k) for k in range(2, n))


Matrix = Tuple[Tuple[Fraction, ...], ...]


def _join(a: Matrix, b: Matrix, diam: Fraction) -> Matrix:
    na, nb = len(a), len(b)
    rows: List[Tuple[Fraction, ...]] = []
    for i in range(na):
        rows.append(a[i] + (diam,) * nb)
    for j in range(nb):
        rows.append((diam,) * na + b[j])
    return tuple(rows)


@lru_cache(maxsize=None)
def _matrices_with_spectrum(values: Tuple[Fraction, ...]) -> Tuple[Matrix, ...]:
    """All extremal distance matrices (pairwise non-isometric) whose spectrum
    is exactly `values` (sorted, starting at 0, one point per value)."""
    m = len(values)
    if m == 1:
        return (((_ZERO,),),)
    if m == 2:
        d = values[1]
        return (((_ZERO, d), (d, _ZERO)),)
    diam = values[-1]
    smallest = values[1]
    middle = values[2:-1]
    out: List[Matrix] = []
    for size in range(len(middle) + 1):
        for chosen in combinations(middle, size):
            left_spec = (_ZERO, smallest) + chosen
            taken = set(chosen)
            right_spec = (_ZERO,) + tuple(v for v in middle if v not in taken)
            for a in _matrices_with_spectrum(left_spec):
                for b in _matrices_with_spectrum(right_spec):
                    out.append(_join(a, b, diam))
    return tuple(out)


def _canonicalize(matrix: Matrix) -> Space:
    """Relabel points p1..pn by canonical leaf order and permute the matrix
    to match, so equal spaces serialize identically."""
    n = len(matrix)
    temp = Space(tuple(f"p{i + 1}" for i in range(n)), matrix)
    order = leaf_order(build_representing_tree(temp))
    perm = [temp.index(p) for p in order]
    rows = tuple(tuple(matrix[i][j] for j in perm) for i in perm)
    return Space(tuple(f"p{i + 1}" for i in range(n)), rows)


def enumerate_extremal(n: int, limit: int | None = None) -> List[Space]:
    """Every extremal space with spectrum {0, 1, ..., n-1}, pairwise
    non-isometric, sorted by isometry canonical code.

    The guard `limit` (default 10, or the value of ULTRAMETRICS_ENUM_LIMIT)
    bounds n; pass a larger limit explicitly for bigger runs.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if limit is None:
        limit = int(os.environ.get(ENUM_LIMIT_ENV, _DEFAULT_LIMIT))
    if n > limit:
        raise Oversize(f"n={n} exceeds the enumeration guard {limit}")
    values = tuple(Fraction(i) for i in range(n))
    spaces = [_canonicalize(matrix) for matrix in _matrices_with_spectrum(values)]
    spaces.sort(key=lambda s: canonical_code(build_representing_tree(s)).code)
    if len(spaces) != kappa(n):
        raise InternalError(
            f"enumeration produced {len(spaces)} spaces, expected {kappa(n)}"
        )
    return spaces
