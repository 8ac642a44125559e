"""
Exact integer vectors, matrices and words over the alphabet {1, ..., d}.

Vectors are tuples of Python ints, matrices are tuples of rows, and words
are tuples of letters (ints starting at 1).  Everything is immutable so the
values can be shared freely between sweep workers.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from math import gcd

IntVector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]


class DimensionError(ValueError):
    pass


def int_vector(entries: Iterable[int]) -> IntVector:
    """Validate and freeze a nonnegative integer vector of dimension >= 2."""
    v = tuple(int(x) for x in entries)
    if len(v) < 2:
        raise DimensionError(f"dimension must be at least 2, got {len(v)}")
    if any(x < 0 for x in v):
        raise ValueError(f"entries must be nonnegative: {v}")
    return v


def word(letters: Iterable[int] | str, d: int | None = None) -> Word:
    """Build a word from letters or from a digit string such as ``"1213"``."""
    if isinstance(letters, str):
        w = tuple(int(c) for c in letters)
    else:
        w = tuple(int(c) for c in letters)
    if any(a < 1 for a in w) or (d is not None and any(a > d for a in w)):
        raise ValueError(f"letters must lie in 1..{d if d else 'd'}: {w}")
    return w


def word_str(w: Sequence[int]) -> str:
    if any(a > 9 for a in w):
        return " ".join(str(a) for a in w)
    return "".join(str(a) for a in w)


def parikh(w: Sequence[int], d: int = 3) -> IntVector:
    """Letter counts of ``w``; entry ``i - 1`` holds the number of ``i``."""
    counts = [0] * d
    for a in w:
        counts[a - 1] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def identity(d: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def elementary(d: int, row: int, col: int, q: int = 1) -> Matrix:
    """``I + q * E[row, col]`` with 1-based indices."""
    if row == col:
        raise ValueError("elementary matrix needs row != col")
    m = [list(r) for r in identity(d)]
    m[row - 1][col - 1] += q
    return tuple(tuple(r) for r in m)


def mat_vec(m: Matrix, v: Sequence[int]) -> IntVector:
    if any(len(row) != len(v) for row in m):
        raise DimensionError(f"{len(m)}x{len(m[0]) if m else 0} matrix against vector of length {len(v)}")
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionError("inner dimensions differ")
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_prod(ms: Iterable[Matrix], d: int) -> Matrix:
    out = identity(d)
    for m in ms:
        out = mat_mul(out, m)
    return out


def det(m: Matrix):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(m)
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def argsort_with_ties(v: Sequence) -> tuple[int, ...]:
    """Letters ordered by decreasing value; equal values by increasing index.

    >>> argsort_with_ties((1, 2, 4))
    (3, 2, 1)
    >>> argsort_with_ties((2, 2, 1))
    (1, 2, 3)
    """
    if not any(v):
        raise ValueError("argsort of the zero vector")
    return tuple(i + 1 for i in sorted(range(len(v)), key=lambda i: (-v[i], i)))


def nonzero_count(v: Sequence) -> int:
    return sum(1 for x in v if x)


def smallest_positive(v: Sequence, exclude: int | None = None) -> int | None:
    """Letter of the smallest positive entry, lowest index on ties."""
    best = None
    for i, x in enumerate(v, 1):
        if x > 0 and i != exclude and (best is None or x < v[best - 1]):
            best = i
    return best


def support(v: Sequence) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(v, 1) if x > 0)


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def frequencies(v: Sequence[int]) -> tuple[Fraction, ...]:
    total = sum(v)
    if total == 0:
        raise ValueError("zero vector has no frequency vector")
    return tuple(Fraction(x, total) for x in v)
