"""
Discrepancy, balance, factor complexity and letter frequencies of finite words.

All quantities are exact: discrepancies are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernels
from .lattice import parikh


class EmptyWordError(ValueError):
    pass


def _nonempty(w):
    if len(w) == 0:
        raise EmptyWordError("metric of the empty word")


def _common_denominator(f: Sequence) -> tuple[list[int], int]:
    f = [Fraction(x) for x in f]
    denom = lcm(*(x.denominator for x in f))
    return [int(x * denom) for x in f], denom


def discrepancy(w: Sequence[int], f: Sequence, literal_index: bool = False) -> Fraction:
    """Largest gap between expected and actual letter counts over prefixes.

    ``max_{i, l} |f_i * l - |w[:l]|_i|`` for prefix lengths ``l = 1..|w|``.
    With ``literal_index=True`` the expected count of the length-``l`` prefix
    is ``f_i * (l - 1)`` instead.
    """
    _nonempty(w)
    if sum(Fraction(x) for x in f) != 1:
        raise ValueError(f"frequencies must sum to 1: {tuple(f)}")
    if max(w) > len(f):
        raise ValueError("word uses letters outside the frequency vector")
    nums, denom = _common_denominator(f)
    best = kernels.max_deviation(w, nums, denom, 1 if literal_index else 0)
    return Fraction(best, denom)


def balance(w: Sequence[int], d: int | None = None) -> int:
    """Largest spread of a letter count across factors of equal length."""
    _nonempty(w)
    return kernels.balance(w, d or max(w))


def factor_complexity(w: Sequence[int], n_max: int) -> list[int]:
    """``[p(1), ..., p(n_max)]`` with ``p(n)`` the number of distinct factors of length ``n``."""
    if n_max > len(w):
        raise ValueError(f"n_max={n_max} exceeds word length {len(w)}")
    w = tuple(w)
    return [len({w[s:s + n] for s in range(len(w) - n + 1)}) for n in range(1, n_max + 1)]


def empirical_frequency(w: Sequence[int], d: int = 3) -> tuple[Fraction, ...]:
    _nonempty(w)
    return tuple(Fraction(c, len(w)) for c in parikh(w, d))


@dataclass(frozen=True)
class MetricReport:
    discrepancy: Fraction
    balance: int
    max_complexity_ratio: Fraction
    empirical_freq: tuple[Fraction, ...]


def report(w: Sequence[int], f: Sequence | None = None, d: int = 3) -> MetricReport:
    freq = empirical_frequency(w, d)
    p = factor_complexity(w, len(w))
    return MetricReport(
        discrepancy=discrepancy(w, f if f is not None else freq),
        balance=balance(w, d),
        max_complexity_ratio=max(Fraction(c, n) for n, c in enumerate(p, 1)),
        empirical_freq=freq,
    )


def tijdeman_bound(d: int) -> Fraction:
    """Discrepancy guaranteed by the chairman-assignment construction, ``1 - 1/(2d - 2)``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return 1 - Fraction(1, 2 * d - 2)


def fmt4(x) -> str:
    """Four significant digits, keeping trailing zeros (``0.6000``, ``0.09733``)."""
    return f"{float(x):#.4g}"
