"""
Words with prescribed letter frequencies, built by composing the
substitutions of an expansion.

For ``v = M_1 ... M_n v_n`` the word is ``sigma_1(sigma_2(... sigma_n(w_n)))``
where ``w_n`` is the letter of the surviving coordinate of ``v_n`` and
``sigma_k`` realises ``M_k`` with letters ordered by the vector entering
step ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .lattice import IntVector, Matrix, Word, argsort_with_ties, parikh, vector_gcd
from .steps import (
    Algorithm,
    ExpansionTrace,
    NotApplicable,
    Rule,
    Terminal,
    expand,
    make_stepper,
    triplet_rng,
)
from .substitutions import apply, substitution_from_matrix


class ExpansionIncomplete(ValueError):
    """The expansion stopped before a single coordinate was left."""


@dataclass(frozen=True)
class GeneratedWord:
    word: Word
    input: IntVector
    trace: ExpansionTrace
    gcd: int


def word_from_trace(trace: ExpansionTrace) -> Word:
    if not trace.completed:
        raise ExpansionIncomplete(
            f"{trace.algorithm} stopped at {trace.terminal} after {len(trace.steps)} steps"
        )
    w: Word = (trace.terminal_letter,)
    prev = trace.input
    subs = []
    for step in trace.steps:
        subs.append(substitution_from_matrix(step.matrix, prev))
        prev = step.successor
    for sigma in reversed(subs):
        w = apply(sigma, w)
    return w


def generate_word(v: Sequence[int], algo: Algorithm, seed: int = 0) -> GeneratedWord:
    trace = expand(v, algo, seed)
    w = word_from_trace(trace)
    return GeneratedWord(w, trace.input, trace, vector_gcd(trace.input))


def seed_letter(residual: Sequence[float]) -> int:
    if not any(x > 0 for x in residual):
        raise ValueError("seed letter of a zero residual")
    return argsort_with_ties(residual)[0]


@dataclass(frozen=True)
class FloatExpansion:
    direction: tuple[float, ...]
    depth: int
    trace: tuple[tuple[Rule, Matrix], ...]
    prefix: Word
    residual: tuple[float, ...]


def expand_float(
    f: Sequence[float],
    algo: Algorithm,
    depth: int = 50,
    eps: float = 1e-12,
    seed: int = 0,
    max_len: int = 10**6,
) -> FloatExpansion:
    """Apply ``depth`` steps of ``algo`` to a real direction.

    Entries below ``eps`` count as zero; the loop stops early when at most
    one entry is left or the rule no longer applies.  The returned prefix
    is ``sigma_1 o ... o sigma_k`` applied to the largest residual letter,
    truncated to ``max_len`` letters (truncation commutes with
    non-erasing substitutions, so the prefix is exact).
    """
    f = tuple(float(x) for x in f)
    if not all(math.isfinite(x) for x in f):
        raise ValueError(f"non-finite direction {f}")
    if any(x < 0 for x in f):
        raise ValueError(f"negative direction {f}")
    if all(x < eps for x in f):
        raise ValueError("direction is numerically zero")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    rng = triplet_rng(seed, f) if algo is Rule.RANDOM else None
    step = make_stepper(algo, rng)

    def clamp(u):
        return tuple(x if x >= eps else 0.0 for x in u)

    cur = clamp(f)
    history = []
    subs = []
    for _ in range(depth):
        try:
            out = step(cur)
        except (Terminal, NotApplicable):
            break
        history.append((out.rule_applied, out.matrix))
        subs.append(substitution_from_matrix(out.matrix, cur))
        cur = clamp(out.successor)
    w: Word = (seed_letter(cur),)
    for sigma in reversed(subs):
        w = apply(sigma, w)[:max_len]
    return FloatExpansion(f, len(history), tuple(history), w, cur)


def frequency_error(prefix: Sequence[int], f: Sequence[float]) -> float:
    """Max-norm distance between the prefix letter frequencies and ``f``."""
    total = sum(f)
    counts = parikh(prefix, len(f))
    return max(abs(c / len(prefix) - x / total) for c, x in zip(counts, f))
