"""
One-step maps of the classical multidimensional continued fraction
algorithms, their Arnoux-Rauzy fusions, and the expansion loop.

Every step factors the input as ``v = M . v'`` where ``M`` is a
nonnegative unimodular integer matrix.  Matrices are written in the
original coordinates; "largest", "second largest" and "smallest positive"
are chosen with :func:`~mcfwords.lattice.argsort_with_ties`, so equal
entries rank by increasing index.

The step functions only use ``+``, ``-``, ``//`` and comparisons, so they
also accept float vectors (see :func:`mcfwords.wordgen.expand_float`).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .lattice import (
    IntVector,
    Matrix,
    argsort_with_ties,
    elementary,
    identity,
    mat_prod,
    mat_vec,
    nonzero_count,
    smallest_positive,
    support,
    vector_gcd,
)


class StepError(Exception):
    pass


class Terminal(StepError):
    """At most one coordinate is nonzero; nothing left to reduce."""


class NotApplicable(StepError):
    """The guard of the rule fails on this vector."""


class Rule(enum.Enum):
    BRUN = "brun"
    BRUN_MULT = "brun-mult"
    SELMER = "selmer"
    FULLY = "fully"
    FULLY_POSSIBLE = "fully-possible"
    POINCARE = "poincare"
    JACOBI_PERRON = "jacobi-perron"
    ARNOUX_RAUZY = "arnoux-rauzy"
    RANDOM = "random"

    @property
    def slug(self) -> str:
        return self.value

    def __str__(self):
        return self.value


FUSION_FALLBACKS = (Rule.BRUN, Rule.BRUN_MULT, Rule.SELMER, Rule.FULLY, Rule.POINCARE)


@dataclass(frozen=True)
class Fusion:
    """Arnoux-Rauzy whenever its guard holds, otherwise ``fallback``."""

    fallback: Rule

    def __post_init__(self):
        if self.fallback not in FUSION_FALLBACKS:
            raise ValueError(f"unsupported fusion fallback: {self.fallback}")

    @property
    def slug(self) -> str:
        return f"fusion-ar-{self.fallback.value}"

    def __str__(self):
        return self.slug


Algorithm = Union[Rule, Fusion]

LABELS = {
    "arnoux-rauzy": "Arnoux-Rauzy",
    "fully": "Fully subtractive",
    "fully-possible": "Fully subtractive as possible",
    "selmer": "Selmer",
    "brun": "Brun",
    "brun-mult": "Brun Multiplicative",
    "poincare": "Poincare",
    "jacobi-perron": "Jacobi-Perron",
    "random": "Random reduction",
    "fusion-ar-fully": "Fusion of Arnoux-Rauzy and Fully subtractive",
    "fusion-ar-selmer": "Fusion of Arnoux-Rauzy and Selmer",
    "fusion-ar-brun-mult": "Fusion of Arnoux-Rauzy and Brun Multiplicative",
    "fusion-ar-poincare": "Fusion of Arnoux-Rauzy and Poincare",
    "fusion-ar-brun": "Fusion of Arnoux-Rauzy and Brun",
}

# the thirteen configurations of the reference table, in its row order
TABLE_SLUGS = (
    "arnoux-rauzy",
    "fully",
    "fully-possible",
    "selmer",
    "brun",
    "brun-mult",
    "poincare",
    "jacobi-perron",
    "random",
    "fusion-ar-fully",
    "fusion-ar-selmer",
    "fusion-ar-brun-mult",
    "fusion-ar-poincare",
)


def parse_algorithm(slug: str) -> Algorithm:
    slug = slug.strip().lower()
    if slug.startswith("fusion-ar-"):
        return Fusion(Rule(slug[len("fusion-ar-"):]))
    try:
        return Rule(slug)
    except ValueError:
        raise ValueError(f"unknown algorithm {slug!r}") from None


def all_algorithms() -> list[Algorithm]:
    return [parse_algorithm(s) for s in TABLE_SLUGS]


def label(algo: Algorithm) -> str:
    return LABELS[algo.slug]


@dataclass(frozen=True)
class StepOutcome:
    matrix: Matrix
    successor: tuple
    rule_applied: Rule


def _check(v: Sequence) -> None:
    if nonzero_count(v) <= 1:
        raise Terminal(f"at most one nonzero entry in {tuple(v)}")


def _replace(v: Sequence, changes: dict) -> tuple:
    return tuple(changes.get(i, x) for i, x in enumerate(v, 1))


def step_brun(v: Sequence) -> StepOutcome:
    _check(v)
    first, second = argsort_with_ties(v)[:2]
    succ = _replace(v, {first: v[first - 1] - v[second - 1]})
    return StepOutcome(elementary(len(v), first, second), succ, Rule.BRUN)


def step_brun_mult(v: Sequence) -> StepOutcome:
    _check(v)
    first, second = argsort_with_ties(v)[:2]
    q = v[first - 1] // v[second - 1]
    succ = _replace(v, {first: v[first - 1] - q * v[second - 1]})
    return StepOutcome(elementary(len(v), first, second, int(q)), succ, Rule.BRUN_MULT)


def _selmer_pair(v: Sequence) -> tuple[int, int]:
    first = argsort_with_ties(v)[0]
    src = smallest_positive(v)
    if src == first:
        src = smallest_positive(v, exclude=first)
    return first, src


def step_selmer(v: Sequence) -> StepOutcome:
    _check(v)
    first, src = _selmer_pair(v)
    succ = _replace(v, {first: v[first - 1] - v[src - 1]})
    return StepOutcome(elementary(len(v), first, src), succ, Rule.SELMER)


def _fully(v: Sequence, rule: Rule) -> StepOutcome:
    s = smallest_positive(v)
    m = [list(r) for r in identity(len(v))]
    changes = {}
    for j, x in enumerate(v, 1):
        if j != s and x > 0 and x >= v[s - 1]:
            changes[j] = x - v[s - 1]
            m[j - 1][s - 1] = 1
    return StepOutcome(tuple(tuple(r) for r in m), _replace(v, changes), rule)


def step_fully(v: Sequence) -> StepOutcome:
    _check(v)
    return _fully(v, Rule.FULLY)


def step_fully_as_possible(v: Sequence) -> StepOutcome:
    """Fully subtractive step, falling back to Brun if it would zero an entry
    strictly larger than the smallest positive one."""
    _check(v)
    out = _fully(v, Rule.FULLY)
    low = v[smallest_positive(v) - 1]
    if all(y > 0 for x, y in zip(v, out.successor) if x > low):
        return out
    return step_brun(v)


def step_poincare(v: Sequence) -> StepOutcome:
    _check(v)
    order = argsort_with_ties(v)
    d = len(v)
    changes = {}
    m = [list(r) for r in identity(d)]
    for k in range(d - 1):
        changes[order[k]] = v[order[k] - 1] - v[order[k + 1] - 1]
        for later in order[k + 1:]:
            m[order[k] - 1][later - 1] = 1
    return StepOutcome(tuple(tuple(r) for r in m), _replace(v, changes), Rule.POINCARE)


def step_jacobi_perron(v: Sequence) -> StepOutcome:
    if len(v) != 3:
        raise ValueError("Jacobi-Perron is only defined here for d = 3")
    _check(v)
    v1, v2, v3 = v
    if not v1 > 0:
        raise NotApplicable(f"first entry of {tuple(v)} is zero")
    q1, q2 = v2 // v1, v3 // v1
    m = ((0, 0, 1), (1, 0, int(q1)), (0, 1, int(q2)))
    return StepOutcome(m, (v2 - q1 * v1, v3 - q2 * v1, v1), Rule.JACOBI_PERRON)


def rotate_positive_first(v: Sequence) -> StepOutcome:
    """Cyclic relabelling bringing the next positive entry to coordinate 1."""
    d = len(v)
    shift = next(k for k in range(1, d) if v[k] > 0)
    succ = tuple(v[shift:]) + tuple(v[:shift])
    # v[i] = succ[(i - shift) mod d]
    m = tuple(tuple(int(j == (i - shift) % d) for j in range(d)) for i in range(d))
    return StepOutcome(m, succ, Rule.JACOBI_PERRON)


def ar_guard(v: Sequence) -> bool:
    first = argsort_with_ties(v)[0]
    return v[first - 1] >= sum(v) - v[first - 1]


def step_arnoux_rauzy(v: Sequence) -> StepOutcome:
    _check(v)
    first = argsort_with_ties(v)[0]
    rest = sum(v) - v[first - 1]
    if v[first - 1] < rest:
        raise NotApplicable(f"largest entry of {tuple(v)} is below the sum of the others")
    m = [list(r) for r in identity(len(v))]
    for j in range(1, len(v) + 1):
        if j != first:
            m[first - 1][j - 1] = 1
    succ = _replace(v, {first: v[first - 1] - rest})
    return StepOutcome(tuple(tuple(r) for r in m), succ, Rule.ARNOUX_RAUZY)


_ADDITIVE_FOR_RANDOM = (Rule.BRUN, Rule.SELMER, Rule.FULLY, Rule.POINCARE)


def step_random(v: Sequence, rng: random.Random) -> StepOutcome:
    """Uniform choice among the additive rules applicable to ``v``."""
    _check(v)
    choices = list(_ADDITIVE_FOR_RANDOM)
    if ar_guard(v):
        choices.append(Rule.ARNOUX_RAUZY)
    return STEPS[choices[rng.randrange(len(choices))]](v)


def step_fusion(v: Sequence, fallback: Rule) -> StepOutcome:
    _check(v)
    if ar_guard(v):
        return step_arnoux_rauzy(v)
    return STEPS[fallback](v)


STEPS: dict[Rule, Callable[[Sequence], StepOutcome]] = {
    Rule.BRUN: step_brun,
    Rule.BRUN_MULT: step_brun_mult,
    Rule.SELMER: step_selmer,
    Rule.FULLY: step_fully,
    Rule.FULLY_POSSIBLE: step_fully_as_possible,
    Rule.POINCARE: step_poincare,
    Rule.JACOBI_PERRON: step_jacobi_perron,
    Rule.ARNOUX_RAUZY: step_arnoux_rauzy,
}


def triplet_rng(seed: int, v: Sequence) -> random.Random:
    """Per-input generator so results do not depend on evaluation order."""
    return random.Random(f"{seed}:" + ",".join(str(x) for x in v))


def make_stepper(algo: Algorithm, rng: random.Random | None = None) -> Callable[[Sequence], StepOutcome]:
    """One-argument step function for ``algo``, with the Jacobi-Perron
    rotation repair folded in."""
    if isinstance(algo, Fusion):
        return lambda v: step_fusion(v, algo.fallback)
    if algo is Rule.RANDOM:
        if rng is None:
            raise ValueError("random reduction needs a generator")
        return lambda v: step_random(v, rng)
    if algo is Rule.JACOBI_PERRON:
        def jp(v):
            try:
                return step_jacobi_perron(v)
            except NotApplicable:
                return rotate_positive_first(v)
        return jp
    return STEPS[algo]


class Status(enum.Enum):
    COMPLETED = "completed"
    STOPPED_EARLY = "stopped-early"


@dataclass(frozen=True)
class ExpansionTrace:
    input: IntVector
    steps: tuple[StepOutcome, ...]
    terminal: IntVector
    terminal_letter: int | None
    status: Status
    algorithm: Algorithm = field(default=Rule.BRUN, compare=False)

    @property
    def completed(self) -> bool:
        return self.status is Status.COMPLETED

    def product(self) -> Matrix:
        return mat_prod((s.matrix for s in self.steps), len(self.input))

    @property
    def gcd(self) -> int:
        return vector_gcd(self.input)


def expand(v: Sequence[int], algo: Algorithm, seed: int = 0, max_steps: int | None = None) -> ExpansionTrace:
    """Run ``algo`` on the integer vector ``v`` until one nonzero entry is left.

    Pure Arnoux-Rauzy stops early (status ``STOPPED_EARLY``) as soon as its
    guard fails; every other configuration terminates on rational input.
    """
    v = tuple(int(x) for x in v)
    if not any(v):
        raise ValueError("cannot expand the zero vector")
    if any(x < 0 for x in v):
        raise ValueError(f"negative entry in {v}")
    rng = triplet_rng(seed, v) if algo is Rule.RANDOM else None
    step = make_stepper(algo, rng)
    steps = []
    cur = v
    status = Status.COMPLETED
    while True:
        if max_steps is not None and len(steps) >= max_steps:
            status = Status.STOPPED_EARLY
            break
        try:
            out = step(cur)
        except Terminal:
            break
        except NotApplicable:
            status = Status.STOPPED_EARLY
            break
        steps.append(out)
        cur = out.successor
    letter = None
    if status is Status.COMPLETED:
        letter = support(cur)[0]
    return ExpansionTrace(v, tuple(steps), cur, letter, status, algo)


def check_round_trip(trace: ExpansionTrace) -> bool:
    """``M_1 ... M_n . terminal == input``, recomputed step by step."""
    cur = trace.terminal
    for s in reversed(trace.steps):
        if s.successor != cur:
            return False
        cur = mat_vec(s.matrix, cur)
    return cur == trace.input
