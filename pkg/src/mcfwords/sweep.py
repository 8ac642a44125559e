"""
Discrepancy sweeps over all rational frequency triplets with a fixed
denominator, plus the data files consumed by external plotting tools.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .lattice import IntVector
from .metrics import discrepancy, fmt4, tijdeman_bound
from .steps import Algorithm, all_algorithms, label
from .wordgen import ExpansionIncomplete, generate_word

OK = "ok"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class SweepConfig:
    N: int
    algorithms: tuple[Algorithm, ...] = field(default_factory=lambda: tuple(all_algorithms()))
    seed: int = 0
    min_entry: int = 1
    jobs: int = 1

    def __post_init__(self):
        if self.min_entry < 0 or self.N < 1 or self.N < 3 * self.min_entry:
            raise ValueError(f"no triplet with entries >= {self.min_entry} sums to N={self.N}")


@dataclass(frozen=True)
class SweepRecord:
    triplet: IntVector
    algorithm: Algorithm
    discrepancy: Fraction | None
    word_length: int
    status: str
    reason: str = ""


@dataclass(frozen=True)
class StatSummary:
    algorithm: Algorithm
    min: float
    mean: float
    max: float
    std: float
    count: int
    undefined_count: int
    within_bound: int

    @property
    def within_bound_fraction(self) -> float:
        return self.within_bound / self.count if self.count else float("nan")


def enumerate_triplets(N: int, min_entry: int = 1) -> list[IntVector]:
    """All ``(a1, a2, a3)`` with ``ai >= min_entry`` and sum ``N``, lexicographically."""
    if min_entry < 0 or N < 3 * min_entry or N < 1:
        raise ValueError(f"no triplet with entries >= {min_entry} sums to N={N}")
    return [
        (a, b, N - a - b)
        for a in range(min_entry, N - 2 * min_entry + 1)
        for b in range(min_entry, N - a - min_entry + 1)
    ]


def evaluate(triplet: Sequence[int], algo: Algorithm, seed: int = 0) -> SweepRecord:
    triplet = tuple(triplet)
    N = sum(triplet)
    try:
        g = generate_word(triplet, algo, seed)
    except ExpansionIncomplete as exc:
        return SweepRecord(triplet, algo, None, 0, UNDEFINED, str(exc))
    f = [Fraction(a, N) for a in triplet]
    return SweepRecord(triplet, algo, discrepancy(g.word, f), len(g.word), OK)


def _evaluate_block(args):
    triplets, algo, seed = args
    return [evaluate(t, algo, seed) for t in triplets]


def summarize(records: Sequence[SweepRecord], algo: Algorithm, d: int = 3) -> StatSummary:
    """Population statistics over the defined records, computed exactly."""
    values = [r.discrepancy for r in records if r.status == OK]
    undefined = len(records) - len(values)
    if not values:
        nan = float("nan")
        return StatSummary(algo, nan, nan, nan, nan, 0, undefined, 0)
    n = len(values)
    mean = sum(values, Fraction(0)) / n
    var = sum(((x - mean) ** 2 for x in values), Fraction(0)) / n
    bound = tijdeman_bound(d)
    return StatSummary(
        algorithm=algo,
        min=float(min(values)),
        mean=float(mean),
        max=float(max(values)),
        std=math.sqrt(var),
        count=n,
        undefined_count=undefined,
        within_bound=sum(1 for x in values if x <= bound),
    )


def run_sweep(cfg: SweepConfig) -> tuple[dict, dict]:
    """Evaluate every triplet under every configured algorithm.

    Returns ``(records, summaries)`` keyed by algorithm slug; records keep
    the triplet enumeration order regardless of ``cfg.jobs``.
    """
    triplets = enumerate_triplets(cfg.N, cfg.min_entry)
    chunk = max(1, math.ceil(len(triplets) / (4 * max(cfg.jobs, 1))))
    tasks = [
        (triplets[i:i + chunk], algo, cfg.seed)
        for algo in cfg.algorithms
        for i in range(0, len(triplets), chunk)
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            blocks = list(pool.map(_evaluate_block, tasks))
    else:
        blocks = [_evaluate_block(t) for t in tasks]

    records: dict[str, list[SweepRecord]] = {a.slug: [] for a in cfg.algorithms}
    for (_, algo, _), block in zip(tasks, blocks):
        records[algo.slug].extend(block)
    summaries = {a.slug: summarize(records[a.slug], a) for a in cfg.algorithms}
    return records, summaries


def ternary_project(a: Sequence[int], N: int | None = None) -> tuple[float, float]:
    """Barycentric layout: ``(N,0,0)`` at the origin, ``(0,N,0)`` at ``(1, 0)``,
    ``(0,0,N)`` at the apex."""
    N = sum(a) if N is None else N
    if sum(a) != N:
        raise ValueError(f"{tuple(a)} does not sum to {N}")
    return (a[1] + a[2] / 2) / N, math.sqrt(3) / 2 * a[2] / N


def data_filename(prefix: str, N: int, algo: Algorithm) -> str:
    return f"{prefix}_sum{N}_{algo.slug}.dat"


def _write(path, text: str) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def emit_dat(records: Iterable[SweepRecord], path) -> int:
    """Write ``xproj yproj stat`` rows for the defined records; returns the row count."""
    lines = ["xproj yproj stat"]
    for r in records:
        if r.status != OK:
            continue
        x, y = ternary_project(r.triplet)
        lines.append(f"{x!r} {y!r} {float(r.discrepancy)!r}")
    _write(path, "\n".join(lines) + "\n")
    return len(lines) - 1


def emit_table(summaries: Iterable[StatSummary], path) -> None:
    lines = ["algorithm,min,mean,max,std"]
    for s in summaries:
        lines.append(f"{label(s.algorithm)},{fmt4(s.min)},{fmt4(s.mean)},{fmt4(s.max)},{fmt4(s.std)}")
    _write(path, "\n".join(lines) + "\n")


def emit_jsonl(records: Iterable[SweepRecord], path) -> None:
    lines = []
    for r in records:
        disc = r.discrepancy
        lines.append(json.dumps({
            "triplet": list(r.triplet),
            "algorithm": r.algorithm.slug,
            "discrepancy": None if disc is None else str(disc),
            "discrepancy_decimal": None if disc is None else float(disc),
            "status": r.status,
        }))
    _write(path, "\n".join(lines) + ("\n" if lines else ""))


def format_report(summaries: Iterable[StatSummary], d: int = 3) -> str:
    bound = tijdeman_bound(d)
    rows = [
        f"{'algorithm':48s} {'min':>8s} {'mean':>8s} {'max':>8s} {'std':>8s} "
        f"{'count':>6s} {'undef':>6s} {'<=' + str(bound):>7s}"
    ]
    for s in summaries:
        rows.append(
            f"{label(s.algorithm):48s} {fmt4(s.min):>8s} {fmt4(s.mean):>8s} {fmt4(s.max):>8s} "
            f"{fmt4(s.std):>8s} {s.count:6d} {s.undefined_count:6d} {s.within_bound_fraction:7.4f}"
        )
    rows.append(f"reference bound 1-1/(2d-2) for d={d}: {bound}")
    return "\n".join(rows) + "\n"


def write_outputs(cfg: SweepConfig, records: dict, summaries: dict, out_dir, prefix: str = "discrepancy",
                  jsonl: bool = False) -> list[Path]:
    out = Path(out_dir)
    os.makedirs(out, exist_ok=True)
    written = []
    for algo in cfg.algorithms:
        p = out / data_filename(prefix, cfg.N, algo)
        emit_dat(records[algo.slug], p)
        written.append(p)
    ordered = [summaries[a.slug] for a in cfg.algorithms]
    p = out / f"{prefix}_sum{cfg.N}_table.csv"
    emit_table(ordered, p)
    written.append(p)
    p = out / f"{prefix}_sum{cfg.N}_report.txt"
    _write(p, format_report(ordered))
    written.append(p)
    if jsonl:
        p = out / f"{prefix}_sum{cfg.N}_records.jsonl"
        emit_jsonl([r for a in cfg.algorithms for r in records[a.slug]], p)
        written.append(p)
    return written
