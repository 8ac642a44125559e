"""Command-line entry point: ``mcfwords {expand,word,metrics,sweep,project}``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .lattice import frequencies, int_vector, parikh, vector_gcd, word, word_str
from .metrics import balance, discrepancy, empirical_frequency, factor_complexity, fmt4
from .steps import TABLE_SLUGS, all_algorithms, expand, parse_algorithm
from .substitutions import substitution_from_matrix
from .sweep import SweepConfig, format_report, run_sweep, ternary_project, write_outputs
from .wordgen import word_from_trace

EXIT_OK, EXIT_USAGE, EXIT_STOPPED = 0, 1, 2

DEFAULT_ALGO = "fusion-ar-poincare"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _vector(text: str):
    try:
        v = int_vector(x for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad vector {text!r}: {exc}") from None
    if not any(v):
        raise UsageError("the zero vector has no expansion")
    return v


def _algo(text: str):
    try:
        return parse_algorithm(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _matrix_str(m) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in m) + "]"


def cmd_expand(args) -> int:
    v = _vector(args.vector)
    trace = expand(v, _algo(args.algo), args.seed)
    prev = v
    for k, s in enumerate(trace.steps, 1):
        sigma = substitution_from_matrix(s.matrix, prev)
        print(f"{k:3d} {s.rule_applied.slug:15s} M={_matrix_str(s.matrix)} "
              f"v'={','.join(map(str, s.successor))}  sigma: {sigma}")
        prev = s.successor
    print(f"terminal {','.join(map(str, trace.terminal))}")
    if not trace.completed:
        print(f"stopped early after {len(trace.steps)} steps: guard fails")
        return EXIT_STOPPED
    print(f"gcd {trace.gcd}")
    print(f"terminal letter {trace.terminal_letter}")
    return EXIT_OK


def cmd_word(args) -> int:
    v = _vector(args.vector)
    trace = expand(v, _algo(args.algo), args.seed)
    if not trace.completed:
        print(f"stopped early after {len(trace.steps)} steps at {','.join(map(str, trace.terminal))}")
        return EXIT_STOPPED
    w = word_from_trace(trace)
    d = len(v)
    disc = discrepancy(w, frequencies(v))
    print(word_str(w))
    print(f"length {len(w)}")
    print(f"parikh {','.join(map(str, parikh(w, d)))}")
    print(f"gcd {vector_gcd(v)}")
    print(f"discrepancy {disc} ({fmt4(disc)})")
    print(f"balance {balance(w, d)}")
    return EXIT_OK


def cmd_metrics(args) -> int:
    try:
        w = word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not w:
        raise UsageError("empty word")
    d = max(args.d or 0, max(w))
    if args.freq:
        try:
            f = tuple(Fraction(x) for x in args.freq.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad frequency vector: {exc}") from None
        if sum(f) != 1 or len(f) < max(w):
            raise UsageError("frequencies must sum to 1 and cover every letter")
    else:
        f = empirical_frequency(w, d)
    n_max = min(args.n_max, len(w))
    print(f"length {len(w)}")
    print(f"frequency {','.join(str(x) for x in empirical_frequency(w, d))}")
    disc = discrepancy(w, f)
    print(f"discrepancy {disc} ({fmt4(disc)})")
    print(f"balance {balance(w, d)}")
    print(f"complexity {','.join(map(str, factor_complexity(w, n_max)))}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.algos == "all":
        algos = tuple(all_algorithms())
    else:
        algos = tuple(_algo(s) for s in args.algos.split(","))
    try:
        cfg = SweepConfig(N=args.n, algorithms=algos, seed=args.seed, min_entry=args.min_entry,
                          jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records, summaries = run_sweep(cfg)
    try:
        paths = write_outputs(cfg, records, summaries, args.out_dir, args.prefix, args.jsonl)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(format_report(summaries[a.slug] for a in algos))
    for p in paths:
        print(f"wrote {p}")
    return EXIT_OK


def cmd_project(args) -> int:
    v = _vector(args.vector)
    x, y = ternary_project(v, args.n if args.n else sum(v))
    print(f"{x!r} {y!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mcfwords", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    slugs = ", ".join(TABLE_SLUGS + ("fusion-ar-brun",))

    def algo_flags(sp):
        sp.add_argument("--algo", default=DEFAULT_ALGO, help=f"one of: {slugs}")
        sp.add_argument("--seed", type=int, default=0, help="seed for random reduction")

    sp = sub.add_parser("expand", help="print the steps of an expansion")
    sp.add_argument("vector", help="comma-separated nonnegative integers, e.g. 1,2,4")
    algo_flags(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("word", help="generate the word with the given letter counts")
    sp.add_argument("vector")
    algo_flags(sp)
    sp.set_defaults(func=cmd_word)

    sp = sub.add_parser("metrics", help="discrepancy, balance and complexity of a word")
    sp.add_argument("word", help="digit string such as 1213121")
    sp.add_argument("--freq", help="target frequencies, e.g. 1/4,1/4,1/2 (default: empirical)")
    sp.add_argument("--d", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=10)
    sp.set_defaults(func=cmd_metrics)

    sp = sub.add_parser("sweep", help="discrepancy statistics over all triplets summing to N")
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--algos", default="all", help="comma-separated slugs or 'all'")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--min-entry", type=int, default=1)
    sp.add_argument("--out-dir", default=".")
    sp.add_argument("--prefix", default="discrepancy")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--jsonl", action="store_true", help="also dump every record as JSON lines")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("project", help="ternary plot coordinates of a triplet")
    sp.add_argument("vector")
    sp.add_argument("--n", type=int, default=None)
    sp.set_defaults(func=cmd_project)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
