import math
import statistics
from fractions import Fraction
from math import comb

import pytest

from mcfwords.steps import Fusion, Rule, all_algorithms, expand
from mcfwords.sweep import (
    OK,
    UNDEFINED,
    SweepConfig,
    emit_dat,
    emit_jsonl,
    emit_table,
    enumerate_triplets,
    evaluate,
    run_sweep,
    summarize,
    ternary_project,
    write_outputs,
)


def test_triplet_counts():
    t20 = enumerate_triplets(20)
    assert len(t20) == 171 == comb(19, 2)
    assert len(enumerate_triplets(100)) == 4851 == comb(99, 2)
    assert enumerate_triplets(3) == [(1, 1, 1)]
    assert t20 == sorted(t20)
    brute = [(a, b, c) for a in range(21) for b in range(21) for c in range(21) if a + b + c == 20 and min(a, b, c) >= 1]
    assert t20 == brute
    assert len(enumerate_triplets(10, 0)) == comb(12, 2)
    with pytest.raises(ValueError):
        enumerate_triplets(2)


def test_single_triplet_statistics():
    records, summaries = run_sweep(SweepConfig(N=3, algorithms=(Rule.BRUN,)))
    (rec,) = records["brun"]
    s = summaries["brun"]
    assert s.count == 1 and s.std == 0
    assert s.min == s.mean == s.max == float(rec.discrepancy)


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(N=2)


def test_ternary_corners():
    assert ternary_project((10, 0, 0), 10) == (0.0, 0.0)
    assert ternary_project((0, 10, 0), 10) == (1.0, 0.0)
    x, y = ternary_project((0, 0, 10), 10)
    assert x == 0.5 and y == pytest.approx(math.sqrt(3) / 2, abs=0)
    with pytest.raises(ValueError):
        ternary_project((1, 2, 3), 7)


@pytest.fixture(scope="module")
def poincare20():
    return run_sweep(SweepConfig(N=20, algorithms=(Rule.POINCARE,)))


def test_record_invariants(poincare20):
    records, _ = poincare20
    for r in records["poincare"]:
        assert r.status == OK and r.discrepancy >= 0
        assert r.word_length * math.gcd(*r.triplet) == 20


def test_streaming_statistics_agree(poincare20):
    records, summaries = poincare20
    s = summaries["poincare"]
    n = mean = m2 = 0.0
    for r in records["poincare"]:
        x = float(r.discrepancy)
        n += 1
        delta = x - mean
        mean += delta / n
        m2 += delta * (x - mean)
    assert s.mean == pytest.approx(mean, rel=1e-12)
    assert s.std == pytest.approx(math.sqrt(m2 / n), rel=1e-9)
    values = [float(r.discrepancy) for r in records["poincare"]]
    assert s.std == pytest.approx(statistics.pstdev(values), rel=1e-9)
    assert s.min <= s.mean <= s.max


def test_bound_count_is_independent_recount(poincare20):
    records, summaries = poincare20
    recount = sum(1 for r in records["poincare"] if r.discrepancy * 4 <= 3)
    assert summaries["poincare"].within_bound == recount


def test_emit_dat(tmp_path, poincare20):
    records, _ = poincare20
    p = tmp_path / "p.dat"
    assert emit_dat(records["poincare"], p) == 171
    lines = p.read_bytes().split(b"\n")
    assert lines[0] == b"xproj yproj stat" and lines[-1] == b""
    assert len(lines) - 1 == 172
    x, y, stat = map(float, lines[1].split())
    first = records["poincare"][0]
    assert (x, y) == ternary_project(first.triplet) and stat == float(first.discrepancy)
    emit_dat([], tmp_path / "empty.dat")
    assert (tmp_path / "empty.dat").read_text() == "xproj yproj stat\n"


def test_emit_dat_skips_undefined(tmp_path):
    recs = [evaluate((1, 1, 1), Rule.ARNOUX_RAUZY), evaluate((1, 1, 4), Rule.ARNOUX_RAUZY)]
    assert [r.status for r in recs] == [UNDEFINED, OK]
    assert emit_dat(recs, tmp_path / "ar.dat") == 1


def test_emit_table(tmp_path):
    records, summaries = run_sweep(SweepConfig(N=6))
    p = tmp_path / "t.csv"
    emit_table([summaries[a.slug] for a in all_algorithms()], p)
    lines = p.read_text().splitlines()
    assert len(lines) == 14 and lines[0] == "algorithm,min,mean,max,std"
    emit_table([summaries["brun"]], p)
    assert len(p.read_text().splitlines()) == 2


def test_emit_table_significant_digits(tmp_path):
    s = summarize([evaluate((1, 1, 4), Rule.BRUN)], Rule.BRUN)
    s = type(s)(Rule.BRUN, 0.6, 0.9055, 1.2, 0.0973256, 1, 0, 1)
    emit_table([s], tmp_path / "t.csv")
    assert tmp_path.joinpath("t.csv").read_text().splitlines()[1] == "Brun,0.6000,0.9055,1.200,0.09733"


def test_emit_errors_carry_path(tmp_path):
    with pytest.raises(OSError, match="missing"):
        emit_dat([], tmp_path / "missing" / "x.dat")


def test_jsonl(tmp_path):
    recs = [evaluate((1, 1, 1), Rule.ARNOUX_RAUZY), evaluate((2, 3, 5), Fusion(Rule.POINCARE))]
    emit_jsonl(recs, tmp_path / "r.jsonl")
    import json
    rows = [json.loads(line) for line in (tmp_path / "r.jsonl").read_text().splitlines()]
    assert rows[0]["status"] == "undefined" and rows[0]["discrepancy"] is None
    assert Fraction(rows[1]["discrepancy"]) == recs[1].discrepancy
    assert rows[1]["algorithm"] == "fusion-ar-poincare"


def test_parallel_matches_serial(tmp_path):
    algos = (Rule.RANDOM, Fusion(Rule.POINCARE), Rule.ARNOUX_RAUZY)
    serial = SweepConfig(N=24, algorithms=algos, seed=7)
    parallel = SweepConfig(N=24, algorithms=algos, seed=7, jobs=3)
    a = write_outputs(serial, *run_sweep(serial), tmp_path / "a", jsonl=True)
    b = write_outputs(parallel, *run_sweep(parallel), tmp_path / "b", jsonl=True)
    for pa, pb in zip(a, b):
        assert pa.name == pb.name and pa.read_bytes() == pb.read_bytes()


def test_ar_domain_follows_trace_status():
    records, summaries = run_sweep(SweepConfig(N=30, algorithms=(Rule.ARNOUX_RAUZY,)))
    for r in records["arnoux-rauzy"]:
        assert (r.status == OK) == expand(r.triplet, Rule.ARNOUX_RAUZY).completed
    assert 0 < summaries["arnoux-rauzy"].undefined_count < len(records["arnoux-rauzy"])
