import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcfwords.lattice import word
from mcfwords.metrics import (
    EmptyWordError,
    balance,
    discrepancy,
    empirical_frequency,
    factor_complexity,
    fmt4,
    report,
    tijdeman_bound,
)
from mcfwords.wordgen import generate_word
from mcfwords.steps import Fusion, Rule
from oracles import naive_balance, naive_complexity, naive_discrepancy

words = st.lists(st.integers(1, 3), min_size=1, max_size=40).map(tuple)

THIRD = Fraction(1, 3)


def test_discrepancy_examples(backend):
    assert discrepancy(word("3"), (0, 0, 1)) == 0
    assert discrepancy(word("123"), (THIRD, THIRD, THIRD)) == Fraction(2, 3)
    assert discrepancy(word("12"), (Fraction(1, 2), Fraction(1, 2), 0)) == Fraction(1, 2)


def test_discrepancy_literal_index_variant():
    # expected count f_i * (l - 1) for the length-l prefix
    w = word("123")
    assert discrepancy(w, (THIRD,) * 3, literal_index=True) == 1
    diff = discrepancy(w, (THIRD,) * 3, literal_index=True) - discrepancy(w, (THIRD,) * 3)
    assert abs(diff) <= max((THIRD,) * 3)


def test_discrepancy_errors():
    with pytest.raises(EmptyWordError):
        discrepancy((), (1, 0, 0))
    with pytest.raises(ValueError):
        discrepancy(word("12"), (Fraction(1, 2), Fraction(1, 3), 0))


def test_balance_examples(backend):
    assert balance(word("111")) == 0
    assert balance(word("1213121")) == 1
    assert balance(word("1122")) == 2


def test_factor_complexity_examples():
    assert factor_complexity(word("1111"), 3) == [1, 1, 1]
    assert factor_complexity(word("1213121"), 3) == [3, 4, 4]
    assert factor_complexity(word("123123"), 2)[1] == 3
    with pytest.raises(ValueError):
        factor_complexity(word("12"), 3)


def test_empirical_frequency_examples():
    assert empirical_frequency(word("123")) == (THIRD,) * 3
    assert empirical_frequency(word("1121")) == (Fraction(3, 4), Fraction(1, 4), 0)
    g = generate_word((2, 3, 5), Fusion(Rule.POINCARE))
    assert empirical_frequency(g.word) == (Fraction(1, 5), Fraction(3, 10), Fraction(1, 2))


@given(words)
def test_matches_naive_reference(w):
    f = empirical_frequency(w)
    assert discrepancy(w, f) == naive_discrepancy(w, f)
    assert balance(w, 3) == naive_balance(w, 3)


@given(words)
def test_periodic_extension_adds_nothing(w):
    f = empirical_frequency(w)
    assert discrepancy(w + w, f) == discrepancy(w, f)


@given(words)
def test_balance_bounded_by_discrepancy(w):
    assert balance(w, 3) <= 4 * discrepancy(w, empirical_frequency(w))


def test_zero_discrepancy_only_for_single_letter():
    assert discrepancy(word("2222"), (0, 1, 0)) == 0
    rng = random.Random(1)
    for _ in range(200):
        w = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 20)))
        if len(set(w)) > 1:
            assert discrepancy(w, empirical_frequency(w)) > 0


@settings(max_examples=60)
@given(words)
def test_complexity_properties(w):
    """Strict monotonicity fails on finite words: 112131 has p(2)=5, p(3)=4."""
    p = factor_complexity(w, len(w))
    assert p == [naive_complexity(w, n) for n in range(1, len(w) + 1)]
    assert p[0] <= 3
    for n in range(1, len(w)):
        assert p[n] <= 3 * p[n - 1]
        # every factor but the suffix extends to the right
        assert p[n] >= p[n - 1] - 1


def test_report_and_constants():
    r = report(word("1213121"))
    assert r.balance == 1 and r.discrepancy >= 0
    assert r.max_complexity_ratio == 3
    assert tijdeman_bound(3) == Fraction(3, 4)
    assert fmt4(Fraction(9055, 10000)) == "0.9055"
    assert fmt4(0.0973256) == "0.09733"
    assert fmt4(0.6) == "0.6000"
