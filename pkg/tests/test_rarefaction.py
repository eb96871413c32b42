import itertools
import json
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclonorm.norm_poly import numeric_norm
from cyclonorm.rarefaction import (
    THUE_MORSE,
    SequenceSpec,
    empirical_exponent,
    partial_sum_digits,
    partial_sum_direct,
    rarefaction_report,
    rarefied_sum,
    rarefied_sum_direct,
    rarefied_sums_at,
    term,
    terms,
    theoretical_exponent,
    twisted_norm_sum,
)

TERNARY = SequenceSpec(3, (1, 1, -1))
ZERO = SequenceSpec(2, (0, 0))


def all_specs(b):
    return [SequenceSpec.from_tail(b, tail) for tail in itertools.product((-1, 0, 1), repeat=b - 1)]


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec(1, (1,))
    with pytest.raises(ValueError):
        SequenceSpec(3, (1, 1))
    with pytest.raises(ValueError):
        SequenceSpec(2, (1, 2))
    with pytest.raises(ValueError):
        SequenceSpec(2, (-1, 1))
    assert ZERO.is_zero and TERNARY.d == 2 and THUE_MORSE.digit_sum == 0


@pytest.mark.parametrize("seq, n, expected", [(THUE_MORSE, 3, 1), (TERNARY, 5, -1), (TERNARY, 0, 1), (THUE_MORSE, 0, 1)])
def test_term_examples(seq, n, expected):
    assert term(seq, n) == expected


def test_term_rejects_negative():
    with pytest.raises(ValueError):
        term(THUE_MORSE, -1)


def test_thue_morse_prefix():
    assert [term(THUE_MORSE, n) for n in range(16)] == [
        1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1
    ]
    assert list(terms(THUE_MORSE, np.arange(16))) == [term(THUE_MORSE, n) for n in range(16)]
    assert term(ZERO, 0) == 0


@settings(max_examples=200)
@given(
    st.sampled_from(all_specs(2) + all_specs(3) + all_specs(5)),
    st.integers(0, 10**6),
    st.integers(0, 8),
    st.data(),
)
def test_strong_multiplicativity(seq, m, k, data):
    r = data.draw(st.integers(0, seq.b**k - 1))
    assert term(seq, m * seq.b**k + r) == term(seq, m) * term(seq, r)


@pytest.mark.parametrize("seq, N, expected", [(THUE_MORSE, 4, 0), (THUE_MORSE, 0, 0), (TERNARY, 3, 1)])
def test_partial_sum_direct_examples(seq, N, expected):
    assert partial_sum_direct(seq, N) == expected


@pytest.mark.parametrize("seq, N, expected", [(THUE_MORSE, 4, 0), (THUE_MORSE, 2**20, 0), (TERNARY, 9, 1)])
def test_partial_sum_digits_examples(seq, N, expected):
    assert partial_sum_digits(seq, N) == expected


def test_direct_budget():
    with pytest.raises(ValueError):
        partial_sum_direct(THUE_MORSE, 10**8 + 1)
    with pytest.raises(ValueError):
        partial_sum_direct(THUE_MORSE, 100, budget=10)


@pytest.mark.parametrize("b", (2, 3, 5))
def test_digit_sums_exhaustive_over_digit_assignments(b):
    rng = random.Random(b)
    for seq in all_specs(b):
        prefix = np.concatenate(([0], np.cumsum(terms(seq, np.arange(5000)))))
        for N in list(range(200)) + [rng.randrange(5000) for _ in range(50)]:
            assert partial_sum_digits(seq, N) == prefix[N]


def test_digit_sums_random_large_n():
    rng = random.Random(2024)
    for seq in (THUE_MORSE, TERNARY, SequenceSpec(5, (1, 0, -1, 1, 1))):
        prefix = np.concatenate(([0], np.cumsum(terms(seq, np.arange(10**6)))))
        for N in (rng.randrange(10**6 + 1) for _ in range(10**4 // 3)):
            assert partial_sum_digits(seq, N) == prefix[N]


@pytest.mark.parametrize("seq, p, N, expected", [(THUE_MORSE, 3, 9, 3), (THUE_MORSE, 5, 1, 1), (TERNARY, 5, 10, 0)])
def test_rarefied_sum_examples(seq, p, N, expected):
    assert rarefied_sum(seq, p, N) == expected
    assert rarefied_sum_direct(seq, p, N) == expected


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from(all_specs(2) + all_specs(3) + all_specs(4)),
    st.sampled_from([3, 5, 7, 11, 13]),
    st.integers(0, 20000),
)
def test_rarefied_sum_two_implementations(seq, p, N):
    assert rarefied_sum(seq, p, N) == rarefied_sum_direct(seq, p, N)


def test_rarefied_sums_at_checkpoints():
    cps = [2**k for k in range(1, 15)]
    assert rarefied_sums_at(THUE_MORSE, 3, cps) == [rarefied_sum_direct(THUE_MORSE, 3, N) for N in cps]


def test_rarefied_sum_is_exact_beyond_direct_budget():
    for k in range(1, 10):
        assert rarefied_sum_direct(THUE_MORSE, 3, 4**k) == 2 * 3 ** (k - 1)
    assert rarefied_sum(THUE_MORSE, 3, 4**30) == 2 * 3**29


@pytest.mark.parametrize("p", [3, 5])
def test_norm_to_sum(p):
    twisted = twisted_norm_sum(THUE_MORSE, p)
    ref = numeric_norm(p, (1, 2), 1, -1, 0)
    assert abs(twisted.imag) <= 1e-6 * max(1, abs(ref))
    assert abs(twisted.real - ref) <= 1e-6 * max(1, abs(ref))


@pytest.mark.parametrize("p, expected", [(3, math.log(3) / (2 * math.log(2))), (5, math.log(5) / (4 * math.log(2)))])
def test_theoretical_exponent_examples(p, expected):
    v = theoretical_exponent(THUE_MORSE, p)
    assert v.exponent == pytest.approx(expected, abs=1e-12)
    assert v.generator and v.condition_holds and v.norm == p


def test_theoretical_exponent_rounded_values():
    assert round(theoretical_exponent(THUE_MORSE, 3).exponent, 4) == 0.7925
    assert round(theoretical_exponent(THUE_MORSE, 5).exponent, 4) == 0.5805


@pytest.mark.parametrize("p", [3, 5, 11, 13])
def test_thue_morse_exponent_closed_form(p):
    assert theoretical_exponent(THUE_MORSE, p).exponent == pytest.approx(
        math.log(p) / ((p - 1) * math.log(2)), rel=1e-14
    )


def test_ternary_p11_has_no_exponent_since_3_is_not_a_generator():
    v = theoretical_exponent(TERNARY, 11)
    assert v.norm == 199 and v.condition_holds
    assert not v.generator and v.exponent is None


def test_ternary_p7_exponent():
    v = theoretical_exponent(TERNARY, 7)
    assert v.norm == 29 and v.generator
    assert v.exponent == pytest.approx(math.log(29) / (6 * math.log(3)))


def test_condition_can_fail():
    # digit sum 2, so 2^(p-1) competes with the norm
    v = theoretical_exponent(SequenceSpec(2, (1, 1)), 5)
    assert v.norm == 1 and not v.condition_holds and v.exponent is None
    with pytest.raises(ValueError):
        theoretical_exponent(SequenceSpec(4, (1, 1, -1, 1)), 5)


def test_empirical_thue_morse_p3():
    fit = empirical_exponent(THUE_MORSE, 3, 2**24)
    assert abs(fit.slope - 0.7925) <= 0.1
    assert fit.used + fit.discarded == 24


def test_empirical_thue_morse_p5():
    fit = empirical_exponent(THUE_MORSE, 5, 2**24)
    assert abs(fit.slope - 0.5805) <= 0.15


def test_empirical_slope_bounded_by_theory():
    for seq, p in [(TERNARY, 7), (SequenceSpec(3, (1, -1, 0)), 5), (SequenceSpec(2, (1, -1)), 11)]:
        v = theoretical_exponent(seq, p)
        fit = empirical_exponent(seq, p, 10**7)
        assert fit.slope <= v.exponent + 0.1


def test_empirical_rejects_zero_sequence():
    with pytest.raises(ValueError):
        empirical_exponent(ZERO, 3, 2**20)
    with pytest.raises(ValueError):
        empirical_exponent(THUE_MORSE, 3, 10**8 + 1)


def test_report_serialisation():
    r = rarefaction_report(THUE_MORSE, 3, 2**16)
    d = json.loads(r.to_json())
    assert {"b", "digits", "p", "condition_holds", "theoretical_exponent", "empirical_exponent", "checkpoints"} <= set(d)
    assert d["checkpoints"][0] == {"N": 2, "S": "1"}
    assert r.to_json() == rarefaction_report(THUE_MORSE, 3, 2**16).to_json()
    lines = r.checkpoints_csv().splitlines()
    assert lines[0] == "N,S" and len(lines) == 17


def test_report_notes_missing_exponents():
    r = rarefaction_report(TERNARY, 11, 3**10)
    assert r.theoretical_exponent is None
    assert any("does not generate" in n for n in r.notes)
    z = rarefaction_report(ZERO, 3, 2**10)
    assert z.empirical_exponent is None
    assert any("no empirical exponent" in n for n in z.notes)
