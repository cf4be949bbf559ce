"""Exit criteria for the package, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import time

import numpy as np

from unary_ecc.capacity import (
    derivative_sign_changes,
    monte_carlo_estimate,
    single_correction_capacity,
)
from unary_ecc.cc4 import train
from unary_ecc.codec import (
    Distribution,
    UnaryVariant,
    decode_golomb,
    decode_space,
    decode_thermometer_strict,
    decode_unary,
    distribution_stats,
    encode_golomb,
    encode_space,
    encode_thermometer,
    encode_unary,
)
from unary_ecc.decoder import COMPLETE_POLICIES, TiePolicy, correction_census

from oracles import words_at_covering_distance


def test_ac01_theorem(criterion):
    criterion("AC1  census at t=1 totals (n-1)^2 for n in [1,14], all complete policies, < 5 s")
    start = time.perf_counter()
    for n in range(1, 15):
        for policy in COMPLETE_POLICIES:
            assert correction_census(n, 1, policy).total == (n - 1) ** 2, (n, policy)
    assert time.perf_counter() - start < 5.0


def test_ac02_table3_bit_exact(criterion):
    criterion("AC2  n=5, t=1, paper-parity reproduces every corrected set of the single-error table")
    census = correction_census(5, 1, TiePolicy.PAPER_PARITY)
    expected = [
        {"10000", "01000", "00100", "00010"},
        {"10001", "01001"},
        {"10011", "01011"},
        {"00101", "00110"},
        {"01101", "01110"},
        {"10111", "11011", "11101", "11110"},
    ]
    assert [set(s) for s in census.corrected] == expected
    assert census.counts == [4, 2, 2, 2, 2, 4]
    assert census.total == 16


def test_ac03_table4_total(criterion):
    criterion("AC3  n=5, t=2 census totals 10 for every complete policy, equal to words at distance 2")
    independent = words_at_covering_distance(5, 2)
    assert independent == 10
    for policy in COMPLETE_POLICIES:
        assert correction_census(5, 2, policy).total == 10 == independent


def test_ac04_table2_and_golomb_roundtrip(criterion):
    criterion("AC4  Golomb-8 of 8..13 bit-exact; round trip N <= 10^4, m in {1,2,4,8,16,5,7}")
    table = ["10000", "10001", "10010", "10011", "10100", "10101"]
    assert [encode_golomb(N, 8) for N in range(8, 14)] == table
    for m in (1, 2, 4, 8, 16, 5, 7):
        for N in range(10_001):
            assert decode_golomb(encode_golomb(N, m), m) == N


def test_ac05_optimum(criterion):
    criterion("AC5  grid argmax (step 1e-4) within 1e-3 of 1/n and one derivative sign change, n in [2,20]")
    ps = np.arange(1, 10_000) * 1e-4
    for n in range(2, 21):
        vals = (n - 1) ** 2 * ps * (1 - ps) ** (n - 1)
        assert abs(ps[np.argmax(vals)] - 1 / n) <= 1e-3
        assert len(derivative_sign_changes(n)) == 1


def test_ac06_spot_value(criterion):
    criterion("AC6  single_correction_capacity(5, 0.2) = 0.04369066... within 1e-9")
    reference = 16 * 0.2 * 0.8**4 / 30
    assert abs(reference - 0.0436906666666667) < 1e-12
    assert abs(single_correction_capacity(5, 0.2) - reference) < 1e-9


def test_ac07_monte_carlo(criterion):
    criterion("AC7  Monte Carlo n=5 p=0.2 10^6 trials within 3 SE of 16/30 and of 16*0.2*0.8^4/6, < 30 s")
    start = time.perf_counter()
    report = monte_carlo_estimate(5, 0.2, 10**6, seed=0, policy=TiePolicy.PAPER_PARITY)
    elapsed = time.perf_counter() - start
    assert abs(report.empirical_conditional - 16 / 30) <= 3 * report.standard_error
    assert abs(report.empirical_unconditional - 16 * 0.2 * 0.8**4 / 6) <= 3 * report.standard_error_unconditional
    assert elapsed < 30.0


def test_ac08_entropy_equality(criterion):
    criterion("AC8  p(i)=2^-i, i<=40, lengths i: |E[len] - H| < 1e-9, both within 1e-9 of 2")
    stats = distribution_stats(Distribution.truncated(lambda i: 2.0 ** -i, 40))
    assert abs(stats.expected_length - stats.entropy) < 1e-9
    assert abs(stats.expected_length - 2.0) < 1e-9
    assert abs(stats.entropy - 2.0) < 1e-9


def test_ac09_cc4_radius_law(criterion):
    criterion("AC9  CC4 hidden unit fires iff distance <= r; n <= 10, r <= n, >= 20 random sets, all 2^n inputs")
    rng = np.random.default_rng(20240)
    batteries = 0
    for n in range(1, 11):
        X = np.array([[(w >> (n - 1 - i)) & 1 for i in range(n)] for w in range(1 << n)])
        for r in range(n + 1):
            for _ in range(20):
                k = int(rng.integers(1, 6))
                patterns = rng.integers(0, 2, size=(k, n))
                labels = rng.integers(0, 2, size=k)
                net = train([("".join(map(str, p)), int(l)) for p, l in zip(patterns, labels)], r)
                fired = net.net_inputs(X) > 0
                dist = (X[:, None, :] != patterns[None, :, :]).sum(axis=2)
                assert np.array_equal(fired, dist <= r), (n, r)
                batteries += 1
    assert batteries >= 20


def test_ac10_round_trips(criterion):
    criterion("AC10 unary, thermometer, space, Golomb decode(encode(x)) = x on >= 10^4 cases each")
    cases = 0
    for variant in UnaryVariant:
        for v in range(10_001):
            assert decode_unary(encode_unary(v, variant), variant) == v
            cases += 1
    assert cases >= 10_000

    rng = np.random.default_rng(10)
    cases = 0
    for n in range(1, 65):
        for v in range(n + 1):
            assert decode_thermometer_strict(encode_thermometer(v, n)) == v
            cases += 1
    while cases < 10_000:
        n = int(rng.integers(65, 1001))
        v = int(rng.integers(0, n + 1))
        assert decode_thermometer_strict(encode_thermometer(v, n)) == v
        cases += 1

    cases = 0
    for slots in range(1, 142):
        for v in range(1, slots + 1):
            assert decode_space(encode_space(v, slots)) == v
            cases += 1
    assert cases >= 10_000

    cases = 0
    for m in (1, 2, 4, 8, 16, 5, 7):
        for N in range(10_001):
            assert decode_golomb(encode_golomb(N, m), m) == N
            cases += 1
    assert cases >= 10_000
