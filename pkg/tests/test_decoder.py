import itertools

import numpy as np
import pytest

from unary_ecc.bits import Bitstring
from unary_ecc.decoder import (
    COMPLETE_POLICIES,
    MAX_CENSUS_N,
    TiePolicy,
    build_codebook,
    census_csv,
    correctable_set,
    correction_census,
    decode,
    decode_array,
    nearest_set,
    render_census_table,
    words_at_distance,
)
from unary_ecc.errors import Infeasible, LengthMismatch, RangeError

from oracles import all_words, nearest, words_at_covering_distance

CB5 = build_codebook(5)


def test_codebook_n5():
    assert list(build_codebook(5).codewords) == ["00000", "00001", "00011", "00111", "01111", "11111"]
    assert list(build_codebook(1).codewords) == ["0", "1"]
    assert list(build_codebook(2).codewords) == ["00", "01", "11"]
    with pytest.raises(RangeError):
        build_codebook(0)


@pytest.mark.parametrize("n", range(1, 12))
def test_codebook_invariants(n):
    cb = build_codebook(n)
    assert len(cb) == n + 1
    for v, cw in enumerate(cb.codewords):
        assert len(cw) == n and cw.popcount() == v
    for a, b in zip(cb.codewords, cb.codewords[1:]):
        assert sum(x != y for x, y in zip(a, b)) == 1


@pytest.mark.parametrize(
    "w, expected",
    [("00111", (0, {3})), ("00010", (1, {0, 2})), ("01010", (2, {0, 2, 4}))],
)
def test_nearest_set_examples(w, expected):
    assert nearest_set(w, CB5) == expected
    assert nearest(w) == expected


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        nearest_set("0000", CB5)
    with pytest.raises(LengthMismatch):
        decode("000000", CB5)


def test_decode_examples():
    out = decode("00010", CB5, TiePolicy.PAPER_PARITY)
    assert (out.status, out.value, out.distance, out.ambiguous) == ("Decoded", 0, 1, True)
    assert decode("00101", CB5, TiePolicy.PAPER_PARITY).value == 3
    for policy in TiePolicy:
        out = decode("00111", CB5, policy)
        assert (out.value, out.distance, out.ambiguous) == (3, 0, False)
    rejected = decode("00010", CB5, TiePolicy.REJECT_TIES)
    assert rejected.status == "Rejected" and rejected.value is None and rejected.ambiguous


# tie resolutions implied by the single-error table for n=5
@pytest.mark.parametrize("w, value", [("00010", 0), ("00101", 3), ("01011", 2), ("10111", 5)])
def test_paper_parity_ties(w, value):
    assert decode(w, CB5, TiePolicy.PAPER_PARITY).value == value


def test_paper_parity_three_way_falls_back_to_lowest():
    assert nearest_set("10101", CB5) == (2, {1, 3, 5})
    assert decode("10101", CB5, TiePolicy.PAPER_PARITY).value == 1


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("policy", list(TiePolicy))
def test_decode_against_oracle(n, policy):
    cb = build_codebook(n)
    for w in all_words(n):
        d, values = nearest(w)
        out = decode(w, cb, policy)
        assert out.distance == d
        assert out.ambiguous == (len(values) > 1)
        if out.decoded:
            assert out.value in values
        else:
            assert policy is TiePolicy.REJECT_TIES and len(values) > 1


@pytest.mark.parametrize("n", [1, 2, 5, 8, 12])
@pytest.mark.parametrize("policy", list(TiePolicy))
def test_decode_array_matches_scalar(n, policy):
    cb = build_codebook(n)
    words = np.array(list(itertools.product([0, 1], repeat=n)), dtype=np.uint8)
    got = decode_array(words, cb, policy)
    expected = [decode(Bitstring.from_array(w), cb, policy).value for w in words]
    assert [(-1 if e is None else e) for e in expected] == got.tolist()


def test_correctable_set_examples():
    assert correctable_set(1, 1, CB5) == {"10001", "01001"}
    assert correctable_set(5, 1, CB5) == {"10111", "11011", "11101", "11110"}
    for policy in TiePolicy:
        assert correctable_set(0, 1, build_codebook(1), policy) == set()
    with pytest.raises(RangeError):
        correctable_set(6, 1, CB5)
    with pytest.raises(RangeError):
        correctable_set(0, 6, CB5)


def test_census_examples():
    c = correction_census(5, 1, TiePolicy.PAPER_PARITY)
    assert c.counts == [4, 2, 2, 2, 2, 4] and c.total == 16
    for policy in COMPLETE_POLICIES:
        assert correction_census(5, 2, policy).total == 10
        assert correction_census(2, 1, policy).total == 1
    for policy in TiePolicy:
        assert correction_census(1, 1, policy).total == 0
    assert correction_census(5, 1, TiePolicy.REJECT_TIES).total == 12


def test_census_errors():
    with pytest.raises(RangeError):
        correction_census(0, 0)
    with pytest.raises(RangeError):
        correction_census(5, 6)
    with pytest.raises(Infeasible):
        correction_census(MAX_CENSUS_N + 1, 1)


@pytest.mark.parametrize("n", range(1, 15))
def test_theorem(n):
    for policy in COMPLETE_POLICIES:
        assert correction_census(n, 1, policy).total == (n - 1) ** 2


@pytest.mark.parametrize("n", range(3, 15, 2))
def test_paper_parity_structure(n):
    counts = correction_census(n, 1, TiePolicy.PAPER_PARITY).counts
    assert counts[0] == counts[-1] == n - 1
    assert counts[1:-1] == [n - 3] * (n - 1)


def _single_error_breakdowns(n):
    """Every per-codeword count vector reachable by some assignment of tied words."""
    unambiguous = [0] * (n + 1)
    ties = []
    for w in all_words(n):
        d, values = nearest(w)
        if d != 1:
            continue
        if len(values) == 1:
            unambiguous[values.pop()] += 1
        else:
            ties.append(sorted(values))
    out = set()
    for choice in itertools.product(*ties):
        counts = list(unambiguous)
        for v in choice:
            counts[v] += 1
        out.add(tuple(counts))
    return out


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_n_structure_is_unreachable(n):
    # the tied words split into an even and an odd chain; for even n the even
    # chain has one tie too few, so no tie rule gives (n-1), (n-3), ..., (n-1)
    target = tuple([n - 1] + [n - 3] * (n - 1) + [n - 1])
    reachable = _single_error_breakdowns(n)
    assert target not in reachable
    assert all(sum(c) == (n - 1) ** 2 for c in reachable)
    assert tuple(correction_census(n, 1, TiePolicy.PAPER_PARITY).counts) in reachable


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_n_structure_is_reachable(n):
    target = tuple([n - 1] + [n - 3] * (n - 1) + [n - 1])
    assert target in _single_error_breakdowns(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_totals_are_policy_invariant(n):
    for t in range(n + 1):
        expected = words_at_covering_distance(n, t)
        assert words_at_distance(n, t) == expected
        for policy in COMPLETE_POLICIES:
            assert correction_census(n, t, policy).total == expected
        assert correction_census(n, t, TiePolicy.REJECT_TIES).total <= expected


@pytest.mark.parametrize("n", range(1, 9))
def test_census_members_decode_back(n):
    cb = build_codebook(n)
    for t in range(n + 1):
        census = correction_census(n, t, TiePolicy.PAPER_PARITY)
        for v, words in enumerate(census.corrected):
            for w in words:
                assert sum(a != b for a, b in zip(w, cb.codewords[v])) == t
                assert decode(w, cb).value == v


@pytest.mark.parametrize("n", range(1, 10))
def test_boundary_flip_is_undetectable(n):
    cb = build_codebook(n)
    for v in range(n):
        # flipping the 0 next to the run of ones lands on codeword v+1
        w = cb.codewords[v].flip(n - v)
        out = decode(w, cb)
        assert (out.value, out.distance) == (v + 1, 0)


def test_render_table_and_csv():
    c = correction_census(5, 1)
    table = render_census_table(c)
    assert table.splitlines()[-1] == "total: 16"
    assert "10111, 11011, 11101, 11110" in table
    csv = census_csv(c)
    assert csv.splitlines() == ["value,count,total", "0,4,16", "1,2,16", "2,2,16", "3,2,16", "4,2,16", "5,4,16"]
    assert csv.endswith("\n")
