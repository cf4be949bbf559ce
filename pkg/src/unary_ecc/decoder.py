"""Minimum-distance decoding of the fixed-length unary (thermometer) code.

Decoding is an exhaustive search over the ``n + 1`` codewords. Received words
often sit at equal distance from two or more codewords, so every decode takes
a :class:`TiePolicy`. The exhaustive census built on top of it is the
brute-force check for the ``(n-1)**2`` single-error count.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bits import Bitstring
from .channel import apply_error_pattern, enumerate_patterns
from .codec import encode_thermometer
from .errors import Infeasible, LengthMismatch, RangeError

#: Largest n for which correction_census will run.
MAX_CENSUS_N = 20


class TiePolicy(enum.Enum):
    """How to pick a codeword when several are nearest.

    PAPER_PARITY resolves a two-way tie ``{k, k+2}`` to ``k`` when ``k`` is even
    and to ``k + 2`` when ``k`` is odd, which reproduces the single-error table
    for n=5 row for row. Any other tie shape falls back to the lowest value.
    For odd n it yields (n-1) corrections at each end codeword and (n-3) at
    every middle one; for even n no tie rule can produce that split, though
    every complete policy still totals (n-1)**2.
    """

    REJECT_TIES = "reject-ties"
    LOWEST_VALUE = "lowest-value"
    HIGHEST_VALUE = "highest-value"
    PAPER_PARITY = "paper-parity"

    @property
    def complete(self) -> bool:
        return self is not TiePolicy.REJECT_TIES

    def choose(self, values) -> int | None:
        values = sorted(values)
        if len(values) == 1:
            return values[0]
        if self is TiePolicy.REJECT_TIES:
            return None
        if self is TiePolicy.HIGHEST_VALUE:
            return values[-1]
        if self is TiePolicy.PAPER_PARITY and len(values) == 2 and values[1] - values[0] == 2:
            k = values[0]
            return k if k % 2 == 0 else k + 2
        return values[0]


COMPLETE_POLICIES = tuple(p for p in TiePolicy if p.complete)


@dataclass(frozen=True)
class Codebook:
    n: int
    codewords: tuple[Bitstring, ...]

    def __len__(self) -> int:
        return len(self.codewords)

    def as_array(self) -> np.ndarray:
        return np.array([cw.to_array() for cw in self.codewords], dtype=np.uint8)


def build_codebook(n: int) -> Codebook:
    if n < 1:
        raise RangeError(f"code length must be >= 1, got {n}")
    return Codebook(n, tuple(encode_thermometer(v, n) for v in range(n + 1)))


def _check_length(w: str, cb: Codebook) -> Bitstring:
    w = Bitstring(w)
    if len(w) != cb.n:
        raise LengthMismatch(f"word length {len(w)} does not match code length {cb.n}")
    return w


def _nearest(w_int: int, n: int) -> tuple[int, list[int]]:
    # codeword v is the integer with its v low bits set
    dists = [(w_int ^ ((1 << v) - 1)).bit_count() for v in range(n + 1)]
    d_min = min(dists)
    return d_min, [v for v, d in enumerate(dists) if d == d_min]


def nearest_set(w: str, cb: Codebook) -> tuple[int, frozenset[int]]:
    """Minimum Hamming distance from ``w`` to the code and every value achieving it."""
    w = _check_length(w, cb)
    d_min, values = _nearest(w.to_int(), cb.n)
    return d_min, frozenset(values)


@dataclass(frozen=True)
class DecodeOutcome:
    decoded: bool
    value: int | None
    distance: int
    ambiguous: bool

    @property
    def status(self) -> str:
        return "Decoded" if self.decoded else "Rejected"


def decode(w: str, cb: Codebook, policy: TiePolicy = TiePolicy.PAPER_PARITY) -> DecodeOutcome:
    w = _check_length(w, cb)
    d_min, values = _nearest(w.to_int(), cb.n)
    value = policy.choose(values)
    return DecodeOutcome(value is not None, value, d_min, len(values) > 1)


def decode_array(words: np.ndarray, cb: Codebook, policy: TiePolicy = TiePolicy.PAPER_PARITY) -> np.ndarray:
    """Vectorised :func:`decode` over the rows of a 0/1 array.

    Returns the decoded value per row, or -1 where the policy rejects.
    """
    words = np.asarray(words, dtype=np.uint8)
    if words.ndim != 2 or words.shape[1] != cb.n:
        raise LengthMismatch(f"expected an array of shape (k, {cb.n}), got {words.shape}")
    # a word's distance to codeword v = (ones in the first n-v bits) + (zeros in the last v)
    prefix = np.concatenate(
        [np.zeros((len(words), 1), dtype=np.int32), np.cumsum(words, axis=1, dtype=np.int32)], axis=1
    )
    total = prefix[:, -1:]
    v = np.arange(cb.n + 1)
    ones_head = prefix[:, cb.n - v]
    dist = ones_head + (v - (total - ones_head))
    nearest = dist == dist.min(axis=1, keepdims=True)

    count = nearest.sum(axis=1)
    lowest = nearest.argmax(axis=1)
    highest = cb.n - nearest[:, ::-1].argmax(axis=1)
    if policy is TiePolicy.LOWEST_VALUE:
        return lowest
    if policy is TiePolicy.HIGHEST_VALUE:
        return highest
    if policy is TiePolicy.REJECT_TIES:
        return np.where(count == 1, lowest, -1)
    pair = (count == 2) & (highest - lowest == 2)
    return np.where(pair & (lowest % 2 == 1), highest, lowest)


def correctable_set(v: int, t: int, cb: Codebook, policy: TiePolicy = TiePolicy.PAPER_PARITY) -> frozenset[Bitstring]:
    """Words at weight-``t`` corruption from codeword ``v`` that decode back to ``v``."""
    if not 0 <= v <= cb.n:
        raise RangeError(f"value {v} outside [0, {cb.n}]")
    if not 0 <= t <= cb.n:
        raise RangeError(f"error weight {t} outside [0, {cb.n}]")
    n = cb.n
    cw = cb.codewords[v].to_int()
    out = set()
    for pattern in enumerate_patterns(n, t):
        w_int = cw ^ pattern.mask(n)
        _, values = _nearest(w_int, n)
        if policy.choose(values) == v:
            out.add(Bitstring.from_int(w_int, n))
    return frozenset(out)


def corruptions(v: int, t: int, cb: Codebook) -> list[Bitstring]:
    """Every weight-``t`` corruption of codeword ``v``, in pattern order."""
    return [apply_error_pattern(cb.codewords[v], pat) for pat in enumerate_patterns(cb.n, t)]


@dataclass(frozen=True)
class CorrectionCensus:
    n: int
    t: int
    policy: TiePolicy
    per_codeword: tuple[tuple[int, int], ...]
    corrected: tuple[frozenset[Bitstring], ...]

    @property
    def counts(self) -> list[int]:
        return [c for _, c in self.per_codeword]

    @property
    def total(self) -> int:
        return sum(self.counts)


def correction_census(n: int, t: int, policy: TiePolicy = TiePolicy.PAPER_PARITY) -> CorrectionCensus:
    """Count, per codeword, the weight-``t`` error patterns that are corrected.

    Exhaustive over ``(n + 1) * C(n, t)`` events; refuses ``n > MAX_CENSUS_N``.
    """
    if n < 1:
        raise RangeError(f"code length must be >= 1, got {n}")
    if not 0 <= t <= n:
        raise RangeError(f"error weight {t} outside [0, {n}]")
    if n > MAX_CENSUS_N:
        raise Infeasible(
            f"census over {(n + 1) * math.comb(n, t)} events (n={n}) exceeds the n <= {MAX_CENSUS_N} bound"
        )
    cb = build_codebook(n)
    sets = tuple(correctable_set(v, t, cb, policy) for v in range(n + 1))
    return CorrectionCensus(
        n=n,
        t=t,
        policy=policy,
        per_codeword=tuple((v, len(s)) for v, s in enumerate(sets)),
        corrected=sets,
    )


def render_census_table(census: CorrectionCensus) -> str:
    """Plain-text table: codeword, all weight-t corruptions, corrected subset, count."""
    cb = build_codebook(census.n)
    rows = [("codeword", f"weight-{census.t} errors", "corrected", "count")]
    for (v, count), fixed in zip(census.per_codeword, census.corrected):
        all_words = corruptions(v, census.t, cb)
        # list corrected words in the same order they appear among the corruptions
        ordered = [w for w in all_words if w in fixed]
        rows.append((cb.codewords[v], ", ".join(all_words), ", ".join(ordered) or "-", str(count)))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    lines.append(f"total: {census.total}")
    return "\n".join(lines) + "\n"


def census_csv(census: CorrectionCensus) -> str:
    lines = ["value,count,total"]
    lines += [f"{v},{c},{census.total}" for v, c in census.per_codeword]
    return "\n".join(lines) + "\n"


def words_at_distance(n: int, t: int) -> int:
    """Count of length-``n`` words whose distance to the nearest codeword is ``t``.

    Independent enumeration over all 2**n words, for checking census totals.
    """
    codewords = [(1 << v) - 1 for v in range(n + 1)]
    return sum(
        1 for w in range(1 << n) if min((w ^ c).bit_count() for c in codewords) == t
    )
