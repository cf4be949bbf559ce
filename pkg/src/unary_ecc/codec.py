"""Unary, thermometer, space and Golomb codes, plus code-length statistics.

All encoders return :class:`~unary_ecc.bits.Bitstring` and all decoders accept
anything ``Bitstring`` accepts (a ``'0'/'1'`` string or a sequence of bits).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .bits import Bitstring
from .errors import InvalidDistribution, MalformedCodeword, NotACodeword, RangeError

PROB_TOL = 1e-9


class UnaryVariant(enum.Enum):
    ONES_THEN_ZERO = "ones-then-zero"
    ZEROS_THEN_ONE = "zeros-then-one"

    @property
    def symbols(self) -> tuple[str, str]:
        """(repeated symbol, terminator)."""
        if self is UnaryVariant.ONES_THEN_ZERO:
            return "1", "0"
        return "0", "1"


# ---------------------------------------------------------------------------
# unary


def encode_unary(v: int, variant: UnaryVariant = UnaryVariant.ONES_THEN_ZERO) -> Bitstring:
    """Encode ``v >= 0`` as ``v`` repeated symbols plus one terminator.

    >>> encode_unary(3)
    Bitstring('1110')
    >>> encode_unary(2, UnaryVariant.ZEROS_THEN_ONE)
    Bitstring('001')
    """
    if v < 0:
        raise RangeError(f"unary code is defined for v >= 0, got {v}")
    run, stop = variant.symbols
    return Bitstring(run * v + stop)


def _read_unary(bits: str, pos: int, variant: UnaryVariant) -> tuple[int, int]:
    run, stop = variant.symbols
    end = bits.find(stop, pos)
    if end < 0:
        raise MalformedCodeword(f"unary prefix has no terminator {stop!r}: {bits!r}")
    return end - pos, end + 1


def decode_unary(bits: str, variant: UnaryVariant = UnaryVariant.ONES_THEN_ZERO) -> int:
    bits = Bitstring(bits)
    if not bits:
        raise MalformedCodeword("empty codeword")
    v, end = _read_unary(bits, 0, variant)
    if end != len(bits):
        raise MalformedCodeword(f"trailing symbols after terminator: {bits!r}")
    return v


# ---------------------------------------------------------------------------
# fixed-length thermometer code


def encode_thermometer(v: int, n: int) -> Bitstring:
    """``n - v`` zeros followed by ``v`` ones; always ``n`` bits long."""
    if n < 1:
        raise RangeError(f"code length must be >= 1, got {n}")
    if not 0 <= v <= n:
        raise RangeError(f"value {v} outside [0, {n}]")
    return Bitstring("0" * (n - v) + "1" * v)


def decode_thermometer_strict(bits: str) -> int:
    """Inverse of :func:`encode_thermometer`; rejects anything not of form 0*1*."""
    bits = Bitstring(bits)
    if not bits:
        raise NotACodeword("empty word")
    if "10" in bits:
        raise NotACodeword(f"a 1 precedes a 0 in {bits!r}")
    return bits.popcount()


# ---------------------------------------------------------------------------
# space code


def encode_space(v: int, slots: int) -> Bitstring:
    """Mark slot ``v`` (1-based, counted from the right) and fill ones to its left.

    There is no representation for 0.
    """
    if slots < 1:
        raise RangeError(f"slots must be >= 1, got {slots}")
    if not 1 <= v <= slots:
        raise RangeError(f"value {v} outside [1, {slots}]")
    return Bitstring("1" * (slots - v + 1) + "0" * (v - 1))


def decode_space(bits: str) -> int:
    bits = Bitstring(bits)
    ones = len(bits) - len(bits.lstrip("1"))
    if ones == 0 or "1" in bits[ones:]:
        raise NotACodeword(f"not a space codeword: {bits!r}")
    return len(bits) - ones + 1


# ---------------------------------------------------------------------------
# Golomb


@dataclass(frozen=True)
class GolombParams:
    m: int
    q: int
    r: int

    @classmethod
    def split(cls, N: int, m: int) -> "GolombParams":
        if m < 1:
            raise RangeError(f"Golomb group size must be >= 1, got {m}")
        if N < 0:
            raise RangeError(f"Golomb code is defined for N >= 0, got {N}")
        q, r = divmod(N, m)
        return cls(m, q, r)


def _truncated_binary_params(m: int) -> tuple[int, int]:
    # b bits for the long codes, and the number of short (b-1 bit) codes
    b = (m - 1).bit_length()
    return b, (1 << b) - m


def _encode_remainder(r: int, m: int) -> str:
    b, short = _truncated_binary_params(m)
    if b == 0:
        return ""
    if r < short:
        return format(r, f"0{b - 1}b") if b > 1 else ""
    return format(r + short, f"0{b}b")


def encode_golomb(N: int, m: int, variant: UnaryVariant = UnaryVariant.ONES_THEN_ZERO) -> Bitstring:
    """Golomb-``m`` codeword for ``N``: unary quotient then the remainder field.

    For power-of-two ``m`` (a Rice code) the remainder is plain binary in
    ``log2(m)`` bits. Other ``m`` use truncated binary, which is the standard
    Golomb construction; the tabulated m=8 examples do not exercise it.

    >>> encode_golomb(9, 8)
    Bitstring('10001')
    """
    params = GolombParams.split(N, m)
    return Bitstring(encode_unary(params.q, variant) + _encode_remainder(params.r, m))


def _read_golomb(bits: str, pos: int, m: int, variant: UnaryVariant) -> tuple[int, int]:
    q, pos = _read_unary(bits, pos, variant)
    b, short = _truncated_binary_params(m)
    if b == 0:
        return q * m, pos
    head = b - 1
    if pos + head > len(bits):
        raise MalformedCodeword(f"remainder field too short in {bits!r}")
    x = int(bits[pos:pos + head], 2) if head else 0
    pos += head
    if x < short:
        return q * m + x, pos
    if pos >= len(bits):
        raise MalformedCodeword(f"remainder field too short in {bits!r}")
    x = (x << 1 | int(bits[pos])) - short
    return q * m + x, pos + 1


def decode_golomb(bits: str, m: int, variant: UnaryVariant = UnaryVariant.ONES_THEN_ZERO) -> int:
    bits = Bitstring(bits)
    if m < 1:
        raise RangeError(f"Golomb group size must be >= 1, got {m}")
    if not bits:
        raise MalformedCodeword("empty codeword")
    N, end = _read_golomb(bits, 0, m, variant)
    if end != len(bits):
        raise MalformedCodeword(f"trailing symbols after Golomb codeword: {bits!r}")
    return N


def decode_golomb_stream(bits: str, m: int, variant: UnaryVariant = UnaryVariant.ONES_THEN_ZERO) -> list[int]:
    """Decode a concatenation of Golomb codewords."""
    bits = Bitstring(bits)
    out, pos = [], 0
    while pos < len(bits):
        N, pos = _read_golomb(bits, pos, m, variant)
        out.append(N)
    return out


# ---------------------------------------------------------------------------
# code-length statistics


@dataclass(frozen=True)
class Distribution:
    """Probabilities over positive integers paired with code lengths.

    ``residual`` is the probability mass dropped by truncating an infinite
    support; it is reported, never folded back in.
    """

    probs: Sequence[tuple[int, float]]
    lengths: Sequence[int]
    residual: float = field(default=0.0)

    def __post_init__(self):
        if len(self.probs) != len(self.lengths):
            raise InvalidDistribution("probs and lengths differ in size")
        if any(p < 0 for _, p in self.probs):
            raise InvalidDistribution("negative probability")
        total = math.fsum(p for _, p in self.probs)
        if abs(total - 1.0) > PROB_TOL:
            raise InvalidDistribution(f"probabilities sum to {total!r}, not 1")

    @classmethod
    def truncated(
        cls,
        pmf: Callable[[int], float],
        cutoff: int,
        length: Callable[[int], int] = lambda i: i,
    ) -> "Distribution":
        """Tabulate ``pmf`` on ``1..cutoff``; the tail mass goes to ``residual``.

        Raises InvalidDistribution if the tail is heavier than the tolerance.
        """
        values = range(1, cutoff + 1)
        probs = [(i, pmf(i)) for i in values]
        residual = 1.0 - math.fsum(p for _, p in probs)
        return cls(probs, [length(i) for i in values], residual)


@dataclass(frozen=True)
class DistributionStats:
    expected_length: float
    entropy: float
    monotone: bool


def distribution_stats(dist: Distribution) -> DistributionStats:
    pairs = sorted(zip(dist.probs, dist.lengths), key=lambda item: item[0][0])
    ps = [p for (_, p), _ in pairs]
    lam = [l for _, l in pairs]
    expected = math.fsum(p * l for p, l in zip(ps, lam))
    entropy = math.fsum(-p * math.log2(p) for p in ps if p > 0)
    monotone = all(a >= b for a, b in zip(ps, ps[1:])) and all(
        a <= b for a, b in zip(lam, lam[1:])
    )
    return DistributionStats(expected, entropy, monotone)


def kraft_sum(lengths: Sequence[int]) -> float:
    """Sum of 2**-length; a prefix code with these lengths exists iff <= 1."""
    return math.fsum(2.0 ** -l for l in lengths)
