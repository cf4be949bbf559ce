"""Binary symmetric channel and deterministic error patterns."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .bits import Bitstring
from .errors import OutOfRange, RangeError


@dataclass(frozen=True)
class ErrorPattern:
    """Set of distinct 1-based positions to flip."""

    positions: frozenset[int]

    def __init__(self, positions=()):
        positions = frozenset(int(i) for i in positions)
        if any(i < 1 for i in positions):
            raise OutOfRange(f"positions are 1-based, got {sorted(positions)}")
        object.__setattr__(self, "positions", positions)

    @property
    def weight(self) -> int:
        return len(self.positions)

    def mask(self, length: int) -> int:
        """Integer mask with position 1 as the most significant of ``length`` bits."""
        return sum(1 << (length - i) for i in self.positions)


@dataclass(frozen=True)
class ChannelParams:
    p: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise RangeError(f"bit error probability must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed < 2**64:
            raise RangeError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def transmit(bits: str, params: ChannelParams, rng: np.random.Generator | None = None) -> Bitstring:
    """Send ``bits`` through the BSC, flipping each bit independently with prob. ``p``.

    ``rng`` is advanced in place; pass ``None`` to start a fresh generator from
    ``params.seed``.
    """
    bits = Bitstring(bits)
    if rng is None:
        rng = params.rng()
    flips = rng.random(len(bits)) < params.p
    return Bitstring.from_array(bits.to_array() ^ flips)


def apply_error_pattern(bits: str, pattern: ErrorPattern) -> Bitstring:
    bits = Bitstring(bits)
    if pattern.positions and max(pattern.positions) > len(bits):
        raise OutOfRange(
            f"pattern position {max(pattern.positions)} exceeds word length {len(bits)}"
        )
    out = list(bits)
    for i in pattern.positions:
        out[i - 1] = "0" if out[i - 1] == "1" else "1"
    return Bitstring("".join(out))


def enumerate_patterns(length: int, t: int) -> Iterator[ErrorPattern]:
    """All weight-``t`` patterns on ``length`` positions, in lexicographic order."""
    if length < 1:
        raise RangeError(f"length must be >= 1, got {length}")
    if not 0 <= t <= length:
        raise RangeError(f"error weight {t} outside [0, {length}]")
    for combo in itertools.combinations(range(1, length + 1), t):
        yield ErrorPattern(combo)
