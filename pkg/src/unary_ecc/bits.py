"""Bitstring type.

A :class:`Bitstring` is an immutable ``str`` made only of ``'0'`` and ``'1'``.
Position 1 is the leftmost character, so ``Bitstring("00111")`` prints exactly
the way codewords are written in tables. Subclassing ``str`` keeps
serialization lossless and lets bitstrings compare equal to plain literals.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import LengthMismatch


class Bitstring(str):

    def __new__(cls, value: str | Iterable[int] = "") -> "Bitstring":
        if isinstance(value, Bitstring):
            return value
        if not isinstance(value, str):
            value = "".join("1" if int(b) else "0" for b in _checked_ints(value))
        if value.strip("01"):
            raise ValueError(f"bitstring may only contain '0' and '1': {value!r}")
        return super().__new__(cls, value)

    @classmethod
    def from_int(cls, value: int, length: int) -> "Bitstring":
        """Big-endian rendering of ``value`` in exactly ``length`` bits."""
        if value < 0 or value >> length:
            raise ValueError(f"{value} does not fit in {length} bits")
        return cls(format(value, f"0{length}b") if length else "")

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Bitstring":
        return cls(np.asarray(arr).astype(int).tolist())

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(1 if c == "1" else 0 for c in self)

    def to_int(self) -> int:
        """Integer whose big-endian binary form is this string (0 if empty)."""
        return int(self, 2) if self else 0

    def to_array(self) -> np.ndarray:
        return np.frombuffer(self.encode("ascii"), dtype=np.uint8) - ord("0")

    def popcount(self) -> int:
        return self.count("1")

    def flip(self, position: int) -> "Bitstring":
        """Flip the bit at 1-based ``position``."""
        i = position - 1
        return Bitstring(self[:i] + ("0" if self[i] == "1" else "1") + self[i + 1:])

    def __repr__(self) -> str:
        return f"Bitstring({str.__repr__(self)})"


def _checked_ints(values: Iterable[int]) -> Iterable[int]:
    for b in values:
        if b not in (0, 1):
            raise ValueError(f"bit values must be 0 or 1, got {b!r}")
        yield b


def hamming_distance(a: str, b: str) -> int:
    """Number of positions where two equal-length bitstrings differ."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} != {len(b)}")
    return sum(x != y for x, y in zip(a, b))
