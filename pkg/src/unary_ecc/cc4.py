"""CC4 corner-classification network with instantaneous training.

Each training sample becomes one hidden unit. Input weights are +1 where the
sample has a 1 and -1 where it has a 0, and the bias input (fixed at 1) gets
weight ``r - s + 1``, ``s`` being the sample's popcount. For an input at
Hamming distance ``d`` from the sample the unit's net input is ``r + 1 - d``,
so with a strict ``> 0`` step the unit fires exactly when ``d <= r``.

The output unit sums +1/-1 over firing hidden units and also uses a strict
step, so a zero sum (including "no unit fired") is class 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bits import Bitstring
from .errors import EmptyTrainingSet, LengthMismatch, RangeError


@dataclass(frozen=True)
class HiddenUnit:
    weights: tuple[int, ...]
    bias_weight: int
    s: int


@dataclass(frozen=True)
class Cc4Network:
    input_len: int
    r: int
    hidden: tuple[HiddenUnit, ...]
    output_weights: tuple[int, ...]

    def weight_matrix(self) -> np.ndarray:
        return np.array([h.weights for h in self.hidden], dtype=np.int64)

    def bias_vector(self) -> np.ndarray:
        return np.array([h.bias_weight for h in self.hidden], dtype=np.int64)

    def net_inputs(self, X: np.ndarray) -> np.ndarray:
        """Hidden-layer net inputs for a batch of 0/1 rows, shape (batch, hidden)."""
        X = np.atleast_2d(np.asarray(X, dtype=np.int64))
        if X.shape[1] != self.input_len:
            raise LengthMismatch(f"inputs have length {X.shape[1]}, network expects {self.input_len}")
        return X @ self.weight_matrix().T + self.bias_vector()


def train(samples: Iterable[tuple[str, int]], r: int) -> Cc4Network:
    samples = [(Bitstring(x), int(label)) for x, label in samples]
    if not samples:
        raise EmptyTrainingSet("CC4 needs at least one training sample")
    if r < 0:
        raise RangeError(f"radius of generalization must be >= 0, got {r}")
    n = len(samples[0][0])
    if n < 1:
        raise LengthMismatch("training patterns must be non-empty")
    hidden, out = [], []
    for x, label in samples:
        if len(x) != n:
            raise LengthMismatch(f"pattern {x!r} has length {len(x)}, expected {n}")
        if label not in (0, 1):
            raise RangeError(f"labels must be 0 or 1, got {label}")
        s = x.popcount()
        hidden.append(HiddenUnit(tuple(1 if b else -1 for b in x.bits), r - s + 1, s))
        out.append(1 if label == 1 else -1)
    return Cc4Network(n, r, tuple(hidden), tuple(out))


def _as_input(net: Cc4Network, x: str) -> np.ndarray:
    x = Bitstring(x)
    if len(x) != net.input_len:
        raise LengthMismatch(f"input length {len(x)} does not match network input length {net.input_len}")
    return x.to_array()


def hidden_activations(net: Cc4Network, x: str) -> list[bool]:
    return [bool(v) for v in net.net_inputs(_as_input(net, x))[0] > 0]


def predict(net: Cc4Network, x: str) -> int:
    fired = net.net_inputs(_as_input(net, x))[0] > 0
    return int(np.dot(fired, net.output_weights) > 0)


def parse_training_lines(lines: Sequence[str]) -> list[tuple[Bitstring, int]]:
    """Parse ``bitstring,label`` lines; blank lines and ``#`` comments are skipped."""
    samples = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            bits, label = (part.strip() for part in line.split(","))
            samples.append((Bitstring(bits), int(label)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected 'bitstring,label', got {line!r}") from exc
    return samples
