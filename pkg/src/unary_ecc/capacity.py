"""Closed-form correction counts and capacities, the p = 1/n optimum, and a
Monte Carlo harness that checks both against the channel and decoder.

``single_correction_probability`` is evaluated exactly as derived,
``(n-1)**2 * p * (1-p)**(n-1)``. It is an *expected count of corrected
single-error patterns* summed over codewords, not a probability, and it
exceeds 1 for larger n near the optimum. Divide by ``n + 1`` for the
probability that a uniformly drawn codeword suffers one corrected error, or by
``n * (n + 1)`` (``single_correction_capacity``) for the fraction of all
single-error events that are correctable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .decoder import TiePolicy, build_codebook, correction_census, decode_array, MAX_CENSUS_N
from .errors import RangeError

GRID_STEP = 1e-4
OPTIMUM_TOL = 1e-3


def _check(n: int, p: float, min_n: int = 1) -> None:
    if n < min_n:
        raise RangeError(f"n must be >= {min_n}, got {n}")
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"p must lie in [0, 1], got {p}")


def single_correction_probability(n: int, p: float) -> float:
    _check(n, p)
    return (n - 1) ** 2 * p * (1 - p) ** (n - 1)


def single_correction_capacity(n: int, p: float) -> float:
    _check(n, p)
    if n == 1:
        return 0.0
    return single_correction_probability(n, p) / (n * (n + 1))


def optimum_derivative(n: int, p: float) -> float:
    """d/dp of p(1-p)**(n-1), i.e. the maximised quantity up to (n-1)**2."""
    return -p * (n - 1) * (1 - p) ** (n - 2) + (1 - p) ** (n - 1)


def grid_argmax(n: int, step: float = GRID_STEP) -> float:
    ps = np.arange(1, round(1 / step)) * step
    vals = (n - 1) ** 2 * ps * (1 - ps) ** (n - 1)
    return float(ps[np.argmax(vals)])


def derivative_sign_changes(n: int, step: float = GRID_STEP) -> list[float]:
    """Grid points in (0, 1) where the derivative changes sign (left endpoints)."""
    ps = np.arange(1, round(1 / step)) * step
    signs = np.sign(-ps * (n - 1) * (1 - ps) ** (n - 2) + (1 - ps) ** (n - 1))
    nonzero = signs != 0
    ps, signs = ps[nonzero], signs[nonzero]
    return [float(p) for p in ps[:-1][signs[:-1] != signs[1:]]]


def optimal_p(n: int) -> float:
    """Bit error rate maximising the single-error correction count: ``1/n``.

    The closed form is cross-checked against a grid search; a disagreement
    larger than ``OPTIMUM_TOL`` raises ``ArithmeticError``.
    """
    if n < 2:
        raise RangeError(f"optimum is defined for n >= 2, got {n}")
    p_star = 1.0 / n
    found = grid_argmax(n)
    if abs(found - p_star) > OPTIMUM_TOL:
        raise ArithmeticError(f"grid argmax {found} disagrees with 1/n = {p_star}")
    return p_star


def double_correction_capacity(n: int, p: float, census_total: int) -> float:
    """``census_total * p**2 * (1-p)**(n-2) / (n+1)``.

    ``census_total`` should come from ``correction_census(n, 2, ...)``; for
    n=5 it is 10 and this reduces to ``(10/6) p**2 (1-p)**3``. Note the
    normalisation is by codeword count only, unlike the single-error capacity.
    """
    _check(n, p, min_n=2)
    if census_total < 0:
        raise RangeError(f"census total must be >= 0, got {census_total}")
    return census_total * p**2 * (1 - p) ** (n - 2) / (n + 1)


@dataclass(frozen=True)
class CapacityPoint:
    n: int
    p: float
    single_correction: float
    single_capacity: float
    double_capacity: float | None = None


def capacity_curve(n: int, p_grid: Sequence[float], double_total: int | None = None) -> list[CapacityPoint]:
    """Evaluate the closed forms on ``p_grid`` (strictly increasing, within [0, 1]).

    ``double_total`` fills ``double_capacity``; leave it ``None`` to omit.
    """
    grid = list(p_grid)
    if any(not 0.0 <= p <= 1.0 for p in grid):
        raise RangeError("grid values must lie in [0, 1]")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise RangeError("grid must be strictly increasing")
    return [
        CapacityPoint(
            n,
            p,
            single_correction_probability(n, p),
            single_correction_capacity(n, p),
            None if double_total is None or n < 2 else double_correction_capacity(n, p, double_total),
        )
        for p in grid
    ]


def uniform_grid(step: float) -> list[float]:
    """``0, step, 2*step, ..., 1`` with values rounded to kill float drift."""
    k = round(1 / step)
    if step <= 0 or not math.isclose(k * step, 1.0, rel_tol=1e-9):
        raise RangeError(f"step must divide 1 evenly, got {step}")
    return [round(i / k, 12) for i in range(k + 1)]


CURVE_HEADER = "n,p,single_correction,single_capacity,double_capacity"


def curve_csv(points: Sequence[CapacityPoint]) -> str:
    def fmt(x):
        return "" if x is None else f"{x:.12g}"

    lines = [CURVE_HEADER]
    lines += [
        f"{pt.n},{fmt(pt.p)},{fmt(pt.single_correction)},{fmt(pt.single_capacity)},{fmt(pt.double_capacity)}"
        for pt in points
    ]
    return "\n".join(lines) + "\n"


def default_double_total(n: int) -> int | None:
    if n < 2 or n > MAX_CENSUS_N:
        return None
    return correction_census(n, 2, TiePolicy.PAPER_PARITY).total


# ---------------------------------------------------------------------------
# Monte Carlo


@dataclass(frozen=True)
class MonteCarloReport:
    n: int
    p: float
    trials: int
    single_error_trials: int
    corrected: int

    @property
    def empirical_conditional(self) -> float:
        return self.corrected / self.single_error_trials if self.single_error_trials else 0.0

    @property
    def empirical_unconditional(self) -> float:
        return self.corrected / self.trials

    @property
    def standard_error(self) -> float:
        """Binomial standard error of the conditional rate."""
        k = self.single_error_trials
        if k == 0:
            return 0.0
        q = self.empirical_conditional
        return math.sqrt(q * (1 - q) / k)

    @property
    def standard_error_unconditional(self) -> float:
        u = self.empirical_unconditional
        return math.sqrt(u * (1 - u) / self.trials)

    def expected_conditional(self) -> float:
        return (self.n - 1) ** 2 / (self.n * (self.n + 1))

    def expected_unconditional(self) -> float:
        return single_correction_probability(self.n, self.p) / (self.n + 1)

    def render(self) -> str:
        rows = [
            ("n", self.n),
            ("p", self.p),
            ("trials", self.trials),
            ("single_error_trials", self.single_error_trials),
            ("corrected", self.corrected),
            ("empirical_conditional", f"{self.empirical_conditional:.12g}"),
            ("expected_conditional", f"{self.expected_conditional():.12g}"),
            ("standard_error", f"{self.standard_error:.12g}"),
            ("empirical_unconditional", f"{self.empirical_unconditional:.12g}"),
            ("expected_unconditional", f"{self.expected_unconditional():.12g}"),
            ("standard_error_unconditional", f"{self.standard_error_unconditional:.12g}"),
        ]
        return "".join(f"{k}: {v}\n" for k, v in rows)


CHUNK = 1 << 16


def _run_stream(n, p, trials, rng, codewords, cb, policy):
    single = corrected = 0
    for start in range(0, trials, CHUNK):
        size = min(CHUNK, trials - start)
        values = rng.integers(0, n + 1, size=size)
        flips = rng.random((size, n)) < p
        received = codewords[values] ^ flips
        one_error = flips.sum(axis=1) == 1
        decoded = decode_array(received[one_error], cb, policy)
        single += int(one_error.sum())
        corrected += int((decoded == values[one_error]).sum())
    return single, corrected


def monte_carlo_estimate(
    n: int,
    p: float,
    trials: int,
    seed: int = 0,
    policy: TiePolicy = TiePolicy.PAPER_PARITY,
    streams: int = 1,
) -> MonteCarloReport:
    """Send uniformly drawn codewords through the BSC and count corrected single errors.

    Trials are split into ``streams`` independently seeded substreams
    (``SeedSequence(seed).spawn``), so the report depends only on
    ``(seed, trials, streams)``.
    """
    _check(n, p)
    if trials < 1:
        raise RangeError(f"trials must be >= 1, got {trials}")
    if streams < 1:
        raise RangeError(f"streams must be >= 1, got {streams}")
    cb = build_codebook(n)
    codewords = cb.as_array().astype(bool)
    sizes = [trials // streams + (i < trials % streams) for i in range(streams)]
    single = corrected = 0
    for size, child in zip(sizes, np.random.SeedSequence(seed).spawn(streams)):
        s, c = _run_stream(n, p, size, np.random.default_rng(child), codewords, cb, policy)
        single += s
        corrected += c
    return MonteCarloReport(n, p, trials, single, corrected)
