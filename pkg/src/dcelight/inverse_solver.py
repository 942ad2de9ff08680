"""Invert the sharp-cutoff photon-count relation for an unknown index.

The observable is

    N = C (n_out - n_in)^2 n_out^2 / n_in,
    C = (1/9 pi) (K_observed R)^3 / n_liquid^3,

with C ~ 119.37 / n_liquid^3 at the reference K_observed R = 15 (the
full-precision prefactor is always used; 119 is display rounding).

Solving for n_in at fixed n_out is a quadratic with two positive roots
whenever N > 0 (their product is n_out^2). Solving for n_out at fixed
n_in is a quartic, handled by bracketed root isolation on its monotone
pieces: C x^2 (x - n_in)^2 grows from 0 at x = 0 to a local maximum
C n_in^4 / 16 at x = n_in/2, returns to 0 at x = n_in, then increases
without bound, so there are one or three positive roots (two at exact
tangency).

Three closed-form branches approximate the level curve regions:

    near-origin    n_in ~ C n_out^4 / N
    near-axis      n_in ~ N / (C n_out^2)
    near-diagonal  n_in ~ n_out + sqrt(N / (C n_out))   (mirror root: minus)
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import DomainError, NoSolutionError

__all__ = [
    "InversionProblem",
    "BranchApproximations",
    "count_from_indices",
    "solve_n_in",
    "solve_n_out",
    "branch_approximations",
]


def _pos(name: str, v: float) -> float:
    if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
        raise DomainError(f"{name} must be a positive finite number, got {v!r}")
    return float(v)


@dataclass(frozen=True)
class InversionProblem:
    """Target count, the known index (tagged by side), and the geometry."""

    N_target: float
    known_value: float
    known_side: str  # "n_in" or "n_out"
    n_liquid: float
    KR_observed: float

    def __post_init__(self):
        _pos("N_target", self.N_target)
        _pos("known_value", self.known_value)
        _pos("KR_observed", self.KR_observed)
        if not (math.isfinite(self.n_liquid) and self.n_liquid >= 1):
            raise DomainError(f"n_liquid must be >= 1, got {self.n_liquid!r}")
        if self.known_side not in ("n_in", "n_out"):
            raise DomainError(f"known_side must be 'n_in' or 'n_out', got {self.known_side!r}")

    @property
    def prefactor(self) -> float:
        """C = (1/9 pi) (K_observed R)^3 / n_liquid^3 at full precision."""
        return 1.0 / (9 * math.pi) * self.KR_observed ** 3 / self.n_liquid ** 3


def count_from_indices(n_in: float, n_out: float, prefactor: float) -> float:
    """Forward count C (n_out - n_in)^2 n_out^2 / n_in."""
    n_in = _pos("n_in", n_in)
    n_out = _pos("n_out", n_out)
    return prefactor * (n_out - n_in) ** 2 * n_out ** 2 / n_in


def solve_n_in(problem: InversionProblem) -> tuple[float, float]:
    """Both positive n_in roots at the problem's known n_out, ascending.

    The quadratic C n_out^2 x^2 - (2 C n_out^3 + N) x + C n_out^4 = 0 is
    solved in the cancellation-free form (larger root from the + branch,
    smaller from the root product).
    """
    if problem.known_side != "n_out":
        raise DomainError("solve_n_in needs a problem with known_side = 'n_out'")
    n_out = problem.known_value
    N = problem.N_target
    C = problem.prefactor
    A = C * n_out ** 2
    B = 2 * C * n_out ** 3 + N
    Cq = C * n_out ** 4
    disc = B * B - 4 * A * Cq  # = N (N + 4 C n_out^3) > 0 for N > 0
    if disc < 0:
        raise NoSolutionError(
            f"no real n_in solves the count relation at n_out = {n_out!r}",
            min_achievable=0.0,
        )
    high = (B + math.sqrt(disc)) / (2 * A)
    low = Cq / (A * high)
    return (low, high)


def _quartic(x: float, n_in: float, N: float, C: float) -> float:
    return C * x * x * (x - n_in) ** 2 - N * n_in


def solve_n_out(problem: InversionProblem) -> tuple[float, ...]:
    """All positive n_out roots at the problem's known n_in, ascending.

    Brackets each monotone piece of the quartic ((0, n_in/2],
    [n_in/2, n_in], [n_in, inf)) and refines with Brent's method.
    """
    if problem.known_side != "n_in":
        raise DomainError("solve_n_out needs a problem with known_side = 'n_in'")
    n_in = problem.known_value
    N = problem.N_target
    C = problem.prefactor
    f = lambda x: _quartic(x, n_in, N, C)
    roots = []

    half = 0.5 * n_in
    f_half = f(half)  # local maximum value minus N n_in
    if f_half == 0.0:
        roots.append(half)
    elif f_half > 0.0:
        # two crossings strictly inside (0, n_in); shrink the left edge
        # until the piece endpoints straddle the sign change
        lo = half
        while f(lo) > 0:
            lo /= 2
            if lo < 1e-300:
                break
        roots.append(brentq(f, lo, half, xtol=1e-300, rtol=4 * 2.3e-16))
        roots.append(brentq(f, half, n_in, xtol=1e-300, rtol=4 * 2.3e-16))

    hi = max(2 * n_in, n_in + 1.0)
    while f(hi) < 0:
        hi *= 2
        if hi > 1e12:
            raise NoSolutionError(
                f"no n_out root found below 1e12 at n_in = {n_in!r}"
            )
    roots.append(brentq(f, n_in, hi, xtol=1e-300, rtol=4 * 2.3e-16))
    return tuple(sorted(roots))


@dataclass(frozen=True)
class BranchApproximations:
    """Closed-form n_in approximations by level-curve region.

    near_diagonal carries the upper (plus) sign; the mirrored lower
    branch is n_out - sqrt(N / (C n_out)).
    """

    near_origin: float
    near_axis: float
    near_diagonal: float


def branch_approximations(problem: InversionProblem, n_out: float) -> BranchApproximations:
    n_out = _pos("n_out", n_out)
    N = problem.N_target
    C = problem.prefactor
    return BranchApproximations(
        near_origin=C * n_out ** 4 / N,
        near_axis=N / (C * n_out ** 2),
        near_diagonal=n_out + math.sqrt(N / (C * n_out)),
    )
