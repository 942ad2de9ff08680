"""Squared Bogolubov coefficients for the tanh permittivity profile.

For a mode observed at angular frequency omega_out (so wavenumber
k = n_out omega_out / c), the exact tanh-profile result is

    |beta|^2 = sinh^2(pi w_minus tau0) / [sinh(pi w_in tau0) sinh(pi w_out tau0)],
    |alpha|^2 = sinh^2(pi w_plus tau0) / [sinh(pi w_in tau0) sinh(pi w_out tau0)],

where w_in, w_out are the pseudo-time mode frequencies c k n_in and
c k n_out, and w_pm = c k |n_in +- n_out| / 2. In terms of the physical
timescale t0 = tau0 (n_in^2 + n_out^2) / 2 the sinh arguments are

    numerator:    pi |n_in - n_out| n_out omega t0 / (n_in^2 + n_out^2)
    denominator:  2 pi n_in n_out omega t0 / (n_in^2 + n_out^2)
                  2 pi n_out^2  omega t0 / (n_in^2 + n_out^2).

Both |alpha|^2 and |beta|^2 are assembled in log space: sinh overflows
double precision near argument 710 while the ratios stay finite (and
usually tiny), so each factor enters as log_sinh and only the final sum
of logs is exponentiated. The identity sinh^2 A - sinh^2 B =
sinh(A+B) sinh(A-B) guarantees |alpha|^2 - |beta|^2 = 1 exactly; in
floating point the residual stays at the machine level.

These are per-mode coefficients: the V/(2 pi)^3 delta^3 bookkeeping of
the continuum normalization is left to the spectrum layer by convention.
Phases are never computed; no observable here consumes them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.constants import c as _c

from .errors import DegenerateProfileError, DomainError
from .media import MediumPair, TanhProfile

__all__ = [
    "ModeAmplitudes",
    "RegimeThresholds",
    "log_sinh",
    "beta_sq_exact",
    "log_beta_sq_exact",
    "alpha_sq_exact",
    "beta_sq_sudden",
    "beta_sq_adiabatic",
    "mode_amplitudes",
    "regime_thresholds",
    "classify_regime",
]

_LN2 = math.log(2.0)


def log_sinh(x: float) -> float:
    """ln sinh x for x > 0, stable against overflow and underflow.

    x > 1e-2:  x + log1p(-exp(-2x)) - ln 2   (exact rewrite of ln sinh)
    x <= 1e-2: ln x + x^2/6 - x^4/180 + x^6/2835   (Maclaurin of
               ln(sinh x / x); the first dropped term is x^8/37800,
               below 3e-21 relative at the branch point)
    """
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"log_sinh requires finite x > 0, got {x!r}")
    if x > 1e-2:
        return x + math.log1p(-math.exp(-2 * x)) - _LN2
    x2 = x * x
    return math.log(x) + x2 / 6 - x2 * x2 / 180 + x2 * x2 * x2 / 2835


def _check_omega(omega_out: float) -> float:
    if not (isinstance(omega_out, (int, float)) and math.isfinite(omega_out) and omega_out > 0):
        raise DomainError(f"omega_out must be a positive finite rad/s value, got {omega_out!r}")
    return float(omega_out)


def _sinh_args(profile: TanhProfile, omega_out: float):
    """The three sinh arguments (numerator, in-denominator, out-denominator)."""
    n_in = profile.media.n_in
    n_out = profile.media.n_out
    t0 = profile.t0
    S = n_in ** 2 + n_out ** 2
    a_minus = math.pi * abs(n_in - n_out) * n_out * omega_out * t0 / S
    b_in = 2 * math.pi * n_in * n_out * omega_out * t0 / S
    b_out = 2 * math.pi * n_out ** 2 * omega_out * t0 / S
    return a_minus, b_in, b_out


def log_beta_sq_exact(profile: TanhProfile, omega_out: float) -> float:
    """ln |beta|^2; -inf when n_in = n_out (no production)."""
    omega_out = _check_omega(omega_out)
    if profile.media.n_in == profile.media.n_out:
        return -math.inf
    a_minus, b_in, b_out = _sinh_args(profile, omega_out)
    return 2 * log_sinh(a_minus) - log_sinh(b_in) - log_sinh(b_out)


def beta_sq_exact(profile: TanhProfile, omega_out: float) -> float:
    """Exact |beta|^2 for the mode observed at omega_out."""
    lg = log_beta_sq_exact(profile, omega_out)
    if lg == -math.inf:
        return 0.0
    return math.exp(lg)


def alpha_sq_exact(profile: TanhProfile, omega_out: float) -> float:
    """Exact |alpha|^2; equals 1 + |beta|^2 up to rounding."""
    omega_out = _check_omega(omega_out)
    n_in = profile.media.n_in
    n_out = profile.media.n_out
    t0 = profile.t0
    S = n_in ** 2 + n_out ** 2
    a_plus = math.pi * (n_in + n_out) * n_out * omega_out * t0 / S
    b_in = 2 * math.pi * n_in * n_out * omega_out * t0 / S
    b_out = 2 * math.pi * n_out ** 2 * omega_out * t0 / S
    return math.exp(2 * log_sinh(a_plus) - log_sinh(b_in) - log_sinh(b_out))


def beta_sq_sudden(media: MediumPair) -> float:
    """Frequency-independent sudden-limit |beta|^2 = (n_in - n_out)^2 / (4 n_in n_out).

    A strict upper bound on the exact coefficient at every frequency.
    """
    return 0.25 * (media.n_in - media.n_out) ** 2 / (media.n_in * media.n_out)


def beta_sq_adiabatic(profile: TanhProfile, omega_out: float) -> float:
    """Adiabatic envelope exp(-4 pi min(n_in, n_out) n_out omega t0 / (n_in^2 + n_out^2)).

    Meaningful as an approximation only above the adiabatic threshold;
    returned for any omega_out >= 0 (1 at omega_out = 0 by continuity).
    """
    if not (isinstance(omega_out, (int, float)) and math.isfinite(omega_out) and omega_out >= 0):
        raise DomainError(f"omega_out must be a finite value >= 0, got {omega_out!r}")
    n_in = profile.media.n_in
    n_out = profile.media.n_out
    S = n_in ** 2 + n_out ** 2
    return math.exp(-4 * math.pi * min(n_in, n_out) * n_out * omega_out * profile.t0 / S)


@dataclass(frozen=True)
class ModeAmplitudes:
    """Per-mode kinematics plus squared coefficients.

    The pseudo-time frequencies are c k n (rad per pseudo-second); the
    physical frequencies are c k / n. alpha_sq - beta_sq = 1 holds for
    every mode up to rounding.
    """

    k: float
    omega_tau_in: float
    omega_tau_out: float
    omega_tau_plus: float
    omega_tau_minus: float
    omega_in: float
    omega_out: float
    beta_sq: float
    alpha_sq: float


def mode_amplitudes(profile: TanhProfile, omega_out: float) -> ModeAmplitudes:
    """Assemble the full per-mode record for the mode observed at omega_out."""
    omega_out = _check_omega(omega_out)
    n_in = profile.media.n_in
    n_out = profile.media.n_out
    k = n_out * omega_out / _c
    return ModeAmplitudes(
        k=k,
        omega_tau_in=_c * k * n_in,
        omega_tau_out=_c * k * n_out,
        omega_tau_plus=0.5 * _c * k * (n_in + n_out),
        omega_tau_minus=0.5 * _c * k * abs(n_in - n_out),
        omega_in=_c * k / n_in,
        omega_out=_c * k / n_out,
        beta_sq=beta_sq_exact(profile, omega_out),
        alpha_sq=alpha_sq_exact(profile, omega_out),
    )


@dataclass(frozen=True)
class RegimeThresholds:
    """Frequencies bounding the sudden and adiabatic regimes, in rad/s."""

    omega_sudden: float
    omega_adiabatic: float


def regime_thresholds(profile: TanhProfile) -> RegimeThresholds:
    """Threshold frequencies of the profile.

        Omega_sudden    = (n_in^2 + n_out^2) / (2 pi t0 n_out max(n_in, n_out))
        Omega_adiabatic = (n_in^2 + n_out^2) / (2 pi t0 n_out min(n_in, n_out, |n_in - n_out|/2))

    Below Omega_sudden the sudden plateau applies; above Omega_adiabatic
    the exponential suppression applies. Note the asymmetry: n_out enters
    both denominators on its own, so swapping n_in and n_out moves the
    thresholds even though |beta|^2 itself is swap-symmetric.
    """
    n_in = profile.media.n_in
    n_out = profile.media.n_out
    if n_in == n_out:
        raise DegenerateProfileError(
            "regime thresholds are undefined for n_in = n_out (no index change)"
        )
    t0 = profile.t0
    S = n_in ** 2 + n_out ** 2
    om_s = S / (2 * math.pi * t0 * n_out * max(n_in, n_out))
    om_a = S / (2 * math.pi * t0 * n_out * min(n_in, n_out, 0.5 * abs(n_in - n_out)))
    return RegimeThresholds(omega_sudden=om_s, omega_adiabatic=om_a)


def classify_regime(profile: TanhProfile, omega_out: float) -> str:
    """Classify omega_out as 'sudden', 'transition' or 'adiabatic'.

    For positive indices min(n_in, n_out, |n_in - n_out|/2) never exceeds
    max(n_in, n_out), so the transition band cannot be empty; if it ever
    were (guarded anyway), the boundary falls at the geometric mean of
    the two thresholds so the classification stays total.
    """
    omega_out = _check_omega(omega_out)
    th = regime_thresholds(profile)
    if th.omega_sudden > th.omega_adiabatic:
        boundary = math.sqrt(th.omega_sudden * th.omega_adiabatic)
        return "sudden" if omega_out < boundary else "adiabatic"
    if omega_out < th.omega_sudden:
        return "sudden"
    if omega_out > th.omega_adiabatic:
        return "adiabatic"
    return "transition"
