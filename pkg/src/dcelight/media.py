"""Refractive-index pairs, the tanh permittivity profile, and the sharp cutoff.

Units are SI throughout: times in seconds (pseudo-time also carries
seconds), angular frequencies in rad/s, wavenumbers in rad/m, lengths in
meters. Refractive indices and permittivities are dimensionless.

The permittivity profile is

    eps(tau) = a + b tanh(tau / tau0),
    a = (n_in^2 + n_out^2) / 2,   b = (n_out^2 - n_in^2) / 2,

interpolating eps(-inf) = n_in^2 to eps(+inf) = n_out^2 in pseudo-time
tau. Physical time is recovered from t(tau) = integral of eps, done in
closed form here, and the physical switching timescale is

    t0 = tau0 * dt/dtau at tau = 0 = tau0 * (n_in^2 + n_out^2) / 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "MediumPair",
    "TanhProfile",
    "SharpCutoff",
    "epsilon_of_pseudo_time",
    "physical_time_of_pseudo_time",
    "derived_t0",
]


def _ln_cosh(x: float) -> float:
    # cosh overflows double precision near x ~ 710; switch to the
    # asymptotic form well before that.
    ax = abs(x)
    if ax > 20.0:
        return ax + math.log1p(math.exp(-2.0 * ax)) - math.log(2.0)
    return math.log(math.cosh(x))


def _require_positive(name: str, value: float) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class MediumPair:
    """Initial and final refractive indices of a transition."""

    n_in: float
    n_out: float

    def __post_init__(self):
        object.__setattr__(self, "n_in", _require_positive("n_in", self.n_in))
        object.__setattr__(self, "n_out", _require_positive("n_out", self.n_out))

    @property
    def eps_in(self) -> float:
        return self.n_in ** 2

    @property
    def eps_out(self) -> float:
        return self.n_out ** 2

    def swapped(self) -> "MediumPair":
        return MediumPair(n_in=self.n_out, n_out=self.n_in)


@dataclass(frozen=True)
class TanhProfile:
    """Tanh permittivity profile over pseudo-time.

    tau0 is the pseudo-time scale; the physical timescale t0 is always
    derived from it (never stored), so the two can never disagree.
    """

    media: MediumPair
    tau0: float

    def __post_init__(self):
        object.__setattr__(self, "tau0", _require_positive("tau0", self.tau0))

    @classmethod
    def from_t0(cls, media: MediumPair, t0: float) -> "TanhProfile":
        """Build a profile with a prescribed physical timescale t0."""
        t0 = _require_positive("t0", t0)
        return cls(media=media, tau0=2.0 * t0 / (media.n_in ** 2 + media.n_out ** 2))

    @property
    def a(self) -> float:
        return 0.5 * (self.media.n_in ** 2 + self.media.n_out ** 2)

    @property
    def b(self) -> float:
        return 0.5 * (self.media.n_out ** 2 - self.media.n_in ** 2)

    @property
    def t0(self) -> float:
        return 0.5 * self.tau0 * (self.media.n_in ** 2 + self.media.n_out ** 2)


@dataclass(frozen=True)
class SharpCutoff:
    """Sharp wavenumber cutoff of the dispersion relation.

    K is the cutoff inside the final medium (rad/m). When the cutoff is
    known from observation in an ambient liquid instead, build it with
    from_observed and the conversion K = (n_out / n_liquid) K_observed
    is applied once; K_observed and n_liquid are kept for bookkeeping.
    """

    K: float
    K_observed: float | None = None
    n_liquid: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "K", _require_positive("K", self.K))
        if self.K_observed is not None:
            object.__setattr__(
                self, "K_observed", _require_positive("K_observed", self.K_observed)
            )
        if not (math.isfinite(self.n_liquid) and self.n_liquid >= 1.0):
            raise DomainError(f"n_liquid must be >= 1, got {self.n_liquid!r}")

    @classmethod
    def from_observed(
        cls, K_observed: float, n_liquid: float, n_out: float
    ) -> "SharpCutoff":
        K_observed = _require_positive("K_observed", K_observed)
        n_out = _require_positive("n_out", n_out)
        return cls(
            K=(n_out / n_liquid) * K_observed,
            K_observed=K_observed,
            n_liquid=n_liquid,
        )

    def observed_in(self, n_out: float) -> float:
        """Reconstruct the ambient-liquid cutoff for a given n_out."""
        return self.K * self.n_liquid / n_out


def epsilon_of_pseudo_time(profile: TanhProfile, tau: float) -> float:
    """Permittivity at pseudo-time tau. Total on finite tau."""
    if not math.isfinite(tau):
        raise DomainError(f"tau must be finite, got {tau!r}")
    return profile.a + profile.b * math.tanh(tau / profile.tau0)


def physical_time_of_pseudo_time(profile: TanhProfile, tau: float) -> float:
    """Physical time t(tau), anchored so t(0) = 0 at the profile midpoint.

    Closed form of the integral of eps:

        t(tau) = a tau + b tau0 ln cosh(tau / tau0),

    strictly increasing, with dt/dtau at 0 equal to a.
    """
    if not math.isfinite(tau):
        raise DomainError(f"tau must be finite, got {tau!r}")
    return profile.a * tau + profile.b * profile.tau0 * _ln_cosh(tau / profile.tau0)


def derived_t0(profile: TanhProfile) -> float:
    """Physical switching timescale t0 = tau0 (n_in^2 + n_out^2) / 2."""
    return profile.t0
