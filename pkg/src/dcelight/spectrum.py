"""Emitted-photon spectra, counts, energies, and the Planck comparator.

The number spectrum per unit omega_out is the per-mode |beta|^2 dressed
with the phase-space factor of an isotropic mode sum over volume V,

    dN/domega = |beta(omega)|^2 * 2 V / (2 pi)^3 * 4 pi omega^2 n_out^3 / c^3,

the explicit factor 2 counting both polarizations. Sharp-cutoff closed
forms evaluate the same integral with the sudden plateau and a momentum
cutoff K in the final medium:

    N = (1/12 pi^2) (n_out - n_in)^2 / (n_in n_out) V K^3
    E = (1/16 pi^2) (n_out - n_in)^2 / (n_in n_out^2) hbar c K V K^3
      = (3/4) N hbar omega_max,          omega_max = c K / n_out.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from scipy.constants import c as _c, hbar as _hbar

from .bogolubov import beta_sq_exact, classify_regime
from .errors import DegenerateProfileError, DomainError
from .media import MediumPair, SharpCutoff, TanhProfile
from .quadrature import adaptive_simpson

__all__ = [
    "SpectrumTable",
    "PhotonBudget",
    "SpectrumIntegral",
    "number_spectrum_exact",
    "planck_temperature",
    "planck_comparison_spectrum",
    "photon_count_sharp_cutoff",
    "photon_budget_sharp_cutoff",
    "integrate_spectrum",
    "sample_number_spectrum",
]


def _check_positive(name: str, v: float) -> float:
    if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
        raise DomainError(f"{name} must be a positive finite number, got {v!r}")
    return float(v)


def number_spectrum_exact(profile: TanhProfile, volume: float, omega_out: float) -> float:
    """dN/domega at omega_out for quantization volume V (both polarizations)."""
    volume = _check_positive("volume", volume)
    omega_out = _check_positive("omega_out", omega_out)
    n_out = profile.media.n_out
    phase_space = 2 * volume / (2 * math.pi) ** 3 * 4 * math.pi * omega_out ** 2 * n_out ** 3 / _c ** 3
    return beta_sq_exact(profile, omega_out) * phase_space


def planck_temperature(profile: TanhProfile) -> float:
    """k_B T (in joules) of the blackbody curve the spectrum resembles.

        k_B T = hbar (n_in^2 + n_out^2) / (4 pi t0 n_out min(n_in, n_out, |n_in - n_out|/2))

    which is hbar Omega_adiabatic / 2.
    """
    n_in = profile.media.n_in
    n_out = profile.media.n_out
    if n_in == n_out:
        raise DegenerateProfileError("Planck comparator undefined for n_in = n_out")
    S = n_in ** 2 + n_out ** 2
    min3 = min(n_in, n_out, 0.5 * abs(n_in - n_out))
    return _hbar * S / (4 * math.pi * profile.t0 * n_out * min3)


def planck_comparison_spectrum(
    profile: TanhProfile, omega_out: float, normalization: float
) -> float:
    """Planck-shaped comparator: normalization * omega^2 / (exp(hbar omega / k_B T) - 1).

    Rises linearly at low frequency where the exact spectrum rises
    quadratically; the large-omega log-slope is -hbar / k_B T.
    """
    omega_out = _check_positive("omega_out", omega_out)
    kT = planck_temperature(profile)
    return normalization * omega_out ** 2 / math.expm1(_hbar * omega_out / kT)


def photon_count_sharp_cutoff(
    media: MediumPair, radius: float, cutoff: SharpCutoff
) -> float:
    """Photon count for a sphere of the given radius under the sharp cutoff.

    Spherical volume (4 pi / 3) R^3 folded in:

        N = (1/9 pi) (n_out - n_in)^2 / (n_in n_out) (R K)^3,

    equivalently (1/9 pi) (n_out - n_in)^2 n_out^2 / n_in times
    (R K_observed / n_liquid)^3 when the cutoff came from an observed one.
    """
    radius = _check_positive("radius", radius)
    dn2 = (media.n_out - media.n_in) ** 2
    return (
        1.0
        / (9 * math.pi)
        * dn2
        / (media.n_in * media.n_out)
        * (radius * cutoff.K) ** 3
    )


@dataclass(frozen=True)
class PhotonBudget:
    """Totals under the sharp cutoff. E = (3/4) N hbar omega_max by construction."""

    N: float
    E: float            # joules
    mean_energy: float  # joules per photon, (3/4) hbar omega_max
    omega_max: float    # rad/s


def photon_budget_sharp_cutoff(
    media: MediumPair, volume: float, cutoff: SharpCutoff
) -> PhotonBudget:
    """Count, energy, and mean photon energy for an arbitrary volume."""
    volume = _check_positive("volume", volume)
    n_in, n_out = media.n_in, media.n_out
    K = cutoff.K
    dn2 = (n_out - n_in) ** 2
    N = 1.0 / (12 * math.pi ** 2) * dn2 / (n_in * n_out) * volume * K ** 3
    E = 1.0 / (16 * math.pi ** 2) * dn2 / (n_in * n_out ** 2) * _hbar * _c * K * volume * K ** 3
    omega_max = _c * K / n_out
    # A budget with no photons is all-zero; the mean is E/N otherwise.
    mean = 0.75 * _hbar * omega_max if N > 0 else 0.0
    if N > 0 and not math.isclose(E, 0.75 * N * _hbar * omega_max, rel_tol=1e-12):
        raise AssertionError("internal inconsistency: E != (3/4) N hbar omega_max")
    return PhotonBudget(N=N, E=E, mean_energy=mean, omega_max=omega_max)


@dataclass(frozen=True)
class SpectrumIntegral:
    """Quadrature totals with achieved-accuracy report (absolute errors)."""

    N: float
    E: float
    N_error: float
    E_error: float


def integrate_spectrum(
    integrand: Callable[[float], float],
    omega_min: float,
    omega_max: float,
    rel_tol: float = 1e-9,
) -> SpectrumIntegral:
    """Integrate a dN/domega integrand for total N and total E.

    E weights the integrand by hbar omega. Tolerance must lie in
    [1e-12, 1e-3]. Non-convergence raises QuadratureError carrying the
    partial result.
    """
    if not (1e-12 <= rel_tol <= 1e-3):
        raise DomainError(f"rel_tol must lie in [1e-12, 1e-3], got {rel_tol!r}")
    if not (0 <= omega_min < omega_max) or not math.isfinite(omega_max):
        raise DomainError(f"bad omega range [{omega_min}, {omega_max}]")
    n = adaptive_simpson(integrand, omega_min, omega_max, rel_tol=rel_tol)
    e = adaptive_simpson(
        lambda w: _hbar * w * integrand(w), omega_min, omega_max, rel_tol=rel_tol
    )
    return SpectrumIntegral(N=n.value, E=e.value, N_error=n.error_estimate, E_error=e.error_estimate)


@dataclass(frozen=True)
class SpectrumTable:
    """Sampled spectrum rows plus the inputs that produced them.

    Rows are strictly increasing in omega; densities are non-negative.
    """

    omegas: tuple
    dn_domega: tuple
    regimes: tuple
    profile: TanhProfile
    volume: float
    cutoff: SharpCutoff | None = None

    def __post_init__(self):
        if len(self.omegas) != len(self.dn_domega) or len(self.omegas) != len(self.regimes):
            raise DomainError("spectrum table columns must have equal length")
        if any(b <= a for a, b in zip(self.omegas, self.omegas[1:])):
            raise DomainError("spectrum omegas must be strictly increasing")
        if any(d < 0 for d in self.dn_domega):
            raise DomainError("spectrum densities must be non-negative")


def sample_number_spectrum(
    profile: TanhProfile,
    volume: float,
    omegas: Sequence[float],
    cutoff: SharpCutoff | None = None,
) -> SpectrumTable:
    """Tabulate the exact spectrum on an omega grid.

    With a cutoff, modes above omega_max = c K / n_out carry zero density
    (the dispersion relation ends there).
    """
    omega_cut = math.inf if cutoff is None else _c * cutoff.K / profile.media.n_out
    dens = []
    regs = []
    for w in omegas:
        d = number_spectrum_exact(profile, volume, w) if w <= omega_cut else 0.0
        dens.append(d)
        regs.append(classify_regime(profile, w))
    return SpectrumTable(
        omegas=tuple(float(w) for w in omegas),
        dn_domega=tuple(dens),
        regimes=tuple(regs),
        profile=profile,
        volume=volume,
        cutoff=cutoff,
    )
