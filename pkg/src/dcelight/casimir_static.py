"""Quasi-static bulk Casimir energy and photon-number estimates.

For a spherical cavity of radius R with permittivity eps_inside in a
medium of eps_outside, both media sharing a sharp wavenumber cutoff K,
the bulk zero-point energy difference is

    E = (1/6 pi) hbar c R^3 K^4 (1/sqrt(eps_inside) - 1/sqrt(eps_outside))

(the polarization factor of two is already folded in), and the matching
photon-number estimate is

    N = (2/9 pi) (R K)^3 (sqrt(eps_outside)/sqrt(eps_inside) - 1).

The general form for arbitrary isotropic dispersion relations is the
difference of zero-point mode sums,

    E = 2 V int d^3k/(2 pi)^3 (hbar/2) [omega_inside(k) - omega_outside(k)]
      = V hbar / (2 pi^2) int_0^K k^2 [omega_inside(k) - omega_outside(k)] dk,

which reduces to the closed form above for omega(k) = c k / n. Surface
and curvature corrections are deliberately not modeled: these are the
bulk-dominant terms only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.constants import c as _c, hbar as _hbar

from .errors import DomainError
from .quadrature import adaptive_simpson

__all__ = [
    "StaticBudget",
    "schwinger_energy",
    "schwinger_number",
    "general_dispersion_energy",
    "static_budget",
]


def _check_positive(name: str, v: float) -> float:
    if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
        raise DomainError(f"{name} must be a positive finite number, got {v!r}")
    return float(v)


@dataclass(frozen=True)
class StaticBudget:
    """Static cavity energy and photon estimate with their inputs."""

    E_cavity: float  # joules
    N_static: float
    K: float         # rad/m
    R: float         # meters
    eps_inside: float
    eps_outside: float


def schwinger_energy(
    eps_inside: float, eps_outside: float, R: float, K: float
) -> float:
    """Bulk cavity energy in joules; sign follows 1/n_inside - 1/n_outside."""
    eps_inside = _check_positive("eps_inside", eps_inside)
    eps_outside = _check_positive("eps_outside", eps_outside)
    R = _check_positive("R", R)
    K = _check_positive("K", K)
    return (
        1.0
        / (6 * math.pi)
        * _hbar
        * _c
        * R ** 3
        * K ** 4
        * (1 / math.sqrt(eps_inside) - 1 / math.sqrt(eps_outside))
    )


def schwinger_number(
    eps_inside: float, eps_outside: float, R: float, K: float
) -> float:
    """Photon-number estimate (2/9 pi) (R K)^3 (n_outside/n_inside - 1).

    First order in the index difference, unlike the dynamical sudden-limit
    count which is second order; the two estimates disagree by design.
    """
    eps_inside = _check_positive("eps_inside", eps_inside)
    eps_outside = _check_positive("eps_outside", eps_outside)
    R = _check_positive("R", R)
    K = _check_positive("K", K)
    return (
        2.0
        / (9 * math.pi)
        * (R * K) ** 3
        * (math.sqrt(eps_outside) / math.sqrt(eps_inside) - 1)
    )


def static_budget(
    eps_inside: float, eps_outside: float, R: float, K: float
) -> StaticBudget:
    return StaticBudget(
        E_cavity=schwinger_energy(eps_inside, eps_outside, R, K),
        N_static=schwinger_number(eps_inside, eps_outside, R, K),
        K=K,
        R=R,
        eps_inside=eps_inside,
        eps_outside=eps_outside,
    )


def general_dispersion_energy(
    omega_inside: Callable[[float], float],
    omega_outside: Callable[[float], float],
    volume: float,
    K: float,
    rel_tol: float = 1e-9,
) -> float:
    """Zero-point energy difference for arbitrary dispersion relations.

    omega_inside and omega_outside map wavenumber (rad/m) to angular
    frequency (rad/s) and must be positive on (0, K]. Antisymmetric under
    swapping the two functions. Quadrature failures propagate with the
    partial result attached.
    """
    volume = _check_positive("volume", volume)
    K = _check_positive("K", K)
    for name, fn in (("omega_inside", omega_inside), ("omega_outside", omega_outside)):
        for probe in (K, K / 2, K / 1024):
            w = fn(probe)
            if not (math.isfinite(w) and w > 0):
                raise DomainError(f"{name}({probe!r}) = {w!r}; dispersion must be positive")

    result = adaptive_simpson(
        lambda k: k ** 2 * (omega_inside(k) - omega_outside(k)), 0.0, K, rel_tol=rel_tol
    )
    return volume * _hbar / (2 * math.pi ** 2) * result.value
