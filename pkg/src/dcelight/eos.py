"""Equation-of-state family with hard-core behavior and sound speeds.

Models are stored per molecule in SI units (a in Pa m^6, b in m^3, m in
kg, E_c in J/kg); the from_molar constructors accept the more common
molar parameterization (Pa m^6/mol^2, m^3/mol, kg/mol) and divide out
Avogadro's number. Number density n = rho / m relates the two forms of
each pressure law.

The hard-core members (van der Waals, Dieterici, Berthelot, modified
adiabatic) share the maximum density rho_max = m / b at which pressure
and sound speed diverge like 1/(1 - rho/rho_max); the Moss model has no
such maximum and stays soft at any density.

    van der Waals      p = (rho k T / m) / (1 - rho/rho_max) - a rho^2 / m^2
    Dieterici          p = (rho k T / m) / (1 - rho/rho_max) exp(-a rho / (m k T))
    Berthelot          p = (rho k T / m) / (1 - rho/rho_max) - a' rho^2 / (m^2 T)
    modified adiabatic p = p0 [(1 - n0 b) / (1 - rho b / m)]^gamma
    Moss               p = (rho k T / m)(1 + kappa)
                           + gamma E_c rho / (1 - gamma) [(rho/rho0)^gamma - rho/rho0]

Sound speed at constant "X" is sqrt(dp/drho + (dp/dT) dT/drho|_X); the
library ships only the isothermal preset dT/drho = 0, the caller can
supply any other closure as a number or a function of (rho, T).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.constants import N_A, k as _k_B

from .errors import (
    DomainError,
    HardCoreViolationError,
    NoHardCoreError,
    ThermodynamicInstabilityError,
)

__all__ = [
    "VanDerWaals",
    "Dieterici",
    "Berthelot",
    "ModifiedAdiabatic",
    "Moss",
    "EosModel",
    "rho_max",
    "pressure",
    "sound_speed",
    "hard_core_radius",
    "divergence_exponent",
]


def _pos(name: str, v: float) -> float:
    if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
        raise DomainError(f"{name} must be a positive finite number, got {v!r}")
    return float(v)


@dataclass(frozen=True)
class VanDerWaals:
    a: float  # Pa m^6 per molecule pair
    b: float  # m^3 per molecule
    m: float  # kg per molecule

    def __post_init__(self):
        for f in ("a", "b", "m"):
            object.__setattr__(self, f, _pos(f, getattr(self, f)))

    @classmethod
    def from_molar(cls, a: float, b: float, m: float) -> "VanDerWaals":
        """a in Pa m^6/mol^2, b in m^3/mol, m in kg/mol."""
        return cls(a=a / N_A ** 2, b=b / N_A, m=m / N_A)


@dataclass(frozen=True)
class Dieterici:
    a: float
    b: float
    m: float

    def __post_init__(self):
        for f in ("a", "b", "m"):
            object.__setattr__(self, f, _pos(f, getattr(self, f)))

    @classmethod
    def from_molar(cls, a: float, b: float, m: float) -> "Dieterici":
        return cls(a=a / N_A ** 2, b=b / N_A, m=m / N_A)


@dataclass(frozen=True)
class Berthelot:
    a_prime: float  # Pa m^6 K per molecule pair
    b: float
    m: float

    def __post_init__(self):
        for f in ("a_prime", "b", "m"):
            object.__setattr__(self, f, _pos(f, getattr(self, f)))

    @classmethod
    def from_molar(cls, a_prime: float, b: float, m: float) -> "Berthelot":
        return cls(a_prime=a_prime / N_A ** 2, b=b / N_A, m=m / N_A)


@dataclass(frozen=True)
class ModifiedAdiabatic:
    p0: float     # Pa
    n0: float     # molecules / m^3 at the reference state
    b: float      # m^3 per molecule
    gamma: float
    m: float      # kg per molecule (mass density <-> number density map)

    def __post_init__(self):
        for f in ("p0", "n0", "b", "gamma", "m"):
            object.__setattr__(self, f, _pos(f, getattr(self, f)))
        if self.gamma <= 1:
            raise DomainError(f"gamma must exceed 1, got {self.gamma!r}")
        if self.n0 * self.b >= 1:
            raise DomainError("reference state already at or beyond the hard core (n0 b >= 1)")


@dataclass(frozen=True)
class Moss:
    kappa: float
    gamma: float
    E_c: float   # J/kg
    rho0: float  # kg/m^3
    m: float     # kg per molecule

    def __post_init__(self):
        for f in ("kappa", "gamma", "E_c", "rho0", "m"):
            object.__setattr__(self, f, _pos(f, getattr(self, f)))
        if self.gamma <= 1:
            raise DomainError(f"gamma must exceed 1, got {self.gamma!r}")


EosModel = Union[VanDerWaals, Dieterici, Berthelot, ModifiedAdiabatic, Moss]
_HARD_CORE = (VanDerWaals, Dieterici, Berthelot, ModifiedAdiabatic)


def rho_max(model: EosModel) -> float:
    """Maximum (hard-core) mass density m / b of the model."""
    if isinstance(model, _HARD_CORE):
        return model.m / model.b
    raise NoHardCoreError(f"{type(model).__name__} has no maximum density")


def _check_state(model: EosModel, rho: float, T: float) -> tuple[float, float]:
    rho = _pos("rho", rho)
    T = _pos("T", T)
    if isinstance(model, _HARD_CORE):
        rmax = rho_max(model)
        if rho >= rmax:
            raise HardCoreViolationError(
                f"rho = {rho!r} kg/m^3 is at or above rho_max = {rmax!r} kg/m^3"
            )
    return rho, T


def pressure(model: EosModel, rho: float, T: float) -> float:
    """Pressure in Pa at mass density rho (kg/m^3) and temperature T (K)."""
    rho, T = _check_state(model, rho, T)
    if isinstance(model, VanDerWaals):
        u = rho / rho_max(model)
        return rho * _k_B * T / model.m / (1 - u) - model.a * rho ** 2 / model.m ** 2
    if isinstance(model, Dieterici):
        u = rho / rho_max(model)
        return (
            rho * _k_B * T / model.m / (1 - u)
            * math.exp(-model.a * rho / (model.m * _k_B * T))
        )
    if isinstance(model, Berthelot):
        u = rho / rho_max(model)
        # same expression shape as van der Waals with a = a'/T, rounded
        # once, so the documented equivalence holds to the last bit
        a_eff = model.a_prime / T
        return rho * _k_B * T / model.m / (1 - u) - a_eff * rho ** 2 / model.m ** 2
    if isinstance(model, ModifiedAdiabatic):
        u = rho * model.b / model.m
        return model.p0 * ((1 - model.n0 * model.b) / (1 - u)) ** model.gamma
    if isinstance(model, Moss):
        r = rho / model.rho0
        return (
            rho * _k_B * T * (1 + model.kappa) / model.m
            + model.gamma * model.E_c * rho / (1 - model.gamma) * (r ** model.gamma - r)
        )
    raise DomainError(f"unknown model {type(model).__name__}")


def _dp_drho_analytic(model: EosModel, rho: float, T: float) -> float | None:
    """Hand-coded isothermal dp/drho where available (None otherwise)."""
    if isinstance(model, VanDerWaals):
        u = rho / rho_max(model)
        return _k_B * T / model.m / (1 - u) ** 2 - 2 * model.a * rho / model.m ** 2
    if isinstance(model, Berthelot):
        u = rho / rho_max(model)
        a_eff = model.a_prime / T
        return _k_B * T / model.m / (1 - u) ** 2 - 2 * a_eff * rho / model.m ** 2
    return None


def _dp_drho_numeric(model: EosModel, rho: float, T: float) -> float:
    """Central difference with one Richardson level, relative step 1e-6.

    Adequate for the smooth members away from the pole; the van der
    Waals path is analytic so the pole neighborhood never relies on this.
    """
    h = 1e-6 * rho
    d_h = (pressure(model, rho + h, T) - pressure(model, rho - h, T)) / (2 * h)
    d_h2 = (pressure(model, rho + h / 2, T) - pressure(model, rho - h / 2, T)) / h
    return (4 * d_h2 - d_h) / 3


def dp_drho(model: EosModel, rho: float, T: float) -> float:
    rho, T = _check_state(model, rho, T)
    analytic = _dp_drho_analytic(model, rho, T)
    return analytic if analytic is not None else _dp_drho_numeric(model, rho, T)


def dp_dT(model: EosModel, rho: float, T: float) -> float:
    rho, T = _check_state(model, rho, T)
    if isinstance(model, VanDerWaals):
        return rho * _k_B / model.m / (1 - rho / rho_max(model))
    if isinstance(model, Dieterici):
        u = rho / rho_max(model)
        B = model.a * rho / (model.m * _k_B)
        return rho * _k_B / model.m / (1 - u) * math.exp(-B / T) * (1 + B / T)
    if isinstance(model, Berthelot):
        u = rho / rho_max(model)
        return rho * _k_B / model.m / (1 - u) + model.a_prime * rho ** 2 / (model.m ** 2 * T ** 2)
    if isinstance(model, ModifiedAdiabatic):
        return 0.0
    if isinstance(model, Moss):
        return rho * _k_B * (1 + model.kappa) / model.m
    raise DomainError(f"unknown model {type(model).__name__}")


def sound_speed(
    model: EosModel,
    rho: float,
    T: float,
    dT_drho: Union[float, Callable[[float, float], float]] = 0.0,
) -> float:
    """Sound speed sqrt(dp/drho + (dp/dT) dT/drho|_X) in m/s.

    dT_drho = 0 (the default) is the isothermal case. A negative squared
    speed raises ThermodynamicInstabilityError carrying the value.
    """
    rho, T = _check_state(model, rho, T)
    closure = dT_drho(rho, T) if callable(dT_drho) else float(dT_drho)
    v2 = dp_drho(model, rho, T) + dp_dT(model, rho, T) * closure
    if v2 < 0:
        raise ThermodynamicInstabilityError(
            f"squared sound speed is negative ({v2!r} m^2/s^2) at rho={rho!r}, T={T!r}",
            v_squared=v2,
        )
    return math.sqrt(v2)


def hard_core_radius(
    R_ambient: float, b_molar: float, rho: float, m_molar: float
) -> float:
    """Minimum bubble radius R_ambient (b rho / m)^(1/3).

    Molar inputs: b_molar in m^3/mol, rho in kg/m^3, m_molar in kg/mol.
    The cube root is the volume compression ratio down to the hard core.
    """
    R_ambient = _pos("R_ambient", R_ambient)
    b_molar = _pos("b_molar", b_molar)
    rho = _pos("rho", rho)
    m_molar = _pos("m_molar", m_molar)
    return R_ambient * (b_molar * rho / m_molar) ** (1.0 / 3.0)


def divergence_exponent(model: EosModel, T: float) -> float:
    """Fit q in v_sound ~ (1 - rho/rho_max)^(-q) near the hard core.

    Least squares on ln v versus ln(1 - rho/rho_max) over
    rho/rho_max in [0.99, 0.999]. Isothermal van der Waals-family
    members give q = 1; raises NoHardCoreError for the Moss model.
    """
    if not isinstance(model, _HARD_CORE):
        raise NoHardCoreError(
            f"{type(model).__name__} has no maximum density; divergence exponent undefined"
        )
    T = _pos("T", T)
    rmax = rho_max(model)
    fractions = 1.0 - np.logspace(math.log10(0.01), math.log10(0.001), 24)
    ln_gap = np.log(1.0 - fractions)
    ln_v = np.array([math.log(sound_speed(model, f * rmax, T)) for f in fractions])
    slope = np.polyfit(ln_gap, ln_v, 1)[0]
    return -float(slope)
