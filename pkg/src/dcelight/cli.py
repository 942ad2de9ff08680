"""Command-line front end.

Commands map one-to-one onto the library modules:

    spectrum   emitted-photon number spectrum table (CSV/JSON)
    budget     sharp-cutoff photon count and energy totals (JSON)
    invert     solve the count relation for an unknown index (JSON)
    eos        pressure / sound-speed / hardcore / divergence diagnostics
    power      per-cycle radiated energy of a bubble trajectory (JSON)
    regime     sudden/adiabatic thresholds and probe classification (JSON)

Conventions: every command accepts --config FILE with "key = value"
lines (same keys as the long flags; explicit flags win), --output PATH,
and --error-json. Numeric CSV cells carry 17 significant digits so
repeated runs are byte-identical. Exit codes: 0 success, 2 usage or
parse problem, 3 numeric/domain failure. The omega_PHz column is cyclic
frequency in PHz (omega / 2 pi / 1e15); the rad/s column carries the
other convention.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.constants import N_A, c as _c, e as _qe

from . import units
from .adiabatic_emitters import (
    SampledTrajectory,
    SinusoidTrajectory,
    eberlein_energy_by_parts_form,
    eberlein_energy_fifth_derivative_form,
    read_trajectory_csv,
    schutzhold_energy,
)
from .bogolubov import classify_regime, regime_thresholds
from .eos import (
    Berthelot,
    Dieterici,
    ModifiedAdiabatic,
    Moss,
    VanDerWaals,
    divergence_exponent,
    hard_core_radius,
    pressure,
    rho_max,
    sound_speed,
)
from .errors import DcelightError, DomainError
from .inverse_solver import (
    InversionProblem,
    branch_approximations,
    count_from_indices,
    solve_n_in,
    solve_n_out,
)
from .media import MediumPair, SharpCutoff, TanhProfile
from .spectrum import (
    photon_budget_sharp_cutoff,
    photon_count_sharp_cutoff,
    planck_comparison_spectrum,
    sample_number_spectrum,
)

SCHEMA_VERSION = 1
# Sound speeds past this fraction of c (~30 km/s) are far beyond any real
# fluid and mark the near-core regime where the treatment breaks down.
_RELATIVISTIC_FRACTION = 1e-4

_fmt = units.format_si


@dataclass(frozen=True)
class Param:
    name: str
    convert: Optional[Callable[[str], object]]
    help: str
    default: object = None
    required: bool = False
    flag: bool = False
    choices: Optional[tuple] = None


def _common_params(formats: tuple, default_format: str) -> list:
    return [
        Param("format", str, f"output format, one of {'/'.join(formats)}",
              default=default_format, choices=formats),
        Param("output", str, "write output to this path instead of stdout"),
        Param("error-json", None, "emit numeric failures as JSON on stdout", flag=True),
    ]


def _points(text: str) -> int:
    n = units.parse_int(text)
    if n < 2:
        raise ValueError(f"points must be at least 2, got {n}")
    return n


_MODEL_PARAMS = [
    Param("model", str, "equation of state",
          required=True,
          choices=("vdw", "dieterici", "berthelot", "modified-adiabatic", "moss")),
    Param("a", units.parse_positive_float,
          "attraction parameter, Pa m^6/mol^2 (vdw/dieterici; default air-like)",
          default=0.1358),
    Param("a-prime", units.parse_positive_float,
          "attraction parameter, Pa m^6 K/mol^2 (berthelot)", default=40.74),
    Param("b", units.parse_positive_float,
          "excluded molar volume, l/mol (default air)", default=0.036),
    Param("m", units.parse_positive_float,
          "molar mass, g/mol (default air)", default=28.96),
    Param("p0", units.parse_positive_float,
          "reference pressure, Pa (modified-adiabatic)", default=101325.0),
    Param("rho0", units.parse_positive_float,
          "reference density, kg/m^3 (modified-adiabatic/moss)", default=1.2),
    Param("gamma", units.parse_positive_float,
          "adiabatic exponent (modified-adiabatic/moss)", default=1.4),
    Param("kappa", units.parse_positive_float,
          "moss pressure offset; placeholder value, no published number", default=1.0),
    Param("e-c", units.parse_positive_float,
          "moss characteristic energy, J/kg; placeholder value", default=1e5),
]

_COMMANDS: dict = {}


def _register(key: str, params: list, handler: Callable[[dict], str]):
    _COMMANDS[key] = (params, handler)


# --------------------------------------------------------------------------
# serialization helpers

def _json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _pretty_text(obj: dict) -> str:
    width = max(len(k) for k in obj)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in obj.items())


def _scalar_output(v: dict, obj: dict) -> str:
    if v["format"] == "pretty":
        return _pretty_text(obj)
    return _json_text(obj)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# spectrum

def _cmd_spectrum(v: dict) -> str:
    media = MediumPair(v["n-in"], v["n-out"])
    profile = TanhProfile.from_t0(media, v["t0"])
    omega_max = v["omega-max"]
    omega_min = v["omega-min"] if v["omega-min"] is not None else omega_max / 1e3
    if not (0 < omega_min < omega_max):
        raise DomainError(
            f"need 0 < omega-min < omega-max, got [{omega_min!r}, {omega_max!r}]"
        )
    grid = np.logspace(math.log10(omega_min), math.log10(omega_max), v["points"])
    table = sample_number_spectrum(profile, v["volume"], grid)

    planck = None
    if v["planck-overlay"]:
        norm = v["planck-norm"]
        if norm is None:
            n_out = media.n_out
            norm = 2 * v["volume"] / (2 * math.pi) ** 3 * 4 * math.pi * n_out ** 3 / _c ** 3
        planck = [planck_comparison_spectrum(profile, w, norm) for w in table.omegas]

    if v["format"] == "json":
        obj = {
            "schema_version": SCHEMA_VERSION,
            "n_in": media.n_in,
            "n_out": media.n_out,
            "t0_seconds": profile.t0,
            "volume_m3": v["volume"],
            "omega_rad_per_s": list(table.omegas),
            "omega_PHz": [w / (2 * math.pi) / 1e15 for w in table.omegas],
            "dN_domega": list(table.dn_domega),
            "regime": list(table.regimes),
        }
        if planck is not None:
            obj["planck_dN_domega"] = planck
        return _json_text(obj)

    header = ["omega_rad_per_s", "omega_PHz", "dN_domega", "regime"]
    if planck is not None:
        header.append("planck_dN_domega")
    rows = []
    for i, w in enumerate(table.omegas):
        row = [_fmt(w), _fmt(w / (2 * math.pi) / 1e15), _fmt(table.dn_domega[i]),
               table.regimes[i]]
        if planck is not None:
            row.append(_fmt(planck[i]))
        rows.append(row)
    return _csv_text(header, rows)


_register("spectrum", [
    Param("n-in", units.parse_positive_float, "initial refractive index", required=True),
    Param("n-out", units.parse_positive_float, "final refractive index", required=True),
    Param("t0", units.parse_time, "physical switching timescale (e.g. 1fs)", required=True),
    Param("omega-max", units.parse_angular_frequency,
          "upper edge of the grid (rad/s, or e.g. 30PHz, 4eV)", required=True),
    Param("omega-min", units.parse_angular_frequency,
          "lower edge of the grid; default omega-max/1000"),
    Param("points", _points, "number of log-spaced samples", default=400),
    Param("volume", units.parse_volume, "quantization volume (default 1 m^3)", default=1.0),
    Param("planck-overlay", None, "append the Planck comparator column", flag=True),
    Param("planck-norm", units.parse_positive_float,
          "comparator normalization; default matches the spectrum's omega^2 prefactor"),
] + _common_params(("csv", "json"), "csv"), _cmd_spectrum)


# --------------------------------------------------------------------------
# budget

def _cmd_budget(v: dict) -> str:
    if (v["k-observed"] is None) == (v["wavelength"] is None):
        raise DomainError("exactly one of --k-observed or --wavelength is required")
    media = MediumPair(v["n-in"], v["n-out"])
    k_obs = v["k-observed"] if v["k-observed"] is not None else 2 * math.pi / v["wavelength"]
    cutoff = SharpCutoff.from_observed(k_obs, v["n-liquid"], media.n_out)
    radius = v["radius"]
    volume = 4 * math.pi / 3 * radius ** 3
    budget = photon_budget_sharp_cutoff(media, volume, cutoff)
    count = photon_count_sharp_cutoff(media, radius, cutoff)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "n_in": media.n_in,
        "n_out": media.n_out,
        "radius_m": radius,
        "n_liquid": cutoff.n_liquid,
        "K_observed_rad_per_m": k_obs,
        "KR_observed": k_obs * radius,
        "N": count,
        "E_joules": budget.E,
        "E_eV_total": budget.E / _qe,
        "mean_photon_eV": budget.mean_energy / _qe,
        "omega_max": budget.omega_max,
        "omega_max_units": "rad/s",
        "radius_m_units": "m",
        "K_observed_rad_per_m_units": "rad/m",
        "E_joules_units": "J",
    }
    return _scalar_output(v, obj)


_register("budget", [
    Param("n-in", units.parse_positive_float, "initial refractive index", required=True),
    Param("n-out", units.parse_positive_float, "final refractive index", required=True),
    Param("radius", units.parse_length, "bubble radius (e.g. 40um)", required=True),
    Param("k-observed", units.parse_positive_float,
          "observed wavenumber cutoff, rad/m"),
    Param("wavelength", units.parse_length,
          "observed cutoff wavelength (e.g. 360nm); converted via K = 2 pi / lambda"),
    Param("n-liquid", units.parse_positive_float,
          "refractive index of the ambient liquid", default=1.0),
] + _common_params(("json", "pretty"), "json"), _cmd_budget)


# --------------------------------------------------------------------------
# invert

def _cmd_invert(v: dict) -> str:
    if (v["n-in"] is None) == (v["n-out"] is None):
        raise DomainError("exactly one of --n-in or --n-out is required")
    if v["n-out"] is not None:
        problem = InversionProblem(
            N_target=v["photons"], known_value=v["n-out"], known_side="n_out",
            n_liquid=v["n-liquid"], KR_observed=v["kr"],
        )
        roots = list(solve_n_in(problem))
        residuals = [
            count_from_indices(r, problem.known_value, problem.prefactor) / problem.N_target - 1
            for r in roots
        ]
        branches = branch_approximations(problem, problem.known_value)
        obj = {
            "schema_version": SCHEMA_VERSION,
            "solved_for": "n_in",
            "n_out": problem.known_value,
            "photons": problem.N_target,
            "n_liquid": problem.n_liquid,
            "KR_observed": problem.KR_observed,
            "prefactor": problem.prefactor,
            "roots": roots,
            "round_trip_rel": residuals,
            "branch_near_origin": branches.near_origin,
            "branch_near_axis": branches.near_axis,
            "branch_near_diagonal": branches.near_diagonal,
        }
    else:
        problem = InversionProblem(
            N_target=v["photons"], known_value=v["n-in"], known_side="n_in",
            n_liquid=v["n-liquid"], KR_observed=v["kr"],
        )
        roots = list(solve_n_out(problem))
        residuals = [
            count_from_indices(problem.known_value, r, problem.prefactor) / problem.N_target - 1
            for r in roots
        ]
        branch_rows = [branch_approximations(problem, r) for r in roots]
        obj = {
            "schema_version": SCHEMA_VERSION,
            "solved_for": "n_out",
            "n_in": problem.known_value,
            "photons": problem.N_target,
            "n_liquid": problem.n_liquid,
            "KR_observed": problem.KR_observed,
            "prefactor": problem.prefactor,
            "roots": roots,
            "round_trip_rel": residuals,
            "branch_near_origin": [b.near_origin for b in branch_rows],
            "branch_near_axis": [b.near_axis for b in branch_rows],
            "branch_near_diagonal": [b.near_diagonal for b in branch_rows],
        }
    return _scalar_output(v, obj)


_register("invert", [
    Param("photons", units.parse_positive_float, "target photon count", required=True),
    Param("n-in", units.parse_positive_float, "known initial index (solve for n_out)"),
    Param("n-out", units.parse_positive_float, "known final index (solve for n_in)"),
    Param("n-liquid", units.parse_positive_float, "ambient liquid index", default=1.0),
    Param("kr", units.parse_positive_float, "observed K times R (dimensionless)",
          required=True),
] + _common_params(("json", "pretty"), "json"), _cmd_invert)


# --------------------------------------------------------------------------
# eos

def _build_model(v: dict):
    name = v["model"]
    b_molar = v["b"] * 1e-3        # l/mol -> m^3/mol
    m_molar = v["m"] * 1e-3        # g/mol -> kg/mol
    if name == "vdw":
        return VanDerWaals.from_molar(v["a"], b_molar, m_molar)
    if name == "dieterici":
        return Dieterici.from_molar(v["a"], b_molar, m_molar)
    if name == "berthelot":
        return Berthelot.from_molar(v["a-prime"], b_molar, m_molar)
    if name == "modified-adiabatic":
        m_molecule = m_molar / N_A
        return ModifiedAdiabatic(
            p0=v["p0"], n0=v["rho0"] / m_molecule, b=b_molar / N_A,
            gamma=v["gamma"], m=m_molecule,
        )
    if name == "moss":
        return Moss(kappa=v["kappa"], gamma=v["gamma"], E_c=v["e-c"],
                    rho0=v["rho0"], m=m_molar / N_A)
    raise DomainError(f"unknown model {name!r}")


def _resolve_rho(v: dict, model) -> float:
    if (v["rho"] is None) == (v["rho-frac"] is None):
        raise DomainError("exactly one of --rho or --rho-frac is required")
    if v["rho"] is not None:
        return v["rho"]
    return v["rho-frac"] * rho_max(model)


_STATE_PARAMS = [
    Param("rho", units.parse_positive_float, "mass density, kg/m^3"),
    Param("rho-frac", units.parse_positive_float, "density as a fraction of rho_max"),
    Param("T", units.parse_positive_float, "temperature, K", default=300.0),
]


def _cmd_eos_pressure(v: dict) -> str:
    model = _build_model(v)
    rho = _resolve_rho(v, model)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "model": v["model"],
        "rho_kg_per_m3": rho,
        "T_kelvin": v["T"],
        "p_pascal": pressure(model, rho, v["T"]),
    }
    return _scalar_output(v, obj)


_register("eos-pressure", _MODEL_PARAMS + _STATE_PARAMS
          + _common_params(("json", "pretty"), "json"), _cmd_eos_pressure)


def _cmd_eos_sound_speed(v: dict) -> str:
    model = _build_model(v)
    if v["sweep"]:
        fracs = np.linspace(v["frac-min"], v["frac-max"], v["points"])
        rmax = rho_max(model)
        rows = []
        for f in fracs:
            speed = sound_speed(model, f * rmax, v["T"])
            rows.append([_fmt(f), _fmt(speed), _fmt(speed / _c)])
        return _csv_text(["rho_over_rhomax", "v_m_per_s", "v_over_c"], rows)
    rho = _resolve_rho(v, model)
    speed = sound_speed(model, rho, v["T"])
    obj = {
        "schema_version": SCHEMA_VERSION,
        "model": v["model"],
        "rho_kg_per_m3": rho,
        "T_kelvin": v["T"],
        "v_m_per_s": speed,
        "v_over_c": speed / _c,
        "relativistic": bool(speed / _c > _RELATIVISTIC_FRACTION),
    }
    return _scalar_output(v, obj)


_register("eos-sound-speed", _MODEL_PARAMS + _STATE_PARAMS + [
    Param("sweep", None, "emit a CSV sweep over rho/rho_max instead of one point",
          flag=True),
    Param("frac-min", units.parse_positive_float, "sweep start fraction", default=0.1),
    Param("frac-max", units.parse_positive_float, "sweep end fraction", default=0.999),
    Param("points", _points, "sweep sample count", default=40),
] + _common_params(("json", "pretty", "csv"), "json"), _cmd_eos_sound_speed)


def _cmd_eos_hardcore(v: dict) -> str:
    r_hc = hard_core_radius(
        v["r-ambient"], v["b"] * 1e-3, v["rho"] * 1000.0, v["m"] * 1e-3
    )
    obj = {
        "schema_version": SCHEMA_VERSION,
        "R_ambient_m": v["r-ambient"],
        "b_l_per_mol": v["b"],
        "rho_g_per_cm3": v["rho"],
        "m_g_per_mol": v["m"],
        "R_hc_m": r_hc,
        "R_hc_um": r_hc * 1e6,
    }
    return _scalar_output(v, obj)


_register("eos-hardcore", [
    Param("r-ambient", units.parse_length, "ambient bubble radius (e.g. 4.5um)",
          required=True),
    Param("b", units.parse_positive_float, "excluded molar volume, l/mol", default=0.036),
    Param("rho", units.parse_positive_float, "gas density, g/cm^3", default=1e-3),
    Param("m", units.parse_positive_float, "molar mass, g/mol", default=28.96),
] + _common_params(("json", "pretty"), "json"), _cmd_eos_hardcore)


def _cmd_eos_divergence(v: dict) -> str:
    model = _build_model(v)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "model": v["model"],
        "T_kelvin": v["T"],
        "q": divergence_exponent(model, v["T"]),
    }
    return _scalar_output(v, obj)


_register("eos-divergence", _MODEL_PARAMS + [
    Param("T", units.parse_positive_float, "temperature, K", default=300.0),
] + _common_params(("json", "pretty"), "json"), _cmd_eos_divergence)


# --------------------------------------------------------------------------
# power

def _cmd_power(v: dict) -> str:
    if v["csv"] is not None:
        loaded = read_trajectory_csv(v["csv"])
        period = v["period"] if v["period"] is not None else (len(loaded.values) - 1) * loaded.dt
        traj = SampledTrajectory(
            t_start=loaded.t_start, dt=loaded.dt, values=loaded.values, period=period
        )
    else:
        traj = SinusoidTrajectory(
            R0=v["r0"], amplitude=v["amplitude"], omega=v["freq"], phase=0.0
        )
    n = v["n"]
    model = v["model"]
    if model in ("eberlein5", "eberlein-byparts"):
        w5 = eberlein_energy_fifth_derivative_form(traj, n)
        wb = eberlein_energy_by_parts_form(traj, n)
        value = w5 if model == "eberlein5" else wb
        denom = max(abs(w5), abs(wb))
        cross = 0.0 if denom == 0.0 else abs(w5 - wb) / denom
    else:
        value = schutzhold_energy(traj, n)
        cross = None
    obj = {
        "schema_version": SCHEMA_VERSION,
        "form": model,
        "n": n,
        "W_joules": value,
        "cross_check_relative_diff": cross,
    }
    return _scalar_output(v, obj)


_register("power", [
    Param("model", str, "energy functional",
          required=True, choices=("eberlein5", "eberlein-byparts", "schutzhold")),
    Param("n", units.parse_positive_float, "liquid refractive index", required=True),
    Param("r0", units.parse_length, "sinusoid mean radius", default=4.5e-6),
    Param("amplitude", units.parse_float, "sinusoid relative amplitude", default=0.1),
    Param("freq", units.parse_angular_frequency,
          "sinusoid drive frequency (e.g. 30kHz)", default=2 * math.pi * 30e3),
    Param("csv", str, "read a sampled trajectory (header t_seconds,R_meters)"),
    Param("period", units.parse_time,
          "cycle period for CSV data; default is the sampled span"),
] + _common_params(("json", "pretty"), "json"), _cmd_power)


# --------------------------------------------------------------------------
# regime

def _cmd_regime(v: dict) -> str:
    media = MediumPair(v["n-in"], v["n-out"])
    profile = TanhProfile.from_t0(media, v["t0"])
    th = regime_thresholds(profile)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "n_in": media.n_in,
        "n_out": media.n_out,
        "t0_seconds": profile.t0,
        "omega_sudden_rad_per_s": th.omega_sudden,
        "omega_sudden_hz": th.omega_sudden / (2 * math.pi),
        "omega_adiabatic_rad_per_s": th.omega_adiabatic,
        "omega_adiabatic_hz": th.omega_adiabatic / (2 * math.pi),
    }
    if v["probe"] is not None:
        obj["probe_omega_rad_per_s"] = v["probe"]
        obj["probe_regime"] = classify_regime(profile, v["probe"])
    return _scalar_output(v, obj)


_register("regime", [
    Param("n-in", units.parse_positive_float, "initial refractive index", required=True),
    Param("n-out", units.parse_positive_float, "final refractive index", required=True),
    Param("t0", units.parse_time, "physical switching timescale", required=True),
    Param("probe", units.parse_angular_frequency, "frequency to classify"),
] + _common_params(("json", "pretty"), "json"), _cmd_regime)


# --------------------------------------------------------------------------
# parsing and dispatch

def _attach_params(sub: argparse.ArgumentParser, params: list):
    for p in params:
        flagname = "--" + p.name
        if p.flag:
            sub.add_argument(flagname, action="store_true", default=False, help=p.help)
        else:
            sub.add_argument(flagname, type=str, default=None, help=p.help,
                             metavar=p.name.upper().replace("-", "_"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcelight",
        description="Photon production from a time-dependent refractive index.",
    )
    top = parser.add_subparsers(dest="_top", required=True)

    for key in ("spectrum", "budget", "invert", "power", "regime"):
        sub = top.add_parser(key, help=_COMMANDS[key][1].__doc__)
        _attach_params(sub, _COMMANDS[key][0] + [Param("config", str, "key=value parameter file")])
        sub.set_defaults(_cmd=key)

    eos = top.add_parser("eos", help="equation-of-state diagnostics")
    eos_sub = eos.add_subparsers(dest="_eos", required=True)
    for leaf in ("pressure", "sound-speed", "hardcore", "divergence"):
        key = f"eos-{leaf}"
        sub = eos_sub.add_parser(leaf)
        _attach_params(sub, _COMMANDS[key][0] + [Param("config", str, "key=value parameter file")])
        sub.set_defaults(_cmd=key)

    return parser


def _load_config(path: str, parser: argparse.ArgumentParser) -> dict:
    cfg = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    parser.error(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                cfg[key.strip().replace("_", "-")] = value.strip()
    except OSError as exc:
        parser.error(f"cannot read config {path}: {exc}")
    return cfg


def _resolve(params: list, args: argparse.Namespace,
             parser: argparse.ArgumentParser) -> dict:
    config = _load_config(args.config, parser) if args.config else {}
    known = {p.name for p in params}
    for key in config:
        if key not in known:
            parser.error(f"unknown config key {key!r}")

    resolved = {}
    for p in params:
        cli_value = getattr(args, p.name.replace("-", "_"))
        if p.flag:
            value = bool(cli_value)
            if not value and p.name in config:
                try:
                    value = units.parse_bool(config[p.name])
                except ValueError as exc:
                    parser.error(f"config key {p.name!r}: {exc}")
            resolved[p.name] = value
            continue
        raw = cli_value if cli_value is not None else config.get(p.name)
        if raw is None:
            if p.required:
                parser.error(f"missing required parameter --{p.name}")
            resolved[p.name] = p.default
            continue
        try:
            value = p.convert(raw) if p.convert is not None else raw
        except ValueError as exc:
            parser.error(f"--{p.name}: {exc}")
        if p.choices is not None and value not in p.choices:
            parser.error(f"--{p.name}: must be one of {', '.join(map(str, p.choices))}")
        resolved[p.name] = value
    return resolved


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params, handler = _COMMANDS[args._cmd]
    resolved = _resolve(params, args, parser)

    try:
        text = handler(resolved)
    except DcelightError as exc:
        if resolved.get("error-json"):
            payload = {
                "schema_version": SCHEMA_VERSION,
                "error": {
                    "type": type(exc).__name__,
                    "message": str(exc),
                    "exit_code": 3,
                },
            }
            sys.stdout.write(_json_text(payload))
        else:
            sys.stderr.write(f"dcelight: error: {exc}\n")
        return 3

    if resolved.get("output"):
        with open(resolved["output"], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
