"""Unit-suffixed value parsing for the command-line boundary.

The library itself is strictly SI; these helpers turn convenience
strings like "1fs", "360nm", "30PHz", "4eV" into SI values exactly once,
at the edge. Bare numbers are taken to be already in the SI unit of the
quantity being parsed. Hz-family suffixes denote cyclic frequency and
are multiplied by 2 pi to produce angular frequency; an eV suffix on a
frequency denotes the photon energy hbar omega.

All parsers raise ValueError on malformed input (the CLI maps that to a
usage error, distinct from physics-domain failures).
"""
from __future__ import annotations

import math
import re

from scipy.constants import e as _e, hbar as _hbar

__all__ = [
    "parse_time",
    "parse_length",
    "parse_volume",
    "parse_angular_frequency",
    "parse_float",
    "parse_positive_float",
    "parse_int",
    "parse_bool",
    "format_si",
]

_VALUE_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([A-Za-z]*\d?)\s*$"
)

_TIME = {"": 1.0, "s": 1.0, "fs": 1e-15, "ps": 1e-12, "ns": 1e-9, "us": 1e-6, "ms": 1e-3}
_LENGTH = {"": 1.0, "m": 1.0, "nm": 1e-9, "um": 1e-6, "mm": 1e-3, "cm": 1e-2}
_VOLUME = {"": 1.0, "m3": 1.0, "cm3": 1e-6, "mm3": 1e-9, "um3": 1e-18, "l": 1e-3}
_CYCLIC = {"Hz": 1.0, "kHz": 1e3, "MHz": 1e6, "GHz": 1e9, "THz": 1e12, "PHz": 1e15}


def _split(text: str) -> tuple[float, str]:
    match = _VALUE_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse value {text!r}")
    return float(match.group(1)), match.group(2)


def _scaled(text: str, table: dict, quantity: str) -> float:
    value, suffix = _split(text)
    if suffix not in table:
        raise ValueError(f"unknown {quantity} unit {suffix!r} in {text!r}")
    return value * table[suffix]


def parse_time(text: str) -> float:
    """Seconds. Suffixes: fs, ps, ns, us, ms, s; bare means seconds."""
    return _scaled(text, _TIME, "time")


def parse_length(text: str) -> float:
    """Meters. Suffixes: nm, um, mm, cm, m; bare means meters."""
    return _scaled(text, _LENGTH, "length")


def parse_volume(text: str) -> float:
    """Cubic meters. Suffixes: um3, mm3, cm3, m3, l; bare means m^3."""
    return _scaled(text, _VOLUME, "volume")


def parse_angular_frequency(text: str) -> float:
    """Angular frequency in rad/s.

    Bare numbers are rad/s. Hz-family suffixes are cyclic and gain a
    2 pi. An eV suffix converts a photon energy: omega = E / hbar.
    """
    value, suffix = _split(text)
    if suffix == "":
        return value
    if suffix in _CYCLIC:
        return 2 * math.pi * value * _CYCLIC[suffix]
    if suffix == "eV":
        return value * _e / _hbar
    raise ValueError(f"unknown frequency unit {suffix!r} in {text!r}")


def parse_float(text: str) -> float:
    value, suffix = _split(text)
    if suffix:
        raise ValueError(f"unexpected unit {suffix!r} on dimensionless value {text!r}")
    return value


def parse_positive_float(text: str) -> float:
    value = parse_float(text)
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"value must be positive, got {text!r}")
    return value


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"cannot parse integer {text!r}") from None


def parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"cannot parse boolean {text!r}")


def format_si(x: float) -> str:
    """Fixed 17-significant-digit rendering used for CSV numerics."""
    return format(float(x), ".17g")
