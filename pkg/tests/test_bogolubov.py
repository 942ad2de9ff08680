"""Mode-mixing coefficients: exact forms, limits, thresholds, classification."""
import math

import numpy as np
import pytest
from scipy.constants import c

from dcelight import (
    DegenerateProfileError,
    DomainError,
    MediumPair,
    TanhProfile,
    alpha_sq_exact,
    beta_sq_adiabatic,
    beta_sq_exact,
    beta_sq_sudden,
    classify_regime,
    log_beta_sq_exact,
    log_sinh,
    mode_amplitudes,
    regime_thresholds,
)

PAIRS = [(1.0, 2.0), (1.3, 1.0), (1.0, 12.0), (2e4, 1.0)]


def _grid(profile, lo=1e-6, hi=1e3, points=60):
    t0 = profile.t0
    return np.logspace(math.log10(lo), math.log10(hi), points) / t0


def test_log_sinh_matches_direct_evaluation_midrange():
    for x in (0.02, 0.5, 1.0, 5.0, 30.0, 300.0):
        assert log_sinh(x) == pytest.approx(math.log(math.sinh(x)), rel=1e-14)


def test_log_sinh_series_branch():
    # below the branch point ln(sinh x / x) = x^2/6 - x^4/180 + ...
    for x in (1e-8, 1e-5, 1e-3, 9.9e-3):
        series = math.log(x) + x * x / 6.0 - x ** 4 / 180.0
        assert log_sinh(x) == pytest.approx(series, rel=1e-13)


def test_log_sinh_no_overflow():
    assert log_sinh(1e5) == pytest.approx(1e5 - math.log(2.0), rel=1e-15)
    with pytest.raises(DomainError):
        log_sinh(0.0)
    with pytest.raises(DomainError):
        log_sinh(-1.0)


def test_beta_sq_zero_for_equal_indices():
    p = TanhProfile.from_t0(MediumPair(1.3, 1.3), 1e-15)
    for w in (1e12, 1e15, 1e18):
        assert beta_sq_exact(p, w) == 0.0
        assert log_beta_sq_exact(p, w) == -math.inf
        assert alpha_sq_exact(p, w) == pytest.approx(1.0, rel=1e-12)


def test_sudden_limit_hand_values():
    media = MediumPair(1.0, 2.0)
    assert beta_sq_sudden(media) == pytest.approx(0.125, rel=1e-15)
    assert beta_sq_sudden(MediumPair(2.0, 1.0)) == pytest.approx(0.125, rel=1e-15)
    assert beta_sq_sudden(MediumPair(1.7, 1.7)) == 0.0
    # exact at omega t0 = 1e-5 sits on the sudden plateau
    p = TanhProfile.from_t0(media, 1e-15)
    assert beta_sq_exact(p, 1e-5 / p.t0) == pytest.approx(0.125, rel=1e-6)
    # and alpha on the corresponding plateau value (n_in + n_out)^2/(4 n_in n_out)
    assert alpha_sq_exact(p, 1e-5 / p.t0) == pytest.approx(1.125, rel=1e-6)


def test_normalization_identity_on_log_grid():
    for pair in PAIRS:
        p = TanhProfile.from_t0(MediumPair(*pair), 1e-15)
        for w in _grid(p):
            b2 = beta_sq_exact(p, w)
            a2 = alpha_sq_exact(p, w)
            scale = max(1.0, b2)
            assert abs(a2 - b2 - 1.0) / scale < 1e-12, (pair, w)


def test_sudden_strict_upper_bound():
    for pair in PAIRS:
        media = MediumPair(*pair)
        p = TanhProfile.from_t0(media, 1e-15)
        bound = beta_sq_sudden(media)
        for w in _grid(p):
            assert beta_sq_exact(p, w) <= bound * (1 + 1e-13), (pair, w)


def test_sudden_convergence_for_small_arguments():
    # all three sinh arguments <= 1e-3 forces the plateau to 1e-5 relative
    for pair in PAIRS:
        media = MediumPair(*pair)
        p = TanhProfile.from_t0(media, 1e-15)
        n_in, n_out = media.n_in, media.n_out
        S = n_in ** 2 + n_out ** 2
        w_small = 1e-3 * S / (2 * math.pi * n_out * max(n_in, n_out) * p.t0) * 0.99
        rel = beta_sq_exact(p, w_small) / beta_sq_sudden(media) - 1.0
        assert abs(rel) <= 1e-5, pair


def test_swap_symmetry_at_fixed_wavenumber():
    # |beta|^2 depends on (k, tau0) symmetrically in the index pair; the
    # observed frequency differs because omega_out = c k / n_out.
    tau0 = 1e-16
    k = 2.0e7
    p12 = TanhProfile(MediumPair(1.0, 2.0), tau0)
    p21 = TanhProfile(MediumPair(2.0, 1.0), tau0)
    b12 = beta_sq_exact(p12, c * k / 2.0)
    b21 = beta_sq_exact(p21, c * k / 1.0)
    assert b12 == pytest.approx(b21, rel=5e-15)


def test_monotone_decay_in_omega():
    p = TanhProfile.from_t0(MediumPair(1.0, 2.0), 1e-15)
    grid = _grid(p, lo=1e-4, hi=1e2, points=120)
    vals = [log_beta_sq_exact(p, w) for w in grid]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_adiabatic_envelope_definition():
    media = MediumPair(1.0, 2.0)
    p = TanhProfile.from_t0(media, 1e-15)
    assert beta_sq_adiabatic(p, 0.0) == 1.0
    # exponent -1 at omega = S / (4 pi min n_out t0)
    S = 5.0
    w1 = S / (4 * math.pi * 1.0 * 2.0 * p.t0)
    assert beta_sq_adiabatic(p, w1) == pytest.approx(math.exp(-1.0), rel=1e-12)
    with pytest.raises(DomainError):
        beta_sq_adiabatic(p, -1.0)


def test_adiabatic_envelope_tracks_exact_tail():
    p = TanhProfile.from_t0(MediumPair(1.0, 2.0), 1e-15)

    def envelope_exponent(w):
        # matches beta_sq_adiabatic before it underflows to zero
        return -4 * math.pi * 1.0 * 2.0 * w * p.t0 / 5.0

    w = 2 * math.pi * 20e15  # deep in the suppressed tail
    assert math.log(beta_sq_adiabatic(p, w)) == pytest.approx(
        envelope_exponent(w), rel=1e-12
    )
    assert log_beta_sq_exact(p, w) == pytest.approx(envelope_exponent(w), rel=0.02)
    w = 2 * math.pi * 30e15  # envelope itself underflows here; compare in logs
    assert log_beta_sq_exact(p, w) == pytest.approx(envelope_exponent(w), rel=0.03)


def test_mode_amplitudes_kinematics():
    p = TanhProfile.from_t0(MediumPair(1.0, 2.0), 1e-15)
    w = 3.7e14
    amp = mode_amplitudes(p, w)
    assert amp.k == pytest.approx(2.0 * w / c, rel=1e-15)
    assert amp.omega_tau_in == pytest.approx(c * amp.k * 1.0, rel=1e-15)
    assert amp.omega_tau_out == pytest.approx(c * amp.k * 2.0, rel=1e-15)
    assert amp.omega_tau_plus == pytest.approx(0.5 * c * amp.k * 3.0, rel=1e-15)
    assert amp.omega_tau_minus == pytest.approx(0.5 * c * amp.k * 1.0, rel=1e-15)
    assert amp.omega_in == pytest.approx(c * amp.k / 1.0, rel=1e-15)
    assert amp.omega_out == pytest.approx(w, rel=1e-15)
    assert amp.alpha_sq - amp.beta_sq == pytest.approx(1.0, rel=1e-12)
    assert amp.beta_sq >= 0.0


def test_regime_thresholds_hand_values():
    p = TanhProfile.from_t0(MediumPair(1.0, 2.0), 1e-15)
    th = regime_thresholds(p)
    assert th.omega_sudden == pytest.approx(5.0 / (4 * 2 * math.pi * 1e-15), rel=1e-12)
    assert th.omega_adiabatic == pytest.approx(5.0 / (2 * 0.5 * 2 * math.pi * 1e-15), rel=1e-12)
    # n_out enters asymmetrically: the swap moves the thresholds
    th_swapped = regime_thresholds(TanhProfile.from_t0(MediumPair(2.0, 1.0), 1e-15))
    assert th_swapped.omega_sudden != pytest.approx(th.omega_sudden, rel=1e-6)


def test_degenerate_profile_rejected():
    p = TanhProfile.from_t0(MediumPair(1.3, 1.3), 1e-15)
    with pytest.raises(DegenerateProfileError):
        regime_thresholds(p)
    with pytest.raises(DegenerateProfileError):
        classify_regime(p, 1e15)


def test_classify_regime_bands():
    p = TanhProfile.from_t0(MediumPair(1.0, 2.0), 1e-15)
    th = regime_thresholds(p)
    assert classify_regime(p, 0.01 * th.omega_sudden) == "sudden"
    assert classify_regime(p, 100.0 * th.omega_adiabatic) == "adiabatic"
    mid = math.sqrt(th.omega_sudden * th.omega_adiabatic)
    assert classify_regime(p, mid) == "transition"


def test_rejects_nonpositive_omega():
    p = TanhProfile.from_t0(MediumPair(1.0, 2.0), 1e-15)
    for fn in (beta_sq_exact, alpha_sq_exact, log_beta_sq_exact, mode_amplitudes):
        with pytest.raises(DomainError):
            fn(p, 0.0)
        with pytest.raises(DomainError):
            fn(p, -1e15)
