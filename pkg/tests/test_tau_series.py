import cmath
import math

import numpy as np
import pytest

from pain3.errors import ZeroOfTauError
from pain3.monodromy import MonodromyPoint
from pain3.nekrasov import BlockParams, F_block
from pain3.tau_series import (
    TruncationSpec,
    _tau_moments,
    sigma_form_residual,
    t_from_r,
    tau_short,
    u_from_tau,
    zeta,
    zeta_derivatives,
)
from pain3.tau_asymptotics import u_long
from pain3.verify import sample_generic_points, shas_gap


@pytest.mark.parametrize(
    "kw", [{"n_fourier": 9}, {"n_inst": 21}, {"k_corr": 5}, {"n_fourier": -1}, {"fd_step": 0.0}]
)
def test_truncation_ranges(kw):
    with pytest.raises(ValueError):
        TruncationSpec(**kw)


def test_single_mode_is_block():
    m = MonodromyPoint(0.3 + 0.1j, 0.2)
    v = tau_short(m, 0.7, TruncationSpec(n_fourier=0))
    assert abs(v.value / F_block(BlockParams(m.sigma, 0.7)).value - 1) < 1e-13
    assert v.err_estimate >= 0


def test_leading_power_slope():
    m = MonodromyPoint(0.3, 0.1)
    t1, t2 = 1e-12, 1e-11
    a, b = tau_short(m, t1).value, tau_short(m, t2).value
    slope = math.log(abs(b / a)) / math.log(t2 / t1)
    assert slope == pytest.approx(0.09, abs=1e-5)
    assert zeta(m, 1e-18) == pytest.approx(0.09, abs=1e-5)


def test_fourier_convergence(fig1_point):
    for t in np.linspace(0.05, 5, 12):
        a = tau_short(fig1_point, t, TruncationSpec(n_fourier=4)).value
        b = tau_short(fig1_point, t, TruncationSpec(n_fourier=6)).value
        assert abs(a / b - 1) < 1e-10


def test_fourier_periodicity(fig1_point):
    # tau(sigma + 1) = exp(-4 pi i eta) tau(sigma) for the untruncated sum
    shifted = MonodromyPoint(fig1_point.sigma + 1, fig1_point.eta, normalize=False)
    trunc = TruncationSpec(n_fourier=6)
    for t in (0.01, 0.5, 2.0, 5.0):
        base = tau_short(fig1_point, t, trunc).value
        moved = tau_short(shifted, t, trunc).value
        assert abs(cmath.exp(4j * math.pi * fig1_point.eta) * moved / base - 1) < 1e-8


def test_sigma_form_residual(rng):
    trunc = TruncationSpec(n_fourier=5, n_inst=20)
    for s, e in sample_generic_points(rng, 3):
        m = MonodromyPoint(s, e)
        for t in np.geomspace(0.01, 5, 5):
            res, scale = sigma_form_residual(m, t, trunc)
            assert res < 1e-8 * scale


def test_sigma_form_example():
    res, scale = sigma_form_residual(MonodromyPoint(0.3, 0.1), 0.2)
    assert res < 1e-8 * scale


def test_zeta_ignores_constant_factor():
    m = MonodromyPoint(0.3 + 0.05j, 0.1 - 0.2j)
    mom, _, _ = _tau_moments(m, 0.8, TruncationSpec(), order=1)
    assert abs((3.7 * mom[1]) / (3.7 * mom[0]) - zeta(m, 0.8)) < 1e-14


def test_integer_eta_shift_is_invisible():
    m = MonodromyPoint(0.3 + 0.05j, 0.1 - 0.2j)
    moved = MonodromyPoint(m.sigma, m.eta + 1, normalize=False)
    assert abs(tau_short(moved, 0.8).value / tau_short(m, 0.8).value - 1) < 1e-12


def test_elementary_solution():
    m = MonodromyPoint(0.25, 0.25)
    trunc = TruncationSpec(n_inst=20)
    for r in (1.0, 4.0, 8.0):
        t = t_from_r(r)
        assert abs(zeta(m, t, trunc) - (1 / 16 + r * r / 32)) < 1e-12
        assert abs(u_from_tau(m, r, trunc) - 1) < 1e-12


def test_zeta_derivatives_against_fd():
    m = MonodromyPoint(0.2 + 0.1j, 0.15)
    t, h = 0.9, 1e-4
    z, zp, zpp = zeta_derivatives(m, t)
    assert abs(zp - (zeta(m, t + h) - zeta(m, t - h)) / (2 * h)) < 1e-7
    assert abs(zpp - (zeta(m, t + h) - 2 * z + zeta(m, t - h)) / h**2) < 1e-5


def test_short_distance_law():
    assert shas_gap() < 1e-2


def test_u_inverse_consistency(fig1_point):
    e_minus = u_from_tau(fig1_point, 8.0)
    e_plus = u_long(fig1_point, 8.0)
    assert abs(abs(e_minus) * abs(e_plus) - 1) < 1e-3


def test_bad_radius():
    with pytest.raises(ValueError):
        u_from_tau(MonodromyPoint(0.3, 0.1), 0.0)


def test_zero_of_tau_detected():
    with pytest.raises(ZeroOfTauError):
        from pain3.tau_series import _checked

        _checked(np.array([1e-20, 0]), 1.0)
