"""Short-distance tau function as a Fourier series of conformal blocks.

    tau(t) = sum_n exp(4 pi i n eta) F(sigma + n, t)

Every term is t^a times a polynomial in t, so the Euler operator D = t d/dt
acts exactly: D^j [t^a sum_k c_k t^k] = t^a sum_k c_k (a + k)^j t^k.  zeta and
its t-derivatives are assembled from D^j tau, j = 0..3, without finite
differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleError, ZeroOfTauError
from .monodromy import MonodromyPoint
from .nekrasov import (
    DEFAULT_L_THRESHOLD,
    MAX_INSTANTON_ORDER,
    BlockParams,
    SeriesValue,
    _check_L,
    instanton_coefficients,
    log_block_normalization,
    block_tail_bound,
)

MAX_FOURIER = 8
MAX_K_CORR = 4
ZERO_TAU_RATIO = 1e-13


@dataclass(frozen=True)
class TruncationSpec:
    n_fourier: int = 6
    n_inst: int = 15
    k_corr: int = 4
    n_fourier_long: int = 4
    fd_step: float = 1e-5

    def __post_init__(self):
        if not 0 <= self.n_fourier <= MAX_FOURIER:
            raise ValueError(f"n_fourier must lie in [0, {MAX_FOURIER}]")
        if not 0 <= self.n_inst <= MAX_INSTANTON_ORDER:
            raise ValueError(f"n_inst must lie in [0, {MAX_INSTANTON_ORDER}]")
        if not 0 <= self.k_corr <= MAX_K_CORR:
            raise ValueError(f"k_corr must lie in [0, {MAX_K_CORR}]")
        if not 0 <= self.n_fourier_long <= MAX_FOURIER:
            raise ValueError(f"n_fourier_long must lie in [0, {MAX_FOURIER}]")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")


def t_from_r(r):
    return r**4 / 4096.0


def _log_t(t: complex, arg_t: float | None) -> complex:
    return BlockParams(0.5, t, 0, arg_t).log_t


def _tau_moments(
    m: MonodromyPoint,
    t: complex,
    trunc: TruncationSpec,
    arg_t: float | None = None,
    order: int = 0,
) -> tuple[np.ndarray, float, float]:
    """[D^0 tau, ..., D^order tau], the truncation error on tau, and sum |terms|."""
    t = complex(t)
    log_t = _log_t(t, arg_t)
    sigma, eta = complex(m.sigma), complex(m.eta)
    L = _check_L(sigma, DEFAULT_L_THRESHOLD)
    tail = block_tail_bound(t, L, trunc.n_inst)
    powers = np.arange(trunc.n_inst + 1)
    t_pow = t ** powers
    moments = np.zeros(order + 1, dtype=complex)
    err = 0.0
    size = 0.0
    for n in range(-trunc.n_fourier, trunc.n_fourier + 1):
        s = sigma + n
        log_pref = s * s * log_t - log_block_normalization(s) + 4j * math.pi * n * eta
        pref = np.exp(log_pref)
        c = instanton_coefficients(s, trunc.n_inst) * t_pow
        exps = s * s + powers
        for j in range(order + 1):
            moments[j] += pref * np.sum(c * exps**j)
        size += abs(pref) * np.sum(np.abs(c))
        err += abs(pref) * tail
    # Omitted Fourier modes, bounded with |B| <= exp(2|t|/L).
    for n in (-trunc.n_fourier - 1, trunc.n_fourier + 1):
        s = sigma + n
        try:
            log_pref = s * s * log_t - log_block_normalization(s)
        except PoleError:
            continue
        err += math.exp(log_pref.real + 2 * abs(t) / L - 4 * math.pi * n * eta.imag)
    return moments, err, size


def tau_short(
    m: MonodromyPoint, t: complex, trunc: TruncationSpec = TruncationSpec(), arg_t: float | None = None
) -> SeriesValue:
    moments, err, _ = _tau_moments(m, t, trunc, arg_t)
    return SeriesValue(complex(moments[0]), err)


def _checked(moments: np.ndarray, size: float) -> complex:
    tau = moments[0]
    if abs(tau) < 1e-290 or abs(tau) < ZERO_TAU_RATIO * size:
        raise ZeroOfTauError("tau is numerically zero; log-derivative undefined")
    return tau


def zeta(m: MonodromyPoint, t: complex, trunc: TruncationSpec = TruncationSpec(), arg_t=None) -> complex:
    """zeta(t) = t d/dt log tau(t)."""
    moments, _, size = _tau_moments(m, t, trunc, arg_t, order=1)
    return complex(moments[1] / _checked(moments, size))


def zeta_derivatives(
    m: MonodromyPoint, t: complex, trunc: TruncationSpec = TruncationSpec(), arg_t=None
) -> tuple[complex, complex, complex]:
    """(zeta, zeta', zeta'') with primes denoting d/dt."""
    t = complex(t)
    moments, _, size = _tau_moments(m, t, trunc, arg_t, order=3)
    tau = _checked(moments, size)
    q1, q2, q3 = moments[1] / tau, moments[2] / tau, moments[3] / tau
    z = q1
    dz = q2 - q1 * q1  # D zeta
    d2z = q3 - 3 * q2 * q1 + 2 * q1**3  # D^2 zeta
    zp = dz / t
    zpp = (d2z - dz) / (t * t)
    return complex(z), complex(zp), complex(zpp)


def sigma_form_residual(
    m: MonodromyPoint, t: complex, trunc: TruncationSpec = TruncationSpec(), arg_t=None
) -> tuple[float, float]:
    """|(t z'')^2 - 4 z'^2 (z - t z') + 4 z'| and the largest of the three terms."""
    t = complex(t)
    z, zp, zpp = zeta_derivatives(m, t, trunc, arg_t)
    a = (t * zpp) ** 2
    b = 4 * zp * zp * (z - t * zp)
    c = 4 * zp
    return abs(a - b + c), max(abs(a), abs(b), abs(c))


def u_from_tau(m: MonodromyPoint, r: float, trunc: TruncationSpec = TruncationSpec()) -> complex:
    """exp(-i u(r)) = 2^-6 r^2 zeta'(2^-12 r^4)."""
    if not r > 0:
        raise ValueError("r must be positive")
    t = t_from_r(r)
    moments, _, size = _tau_moments(m, t, trunc, 0.0, order=2)
    tau = _checked(moments, size)
    q1, q2 = moments[1] / tau, moments[2] / tau
    zp = (q2 - q1 * q1) / t
    return complex(r * r * zp / 64.0)
