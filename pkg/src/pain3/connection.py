"""Connection constant chi(sigma, nu; eta) between the two expansions of tau."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import PoleError, WindowTooWildError
from .monodromy import MonodromyPoint, derive_nu
from .specfun import log_barnes_G, log_G_hat
from .tau_asymptotics import tau_long_unnormalized
from .tau_series import TruncationSpec, t_from_r, tau_short

LOG_2PI = math.log(2.0 * math.pi)
LOG_G_HALF = log_barnes_G(0.5).real


def log_G_hat_ratio(a: complex, b: complex) -> complex:
    """log G_hat(a) - log G_hat(b); identical arguments give 0 even on a pole."""
    if a == b:
        return 0j
    return log_G_hat(a) - log_G_hat(b)


def log_chi_formula(sigma: complex, eta: complex, nu: complex | None = None) -> complex:
    sigma, eta = complex(sigma), complex(eta)
    nu = derive_nu(sigma, eta) if nu is None else complex(nu)
    mu = sigma + eta
    elementary = 1j * math.pi * (
        eta * eta - 2 * sigma * eta - sigma * sigma + eta - sigma - nu * nu / 4 + 0.125
    )
    return (
        (1j * nu - 0.5) * LOG_2PI
        + elementary
        - 0.25 * math.log(2.0)
        - 2 * LOG_G_HALF
        + log_G_hat_ratio(mu + (1 - 1j * nu) / 2, mu + (1 + 1j * nu) / 2)
    )


def chi_formula(sigma, eta=None, nu=None) -> complex:
    """Closed-form chi.  Accepts a MonodromyPoint or raw (sigma, eta[, nu])."""
    if isinstance(sigma, MonodromyPoint):
        m = sigma
        return cmath.exp(log_chi_formula(m.sigma, m.eta, m.nu))
    return cmath.exp(log_chi_formula(sigma, eta, nu))


def chi_elementary() -> float:
    """chi at sigma = eta = 1/4, nu = 0: 2^(-3/4) / (sqrt(pi) G(1/2)^2)."""
    return 2**-0.75 / (math.sqrt(math.pi) * math.exp(2 * LOG_G_HALF))


def chi_product_rhs(nu: complex) -> complex:
    nu = complex(nu)
    log_rhs = (
        (1j * nu - 1) * LOG_2PI
        - 0.5j * math.pi * nu * nu
        - 0.5 * math.log(2.0)
        - 4 * LOG_G_HALF
        - log_G_hat(1j * nu)
    )
    return cmath.exp(log_rhs)


def chi_product_check(sigma, eta=None) -> float:
    """|chi(eta) chi(1/2 - eta) / rhs - 1| at fixed (sigma, nu)."""
    if isinstance(sigma, MonodromyPoint):
        sigma, eta = sigma.sigma, sigma.eta
    nu = derive_nu(sigma, eta)
    lhs = chi_formula(sigma, eta, nu) * chi_formula(sigma, 0.5 - eta, nu)
    return abs(lhs / chi_product_rhs(nu) - 1)


@dataclass
class ChiResult:
    chi_formula: complex
    r_window: tuple[float, float]
    chi_numeric: complex | None = None
    rel_discrepancy: float | None = None
    spread: float | None = None
    truncation_estimate: float | None = None
    radii: list[float] = field(default_factory=list, repr=False)
    ratios: list[complex] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        def pair(z):
            return None if z is None else [z.real, z.imag]

        return {
            "chi_formula": pair(self.chi_formula),
            "chi_numeric": pair(self.chi_numeric),
            "rel_discrepancy": self.rel_discrepancy,
            "spread": self.spread,
            "window": list(self.r_window),
        }


def expansion_ratio(m: MonodromyPoint, r: float, trunc: TruncationSpec) -> tuple[complex, float]:
    """tau_short / tau_long_unnormalized at one radius, with a relative error estimate."""
    short = tau_short(m, t_from_r(r), trunc)
    long = tau_long_unnormalized(m, r, trunc.k_corr, trunc.n_fourier_long)
    rel = short.err_estimate / abs(short.value) + long.err_estimate / abs(long.value)
    return short.value / long.value, rel


def chi_numeric(
    m: MonodromyPoint,
    r_window: tuple[float, float] = (6.0, 10.0),
    trunc: TruncationSpec = TruncationSpec(),
    n_points: int = 9,
    spread_bound: float = 1e-3,
) -> ChiResult:
    """Extract chi as the (componentwise) median of tau_short / tau_long over the window."""
    r_lo, r_hi = r_window
    if not 0 < r_lo <= r_hi:
        raise ValueError("window must satisfy 0 < r_lo <= r_hi")
    radii = [r_lo] if r_lo == r_hi else list(np.linspace(r_lo, r_hi, n_points))
    ratios, ests = [], []
    for r in radii:
        q, e = expansion_ratio(m, float(r), trunc)
        ratios.append(q)
        ests.append(e)
    arr = np.array(ratios)
    median = complex(np.median(arr.real), np.median(arr.imag))
    spread = float(np.max(np.abs(arr / median - 1)))
    try:
        formula = chi_formula(m)
    except PoleError:
        formula = None
    result = ChiResult(
        chi_formula=formula,
        r_window=(float(r_lo), float(r_hi)),
        chi_numeric=median,
        rel_discrepancy=None if formula is None else abs(median / formula - 1),
        spread=spread,
        truncation_estimate=float(max(ests)),
        radii=[float(r) for r in radii],
        ratios=ratios,
    )
    if spread > spread_bound:
        raise WindowTooWildError(
            f"ratio varies by {spread:.3g} over r in [{r_lo}, {r_hi}] (bound {spread_bound:g})"
        )
    return result
