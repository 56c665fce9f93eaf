"""Long-distance (r -> infinity) representation of tau and of u(r)."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import PoleError, TableExhaustedError
from .monodromy import MonodromyPoint
from .nekrasov import SeriesValue
from .specfun import log_barnes_G

MAX_D_ORDER = 4
LOG2 = math.log(2.0)
LOG_2PI = math.log(2.0 * math.pi)


def D_coeff(k: int, nu: complex) -> complex:
    """Coefficient of r^-k in the asymptotic factor D(nu, r)."""
    n2 = nu * nu
    if k == 1:
        return nu * (2 * n2 + 1) / 8
    if k == 2:
        return n2 * (4 * n2**2 - 16 * n2 - 11) / 128
    if k == 3:
        return nu * (8 * n2**4 - 108 * n2**3 + 402 * n2**2 + 269 * n2 - 24) / (3 * 2**10)
    if k == 4:
        poly = 2 * n2**5 - 56 * n2**4 + 585 * n2**3 - 2326 * n2**2 - 7831 / 8 * n2 + 612
        return n2 * poly / (3 * 2**12)
    raise TableExhaustedError(f"D_k is tabulated only for k = 1..{MAX_D_ORDER}, not {k}")


@dataclass(frozen=True)
class LongKernelParams:
    nu: complex
    r: float
    k_corr: int = 4
    n_fourier: int = 2

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("r must be positive")
        if not 0 <= self.k_corr <= MAX_D_ORDER:
            raise ValueError(f"k_corr must lie in [0, {MAX_D_ORDER}]")
        if self.n_fourier < 0:
            raise ValueError("n_fourier must be non-negative")


def log_kernel_prefactor(nu: complex, r: float) -> complex:
    """log of everything in G(nu, r) except the asymptotic factor D."""
    nu = complex(nu)
    a = 1 + 1j * nu
    if a.imag == 0 and a.real <= 0 and a.real == math.floor(a.real):
        raise PoleError(f"G(1 + i nu) vanishes at i nu = {(1j * nu).real:g}")
    return (
        1j * math.pi * nu * nu / 4
        + nu * nu * LOG2
        - 0.5j * nu * LOG_2PI
        + log_barnes_G(a)
        + (nu * nu / 2 + 0.25) * math.log(r)
        + r * r / 16
        + nu * r
    )


def D_series(nu: complex, r: float, k_corr: int) -> tuple[complex, float]:
    """Truncated 1 + sum_k D_k r^-k and the last-kept-term error heuristic."""
    total = 1 + 0j
    last = 0.0
    for k in range(1, k_corr + 1):
        term = D_coeff(k, nu) * r**-k
        total += term
        last = abs(term)
    return total, last


def G_irregular(p: LongKernelParams) -> SeriesValue:
    pref = cmath.exp(log_kernel_prefactor(p.nu, p.r))
    d, last = D_series(complex(p.nu), p.r, p.k_corr)
    return SeriesValue(pref * d, abs(pref) * last)


def tau_long_unnormalized(
    m: MonodromyPoint, r: float, k_corr: int = 4, n_fourier: int = 2
) -> SeriesValue:
    """sum_{|n| <= n_fourier} exp(4 pi i n rho) G(nu + i n, r), i.e. tau / chi."""
    phase = m.rho_phase
    nu = m.nu
    value = 0j
    err = 0.0
    for n in range(-n_fourier, n_fourier + 1):
        g = G_irregular(LongKernelParams(nu + 1j * n, r, k_corr, n_fourier))
        w = phase**n
        value += w * g.value
        err += abs(w) * g.err_estimate
    for n in (-n_fourier - 1, n_fourier + 1):
        try:
            err += abs(phase**n) * abs(cmath.exp(log_kernel_prefactor(nu + 1j * n, r)))
        except PoleError:
            pass
    return SeriesValue(value, err)


# (k, l) -> b_kl^{+-} as a function of (sign, nu, b00, b10, b20).  The
# printed table covers exactly the pairs with k + l <= 3.
def _b_table(sign: int, nu: complex, b00: complex) -> dict[tuple[int, int], complex]:
    s, i = sign, 1j
    b10 = -(b00**3) / (2**4 * 3)
    b20 = b00**5 / (2**8 * 5)
    b30 = -(b00**7) / (2**12 * 7)
    return {
        (0, 0): b00,
        (1, 0): b10,
        (2, 0): b20,
        (3, 0): b30,
        (0, 1): s * i * b00 / 8 * (6 * nu**2 + s * 4 * i * nu - 1),
        (1, 1): s * 9 * i * b10 / 8 * (2 * nu**2 + s * 2 * i * nu - 1),
        (2, 1): s * 15 * i * b20 / 8 * (2 * nu**2 + s * 2 * i * nu - 1),
        (0, 2): -b00 / 128 * (36 * nu**4 + s * 128 * i * nu**3 - 104 * nu**2 - s * 56 * i * nu + 9),
        (1, 2): -3 * b10 / 128 * (108 * nu**4 + s * 296 * i * nu**3 - 336 * nu**2 - s * 236 * i * nu + 71),
        (0, 3): -s * i * b00 / 1024
        * (
            72 * nu**6
            + s * 624 * i * nu**5
            - 1788 * nu**4
            - s * 1824 * i * nu**3
            + 1522 * nu**2
            + s * 532 * i * nu
            - 75
        ),
    }


def long_u_coefficients(nu: complex, b00_plus: complex, b00_minus: complex) -> dict:
    """{(sign, k, l): b^sign_kl} for every printed pair."""
    out = {}
    for sign, b00 in ((1, b00_plus), (-1, b00_minus)):
        for kl, val in _b_table(sign, nu, b00).items():
            out[(sign, *kl)] = val
    return out


MAX_TABLE_ORDER = 3


def _select(order) -> list[tuple[int, int]]:
    table = [(k, l) for k in range(4) for l in range(4) if k + l <= MAX_TABLE_ORDER]
    if isinstance(order, tuple):
        k_max, l_max = order
        wanted = [(k, l) for k in range(k_max + 1) for l in range(l_max + 1)]
    else:
        wanted = [(k, l) for k, l in table if k + l <= order]
        if order > MAX_TABLE_ORDER:
            raise TableExhaustedError(f"b_kl is tabulated only up to k + l = {MAX_TABLE_ORDER}")
    missing = [kl for kl in wanted if kl not in table]
    if missing:
        raise TableExhaustedError(f"b_kl not tabulated for {missing}")
    return wanted


def u_long_series(
    m: MonodromyPoint, r: float, order=MAX_TABLE_ORDER
) -> tuple[complex, complex, complex]:
    """(u, u_r, u_rr) of the truncated long-distance expansion.

    ``order`` is either an int N (keep k + l <= N) or a pair (k_max, l_max)
    selecting a rectangle that must lie inside the printed table.
    """
    if not r > 0:
        raise ValueError("r must be positive")
    nu = m.nu
    coeffs = long_u_coefficients(nu, *m.b00)
    u = du = d2u = 0j
    logr = math.log(r)
    for k, l in _select(order):
        for sign in (1, -1):
            freq = sign * (2 * k + 1)
            power = (2 * k + 1) * (sign * 1j * nu - 0.5) - l
            term = coeffs[(sign, k, l)] * cmath.exp(1j * freq * r + power * logr)
            # d/dr of exp(i f r) r^p is (i f + p/r) times itself
            g = 1j * freq + power / r
            g_prime = -power / (r * r)
            u += term
            du += g * term
            d2u += (g * g + g_prime) * term
    return u, du, d2u


def u_long(m: MonodromyPoint, r: float, order=MAX_TABLE_ORDER) -> complex:
    """exp(i u(r)) from the long-distance expansion (u itself is defined mod 2 pi)."""
    u, _, _ = u_long_series(m, r, order)
    return cmath.exp(1j * u)


def sine_gordon_residual(m: MonodromyPoint, r: float, order=MAX_TABLE_ORDER) -> float:
    """|u_rr + u_r / r + sin u| for the truncated expansion."""
    u, du, d2u = u_long_series(m, r, order)
    return abs(d2u + du / r + cmath.sin(u))
