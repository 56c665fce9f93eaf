"""Instanton sum over pairs of Young diagrams and the normalized block F(sigma, t).

B(sigma, t) is a power series in t whose degree-d coefficient is

    c_d(sigma) = sum_{|lam|+|mu| = d} (dim_ratio(lam) dim_ratio(mu))^2 / b_{lam,mu}(sigma)^2

Each b_{lam,mu}(sigma) is a product of d linear factors (integer +- 2 sigma), so
the integer offsets and signs are tabulated once per degree and the product
is taken with numpy for any sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as sp

from .errors import ConvergenceError, PoleError
from .partitions import Partition, dim_ratio, enumerate_partitions
from .specfun import log_barnes_G

MAX_INSTANTON_ORDER = 20
DEFAULT_L_THRESHOLD = 1e-6


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    err_estimate: float = 0.0

    def __post_init__(self):
        if not self.err_estimate >= 0:
            raise ValueError("err_estimate must be non-negative")


def lattice_distance(sigma: complex) -> float:
    """L = min over integers n of |2 sigma - n|^2."""
    two_s = 2 * complex(sigma)
    n = round(two_s.real)
    return abs(two_s - n) ** 2


@dataclass(frozen=True)
class BlockParams:
    sigma: complex
    t: complex
    n_inst: int = 15
    arg_t: float | None = None

    def __post_init__(self):
        if not 0 <= self.n_inst <= MAX_INSTANTON_ORDER:
            raise ValueError(f"n_inst must lie in [0, {MAX_INSTANTON_ORDER}]")

    @property
    def L(self) -> float:
        return lattice_distance(self.sigma)

    @property
    def log_t(self) -> complex:
        t = complex(self.t)
        if t == 0:
            raise PoleError("t = 0 is a branch point of t^(sigma^2)")
        arg = math.atan2(t.imag, t.real) if self.arg_t is None else self.arg_t
        return complex(math.log(abs(t)), arg)


def _cell_offsets(lam: Partition, mu: Partition) -> tuple[list[int], list[int]]:
    lam_t, mu_t = lam.transpose(), mu.transpose()
    offsets, signs = [], []
    for k, l in lam.cells():
        offsets.append(lam_t.part(l) - k + mu.part(k) - l + 1)
        signs.append(1)
    for k, l in mu.cells():
        offsets.append(mu_t.part(l) - k + lam.part(k) - l + 1)
        signs.append(-1)
    return offsets, signs


def b_factor(lam: Partition, mu: Partition, sigma: complex) -> complex:
    """The double product over cells of lam and mu defining b_{lam,mu}(sigma)."""
    offsets, signs = _cell_offsets(Partition(lam), Partition(mu))
    out = 1 + 0j
    for a, s in zip(offsets, signs):
        out *= a + 2 * s * sigma
    return out


@lru_cache(maxsize=None)
def _degree_table(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(offsets, signs, weights) for all pairs of total size d."""
    offs, sgns, wts = [], [], []
    for k in range(d + 1):
        for lam in enumerate_partitions(k):
            w_lam = dim_ratio(lam) ** 2
            for mu in enumerate_partitions(d - k):
                o, s = _cell_offsets(lam, mu)
                offs.append(o)
                sgns.append(s)
                wts.append(w_lam * dim_ratio(mu) ** 2)
    offsets = np.array(offs, dtype=float).reshape(len(offs), d)
    signs = np.array(sgns, dtype=float).reshape(len(sgns), d)
    for arr in (offsets, signs):
        arr.setflags(write=False)
    weights = np.array(wts)
    weights.setflags(write=False)
    return offsets, signs, weights


@lru_cache(maxsize=4096)
def instanton_coefficients(sigma: complex, n_inst: int) -> np.ndarray:
    """Coefficients c_0..c_{n_inst} of B(sigma, t) as a read-only array."""
    sigma = complex(sigma)
    coeffs = np.empty(n_inst + 1, dtype=complex)
    coeffs[0] = 1.0
    for d in range(1, n_inst + 1):
        offsets, signs, weights = _degree_table(d)
        b = np.prod(offsets + 2.0 * sigma * signs, axis=1)
        if np.any(b == 0):
            raise PoleError(f"b_(lam,mu) vanishes at sigma = {sigma}")
        terms = weights / (b * b)
        coeffs[d] = complex(math.fsum(terms.real), math.fsum(terms.imag))
    coeffs.setflags(write=False)
    return coeffs


def block_tail_bound(t: complex, L: float, n_inst: int) -> float:
    """sum_{k > n_inst} (2|t|/L)^k / k!, the tail of exp(2|t|/L)."""
    x = 2.0 * abs(t) / L
    if x == 0.0:
        return 0.0
    return float(math.exp(x) * sp.gammainc(n_inst + 1, x))


def _check_L(sigma: complex, threshold: float) -> float:
    L = lattice_distance(sigma)
    if L < threshold:
        raise ConvergenceError(
            f"sigma = {sigma} is within sqrt(L) = {math.sqrt(L):.3g} of Z/2; "
            "the instanton sum is not usable there"
        )
    return L


def B_series(p: BlockParams, l_threshold: float = DEFAULT_L_THRESHOLD) -> SeriesValue:
    L = _check_L(p.sigma, l_threshold)
    t = complex(p.t)
    c = instanton_coefficients(complex(p.sigma), p.n_inst)
    value = np.polynomial.polynomial.polyval(t, c)
    return SeriesValue(complex(value), block_tail_bound(t, L, p.n_inst))


def log_block_normalization(sigma: complex) -> complex:
    """log [G(1+2 sigma) G(1-2 sigma)]."""
    sigma = complex(sigma)
    return log_barnes_G(1 + 2 * sigma) + log_barnes_G(1 - 2 * sigma)


def F_block(p: BlockParams, l_threshold: float = DEFAULT_L_THRESHOLD) -> SeriesValue:
    """t^(sigma^2) B(sigma, t) / (G(1+2 sigma) G(1-2 sigma)), assembled in log space."""
    B = B_series(p, l_threshold)
    sigma = complex(p.sigma)
    pref = np.exp(sigma * sigma * p.log_t - log_block_normalization(sigma))
    return SeriesValue(complex(pref * B.value), float(abs(pref) * B.err_estimate))
