"""Invariant suites run by ``pain3 verify``.

Each check returns a measured error that is compared with a fixed tolerance.
Random samples come from a seeded generator so reports are reproducible.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import connection, monodromy, nekrasov, partitions, specfun, tau_asymptotics, tau_series
from .monodromy import MonodromyPoint

SEED = 20140624
FIG1_SIGMA = 0.12 - 0.25j
FIG1_ETA = 0.23 + 0.42j


@dataclass
class CheckResult:
    suite: str
    name: str
    measured: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.measured <= self.tolerance)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _near_half_lattice(z: complex, eps: float) -> bool:
    return abs(2 * z - round(2 * z.real)) / 2 < eps


def sample_generic_points(rng: np.random.Generator, n: int, eps: float = 1e-2) -> list[tuple[complex, complex]]:
    """(sigma, eta) with Re sigma in [0.1, 0.4], |Im sigma| <= 0.3,
    Re eta in [-0.3, 0.4], |Im eta| <= 0.5, away from sigma, eta, sigma+eta in Z/2."""
    out = []
    while len(out) < n:
        s = complex(rng.uniform(0.1, 0.4), rng.uniform(-0.3, 0.3))
        e = complex(rng.uniform(-0.3, 0.4), rng.uniform(-0.5, 0.5))
        if any(_near_half_lattice(z, eps) for z in (s, e, s + e)):
            continue
        out.append((s, e))
    return out


def sample_base_domain(rng: np.random.Generator, n: int) -> list[tuple[float, float]]:
    """(sigma, eta) with 0 < eta < sigma < 1/4, kept off the edges."""
    out = []
    for _ in range(n):
        s = rng.uniform(0.04, 0.22)
        out.append((s, rng.uniform(0.02, s - 0.01)))
    return out


# -- partitions ---------------------------------------------------------------

def check_burnside() -> float:
    worst = 0.0
    for n in range(13):
        total = sum(
            (math.factorial(n) * partitions.dim_ratio_exact(lam)) ** 2
            for lam in partitions.enumerate_partitions(n)
        )
        worst = max(worst, abs(float((total - math.factorial(n)) / math.factorial(n))))
    return worst


def check_hook_vs_b() -> float:
    worst = 0.0
    for n in range(9):
        for lam in partitions.enumerate_partitions(n):
            b = nekrasov.b_factor(lam, lam, 0.0).real
            worst = max(worst, abs(partitions.dim_ratio(lam) * math.sqrt(b) - 1))
    return worst


def check_partition_counts() -> float:
    return float(
        sum(len(partitions.enumerate_partitions(n)) != partitions.partition_count(n) for n in range(25))
    )


# -- specfun ------------------------------------------------------------------

def check_barnes_funceq() -> float:
    worst = 0.0
    for x in np.linspace(-9.85, 9.75, 29):  # never an integer
        for y in np.linspace(-9.9, 9.9, 21):
            z = complex(x, y)
            d = specfun.log_barnes_G(z + 1) - specfun.log_barnes_G(z) - specfun.log_gamma(z)
            worst = max(worst, abs(cmath.exp(d) - 1))
    return worst


def check_barnes_asymptotic_identity(sigma: float = 0.3) -> float:
    lg = specfun.log_barnes_G
    worst = 0.0
    for n in range(1, 6):
        s = sigma + n
        lhs = lg(1 + 2 * s) + lg(1 - 2 * s)
        rhs = (
            lg(1 - 2 * sigma)
            - lg(1 + 2 * sigma)
            + 2 * n * cmath.log(1j * math.sin(2 * math.pi * sigma) / math.pi)
            + 2 * lg(1 + 2 * s)
        )
        worst = max(worst, abs(cmath.exp(lhs - rhs) - 1))
    return worst


def check_dilog_derivative() -> float:
    rng = np.random.default_rng(SEED)
    h = 1e-5
    worst = 0.0
    for _ in range(20):
        z = 0.8 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
        fd = (specfun.dilog(z + h) - specfun.dilog(z - h)) / (2 * h)
        exact = -cmath.log(1 - z) / z
        worst = max(worst, abs(fd - exact))
    return worst


def li2_G_hat_gap(z: float) -> float:
    lhs = specfun.dilog(cmath.exp(2j * math.pi * z))
    rhs = (
        -2j * math.pi * specfun.log_G_hat(z)
        - 2j * math.pi * z * math.log(math.sin(math.pi * z) / math.pi)
        - math.pi**2 * z * (1 - z)
        + math.pi**2 / 6
    )
    return abs(lhs - rhs)


def check_li2_G_hat() -> float:
    return max(li2_G_hat_gap(z) for z in np.linspace(0.05, 0.95, 19))


# -- nekrasov -----------------------------------------------------------------

def closed_form_coefficients(sigma: complex) -> tuple[complex, complex, complex]:
    s2 = sigma * sigma
    return (
        1 / (2 * s2),
        (8 * s2 + 1) / (4 * s2 * (4 * s2 - 1) ** 2),
        (8 * s2 * s2 - 5 * s2 + 3) / (24 * s2 * (s2 - 1) ** 2 * (4 * s2 - 1) ** 2),
    )


def check_closed_form_coefficients() -> float:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(10):
        s = complex(rng.uniform(0.05, 0.45), rng.uniform(-0.5, 0.5))
        c = nekrasov.instanton_coefficients(s, 3)
        for k, ref in enumerate(closed_form_coefficients(s), start=1):
            worst = max(worst, abs(c[k] / ref - 1))
    return worst


def sample_bound_points(rng: np.random.Generator, n: int, min_L: float = 0.25):
    out = []
    while len(out) < n:
        s = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.0, 1.0))
        if nekrasov.lattice_distance(s) < min_L:
            continue
        t = 5 * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
        out.append((s, t))
    return out


def check_block_bound() -> float:
    """Largest |B| / exp(2|t|/L) - 1 (non-positive when the bound holds)."""
    rng = np.random.default_rng(SEED)
    worst = -1.0
    for s, t in sample_bound_points(rng, 100):
        p = nekrasov.BlockParams(s, t, 20)
        B = nekrasov.B_series(p).value
        worst = max(worst, abs(B) / math.exp(2 * abs(t) / p.L) - 1)
    return worst


def check_evenness() -> float:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for s, t in sample_bound_points(rng, 20):
        a = nekrasov.B_series(nekrasov.BlockParams(s, t, 12)).value
        b = nekrasov.B_series(nekrasov.BlockParams(-s, t, 12)).value
        worst = max(worst, abs(a / b - 1))
    return worst


# -- monodromy ----------------------------------------------------------------

def _generic(n):
    return sample_generic_points(np.random.default_rng(SEED), n)


def check_det_C() -> float:
    return max(abs(np.linalg.det(monodromy.build_matrices(s, e).connection_C) - 1) for s, e in _generic(50))


def check_auxrels() -> float:
    worst = 0.0
    P = monodromy.PAULI_1
    for s, e in _generic(50):
        M = monodromy.build_matrices(s, e)
        C = M.connection_C
        lhs = P @ C @ P
        mid = np.linalg.inv(M.S0_12) @ C @ M.Sinf_12
        S0_23 = P @ M.S0_12 @ P
        Sinf_23 = P @ M.Sinf_12 @ P
        right = S0_23 @ C @ np.linalg.inv(Sinf_23)
        worst = max(worst, np.max(np.abs(lhs - mid)), np.max(np.abs(lhs - right)))
    return float(worst)


def check_stokes() -> float:
    return max(
        abs(monodromy.build_matrices(s, e).stokes_a + 2j * cmath.cos(2 * math.pi * s)) for s, e in _generic(50)
    )


def check_b00_product() -> float:
    worst = 0.0
    for s, e in _generic(20):
        m = MonodromyPoint(s, e)
        worst = max(worst, abs(m.b00_plus * m.b00_minus + 4 * m.nu))
    return worst


def _fd(f, x, h=1e-5):
    return (f(x + h) - f(x - h)) / (2 * h)


def W_derivative_gaps(s: float, nu: float) -> tuple[float, float]:
    """|dW/dsigma - eta| and the distance of -i dW/dnu - rho from (1/2)Z."""
    eta = monodromy.eta_from_sigma_nu(s, nu)
    rho = monodromy.derive_rho(s, eta)
    d_sigma = _fd(lambda x: monodromy.generating_W(x, nu), s)
    d_nu = -1j * _fd(lambda x: monodromy.generating_W(s, x), nu)
    diff = 2 * (d_nu - rho)
    return abs(d_sigma - eta), abs(diff - round(diff.real)) / 2


def check_W_derivatives() -> float:
    pts = [(0.2, -0.3)] + [
        (s, monodromy.derive_nu(s, e).real) for s, e in sample_base_domain(np.random.default_rng(SEED), 10)
    ]
    return max(max(W_derivative_gaps(s, nu)) for s, nu in pts)


def check_cosiden() -> float:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for s, e in [(0.2, complex(monodromy.eta_from_sigma_nu(0.2, -0.3)))] + sample_base_domain(rng, 10):
        nu = monodromy.derive_nu(s, e)
        rho = monodromy.derive_rho(s, e)
        for sg in (1, -1):
            lhs = 2 * cmath.cos(math.pi * (s + e + sg * 0.5j * nu))
            rhs = cmath.exp(1j * math.pi * (sg * s - sg * e - 0.5j * nu - 4 * rho))
            worst = max(worst, abs(lhs - rhs))
    return worst


def derivative_fd_gaps(s: float, e: float, h: float = 1e-5) -> tuple[float, float, float]:
    nu = monodromy.derive_nu(s, e)
    eta_of = monodromy.eta_from_sigma_nu
    d1, d2, d3 = monodromy.derivative_table(s, e)
    fd1 = _fd(lambda x: eta_of(x, nu), s, h)
    fd2 = _fd(lambda x: eta_of(s, x), nu, h)
    # rho is compared through a continuous local branch: differences of log phases
    phase0 = monodromy.rho_phase(s, e)

    def rho_local(x):
        return cmath.log(monodromy.rho_phase(s, eta_of(s, x)) / phase0) / (4j * math.pi)

    fd3 = _fd(rho_local, nu, h)
    return abs(d1 - fd1), abs(d2 - fd2), abs(d3 - fd3)


def check_derivative_table() -> float:
    pts = [(0.2, 0.1)] + sample_base_domain(np.random.default_rng(SEED), 10)
    return max(max(derivative_fd_gaps(s, e)) for s, e in pts)


def check_closed_relation() -> float:
    pts = sample_base_domain(np.random.default_rng(SEED), 20)
    return max(abs(monodromy.derivative_table(s, e)[1] - 1j * monodromy.drho_dsigma(s, e)) for s, e in pts)


# -- tau_series ---------------------------------------------------------------

def check_sigma_form(n_points: int = 3) -> float:
    worst = 0.0
    trunc = tau_series.TruncationSpec(n_fourier=5, n_inst=20)
    for s, e in _generic(n_points):
        m = MonodromyPoint(s, e)
        for t in np.geomspace(0.01, 5, 6):
            res, scale = tau_series.sigma_form_residual(m, t, trunc)
            worst = max(worst, res / scale)
    return worst


def shas_gap(sigma: float = 0.3, eta: float = 0.1, r: float = 0.05) -> float:
    m = MonodromyPoint(sigma, eta)
    e_iu = 1 / tau_series.u_from_tau(m, r)
    lead = (
        -cmath.exp(4j * math.pi * eta)
        * cmath.exp(2 * specfun.log_gamma(1 - 2 * sigma) - 2 * specfun.log_gamma(2 * sigma))
        * (r / 8) ** (8 * sigma - 2)
    )
    return abs(e_iu / lead - 1)


# -- tau_asymptotics ----------------------------------------------------------

def check_elementary_kernel() -> float:
    worst = 0.0
    for r in np.linspace(1, 12, 45):
        g = tau_asymptotics.G_irregular(tau_asymptotics.LongKernelParams(0.0, r)).value
        worst = max(worst, abs(g / (r**0.25 * math.exp(r * r / 16)) - 1))
    return worst


def residual_trend(m: MonodromyPoint | None = None, r: float = 25.0) -> list[float]:
    m = m or MonodromyPoint(FIG1_SIGMA, FIG1_ETA)
    return [tau_asymptotics.sine_gordon_residual(m, r, order) for order in range(4)]


def check_residual_trend() -> float:
    res = residual_trend()
    return float(sum(b >= a for a, b in zip(res, res[1:])))


def tauper_gaps(m: MonodromyPoint, r: float = 7.0) -> list[float]:
    """Compare the n = +-1, +-2 kernels with the explicitly expanded amplitudes."""
    nu, phase = m.nu, m.rho_phase
    bp, bm = m.b00
    expected = {
        1: 1j * bp / 4,
        -1: 1j * bm / 4,
        2: -bp * bp * (nu + 1j) / 64,
        -2: -bm * bm * (nu - 1j) / 64,
    }
    base = tau_asymptotics.log_kernel_prefactor(nu, r)
    gaps = []
    for n, amp in expected.items():
        w = nu + 1j * n
        pref = cmath.exp(tau_asymptotics.log_kernel_prefactor(w, r) - base)
        bare = cmath.exp((w * w - nu * nu) / 2 * math.log(r) + (w - nu) * r)
        gaps.append(abs(phase**n * pref / bare / amp - 1))
    return gaps


def check_tauper() -> float:
    return max(max(tauper_gaps(MonodromyPoint(s, e))) for s, e in _generic(10))


# -- connection ---------------------------------------------------------------

def check_chi_elementary() -> float:
    return abs(connection.chi_formula(0.25, 0.25, 0.0) / connection.chi_elementary() - 1)


def check_chi_periodicity() -> float:
    worst = 0.0
    for s, e in _generic(20):
        nu = monodromy.derive_nu(s, e)
        worst = max(worst, abs(connection.chi_formula(s, e + 1, nu) / connection.chi_formula(s, e, nu) - 1))
    return worst


def check_chi_reflection() -> float:
    worst = 0.0
    for s, e in _generic(20):
        nu = monodromy.derive_nu(s, e)
        worst = max(worst, abs(connection.chi_formula(-s, -e, nu) / connection.chi_formula(s, e, nu) - 1))
    return worst


def check_chi_product() -> float:
    return max(connection.chi_product_check(s, e) for s, e in _generic(20))


def check_fig1_chi() -> float:
    m = MonodromyPoint(FIG1_SIGMA, FIG1_ETA)
    return connection.chi_numeric(m).rel_discrepancy


SUITES: dict[str, list[tuple[str, Callable[[], float], float]]] = {
    "partitions": [
        ("burnside_identity_n_le_12", check_burnside, 0.0),
        ("hook_length_vs_b_lambda_lambda", check_hook_vs_b, 1e-12),
        ("enumeration_counts_match_p(n)", check_partition_counts, 0.0),
    ],
    "specfun": [
        ("barnes_functional_equation", check_barnes_funceq, 1e-12),
        ("barnes_shift_identity_sigma_0.3", check_barnes_asymptotic_identity, 1e-10),
        ("dilog_derivative_fd", check_dilog_derivative, 1e-7),
        ("li2_vs_log_G_hat", check_li2_G_hat, 1e-10),
    ],
    "nekrasov": [
        ("closed_form_t1_t2_t3", check_closed_form_coefficients, 1e-12),
        ("block_bound_margin", check_block_bound, 0.0),
        ("evenness_in_sigma", check_evenness, 1e-12),
    ],
    "monodromy": [
        ("det_C", check_det_C, 1e-12),
        ("auxiliary_relations", check_auxrels, 1e-12),
        ("stokes_factors", check_stokes, 1e-12),
        ("b00_product", check_b00_product, 1e-12),
        ("W_derivatives_fd", check_W_derivatives, 1e-6),
        ("cos_identities", check_cosiden, 1e-10),
        ("derivative_table_fd", check_derivative_table, 1e-6),
        ("closed_one_form", check_closed_relation, 1e-10),
    ],
    "tau_series": [
        ("sigma_form_residual", check_sigma_form, 1e-8),
        ("short_distance_law_r_0.05", shas_gap, 1e-2),
    ],
    "tau_asymptotics": [
        ("elementary_kernel_nu_0", check_elementary_kernel, 1e-14),
        ("sine_gordon_residual_nonincreasing_steps", check_residual_trend, 0.0),
        ("periodic_pattern_amplitudes", check_tauper, 1e-10),
    ],
    "connection": [
        ("chi_elementary_value", check_chi_elementary, 1e-10),
        ("chi_eta_periodicity", check_chi_periodicity, 1e-9),
        ("chi_reflection", check_chi_reflection, 1e-9),
        ("chi_product_identity", check_chi_product, 1e-9),
        ("fig1_chi_numeric", check_fig1_chi, 1e-4),
    ],
}


def run_suite(name: str = "all") -> list[CheckResult]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {['all', *SUITES]}")
        for check_name, fn, tol in SUITES[suite]:
            out.append(CheckResult(suite, check_name, float(fn()), tol))
    return out
