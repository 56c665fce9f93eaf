"""Coordinates on the monodromy manifold and the maps between them.

The short-distance pair (sigma, eta) and the long-distance pair (nu, rho) are
linked by

    exp(pi nu)      = sin 2 pi eta / sin 2 pi sigma,
    exp(4 pi i rho) = sin 2 pi eta / sin 2 pi (sigma + eta).

nu is taken on the principal logarithm, giving Im nu in (-1, 1].  rho is only
meaningful modulo 1/2; downstream code uses exp(4 pi i rho) exclusively.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import InitVar, dataclass, field
from functools import cached_property

import numpy as np

from .errors import DivergentRhoError, DomainError, SingularMonodromyError
from .specfun import dilog, log_gamma

_SINGULAR_EPS = 1e-14
TWO_PI = 2.0 * math.pi


def _sin2pi(x: complex) -> complex:
    return cmath.sin(TWO_PI * x)


def _nonzero(value: complex, what: str, exc=SingularMonodromyError) -> complex:
    if abs(value) < _SINGULAR_EPS:
        raise exc(f"{what} vanishes")
    return value


def derive_nu(sigma: complex, eta: complex) -> complex:
    s_sigma = _nonzero(_sin2pi(sigma), "sin 2 pi sigma")
    s_eta = _nonzero(_sin2pi(eta), "sin 2 pi eta")
    # principal log: Im in (-pi, pi], hence Im nu in (-1, 1]
    return cmath.log(s_eta / s_sigma) / math.pi


def rho_phase(sigma: complex, eta: complex) -> complex:
    """exp(4 pi i rho) = sin 2 pi eta / sin 2 pi (sigma + eta)."""
    denom = _nonzero(_sin2pi(sigma + eta), "sin 2 pi (sigma + eta)", DivergentRhoError)
    return _sin2pi(eta) / denom


def derive_rho(sigma: complex, eta: complex) -> complex:
    """Principal-log representative of rho (defined modulo 1/2)."""
    phase = rho_phase(sigma, eta)
    if phase == 0:
        raise SingularMonodromyError("sin 2 pi eta vanishes")
    return cmath.log(phase) / (4j * math.pi)


def derive_b00(sigma: complex, eta: complex, nu: complex | None = None) -> tuple[complex, complex]:
    """Leading long-distance amplitudes (b00+, b00-) of u(r)."""
    if nu is None:
        nu = derive_nu(sigma, eta)
    s_eta = _nonzero(_sin2pi(eta), "sin 2 pi eta")
    out = []
    for sign in (1, -1):
        log_mag = (
            math.pi * nu / 2
            - sign * 1j * math.pi / 4
            + (1 + sign * 2j * nu) * math.log(2.0)
            + log_gamma(1 - sign * 1j * nu)
            - 0.5 * math.log(TWO_PI)
        )
        out.append(-cmath.exp(log_mag) * _sin2pi(sigma - sign * eta) / s_eta)
    return out[0], out[1]


@dataclass(frozen=True)
class MonodromyPoint:
    """Monodromy data (sigma, eta) with lazily derived (nu, rho, b00+-).

    With ``normalize`` (the default) the point is moved into the window
    0 <= Re sigma <= 1/2, -1/2 < Re eta <= 1/2 using the reflection
    (sigma, eta) -> (-sigma, -eta) and integer shifts of eta; both leave the
    tau function unchanged.  Shifting sigma by integers would multiply tau by
    a phase, so a sigma that cannot be reflected into the window is refused.
    """

    sigma: complex
    eta: complex
    normalize: InitVar[bool] = True
    branch_log: dict = field(default_factory=dict, compare=False)

    def __post_init__(self, normalize):
        sigma, eta = complex(self.sigma), complex(self.eta)
        log = {"reflected": False, "eta_shift": 0, "nu_log": "principal"}
        if normalize:
            if sigma.real < 0:
                sigma, eta = -sigma, -eta
                log["reflected"] = True
            if not 0 <= sigma.real <= 0.5:
                raise DomainError(
                    f"Re sigma = {sigma.real:g} cannot be brought into [0, 1/2] by reflection"
                )
            shift = math.ceil(eta.real - 0.5)
            eta -= shift
            log["eta_shift"] = -shift
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "branch_log", log)

    @cached_property
    def nu(self) -> complex:
        return derive_nu(self.sigma, self.eta)

    @cached_property
    def rho(self) -> complex:
        return derive_rho(self.sigma, self.eta)

    @cached_property
    def rho_phase(self) -> complex:
        return rho_phase(self.sigma, self.eta)

    @cached_property
    def b00(self) -> tuple[complex, complex]:
        return derive_b00(self.sigma, self.eta, self.nu)

    @property
    def b00_plus(self) -> complex:
        return self.b00[0]

    @property
    def b00_minus(self) -> complex:
        return self.b00[1]

    def as_record(self) -> dict:
        rec = {"sigma": _pair(self.sigma), "eta": _pair(self.eta), "nu": _pair(self.nu)}
        try:
            rec["rho"] = _pair(self.rho)
        except DivergentRhoError:
            rec["rho"] = None
        rec["b00_plus"] = _pair(self.b00_plus)
        rec["b00_minus"] = _pair(self.b00_minus)
        rec["branch_log"] = dict(self.branch_log)
        return rec

    @classmethod
    def from_json(cls, obj: dict) -> "MonodromyPoint":
        return cls(complex(*obj["sigma"]), complex(*obj["eta"]))


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


@dataclass(frozen=True)
class MonodromyMatrices:
    connection_C: np.ndarray
    stokes_a: complex
    stokes_b: complex

    @property
    def S0_12(self) -> np.ndarray:
        return np.array([[1, self.stokes_a], [0, 1]], dtype=complex)

    @property
    def Sinf_12(self) -> np.ndarray:
        return np.array([[1, 0], [self.stokes_b, 1]], dtype=complex)


PAULI_1 = np.array([[0, 1], [1, 0]], dtype=complex)


def build_matrices(sigma: complex, eta: complex) -> MonodromyMatrices:
    s_sigma = _nonzero(_sin2pi(sigma), "sin 2 pi sigma")
    C = np.array(
        [
            [_sin2pi(eta), -1j * _sin2pi(eta + sigma)],
            [1j * _sin2pi(eta - sigma), _sin2pi(eta)],
        ]
    ) / s_sigma
    a = -2j * cmath.cos(TWO_PI * sigma)
    return MonodromyMatrices(C, a, a)


def eta_from_sigma_nu(sigma: complex, nu: complex) -> complex:
    """The principal solution eta = arcsin(exp(pi nu) sin 2 pi sigma) / 2 pi."""
    return cmath.asin(cmath.exp(math.pi * nu) * _sin2pi(sigma)) / TWO_PI


def in_base_domain(sigma: complex, nu: complex, tol: float = 0.05) -> bool:
    """Neighbourhood of 0 < eta < sigma < 1/4, nu < 0 where W is defined."""
    eta = eta_from_sigma_nu(sigma, nu)
    return (
        abs(complex(sigma).imag) <= tol
        and abs(complex(nu).imag) <= tol
        and abs(eta.imag) <= tol
        and -tol < eta.real < complex(sigma).real + tol
        and complex(sigma).real < 0.25 + tol
        and complex(nu).real < tol
    )


def generating_W(sigma: complex, nu: complex) -> complex:
    """Generating function of the canonical map (sigma, eta) -> (nu, rho).

    Only the principal-branch form is implemented, valid near the base domain
    0 < eta < sigma < 1/4, nu < 0; elsewhere a :class:`DomainError` is raised.
    """
    sigma, nu = complex(sigma), complex(nu)
    if not in_base_domain(sigma, nu):
        raise DomainError(f"(sigma, nu) = ({sigma}, {nu}) is outside the base domain of W")
    eta = eta_from_sigma_nu(sigma, nu)
    w1 = -cmath.exp(2j * math.pi * (sigma + eta - 0.5j * nu))
    w2 = -cmath.exp(-2j * math.pi * (sigma + eta + 0.5j * nu))
    for w in (w1, w2):
        if abs(w) >= 1.0:
            raise DomainError("dilogarithm argument left the unit disk")
    total = dilog(w1) + dilog(w2) - (TWO_PI * eta) ** 2 + (math.pi * nu) ** 2
    return total / (8 * math.pi**2)


def derivative_table(sigma: complex, eta: complex) -> tuple[complex, complex, complex]:
    """(d eta/d sigma at fixed nu, d eta/d nu at fixed sigma, d rho/d nu at fixed sigma)."""
    s2s, s2e = _sin2pi(sigma), _sin2pi(eta)
    c2s, c2e = cmath.cos(TWO_PI * sigma), cmath.cos(TWO_PI * eta)
    s_sum = _sin2pi(sigma + eta)
    for val, what in ((s2s, "sin 2 pi sigma"), (c2e, "cos 2 pi eta"), (s_sum, "sin 2 pi (sigma+eta)")):
        _nonzero(val, what)
    deta_dsigma = (c2s / s2s) * (s2e / c2e)
    deta_dnu = (s2e / c2e) / 2
    drho_dnu = s2s / (4j * c2e * s_sum)
    return deta_dsigma, deta_dnu, drho_dnu


def drho_dsigma(sigma: complex, eta: complex) -> complex:
    """d rho / d sigma at fixed nu, from differentiating exp(4 pi i rho) directly."""
    deta_dsigma = derivative_table(sigma, eta)[0]
    cot_eta = cmath.cos(TWO_PI * eta) / _sin2pi(eta)
    cot_sum = cmath.cos(TWO_PI * (sigma + eta)) / _sin2pi(sigma + eta)
    return (cot_eta * deta_dsigma - cot_sum * (1 + deta_dsigma)) / 2j
