"""Complex special functions in logarithmic form.

``log_barnes_G`` is built from the large-argument expansion of log G(1+x)
in the half-plane Re z >= 20 and the functional equation
G(z) = G(z+1) / Gamma(z) applied along the horizontal path from z to z+N.
Every piece along that path is analytic off the negative real axis, so the
result is the analytic continuation of the real logarithm on z > 0 into
C minus (-inf, 0].  Values are only needed through exponentials and
differences, which makes the 2*pi*i ambiguity on the cut harmless.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sp

from .errors import PoleError

# zeta'(-1) = 1/12 - log(Glaisher's constant)
ZETA_PRIME_M1 = -0.16542114370045092921391966024278
LOG_2PI = math.log(2.0 * math.pi)
SHIFT_TARGET = 20.0
_N_ASYM = 14

_bern = sp.bernoulli(2 * _N_ASYM + 2)
# B_{2k+2} / (4 k (k+1)) for k = 1..N
_ASYM_COEFFS = np.array(
    [_bern[2 * k + 2] / (4.0 * k * (k + 1)) for k in range(1, _N_ASYM + 1)]
)


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def log_gamma(z):
    """Principal log Gamma (scipy's ``loggamma``), refusing the poles."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    return complex(sp.loggamma(z))


def _log_G_asymptotic(w):
    """log G(w) for Re w >= SHIFT_TARGET (array friendly)."""
    x = w - 1.0
    logx = np.log(x)
    x2 = x * x
    out = 0.5 * x2 * logx - 0.75 * x2 + 0.5 * x * LOG_2PI - logx / 12.0 + ZETA_PRIME_M1
    inv2 = 1.0 / x2
    power = inv2
    for c in _ASYM_COEFFS:
        out = out + c * power
        power = power * inv2
    return out


def _log_G_array(z: np.ndarray) -> np.ndarray:
    n_shift = int(max(0.0, math.ceil(SHIFT_TARGET - float(np.min(z.real)))))
    out = _log_G_asymptotic(z + n_shift)
    for k in range(n_shift):
        out = out - sp.loggamma(z + k)
    return out


def _log_G_positive_integer(n: int) -> float:
    # G(n) = prod_{k=1}^{n-2} k!
    return math.fsum(math.lgamma(k + 1) for k in range(1, n - 1))


def log_barnes_G(z):
    """log G(z) with G(1) = 1 and G(z+1) = Gamma(z) G(z).

    Accepts a scalar or an array. Non-positive integers are zeros of G and
    raise :class:`PoleError`.
    """
    if np.ndim(z) == 0:
        z = complex(z)
        if _is_nonpositive_integer(z):
            raise PoleError(f"G has a zero at {z.real:g}")
        if z.imag == 0.0 and z.real == math.floor(z.real) and z.real < 200:
            return complex(_log_G_positive_integer(int(z.real)))
        return complex(_log_G_array(np.array([z]))[0])
    z = np.asarray(z, dtype=complex)
    bad = (z.imag == 0) & (z.real <= 0) & (z.real == np.floor(z.real))
    if np.any(bad):
        raise PoleError("G has zeros at non-positive integers")
    return _log_G_array(z)


def barnes_G(z) -> complex:
    z = complex(z)
    if _is_nonpositive_integer(z):
        return 0j
    return complex(np.exp(log_barnes_G(z)))


def log_G_hat(z):
    """log of G(1+z)/G(1-z).

    Vanishes at z = 0. Off the real axis the two log G pieces never meet their
    cuts along the segment [0, z], so this is the straight-line continuation
    from the origin; on (-1, 1) it is real.  Positive integers are poles.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0 and z.real == math.floor(z.real):
        raise PoleError(f"G_hat has a pole at {z.real:g}")
    if z.imag == 0.0 and z.real <= -1.0 and z.real == math.floor(z.real):
        raise PoleError(f"G_hat vanishes at {z.real:g}")
    if z == 0:
        return 0j
    return log_barnes_G(1.0 + z) - log_barnes_G(1.0 - z)


def G_hat(z) -> complex:
    z = complex(z)
    if z.imag == 0.0 and z.real <= -1.0 and z.real == math.floor(z.real):
        return 0j
    return complex(np.exp(log_G_hat(z)))


def dilog(z) -> complex:
    """Principal Li_2(z); on the cut (1, inf) the value below the cut is returned."""
    z = complex(z)
    if z == 1:
        return complex(math.pi**2 / 6.0)
    return complex(sp.spence(1.0 - z))
