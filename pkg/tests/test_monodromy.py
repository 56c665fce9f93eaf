import cmath
import math

import numpy as np
import pytest

from pain3.errors import DivergentRhoError, DomainError, SingularMonodromyError
from pain3.monodromy import (
    PAULI_1,
    MonodromyPoint,
    build_matrices,
    derivative_table,
    derive_nu,
    derive_rho,
    drho_dsigma,
    eta_from_sigma_nu,
    generating_W,
    rho_phase,
)
from pain3.tau_asymptotics import long_u_coefficients
from pain3.verify import (
    W_derivative_gaps,
    derivative_fd_gaps,
    sample_base_domain,
    sample_generic_points,
)

s2p = lambda x: cmath.sin(2 * math.pi * x)


@pytest.fixture
def generic(rng):
    return sample_generic_points(rng, 50)


def test_nu_examples(fig1_point):
    assert derive_nu(0.31, 0.31) == 0
    assert abs(derive_nu(0.25, 0.25)) < 1e-15
    nu = fig1_point.nu
    assert round(nu.real, 2) == 0.34 and round(nu.imag, 2) == 0.29


def test_nu_and_rho_relations(generic):
    for s, e in generic:
        m = MonodromyPoint(s, e)
        assert abs(cmath.exp(math.pi * m.nu) - s2p(m.eta) / s2p(m.sigma)) < 1e-13 * abs(s2p(m.eta) / s2p(m.sigma))
        assert -1 < m.nu.imag <= 1
        lhs = cmath.exp(4j * math.pi * m.rho)
        assert abs(lhs - s2p(m.eta) / s2p(m.sigma + m.eta)) < 1e-13 * abs(lhs)


def test_second_eta_solution_gives_same_nu(generic):
    for s, e in generic:
        assert abs(derive_nu(s, 0.5 - e) - derive_nu(s, e)) < 1e-13


def test_branch_coherence(generic):
    for s, e in generic:
        nu = derive_nu(s, e)
        assert abs(cmath.exp(math.pi * nu) * s2p(s) - s2p(e)) < 1e-13 * max(1, abs(s2p(e)))


def test_rho_examples(fig1_point):
    assert rho_phase(0.2, 0.1) == pytest.approx(math.sin(0.2 * math.pi) / math.sin(0.6 * math.pi))
    with pytest.raises(DivergentRhoError):
        derive_rho(0.25, 0.25)
    rho = fig1_point.rho
    assert abs(cmath.exp(4j * math.pi * (rho + 0.5)) - fig1_point.rho_phase) < 1e-13


def test_singular_sigma():
    with pytest.raises(SingularMonodromyError):
        derive_nu(0.0, 0.1)


def test_normalization_window():
    m = MonodromyPoint(-0.2 + 0.1j, 0.9)
    assert m.branch_log["reflected"]
    assert m.sigma == 0.2 - 0.1j
    assert -0.5 < m.eta.real <= 0.5
    assert abs(m.eta - 0.1) < 1e-15
    with pytest.raises(DomainError):
        MonodromyPoint(0.7, 0.1)
    raw = MonodromyPoint(0.7, 0.1, normalize=False)
    assert raw.sigma == 0.7


def test_json_roundtrip(fig1_point):
    m = MonodromyPoint.from_json({"sigma": [0.12, -0.25], "eta": [0.23, 0.42]})
    assert m == fig1_point
    rec = m.as_record()
    assert set(rec) >= {"sigma", "eta", "nu", "rho", "b00_plus", "b00_minus", "branch_log"}
    assert MonodromyPoint(0.25, 0.25).as_record()["rho"] is None


def test_b00_product(rng):
    for s, e in sample_generic_points(rng, 20):
        m = MonodromyPoint(s, e)
        assert abs(m.b00_plus * m.b00_minus + 4 * m.nu) < 1e-12


def test_b00_vanishes_at_sigma_equals_eta():
    m = MonodromyPoint(0.21, 0.21)
    assert abs(m.b00_plus) < 1e-15
    assert abs(m.b00_minus) > 0.1
    coeffs = long_u_coefficients(m.nu, m.b00_plus, m.b00_minus)
    assert all(abs(v) < 1e-15 for key, v in coeffs.items() if key[0] == 1)
    assert abs(coeffs[(-1, 1, 0)]) > 0


def test_matrix_identities(generic):
    for s, e in generic:
        M = build_matrices(s, e)
        C = M.connection_C
        assert abs(np.linalg.det(C) - 1) < 1e-12
        assert abs(M.stokes_a + 2j * cmath.cos(2 * math.pi * s)) < 1e-12
        assert M.stokes_a == M.stokes_b
        lhs = PAULI_1 @ C @ PAULI_1
        assert np.max(np.abs(lhs - np.linalg.inv(M.S0_12) @ C @ M.Sinf_12)) < 1e-12
        np.testing.assert_allclose(build_matrices(-s, -e).connection_C, C, atol=1e-12)


def test_generating_function_derivatives(rng):
    d_sigma, d_nu = W_derivative_gaps(0.2, -0.3)
    assert d_sigma < 1e-6 and d_nu < 1e-6
    for s, e in sample_base_domain(rng, 10):
        assert max(W_derivative_gaps(s, derive_nu(s, e).real)) < 1e-6


def test_W_outside_base_domain():
    with pytest.raises(DomainError):
        generating_W(0.2 + 0.3j, -0.3)


def test_cos_identities():
    s, nu = 0.2, -0.3
    e = eta_from_sigma_nu(s, nu)
    rho = derive_rho(s, e)
    for sg in (1, -1):
        lhs = 2 * cmath.cos(math.pi * (s + e + sg * 0.5j * nu))
        rhs = cmath.exp(1j * math.pi * (sg * s - sg * e - 0.5j * nu - 4 * rho))
        assert abs(lhs - rhs) < 1e-10


def test_derivative_table(rng):
    assert max(derivative_fd_gaps(0.2, 0.1)) < 1e-6
    for s, e in sample_base_domain(rng, 10):
        d = derivative_table(s, e)
        assert abs(d[1] - 1j * drho_dsigma(s, e)) < 1e-10
    assert derivative_table(0.3, 0.0)[1] == 0
