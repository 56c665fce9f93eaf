import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pain3.errors import ConvergenceError, PoleError
from pain3.nekrasov import (
    BlockParams,
    B_series,
    F_block,
    b_factor,
    instanton_coefficients,
    lattice_distance,
    block_tail_bound,
)
from pain3.partitions import Partition, enumerate_partitions
from pain3.specfun import log_barnes_G
from pain3.verify import closed_form_coefficients, sample_bound_points

EMPTY = Partition(())


def test_b_factor_examples():
    assert b_factor(EMPTY, EMPTY, 0.37) == 1
    assert b_factor(Partition((1,)), EMPTY, 0.37) == pytest.approx(0.74)
    assert b_factor(Partition((2, 1)), Partition((2, 1)), 0.0) == pytest.approx(9)


def _b_direct(lam, mu, s):
    # straight transcription of the double product over cells
    lt, mt = lam.transpose(), mu.transpose()
    out = 1
    for k, l in lam.cells():
        out *= lt.part(l) - k + mu.part(k) - l + 1 + 2 * s
    for k, l in mu.cells():
        out *= mt.part(l) - k + lam.part(k) - l + 1 - 2 * s
    return out


def test_b_factor_against_direct_product():
    s = 0.21 + 0.13j
    for n in range(5):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(4 - n if n <= 4 else 0):
                assert b_factor(lam, mu, s) == pytest.approx(_b_direct(lam, mu, s), rel=1e-13)


def test_closed_form_coefficients(rng):
    for _ in range(10):
        s = complex(rng.uniform(0.05, 0.45), rng.uniform(-0.5, 0.5))
        c = instanton_coefficients(s, 3)
        assert c[0] == 1
        for k, ref in enumerate(closed_form_coefficients(s), start=1):
            assert abs(c[k] / ref - 1) < 1e-12


def test_zero_order_and_zero_t():
    assert B_series(BlockParams(0.3 + 0.1j, 2.0, 0)).value == 1
    assert B_series(BlockParams(0.3 + 0.1j, 0.0, 15)).value == 1


def test_block_bound(rng):
    for s, t in sample_bound_points(rng, 100):
        p = BlockParams(s, t, 20)
        assert abs(B_series(p).value) <= math.exp(2 * abs(t) / p.L)


@settings(max_examples=40, deadline=None)
@given(
    st.floats(0.05, 0.45),
    st.floats(-0.5, 0.5),
    st.floats(0.0, 3.0),
    st.floats(-math.pi, math.pi),
)
def test_evenness_in_sigma(x, y, mod, arg):
    s, t = complex(x, y), mod * cmath.exp(1j * arg)
    a = B_series(BlockParams(s, t, 12)).value
    b = B_series(BlockParams(-s, t, 12)).value
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_truncation_monotonicity(rng):
    pts = [(s, t * 2 / 5) for s, t in sample_bound_points(rng, 20)]
    for s, t in pts:
        for n in range(4, 15):
            prev = B_series(BlockParams(s, t, n))
            nxt = B_series(BlockParams(s, t, n + 1))
            assert abs(nxt.value - prev.value) <= prev.err_estimate * (1 + 1e-12)


def test_partial_sums_agree_within_tail(rng):
    for s, t in sample_bound_points(rng, 10):
        vals = {n: B_series(BlockParams(s, t, n)) for n in (10, 15, 20)}
        assert abs(vals[10].value - vals[20].value) <= vals[10].err_estimate
        assert abs(vals[15].value - vals[20].value) <= vals[15].err_estimate


def test_tail_bound_shape():
    assert block_tail_bound(0.0, 0.3, 5) == 0
    x = 2.0
    # exp(x) P(n+1, x) equals the remainder of the exponential series
    rem = math.exp(x) - sum(x**k / math.factorial(k) for k in range(6))
    assert block_tail_bound(0.25, 0.25, 5) == pytest.approx(rem, rel=1e-12)


def test_leading_monomial_slope():
    s = 0.3
    t1, t2 = 1e-10, 1e-9
    f1 = F_block(BlockParams(s, t1)).value
    f2 = F_block(BlockParams(s, t2)).value
    slope = math.log(abs(f2) / abs(f1)) / math.log(t2 / t1)
    assert slope == pytest.approx(0.09, abs=1e-6)
    norm = math.exp(-(log_barnes_G(1.6) + log_barnes_G(0.4)).real)
    assert abs(f1 / (t1**0.09 * norm) - 1) < 1e-5


def test_F_block_branch_of_t():
    s = 0.2 + 0.1j
    t = 0.5
    a = F_block(BlockParams(s, t, 10, arg_t=0.0)).value
    b = F_block(BlockParams(s, t, 10, arg_t=2 * math.pi)).value
    assert abs(b / a - cmath.exp(2j * math.pi * s * s)) < 1e-12


def test_degenerate_sigma_refused():
    assert lattice_distance(0.5) == 0
    with pytest.raises((ConvergenceError, PoleError)):
        B_series(BlockParams(0.5 + 1e-9, 1.0))


def test_coefficients_even_in_sigma():
    a = instanton_coefficients(0.17 + 0.3j, 8)
    b = instanton_coefficients(-0.17 - 0.3j, 8)
    np.testing.assert_allclose(a, b, rtol=1e-12)
