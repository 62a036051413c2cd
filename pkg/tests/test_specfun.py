"""Gamma, reciprocal Gamma, half-angle cosine, and the xi reflection factor."""

import cmath
import math

import numpy as np
import pytest

from zetalab import gamma, half_cos, recip_gamma_euler, xi_factor, zeta
from zetalab.errors import Overflow, PoleAtNonPositiveInteger

SQRT_PI = 1.7724538509055160273


def test_gamma_factorial():
    assert abs(gamma(5).value - 24.0) < 24.0 * 1e-12


def test_gamma_half_vs_euler_product_oracle():
    # Oracle: truncated Euler product with Richardson extrapolation in the
    # truncation length (error ~ c/T, so 2*v(2T) - v(T) cancels the c/T term).
    v1 = 1.0 / recip_gamma_euler(0.5, 500_000).value
    v2 = 1.0 / recip_gamma_euler(0.5, 1_000_000).value
    extrapolated = 2.0 * v2 - v1
    assert abs(extrapolated - SQRT_PI) < 1e-9
    assert abs(gamma(0.5).value - SQRT_PI) < 1e-12


def test_gamma_recurrence():
    s = 0.3 + 2.0j
    ratio = gamma(s + 1.0).value / (s * gamma(s).value)
    assert abs(ratio - 1.0) < 1e-10


@pytest.mark.parametrize("bad", [0.0, -1.0, -5.0, complex(-3.0, 1e-13), -7.0 + 0j])
def test_gamma_pole_raises(bad):
    with pytest.raises(PoleAtNonPositiveInteger):
        gamma(bad)


def test_gamma_conjugate_symmetry():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 200:
        s = complex(rng.uniform(-10, 10), rng.uniform(-20, 20))
        k = round(s.real)
        if k <= 0 and abs(s - k) < 1e-6:
            continue
        g = gamma(s).value
        gc = gamma(s.conjugate()).value
        assert abs(gc - g.conjugate()) <= 1e-12 * abs(g)
        checked += 1


def test_gamma_never_zero():
    for re in np.linspace(-9.5, 9.5, 20):
        for im in np.linspace(-19.0, 19.0, 10):
            assert abs(gamma(complex(re, im)).value) > 0.0


def test_gamma_error_commitment_via_recurrence():
    # |Gamma(s+1) - s Gamma(s)| should be explained by the committed bounds.
    rng = np.random.default_rng(5)
    for _ in range(50):
        s = complex(rng.uniform(0.5, 15), rng.uniform(-30, 30))
        a = gamma(s + 1.0)
        b = gamma(s)
        resid = abs(a.value - s * b.value)
        assert resid <= a.abs_err_est + abs(s) * b.abs_err_est + 1e-290


def test_recip_gamma_euler_zero_at_nonpositive_integers():
    assert recip_gamma_euler(-3.0, 10).value == 0.0
    assert recip_gamma_euler(-3.0, 1000).value == 0.0
    assert recip_gamma_euler(0.0, 5).value == 0.0


def test_recip_gamma_euler_at_one():
    assert abs(recip_gamma_euler(1.0, 200).value - 1.0) < 1e-10


def test_recip_gamma_euler_converges():
    target = 1.0 / gamma(2.5).value
    r = recip_gamma_euler(2.5, 10**6)
    assert abs(r.value - target) < 1e-5
    assert abs(r.value - target) <= r.abs_err_est


def test_recip_gamma_euler_monotone_error_decay():
    g = gamma(2.5).value
    errs = [abs(recip_gamma_euler(2.5, t).value * g - 1.0) for t in (10**3, 10**4, 10**5)]
    assert errs[0] > errs[1] > errs[2]


def test_recip_gamma_euler_validates_terms():
    with pytest.raises(ValueError):
        recip_gamma_euler(2.0, 0)


@pytest.mark.parametrize("s", [1.0, -3.0, 5.0, -7.0])
def test_half_cos_exact_zeros_at_odd_integers(s):
    assert half_cos(s) == 0.0


def test_half_cos_matches_generic_cosine():
    rng = np.random.default_rng(3)
    for _ in range(100):
        s = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
        ref = cmath.cos(0.5 * math.pi * s)
        assert abs(half_cos(s) - ref) <= 1e-12 * (1.0 + abs(ref))


def test_half_cos_conjugate_symmetry_bit_exact():
    for s in [0.4 + 7.0j, -2.3 + 1.5j, 3.7 - 11.0j, 0.5 + 0.25j]:
        assert half_cos(s.conjugate()) == half_cos(s).conjugate()


def test_half_cos_overflow_guard():
    with pytest.raises(Overflow):
        half_cos(complex(0.0, 700.0 / math.pi + 1.0))


def test_xi_conjugate_symmetry():
    s = 0.3 + 4.0j
    a = xi_factor(s.conjugate()).value
    b = xi_factor(s).value.conjugate()
    assert abs(a - b) < 1e-12


def test_xi_at_two_matches_zeta_ratio():
    # zeta(1-s) = xi(s) zeta(s) at s = 2 gives zeta(-1)/zeta(2).
    lhs = xi_factor(2.0).value
    rhs = zeta(-1.0).value / zeta(2.0).value
    assert abs(lhs - rhs) < 1e-10
    assert abs(lhs - (-1.0 / (2.0 * math.pi**2))) < 1e-12


def test_xi_exact_zero_at_three():
    assert xi_factor(3.0).value == 0.0


def test_xi_functional_equation():
    rng = np.random.default_rng(17)
    for _ in range(30):
        s = complex(rng.uniform(1.6, 6.0), rng.uniform(-20, 20))
        xi = xi_factor(s)
        lhs = zeta(1.0 - s).value
        rhs = xi.value * zeta(s).value
        assert abs(lhs - rhs) < 1e-9 * (1.0 + abs(lhs))
