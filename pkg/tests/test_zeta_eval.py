"""zeta/eta evaluators, their alternative representations, and cross-route
agreement. Expected values are frozen from the independent oracles below."""

import math

import numpy as np
import pytest

from zetalab import (
    EvalConfig,
    eta,
    eta_integral,
    euler_product,
    log_deriv_zeta,
    zeta,
    zeta_floor_integral,
    zeta_reflect,
)
from zetalab.arith import cached_table
from zetalab.errors import DomainError, EtaFactorZero, PoleAtOne, QuadratureFailure
from zetalab.zeta_eval import FACTOR_ZERO_SPACING, _zeta_strip_quotient, DEFAULT_CONFIG

PI2_OVER_6 = math.pi**2 / 6.0


def zeta_sum_oracle(k: int, n: int = 10**6) -> float:
    """Direct summation of n^-k with an integral-comparison tail."""
    m = np.arange(1.0, n + 1.0)
    partial = float(np.sum(m ** (-float(k))))
    # tail: 1/((k-1) N^(k-1)) - 1/(2 N^k) + k/(12 N^(k+1))
    tail = 1.0 / ((k - 1) * n ** (k - 1)) - 0.5 / n**k + k / (12.0 * n ** (k + 1))
    return partial + tail


def eta_avg_oracle(s: complex, n_terms: int = 420, passes: int = 360) -> complex:
    """Iterated averaging of the alternating partial sums."""
    k = np.arange(1.0, n_terms + 1.0)
    terms = (-1.0) ** (k + 1.0) * np.exp(-s * np.log(k))
    ps = np.cumsum(terms)
    for _ in range(passes):
        ps = 0.5 * (ps[:-1] + ps[1:])
    return complex(ps[-1])


def test_oracles_are_sane():
    assert abs(zeta_sum_oracle(2) - PI2_OVER_6) < 1e-13
    assert abs(eta_avg_oracle(1.0 + 0j) - math.log(2.0)) < 1e-13


def test_zeta_at_two():
    assert abs(zeta(2.0).value - PI2_OVER_6) < 1e-12


def test_zeta_at_zero():
    assert abs(zeta(0.0).value - (-0.5)) < 1e-10


def test_zeta_trivial_zero():
    assert abs(zeta(-2.0).value) < 1e-12


def test_zeta_pole_raises():
    with pytest.raises(PoleAtOne):
        zeta(1.0)
    with pytest.raises(PoleAtOne):
        zeta(1.0 + 5e-13j)


def test_zeta_method_tags_follow_dispatch():
    assert zeta(2.0).method == "direct-series"
    assert zeta(0.5 + 3.0j).method == "accelerated-eta"
    assert zeta(-1.5).method == "functional-equation"


def test_eta_factor_zero_raises():
    for k in (1, 2, -3):
        s = complex(1.0, k * FACTOR_ZERO_SPACING)
        with pytest.raises(EtaFactorZero):
            zeta(s + 1e-10)


def test_zeta_near_factor_zero_uses_average():
    # Oracle: 4-point mean of the plain quotient on a much larger circle,
    # where the quotient itself is solid; the mean matches zeta(center) to
    # O(radius^4).
    s = complex(1.0, FACTOR_ZERO_SPACING) + 1e-8
    big_r = 1e-3
    probes = [_zeta_strip_quotient(s + big_r * o, DEFAULT_CONFIG).value for o in (1, 1j, -1, -1j)]
    oracle = sum(probes) / 4.0
    z = zeta(s)
    assert abs(z.value - oracle) < 1e-6
    assert abs(z.value - oracle) <= z.abs_err_est + 1e-9


def test_eta_at_one():
    assert abs(eta(1.0).value - math.log(2.0)) < 1e-13


def test_eta_domain_error():
    with pytest.raises(DomainError):
        eta(0.0)
    with pytest.raises(DomainError):
        eta(-0.5 + 3.0j)


def test_eta_conjugate_symmetry():
    s = 0.7 + 9.0j
    assert abs(eta(s.conjugate()).value - eta(s).value.conjugate()) < 1e-13


def test_eta_near_first_critical_zero():
    assert abs(eta(complex(0.5, 14.134725)).value) < 1e-5


@pytest.mark.parametrize(
    "s",
    [0.05 + 0.5j, 0.1 + 2.0j, 0.3 + 0j, 0.5 + 3.0j, 1.5 + 1.0j, 2.0 + 0j, 0.9 - 2.5j],
)
def test_eta_committed_error_bound(s):
    e = eta(s)
    assert abs(e.value - eta_avg_oracle(s)) <= e.abs_err_est


def test_eta_integral_at_two():
    assert abs(eta_integral(2.0).value - math.pi**2 / 12.0) < 1e-8


def test_eta_integral_matches_series_at_half():
    assert abs(eta_integral(0.5).value - eta(0.5).value) < 1e-8


def test_eta_integral_strip_bound():
    # |integral_0^inf x^(a-1)/(e^x+1) dx| < 1/(a(e+1)) + (1/a)(1/2 - 1/(e+1)) + 1/e
    from zetalab import gamma

    a = 0.5
    integral = eta_integral(a).value * gamma(a).value
    bound = 1.0 / (a * (math.e + 1.0)) + (1.0 / a) * (0.5 - 1.0 / (math.e + 1.0)) + math.exp(-1.0)
    assert abs(integral) < bound


def test_eta_integral_domain():
    with pytest.raises(DomainError):
        eta_integral(3.5)
    with pytest.raises(DomainError):
        eta_integral(-1.0 + 2.0j)


def test_eta_integral_quadrature_budget():
    with pytest.raises(QuadratureFailure):
        eta_integral(0.5 + 5.0j, EvalConfig(quadrature_tol=1e-30))


def test_floor_integral_at_two():
    assert abs(zeta_floor_integral(2.0).value - PI2_OVER_6) < 1e-8


def test_floor_integral_pole_residual():
    s = 1.0 + 1e-6
    assert abs((s - 1.0) * zeta_floor_integral(s).value - 1.0) < 1e-4


def test_floor_integral_magnitude_bound():
    # |integral_1^inf {x} x^(-s-1) dx| < (1/a) sum (n^-a - (n+1)^-a) = 1/a at a=1.5
    s = 1.5 + 3.0j
    res = zeta_floor_integral(s)
    integral = (s / (s - 1.0) - res.value) / s
    assert abs(integral) < 2.0 / 3.0


def test_floor_integral_domain():
    with pytest.raises(DomainError):
        zeta_floor_integral(1.0 + 3.0j)
    with pytest.raises(DomainError):
        zeta_floor_integral(0.5)


def test_euler_product_single_factor():
    assert abs(euler_product(3.0, 2).value - 8.0 / 7.0) < 1e-15


def test_euler_product_at_two():
    assert abs(euler_product(2.0, 10**5).value - PI2_OVER_6) < 1e-5


def test_euler_product_monotone_on_real_axis():
    vals = [abs(euler_product(2.0, b).value) for b in (10, 100, 1000, 10000)]
    assert vals == sorted(vals)
    assert vals[-1] < PI2_OVER_6


def test_euler_product_domain():
    with pytest.raises(DomainError):
        euler_product(1.0 + 2.0j, 100)
    with pytest.raises(ValueError):
        euler_product(2.0, 1)


def test_euler_product_committed_bound():
    rng = np.random.default_rng(23)
    for _ in range(20):
        s = complex(rng.uniform(1.5, 4.0), rng.uniform(-10, 10))
        p = euler_product(s, 10**4)
        assert abs(p.value - zeta(s).value) <= p.abs_err_est + 1e-12


def test_log_deriv_matches_central_difference():
    s = 3.0
    ld = log_deriv_zeta(s, 10**5)
    h = 1e-5
    oracle = (zeta(s + h).value - zeta(s - h).value) / (2.0 * h) / zeta(s).value
    assert abs(ld.value - oracle) < 1e-6


def test_log_deriv_empty_series():
    assert log_deriv_zeta(3.0, 1).value == 0.0


def test_log_deriv_domain():
    with pytest.raises(DomainError):
        log_deriv_zeta(0.9, 100)


def test_pole_weight_near_one():
    # Re[eps * zeta'/zeta(1+eps)] -> -1; derivative by Richardson-combined
    # central differences.
    eps = 1e-4
    s = 1.0 + eps
    h = 1e-6
    d1 = (zeta(s + h).value - zeta(s - h).value) / (2.0 * h)
    d2 = (zeta(s + h / 2).value - zeta(s - h / 2).value) / h
    deriv = (4.0 * d2 - d1) / 3.0
    w = (eps * deriv / zeta(s).value).real
    assert abs(w - (-1.0)) < 1e-3


def test_reflect_is_identity_in_strip():
    s = 0.5 + 3.0j
    assert abs(zeta_reflect(s).value - zeta(s).value) < 1e-9


def test_reflect_trivial_zero_exact():
    assert abs(zeta_reflect(-2.0).value) < 1e-10
    assert zeta_reflect(-2.0).value == 0.0


def test_route_agreement_floor_and_euler():
    rng = np.random.default_rng(41)
    for _ in range(100):
        s = complex(rng.uniform(1.0 + 1e-3, 3.0), rng.uniform(-20, 20))
        z = zeta(s)
        f = zeta_floor_integral(s)
        assert abs(z.value - f.value) < 1e-6
        p = euler_product(s, 10**6)
        # near Re(s)=1 the prime tail dominates; the committed estimate
        # covers it (the flat 1e-6 would need alpha >~ 1.8)
        assert abs(z.value - p.value) < 1e-6 + p.abs_err_est


def test_conjugate_symmetry_all_regions():
    rng = np.random.default_rng(2)
    boxes = [(1.6, 4.0), (0.05, 1.45), (-5.0, -0.05)]
    for lo, hi in boxes:
        for _ in range(34):
            s = complex(rng.uniform(lo, hi), rng.uniform(0.1, 30.0))
            assert abs(zeta(s.conjugate()).value - zeta(s).value.conjugate()) < 1e-12


def test_mobius_inverse_series():
    table = cached_table(10**6)
    n = np.arange(1.0, table.bound + 1.0)
    series = complex(np.dot(table.mu[1:].astype(np.float64), n**-3.0))
    assert abs(series * zeta(3.0).value - 1.0) < 1e-4


def test_euler_lower_bound_random_points():
    from zetalab.arith import primes_upto

    log_p = np.log(primes_upto(10**6).astype(np.float64))
    rng = np.random.default_rng(9)
    for _ in range(50):
        alpha = rng.uniform(1.1, 4.0)
        s = complex(alpha, rng.uniform(0.0, 30.0))
        lower = math.exp(-float(np.sum(np.exp(-alpha * log_p))))
        assert abs(zeta(s).value) >= lower


def test_dual_route_error_budgets():
    for s in [2.0 + 5.0j, 1.7 - 12.0j, 3.5 + 0.3j]:
        z = zeta(s)
        f = zeta_floor_integral(s)
        assert abs(z.value - f.value) <= z.abs_err_est + f.abs_err_est


def test_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(target_abs_err=1e-16)
    with pytest.raises(ValueError):
        EvalConfig(quadrature_tol=0.0)
    with pytest.raises(ValueError):
        EvalConfig(series_max_terms=0)
