import math

import numpy as np
import pytest
import scipy.special

from disktransform.specfun import (
    DomainError,
    bessel_j,
    bessel_zero,
    elliptic_e,
    elliptic_e_series,
    gamma,
    hyp2f1,
    pochhammer,
)

# First positive zeros of J_0..J_4, 4-decimal reference table.
J_ZEROS = [2.4048, 3.8317, 5.1356, 6.3802, 7.5883]


def test_gamma_integers():
    assert gamma(1.0) == 1.0
    assert gamma(5.0) == 24.0
    assert abs(gamma(10.0) - 362880.0) < 1e-6


def test_gamma_half_integers():
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    assert abs(gamma(1.5) - math.sqrt(math.pi) / 2) < 1e-14
    assert abs(gamma(2.5) - 3 * math.sqrt(math.pi) / 4) < 1e-13


def test_gamma_recurrence():
    for x in (0.3, 0.77, 1.9, 3.25):
        assert abs(gamma(x + 1) - x * gamma(x)) < 1e-12 * abs(gamma(x + 1))


def test_gamma_pole():
    with pytest.raises(DomainError):
        gamma(0.0)
    with pytest.raises(DomainError):
        gamma(-2.0)


def test_pochhammer():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(3.0, 4) == 3 * 4 * 5 * 6
    assert abs(pochhammer(0.5, 3) - 0.5 * 1.5 * 2.5) < 1e-15


@pytest.mark.parametrize("nu", [0, 1, 2, 3, 4])
def test_bessel_vs_scipy(nu):
    for x in np.linspace(0.0, 12.0, 49):
        ref = scipy.special.jv(nu, x)
        assert abs(bessel_j(nu, float(x)) - ref) < 5e-13


def test_bessel_at_zero():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j(5, 0.0) == 0.0


def test_bessel_large_argument_cancellation():
    # recurrence in float loses digits past x ~ 8; the rational path must not
    for x in (9.0, 15.0, 30.0):
        for nu in (0, 1, 6):
            assert abs(bessel_j(nu, x) - scipy.special.jv(nu, x)) < 1e-12


@pytest.mark.parametrize("d,ref", list(enumerate(J_ZEROS)))
def test_bessel_zero_table(d, ref):
    root = bessel_zero(d)
    assert abs(root - ref) < 5e-5
    assert abs(bessel_j(d, root)) < 1e-11


def test_bessel_zero_high_order():
    root = bessel_zero(20)
    assert abs(bessel_j(20, root)) < 1e-10
    assert root > 20  # j_nu > nu always


def test_bessel_zero_rejects():
    with pytest.raises(DomainError):
        bessel_zero(-1)
    with pytest.raises(DomainError):
        bessel_zero(21)


def test_hyp2f1_binomial_identity():
    # 2F1(a, b; b; x) = (1-x)^(-a)
    for a in (0.25, 1.0, 2.5):
        for x in (0.0, 0.3, 0.7, 0.8):
            assert abs(hyp2f1(a, 1.5, 1.5, x) - (1 - x) ** (-a)) < 1e-12
    assert abs(hyp2f1(0.7, 1.0, 1.0, 0.3) - 0.7 ** (-0.7)) < 1e-12


def test_hyp2f1_log_identity():
    # x * 2F1(1, 1; 2; x) = -log(1-x)
    for x in (0.1, 0.5, 0.9):
        assert abs(x * hyp2f1(1.0, 1.0, 2.0, x) + math.log1p(-x)) < 1e-12


def test_hyp2f1_gauss_point():
    """Value at x = 1 equals the gamma-quotient closed form."""
    a, b, c = 0.5, -0.5, 1.0
    ref = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
    assert abs(hyp2f1(a, b, c, 1.0) - ref) < 1e-10
    # q = 1 instance used by the p -> inf norm: 2F1(1/2, 1/2; 2; 1) = 8/pi - 2
    assert abs(2 * hyp2f1(0.5, -0.5, 1.0, 1.0) + hyp2f1(0.5, 0.5, 2.0, 1.0)
               - 8 / math.pi) < 1e-12


def test_hyp2f1_vs_scipy():
    for a, b, c in ((0.6, 0.6, 1.0), (0.95, -0.05, 1.0), (0.75, 0.75, 2.0)):
        for x in np.linspace(0, 0.95, 11):
            assert abs(hyp2f1(a, b, c, float(x)) - scipy.special.hyp2f1(a, b, c, x)) < 1e-11


def test_hyp2f1_divergent_at_one():
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, 1.5, 1.0)  # c - a - b < 0 diverges


def test_hyp2f1_outside_domain():
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.2)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, -0.1)  # no continuation to negative x


def test_elliptic_e_endpoints():
    assert abs(elliptic_e(0.0) - math.pi / 2) < 1e-14
    assert abs(elliptic_e(1.0) - 1.0) < 1e-10


@pytest.mark.parametrize("m", [-8.0, -4.0, -1.0, -0.5, 0.3, 0.9, 0.99])
def test_elliptic_e_vs_scipy(m):
    # parameter convention (not modulus): E(m) = int sqrt(1 - m sin^2)
    assert abs(elliptic_e(m) - scipy.special.ellipe(m)) < 1e-10


def test_elliptic_e_series_route():
    for m in (-0.8, -0.3, 0.2, 0.6):
        assert abs(elliptic_e_series(m) - elliptic_e(m)) < 1e-11


def test_elliptic_e_rejects_m_above_one():
    with pytest.raises(DomainError):
        elliptic_e(1.5)
