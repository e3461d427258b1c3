import math

import mpmath
import numpy as np
import pytest

from tedual import specfun
from tedual.scaled import NonFiniteError, ScaledComplex, ScaledReal

mpmath.mp.dps = 50


def close(got, expected, rtol, floor=0.0):
    return abs(got - expected) <= rtol * max(abs(expected), floor)


def test_scaled_round_trip():
    values = np.array([1.5, -3.25, 0.0, 1e-300, -1e300, 2.0 ** -1074])
    assert np.array_equal(ScaledReal(values).to_float(), values)


def test_scaled_mantissa_range():
    value = ScaledReal([3.0, -0.375, 0.0])
    assert list(value.mantissa) == [1.5, -1.5, 0.0]
    assert list(value.exponent) == [1, -2, 0]


def test_scaled_product_beyond_double_range():
    tiny = ScaledReal(1.5, -1500)
    huge = ScaledReal(1.25, 1400)
    assert (tiny * huge).to_float() == 1.5 * 1.25 * 2.0 ** -100
    assert float((tiny / huge).log2()) == pytest.approx(math.log2(1.2) - 2900)


def test_scaled_addition_aligns_exponents():
    total = ScaledReal(1.0, 40) + ScaledReal(1.0, 0)
    assert total.to_float() == 2.0 ** 40 + 1.0
    assert (ScaledReal(1.0, 3000) - ScaledReal(1.0, 3000)).is_zero()


def test_scaled_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ScaledReal(1.0) / ScaledReal(0.0)


def test_scaled_rejects_non_finite():
    with pytest.raises(NonFiniteError):
        ScaledReal(float('nan'))
    with pytest.raises(NonFiniteError):
        ScaledReal([1.0, float('inf')])


def test_scaled_complex_matches_double_arithmetic():
    a, b = 1.3 - 0.4j, -0.2 + 2.1j
    sa, sb = ScaledComplex.from_complex(a), ScaledComplex.from_complex(b)
    for got, expected in ((sa + sb, a + b), (sa - sb, a - b), (sa * sb, a * b), (sa / sb, a / b),
                          (sa.conjugate(), a.conjugate()), (2.0 * sa, 2.0 * a)):
        assert abs(complex(got) - expected) <= 1e-14 * abs(expected)


def test_scaled_complex_underflow_policy():
    value = ScaledComplex(ScaledReal(1.0, -1200), ScaledReal(1.0, -1100))
    assert complex(value.to_complex(-1000)) == 0j


def test_j_small_argument_limit():
    assert float(specfun.bessel_j(0, 1e-300)) == 1.0
    assert abs(float(specfun.bessel_j(1, 1e-300))) < 1e-299


def test_j0_first_zero():
    assert abs(float(specfun.bessel_j(0, 2.404825557695773))) < 1e-12


@pytest.mark.parametrize('m,x', [(0, 1.7), (3, 0.5), (10, 4.0), (40, 10.0), (100, 60.0), (60, 30.0)])
def test_j_against_mpmath(m, x):
    expected = float(mpmath.besselj(m, x))
    assert close(float(specfun.bessel_j(m, x)), expected, 1e-12)


@pytest.mark.parametrize('m,x', [(7, 25.0), (2, 300.0)])
def test_j_oscillatory_against_mpmath(m, x):
    expected = float(mpmath.besselj(m, x))
    assert close(float(specfun.bessel_j(m, x)), expected, 1e-11, floor=1e-2)


@pytest.mark.parametrize('m,x', [(0, 0.1), (1, 1.0), (5, 2.0), (0, 30.0), (20, 10.0), (3, 45.0)])
def test_y_against_mpmath(m, x):
    expected = float(mpmath.bessely(m, x))
    assert close(float(specfun.bessel_y(m, x)), expected, 1e-11, floor=1e-2)


def test_j_prime_of_order_zero():
    assert float(specfun.bessel_j_prime(0, 1.7)) == pytest.approx(-float(specfun.bessel_j(1, 1.7)), abs=1e-13)


def test_j_recurrence_residual():
    j = specfun.j_sequence(41, 10.0).to_float()
    residual = j[39] + j[41] - (2 * 40 / 10.0) * j[40]
    assert abs(residual) < 1e-12 * abs(j[40])


def test_wronskian_pinned_value():
    j, jp = float(specfun.bessel_j(5, 2.0)), float(specfun.bessel_j_prime(5, 2.0))
    y, yp = float(specfun.bessel_y(5, 2.0)), float(specfun.bessel_y_prime(5, 2.0))
    assert j * yp - jp * y == pytest.approx(2.0 / (math.pi * 2.0), rel=1e-12)


def test_wronskian_over_orders_and_arguments():
    worst = 0.0
    for x in np.linspace(0.1, 60.0, 60):
        j, y = specfun.jy_sequences(311, x)
        jp, yp = specfun.derivative(j, x), specfun.derivative(y, x)
        wronskian = (j[:311] * yp - jp * y[:311]).to_float()
        worst = max(worst, float(np.max(np.abs(wronskian * math.pi * x / 2.0 - 1.0))))
    assert worst < 1e-10


def test_hankel_asymptotics():
    x = 50.0
    expected = math.sqrt(2.0 / (math.pi * x)) * np.exp(1j * (x - math.pi / 4.0))
    assert abs(complex(specfun.hankel1(0, x)) - expected) < 0.01 * abs(expected)


def test_hankel_prime_finite_difference():
    h = 1e-6
    expected = (complex(specfun.hankel1(2, 3.0 + h)) - complex(specfun.hankel1(2, 3.0 - h))) / (2 * h)
    assert abs(complex(specfun.hankel1_prime(2, 3.0)) - expected) < 1e-8


def test_exponents_at_order_300():
    assert float(specfun.bessel_j(300, 5.5).log2()) == pytest.approx(-1603, abs=2)
    assert float(specfun.bessel_y(300, 5.5).log2()) == pytest.approx(1592, abs=2)
    expected = float(mpmath.log(abs(mpmath.besselj(300, 5.5)), 2))
    assert abs(float(specfun.bessel_j(300, 5.5).log2()) - expected) < 1e-10


@pytest.mark.parametrize('m,x', [(200, 5.0), (300, 5.5), (150, 2.0)])
def test_scaled_products_against_mpmath(m, x):
    product = specfun.bessel_j(m, x) * specfun.bessel_y(m, x)
    expected = mpmath.besselj(m, x) * mpmath.bessely(m, x)
    assert abs(float(product.to_float()) / float(expected) - 1.0) < 1e-10


def test_j_zeros_are_simple():
    m = 12
    grid = np.linspace(m, m + 50, 2001)
    values = np.array([float(specfun.bessel_j(m, x)) for x in grid])
    crossings = grid[:-1][np.sign(values[:-1]) != np.sign(values[1:])]
    assert len(crossings) > 10
    assert np.all(np.diff(crossings) > 0.5)


def test_i_pinned_value():
    assert float(specfun.bessel_i(5, 2.0)) == pytest.approx(0.009825679323131702, abs=1e-14)
    assert float(specfun.bessel_i(0, 1e-300)) == 1.0


def test_i_recurrence_residual():
    i = specfun.i_sequence(11, 4.0).to_float()
    residual = i[9] - i[11] - (2 * 10 / 4.0) * i[10]
    assert abs(residual) < 1e-12 * abs(i[10])


def test_i_large_argument():
    expected = mpmath.besseli(3, 800.0)
    assert abs(float(specfun.bessel_i(3, 800.0).log2()) - float(mpmath.log(expected, 2))) < 1e-10


def test_i_prime_against_mpmath():
    expected = float(mpmath.besseli(4, 2.5, derivative=1))
    assert float(specfun.bessel_i_prime(4, 2.5)) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize('m,x', [(401, 1.0), (0, 0.0), (0, -1.0), (3, 2e3), (1.5, 1.0)])
def test_domain_errors(m, x):
    with pytest.raises(specfun.DomainError):
        specfun.bessel_j(m, x)
