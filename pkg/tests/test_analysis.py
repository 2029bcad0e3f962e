"""Log-coefficients, quiver series, closed forms, and the Euler form."""

from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given, settings, strategies as st

from tropvertex.analysis import (
    Framing,
    euler_form,
    euler_series,
    fuss_catalan_series,
    gw_coefficients,
    s_r_algebraic_check,
    semistable_exists,
    slope_one_series,
)
from tropvertex.permissible import R_eval, classify
from tropvertex.scatter import commutator, factorize
from tropvertex.series import UniSeries
from tropvertex.vertexgroup import generators


def test_log_coefficients_alternating_for_single_wall():
    # f = 1+z gives log f = sum (-1)^{k+1} z^k / k, so c^k = (-1)^{k+1} / k^2
    S, T = generators(1, 1, 10)
    f = factorize(commutator(S, T)).wall_function(1, 1)
    c = gw_coefficients(f, 1, 1)
    for k in range(1, 6):
        assert c[k] == Fraction((-1) ** (k + 1), k * k)
    assert c[99] == 0


def test_gw_requires_unit():
    with pytest.raises(ValueError):
        gw_coefficients(UniSeries(3, {0: Fraction(2)}), 1, 1)


def test_fuss_catalan_closed_form_and_equation():
    s2 = fuss_catalan_series(2, 8)
    # Catalan numbers
    assert [s2.coeff(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    for r in range(1, 5):
        assert s_r_algebraic_check(r, 12)
    assert fuss_catalan_series(0, 5) == UniSeries(5, {0: Fraction(1), 1: Fraction(1)})


def test_slope_one_series_known_coefficients():
    assert slope_one_series(1, 1, 5).coeffs == {0: Fraction(1), 1: Fraction(1)}
    s33 = slope_one_series(3, 3, 5)
    assert [s33.coeff(k) for k in range(6)] == [1, 9, 72, 570, 4554, 36855]
    s23 = slope_one_series(2, 3, 5)
    assert [s23.coeff(k) for k in range(6)] == [1, 6, 27, 110, 429, 1638]


def test_slope_one_matches_engine_for_two_two():
    S, T = generators(2, 2, 10)
    f = factorize(commutator(S, T)).wall_function(1, 1)
    # 1/(1-z)^4 is the square of the r=1 series squared: S_1 = 1/(1-z)
    assert f == slope_one_series(2, 2, 5)
    assert f == UniSeries.geometric(5).pow_int(4)


def test_euler_series_extraction():
    f = UniSeries(4, {0: Fraction(1), 1: Fraction(2), 2: Fraction(1)})  # (1+z)^2
    back = euler_series(f, 1, 2, 2, Framing.BACK)
    front = euler_series(f, 1, 2, 2, Framing.FRONT)
    assert back.chi == {1: Fraction(1)}
    assert front.chi == {1: Fraction(2), 2: Fraction(1)}
    assert back.all_integral() and front.all_integral()
    assert not euler_series(f, 1, 1, 3, Framing.BACK).integral(1)  # (1+z)^{2/3}


def test_euler_form_values():
    assert euler_form((1, 1), (1, 1), 2) == 0
    assert euler_form((1, 1), (1, 1), 3) == -1
    assert euler_form((2, 1), (1, 3), 2) == 2 * 1 + 1 * 3 - 2 * 2 * 3


def test_semistable_examples():
    assert semistable_exists((1, 1), 3)
    assert not semistable_exists((5, 2), 2)
    with pytest.raises(ValueError):
        semistable_exists((2, 4), 2)
    with pytest.raises(ValueError):
        semistable_exists((0, 0), 2)


@settings(max_examples=200)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=30),
    st.integers(min_value=1, max_value=30),
)
def test_quadratic_form_is_euler_form(m, a, b):
    # a^2 R_{m,m}(b/a) = <(a,b),(a,b)> / m
    assert R_eval(m, m, a, b) == Fraction(euler_form((a, b), (a, b), m), m)


@settings(max_examples=250)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=19),
    st.integers(min_value=1, max_value=19),
)
def test_semistable_iff_permissible(m, a, b):
    if gcd(a, b) != 1 or a + b > 20:
        return
    assert semistable_exists((a, b), m) == classify(m, m, a, b).permissible


def test_fuss_catalan_formula_terms():
    s = fuss_catalan_series(4, 6)
    for k in range(7):
        assert s.coeff(k) == Fraction(comb(4 * k, k), 3 * k + 1)
