"""One-dimensional fractional operators: frozen oracles, exactness classes,
composition, and validation.

Oracle values frozen below were computed independently from the closed-form
power rule Gamma(beta+1)/Gamma(beta-alpha+1) * (x-a)^(beta-alpha):
  * derivative of t of order 1/2 at x=1 (base 0):  2/sqrt(pi)
  * derivative of 1 of order 1/2 at x=1 (base 0):  1/sqrt(pi)
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcfrac import FracScheme, Segment, rl_derivative, rl_integral, rl_power_oracle
from bcfrac.errors import DomainError
from bcfrac.frac1d import LineFunction, derivative_nodes_weights, integral_nodes_weights
from bcfrac.quadrature import estimate_order

SEG = Segment(0.0, 1.0)
ALPHAS = (0.25, 0.5, 0.75)


# -- frozen oracle literals ---------------------------------------------------


def test_power_oracle_frozen_literals():
    assert rl_power_oracle(1, 0.5, 0.0, 1.0) == pytest.approx(1.1283791670955126, rel=1e-15)
    assert rl_power_oracle(0, 0.5, 0.0, 1.0) == pytest.approx(0.5641895835477563, rel=1e-15)
    assert rl_power_oracle(1, 0.5, 0.0, 1.0) == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-15)
    # beta = 0 is the constant rule (x-a)^(-alpha)/Gamma(1-alpha)
    for a in ALPHAS:
        x = 0.63
        assert rl_power_oracle(0, a, 0.0, x) == pytest.approx(
            x ** (-a) / math.gamma(1.0 - a), rel=1e-14
        )


def test_power_oracle_negative_order_is_integral_rule():
    # order -alpha gives the closed-form fractional integral of powers
    assert rl_power_oracle(0, -0.5, 0.0, 1.0) == pytest.approx(
        1.0 / math.gamma(1.5), rel=1e-14
    )


def test_power_oracle_validation():
    with pytest.raises(DomainError):
        rl_power_oracle(-1.0, 0.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        rl_power_oracle(0, 0.5, 0.0, 0.0)  # x must exceed a
    with pytest.raises(DomainError):
        rl_power_oracle(0.0, 1.0, 0.0, 0.5)  # Gamma pole at beta - alpha + 1 = 0


# -- exactness classes --------------------------------------------------------


@pytest.mark.parametrize("alpha", ALPHAS)
def test_derivative_constant_rule_exact(alpha):
    v = rl_derivative(lambda t: np.ones_like(t), SEG, alpha, 0.7, "a-plus", FracScheme(n=64))
    assert v == pytest.approx(rl_power_oracle(0, alpha, 0.0, 0.7), abs=1e-13)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("beta", [0, 1])
def test_integral_exact_on_linears(alpha, beta):
    # the product-trapezoid weights integrate the piecewise-linear
    # interpolant exactly, so polynomials of degree <= 1 carry no
    # discretization error at all
    v = rl_integral(lambda t: t**beta, SEG, alpha, 0.7, "a-plus", FracScheme(n=64))
    assert v == pytest.approx(rl_power_oracle(beta, -alpha, 0.0, 0.7), abs=1e-13)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("beta", [0, 1, 2])
def test_power_rule_agreement(alpha, beta):
    x = 0.7
    sch = FracScheme(n=2048)
    vd = rl_derivative(lambda t: t**beta, SEG, alpha, x, "a-plus", sch)
    wd = rl_power_oracle(beta, alpha, 0.0, x)
    assert abs(vd - wd) / (1.0 + abs(wd)) <= 1e-4
    vi = rl_integral(lambda t: t**beta, SEG, alpha, x, "a-plus", sch)
    wi = rl_power_oracle(beta, -alpha, 0.0, x)
    assert abs(vi - wi) / (1.0 + abs(wi)) <= 1e-6


# -- composition: derivative undoes the integral ------------------------------


def _compose_error(f, alpha: float, x: float, n: int) -> float:
    sch = FracScheme(n=n)

    def ifield(tt):
        tt = np.atleast_1d(np.asarray(tt, dtype=float))
        return np.asarray([rl_integral(f, SEG, alpha, float(ti), "a-plus", sch) for ti in tt])

    v = rl_derivative(ifield, SEG, alpha, x, "a-plus", sch)
    return abs(v - f(np.asarray([x]))[0])


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize(
    "f", [lambda t: np.ones_like(t), lambda t: t, lambda t: t**2], ids=["one", "t", "t2"]
)
def test_derivative_undoes_integral(alpha, f):
    assert _compose_error(f, alpha, 0.7, 256) <= 1e-3


def test_composition_refines_at_first_order_or_better():
    f = lambda t: t**2
    errs = [(1.0 / n, _compose_error(f, 0.5, 0.7, n)) for n in (64, 128, 256)]
    assert estimate_order(errs) >= 1.0


# -- structural identities -----------------------------------------------------


def test_linearity_is_exact():
    sch = FracScheme(n=256)
    f = lambda t: t**2
    g = lambda t: np.sin(t)
    combo = lambda t: 2.0 * f(t) + 3.0 * g(t)
    for op in (rl_derivative, rl_integral):
        v = op(combo, SEG, 0.5, 0.7, "a-plus", sch)
        w = 2.0 * op(f, SEG, 0.5, 0.7, "a-plus", sch) + 3.0 * op(g, SEG, 0.5, 0.7, "a-plus", sch)
        assert abs(v - w) <= 1e-12 * (1.0 + abs(w))


@pytest.mark.parametrize("alpha", ALPHAS)
def test_right_sided_mirrors_left_sided(alpha):
    # reflecting the function across the segment midpoint swaps the roles of
    # the two base points exactly, grid and weights included
    sch = FracScheme(n=512)
    g = lambda t: t**2
    f = lambda t: (1.0 - t) ** 2
    left = rl_derivative(g, SEG, alpha, 0.7, "a-plus", sch)
    right = rl_derivative(f, SEG, alpha, 0.3, "b-minus", sch)
    assert abs(left - right) <= 1e-12 * (1.0 + abs(left))
    left_i = rl_integral(g, SEG, alpha, 0.7, "a-plus", sch)
    right_i = rl_integral(f, SEG, alpha, 0.3, "b-minus", sch)
    assert abs(left_i - right_i) <= 1e-12 * (1.0 + abs(left_i))


def test_integral_vanishes_at_base_point():
    assert rl_integral(lambda t: t, SEG, 0.5, 0.0) == 0.0
    assert rl_integral(lambda t: t, SEG, 0.5, 1.0, "b-minus") == 0.0


def test_complex_valued_functions_supported():
    v = rl_integral(lambda t: np.exp(1j * t), SEG, 0.5, 0.7, "a-plus", FracScheme(n=256))
    assert np.iscomplexobj(v) and np.isfinite(v)
    d = rl_derivative(lambda t: np.exp(1j * t), SEG, 0.5, 0.7, "a-plus", FracScheme(n=256))
    assert np.isfinite(d)


def test_grading_clusters_without_losing_accuracy():
    w = rl_power_oracle(2, 0.5, 0.0, 0.7)
    for grading in (1.0, 2.0):
        v = rl_derivative(lambda t: t**2, SEG, 0.5, 0.7, "a-plus", FracScheme(n=512, grading=grading))
        assert abs(v - w) / abs(w) <= 1e-3


# -- nodes/weights contracts ---------------------------------------------------


def test_integral_nodes_weights_contract():
    t, w = integral_nodes_weights(0.0, 0.7, 0.5, 64, 1.0, "a-plus")
    assert t.shape == (65,) and w.shape == (65,)
    assert t[0] == 0.0 and t[-1] == pytest.approx(0.7)
    assert np.all(np.diff(t) > 0)
    # contracting against ones reproduces the closed-form integral of 1
    assert w @ np.ones_like(t) == pytest.approx(0.7**0.5 / math.gamma(1.5), abs=1e-14)


def test_derivative_nodes_weights_contract():
    t, w = derivative_nodes_weights(0.0, 0.7, 0.5, 64, 1.0, "a-plus")
    assert t.shape == (65,) and w.shape == (65,)
    assert np.all(np.isfinite(w))
    assert w @ np.ones_like(t) == pytest.approx(0.7**-0.5 / math.gamma(0.5), abs=1e-13)


def test_line_function_wrapper():
    lf = LineFunction(lambda t: 2.0 * t, label="double")
    assert lf.label == "double"
    np.testing.assert_allclose(lf(np.asarray([1.0, 2.0])), [2.0, 4.0])


# -- validation -----------------------------------------------------------------


def test_segment_validation():
    with pytest.raises(DomainError):
        Segment(1.0, 1.0)
    with pytest.raises(DomainError):
        Segment(2.0, 1.0)
    with pytest.raises(DomainError):
        Segment(float("nan"), 1.0)
    assert Segment(0.0, 2.0).length == 2.0


def test_scheme_validation():
    with pytest.raises(DomainError):
        FracScheme(n=8)
    with pytest.raises(DomainError):
        FracScheme(grading=0.5)
    with pytest.raises(DomainError):
        FracScheme(grading=5.0)
    with pytest.raises(DomainError):
        FracScheme(rule="simpson")


def test_operator_domain_validation():
    f = lambda t: t
    for bad in (0.0, 1.0, 1.2, -0.5):
        with pytest.raises(DomainError):
            rl_derivative(f, SEG, bad, 0.5)
    for bad in (0.0, 1.5, -0.5):
        with pytest.raises(DomainError):
            rl_integral(f, SEG, bad, 0.5)
    with pytest.raises(DomainError):
        rl_derivative(f, SEG, 0.5, 0.0)  # base point of the left derivative
    with pytest.raises(DomainError):
        rl_derivative(f, SEG, 0.5, 1.0, "b-minus")  # base point of the right derivative
    with pytest.raises(DomainError):
        rl_integral(f, SEG, 0.5, 1.5)  # outside the segment
    with pytest.raises(DomainError):
        rl_integral(f, SEG, 0.5, 0.5, "sideways")


# -- randomized power-rule agreement -------------------------------------------


@given(
    alpha=st.floats(min_value=0.1, max_value=0.9),
    x=st.floats(min_value=0.1, max_value=1.0),
)
def test_constant_rule_randomized(alpha, x):
    v = rl_derivative(lambda t: np.ones_like(t), SEG, alpha, x, "a-plus", FracScheme(n=64))
    assert abs(v - rl_power_oracle(0, alpha, 0.0, x)) <= 1e-10 * (1.0 + abs(v))


@given(
    alpha=st.floats(min_value=0.1, max_value=0.9),
    x=st.floats(min_value=0.1, max_value=1.0),
)
def test_linear_integral_randomized(alpha, x):
    v = rl_integral(lambda t: t, SEG, alpha, x, "a-plus", FracScheme(n=64))
    assert abs(v - rl_power_oracle(1, -alpha, 0.0, x)) <= 1e-10 * (1.0 + abs(v))
