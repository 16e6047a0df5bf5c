"""Four-axis fractional operators on product rectangles and the reconstruction
identity on a product ball.

Closed-form references used below (per component, base corner (x0, y0),
evaluation point q + i r, orders (ax, ay)):
  * derivative of the constant field:  th*(q-x0)^(-ax)/Gamma(1-ax)
                                      + ph*(r-y0)^(-ay)/Gamma(1-ay)
  * integral of the constant field:    (q-x0)^(1-ax)/Gamma(2-ax)
                                      + (r-y0)^(1-ay)/Gamma(2-ay)
  * complementary derivative of 1:     (q-x0)^(ax-1)/Gamma(ax)
                                      + (r-y0)^(ay-1)/Gamma(ay)
  * mixed term of 1: the product of each axis prefactor with the
    complementary-order integral of 1 along the other axis.
"""

import math

import numpy as np
import pytest

from bcfrac import (
    AlphaVec,
    BCBall,
    BCNumber,
    BCProductField,
    CField,
    DomainError,
    FracEvalPoint,
    FracScheme,
    HyperbolicNumber,
    Rect2,
    Rect4,
    WeightPairBC,
    calibrate_c_hat,
    di_residuals,
    frac_bp_parts,
    frac_bp_reconstruct,
    frac_bp_residual,
    frac_D,
    frac_gauss_residual,
    frac_I,
    frac_I_component,
    frac_P,
    frac_T,
    get_field,
    mixed_point_sum,
    rl_power_oracle,
)

RECT = Rect4(Rect2(0.0, 1.0, 0.0, 1.0), Rect2(0.0, 1.0, 0.0, 1.0))
ALPHA = AlphaVec(0.5, 0.5, 0.5, 0.5)
ALPHA_MIXED = AlphaVec(0.3, 0.6, 0.45, 0.7)
WTS = WeightPairBC.constant(1, 1, 1j, 1j)
W = BCNumber(0.52347 + 0.47911j, 0.52347 + 0.47911j)
Z = BCNumber(0.7 + 0.6j, 0.55 + 0.8j)
POINT = FracEvalPoint(W, Z)
ZERO = BCProductField(
    CField(lambda z: np.zeros_like(z)), CField(lambda z: np.zeros_like(z)), label="zero"
)


def _cte(dist: float, order: float) -> float:
    return dist ** (-order) / math.gamma(1.0 - order)


def _int_one(dist: float, order: float) -> float:
    # fractional integral of 1 of order `order` at distance `dist`
    return dist**order / math.gamma(order + 1.0)


# -- dataclass validation -----------------------------------------------------


def test_alpha_vec_validation():
    with pytest.raises(DomainError):
        AlphaVec(0.0, 0.5, 0.5, 0.5)
    with pytest.raises(DomainError):
        AlphaVec(0.5, 1.0, 0.5, 0.5)
    with pytest.raises(DomainError):
        AlphaVec(0.5, 0.5, -0.2, 0.5)
    assert ALPHA.pair(1) == (0.5, 0.5)
    assert ALPHA_MIXED.pair(2) == (0.45, 0.7)
    assert ALPHA_MIXED.as_tuple == (0.3, 0.6, 0.45, 0.7)


def test_rect4_accessors():
    assert RECT.base == (0.0, 0.0, 0.0, 0.0)
    assert RECT.contains(Z)
    assert not RECT.contains(BCNumber(1.5 + 0.5j, 0.5 + 0.5j))


def test_eval_point_validation():
    with pytest.raises(DomainError):
        FracEvalPoint(BCNumber(2 + 2j, 0.5 + 0.5j), Z).validate(RECT)
    with pytest.raises(DomainError):
        FracEvalPoint(W, BCNumber(0.5 + 0.5j, -1 + 0.5j)).validate(RECT)
    assert POINT.validate(RECT) is POINT


# -- closed forms on the constant field ------------------------------------------


def test_derivative_of_constant_field():
    got = frac_D(get_field("one"), POINT, ALPHA_MIXED, WTS, RECT)
    for which, zl in ((1, Z.z1), (2, Z.z2)):
        ax, ay = ALPHA_MIXED.pair(which)
        want = _cte(zl.real, ax) + 1j * _cte(zl.imag, ay)
        gl = got.z1 if which == 1 else got.z2
        assert gl == pytest.approx(want, rel=1e-12)


def test_integral_of_constant_field():
    got = frac_I(get_field("one"), POINT, ALPHA_MIXED, RECT)
    for which, zl in ((1, Z.z1), (2, Z.z2)):
        ax, ay = ALPHA_MIXED.pair(which)
        want = _int_one(zl.real, 1.0 - ax) + _int_one(zl.imag, 1.0 - ay)
        gl = got.z1 if which == 1 else got.z2
        assert gl == pytest.approx(want, rel=1e-12)


def test_integral_vanishes_at_base_corner():
    corner = BCNumber(0j, 0j)
    got = frac_I(get_field("one"), FracEvalPoint(W, corner), ALPHA, RECT)
    assert got == BCNumber(0, 0)


def test_integral_linearity():
    f3 = BCProductField(CField(lambda z: 3.0 * z), CField(lambda z: 3.0 * z), label="3z")
    a = frac_I(f3, POINT, ALPHA, RECT)
    b = frac_I(get_field("z"), POINT, ALPHA, RECT)
    assert abs(a - 3.0 * b) <= 1e-12 * (1.0 + abs(a))


def test_complementary_derivative_of_constant_field():
    got = frac_P(get_field("one"), Z, ALPHA_MIXED, RECT)
    for which, zl in ((1, Z.z1), (2, Z.z2)):
        ax, ay = ALPHA_MIXED.pair(which)
        want = zl.real ** (ax - 1.0) / math.gamma(ax) + zl.imag ** (ay - 1.0) / math.gamma(ay)
        gl = got.z1 if which == 1 else got.z2
        assert gl == pytest.approx(want, rel=1e-12)


def test_mixed_term_of_constant_field():
    got = frac_T(get_field("one"), POINT, ALPHA_MIXED, RECT)
    for which, zl in ((1, Z.z1), (2, Z.z2)):
        ax, ay = ALPHA_MIXED.pair(which)
        want = (
            zl.real ** (ax - 1.0) / math.gamma(ax) * _int_one(zl.imag, 1.0 - ay)
            + zl.imag ** (ay - 1.0) / math.gamma(ay) * _int_one(zl.real, 1.0 - ax)
        )
        gl = got.z1 if which == 1 else got.z2
        assert gl == pytest.approx(want, rel=1e-12)


def test_mixed_term_linearity():
    f3 = BCProductField(CField(lambda z: 3.0 * z), CField(lambda z: 3.0 * z), label="3z")
    a = frac_T(f3, POINT, ALPHA, RECT)
    b = frac_T(get_field("z"), POINT, ALPHA, RECT)
    assert abs(a - 3.0 * b) <= 1e-12 * (1.0 + abs(a))


# -- oracle decomposition on the coordinate field -----------------------------------


def test_derivative_of_coordinate_field_by_power_oracle():
    # the x-restriction of f(z)=z through anchor W is t + i*Im(W); its
    # fractional derivative decomposes into power-rule oracle values
    got = frac_D(get_field("z"), POINT, ALPHA, WTS, RECT, scheme=FracScheme(n=2048))
    for which, (wl, zl) in ((1, (W.z1, Z.z1)), (2, (W.z2, Z.z2))):
        ax, ay = ALPHA.pair(which)
        dx = rl_power_oracle(1, ax, 0.0, zl.real) + 1j * wl.imag * rl_power_oracle(
            0, ax, 0.0, zl.real
        )
        dy = wl.real * rl_power_oracle(0, ay, 0.0, zl.imag) + 1j * rl_power_oracle(
            1, ay, 0.0, zl.imag
        )
        want = dx + 1j * dy  # theta_l = 1, phi_l = i
        gl = got.z1 if which == 1 else got.z2
        assert abs(gl - want) / (1.0 + abs(want)) <= 1e-6


def test_integral_of_coordinate_field_by_power_oracle():
    got = frac_I(get_field("z"), POINT, ALPHA, RECT)
    for which, (wl, zl) in ((1, (W.z1, Z.z1)), (2, (W.z2, Z.z2))):
        ax, ay = ALPHA.pair(which)
        ix = rl_power_oracle(1, -(1.0 - ax), 0.0, zl.real) + 1j * wl.imag * rl_power_oracle(
            0, -(1.0 - ax), 0.0, zl.real
        )
        iy = wl.real * rl_power_oracle(0, -(1.0 - ay), 0.0, zl.imag) + 1j * rl_power_oracle(
            1, -(1.0 - ay), 0.0, zl.imag
        )
        want = ix + iy
        gl = got.z1 if which == 1 else got.z2
        assert abs(gl - want) / (1.0 + abs(want)) <= 1e-12


def test_integral_component_field_matches_frac_I():
    sch = FracScheme(n=256)
    i1 = frac_I_component(get_field("z"), ALPHA, W, RECT, 1, sch)
    full = frac_I(get_field("z"), POINT, ALPHA, RECT, sch)
    assert complex(i1(np.asarray([Z.z1]))[0]) == pytest.approx(full.z1, rel=1e-12)


def test_mixed_point_sum_direct():
    got = mixed_point_sum(get_field("z"), W, Z)
    for which, (wl, zl) in ((1, (W.z1, Z.z1)), (2, (W.z2, Z.z2))):
        want = (zl.real + 1j * wl.imag) + (wl.real + 1j * zl.imag)
        gl = got.z1 if which == 1 else got.z2
        assert gl == pytest.approx(want, rel=1e-14)


# -- factorization residuals ----------------------------------------------------------


@pytest.mark.parametrize("name", ["one", "z"])
def test_factorization_residuals_small(name):
    r1, r2 = di_residuals(get_field(name), POINT, ALPHA, WTS, RECT, FracScheme(n=1024))
    assert r1 <= 1e-2
    assert r2 <= 1e-2


def test_factorization_residuals_zero_field():
    r1, r2 = di_residuals(ZERO, POINT, ALPHA, WTS, RECT, FracScheme(n=256))
    assert r1 == 0.0 and r2 == 0.0


# -- Gauss-type identity on the rectangle ------------------------------------------------


def test_gauss_identity_constant_field():
    res = frac_gauss_residual(
        get_field("one"), W, ALPHA, WTS, RECT, FracScheme(n=1024), nx=32, ny=32, n_per_side=64
    )
    assert res <= 5e-2


def test_gauss_identity_zero_field():
    res = frac_gauss_residual(ZERO, W, ALPHA, WTS, RECT, FracScheme(n=256))
    assert res <= 1e-14


def test_gauss_identity_anchor_validation():
    with pytest.raises(DomainError):
        frac_gauss_residual(get_field("one"), BCNumber(2 + 2j, 0.5 + 0.5j), ALPHA, WTS, RECT)


# -- reconstruction on the product ball ----------------------------------------------------

BALL = BCBall(
    BCNumber(0.5 + 0.5j, 0.5 + 0.5j),
    HyperbolicNumber(0.498, 0.498),
    n_boundary=256,
    nr=16,
    nth=64,
)
Q = BCNumber(0.5 + 0.5j, 0.5 + 0.5j)
BP_SCHEME = FracScheme(n=256)


@pytest.fixture(scope="module")
def parts_one():
    return frac_bp_parts(
        get_field("one"), W, Q, ALPHA, WTS, RECT, BALL, BP_SCHEME, n_kernel=1024
    )


def test_reconstruction_calibration_is_self_consistent(parts_one):
    c = calibrate_c_hat(parts_one)
    assert frac_bp_residual(parts_one, c) <= 1e-12


def test_reconstruction_constant_near_minus_i(parts_one):
    # measured law for these weights: the normalization approaches -i, the
    # inverse Jacobian sign of the classical pair on each component
    c = calibrate_c_hat(parts_one)
    for cl in c:
        assert abs(cl - (-1j)) <= 5e-2


def test_reconstruction_constant_transfers_to_coordinate_field(parts_one):
    c = calibrate_c_hat(parts_one)
    parts_z = frac_bp_parts(get_field("z"), W, Q, ALPHA, WTS, RECT, BALL, BP_SCHEME, n_kernel=1024)
    assert frac_bp_residual(parts_z, c) <= 5e-2


def test_reconstruction_full_runner_zero_field():
    res = frac_bp_reconstruct(
        ZERO,
        W,
        Q,
        BALL.center,
        BALL.radius,
        ALPHA,
        WTS,
        RECT,
        BP_SCHEME,
        n_boundary=BALL.n_boundary,
        nr=BALL.nr,
        nth=BALL.nth,
        n_kernel=512,
        c_hat=(-1j, -1j),
    )
    assert res.c_hat == (-1j, -1j)
    assert abs(res.lhs) == 0.0
    assert res.residual <= 1e-10


def test_reconstruction_validation():
    with pytest.raises(DomainError):  # non-constant weights
        varying = WeightPairBC(
            WTS.pair1,
            __import__("bcfrac").PsiPair(lambda z: z.real, lambda z: 1j * np.ones_like(z)),
        )
        frac_bp_parts(get_field("one"), W, Q, ALPHA, varying, RECT, BALL, BP_SCHEME)
    with pytest.raises(DomainError):  # Q outside the ball margin
        frac_bp_parts(
            get_field("one"), W, BCNumber(0.99 + 0.5j, 0.5 + 0.5j), ALPHA, WTS, RECT, BALL
        )
    with pytest.raises(DomainError):  # ball pokes out of the rectangle
        fat = BCBall(Q, HyperbolicNumber(0.6, 0.6), n_boundary=256, nr=16, nth=64)
        frac_bp_parts(get_field("one"), W, Q, ALPHA, WTS, RECT, fat, BP_SCHEME)
