"""Weighted structure on product domains: componentwise operators, the Gauss
identity, classical and weighted reconstruction, and the four reductions."""

import numpy as np
import pytest

from bcfrac import (
    BCBall,
    BCNumber,
    BCProductField,
    CField,
    DomainError,
    HyperbolicNumber,
    PsiPair,
    REDUCTION_KINDS,
    WeightPairBC,
    apply_D_psi,
    apply_D_thetaphi,
    bbpf_reconstruct,
    bc_gauss_residual,
    bc_weighted_bp_reconstruct,
    bc_weights_orthogonal,
    fields_A_B,
    get_field,
    reduction_reference,
    reduction_weights,
)

C1, C2 = 0.3 + 0.2j, -0.1 + 0.4j
BALL = BCBall(BCNumber(C1, C2), HyperbolicNumber(1.0, 0.8), n_boundary=512, nr=64, nth=256)
W_CENTER = BCNumber(C1, C2)
W_OFF = BCNumber(C1 + 0.05, C2 + 0.04j)
WTS = WeightPairBC.constant(1, 1, 1j, 1j)
PROBES = [BCNumber(0.2 + 0.1j, 0.5 - 0.3j), BCNumber(-0.4 + 0.7j, 0.1 + 0.9j)]


# -- weight pairs ---------------------------------------------------------------


def test_weight_pair_accessors():
    assert WTS.is_constant
    assert WTS.pair(1).constants() == (1 + 0j, 1j)
    assert WTS.pair(2).constants() == (1 + 0j, 1j)
    with pytest.raises(ValueError):
        WTS.pair(3)
    labeled = WeightPairBC.constant(1, 1, 1j, 1j, label="main")
    assert labeled.label == "main"


def test_orthogonality_componentwise():
    probes = np.asarray([0.1 + 0.2j, 0.7 - 0.4j])
    assert bc_weights_orthogonal(WTS, probes)
    assert bc_weights_orthogonal(WeightPairBC.constant(1 + 1j, 1, 1 - 1j, 1j), probes)
    assert not bc_weights_orthogonal(WeightPairBC.constant(1, 1, 1, 1j), probes)


# -- product ball -----------------------------------------------------------------


def test_ball_validation_and_accessors():
    with pytest.raises(DomainError):
        BCBall(W_CENTER, HyperbolicNumber(0.0, 1.0))
    with pytest.raises(DomainError):
        BCBall(W_CENTER, HyperbolicNumber(1.0, -0.5))
    assert BALL.disk(1).center == C1 and BALL.disk(1).radius == 1.0
    assert BALL.disk(2).center == C2 and BALL.disk(2).radius == 0.8
    assert BALL.circle(1).n == 512


def test_ball_contains_margin():
    assert BALL.contains(W_CENTER)
    edge = BCNumber(C1 + 0.99, C2)
    assert BALL.contains(edge)
    assert not BALL.contains(edge, margin_frac=0.05)
    assert not BALL.contains(BCNumber(C1 + 1.5, C2))


# -- componentwise operator and coefficients -----------------------------------------


def test_directional_operator_matches_scalar_components():
    F = get_field("mixed")
    for Z in PROBES:
        got = apply_D_thetaphi(F, WTS, Z)
        v1 = apply_D_psi(F.f1, WTS.pair1, np.asarray([Z.z1]))[0]
        v2 = apply_D_psi(F.f2, WTS.pair2, np.asarray([Z.z2]))[0]
        assert got.z1 == pytest.approx(v1) and got.z2 == pytest.approx(v2)


def test_constant_weights_have_zero_divergence():
    A, B = fields_A_B(WTS, PROBES[0])
    assert abs(A) == 0.0 and abs(B) == 0.0


def test_variable_weights_have_nonzero_divergence():
    varying = PsiPair(
        lambda z: 1.0 + 0.3 * z.real,
        lambda z: 1j * np.ones_like(z),
        psi0_dx=lambda z: 0.3 * np.ones_like(z),
        psi0_dy=lambda z: np.zeros_like(z),
        psi1_dx=lambda z: np.zeros_like(z),
        psi1_dy=lambda z: np.zeros_like(z),
    )
    w = WeightPairBC(varying, PsiPair.constant(1, 1j))
    A, _ = fields_A_B(w, PROBES[0])
    assert A.z1 == pytest.approx(0.3)
    assert A.z2 == 0.0


# -- Gauss identity ---------------------------------------------------------------------


@pytest.mark.parametrize("name", ["one", "z", "z2", "zbar", "mixed"])
def test_gauss_residual_registry_fields(name):
    assert bc_gauss_residual(get_field(name), WTS, BALL) < 1e-10


# -- classical reconstruction -------------------------------------------------------------


def test_classical_reconstruction_holomorphic():
    got = bbpf_reconstruct(get_field("z2"), BALL, W_OFF)
    want = BCNumber(W_OFF.z1**2, W_OFF.z2**2)
    assert abs(got - want) / abs(want) <= 1e-10


def test_classical_reconstruction_antiholomorphic_at_anchor():
    # the polar grid is anchored at the ball center, where the product rule
    # integrates the kernel singularity exactly
    got = bbpf_reconstruct(get_field("zbar"), BALL, W_CENTER)
    want = BCNumber(np.conj(C1), np.conj(C2))
    assert abs(got - want) / abs(want) <= 1e-12


def test_classical_reconstruction_antiholomorphic_off_anchor():
    fine = BCBall(W_CENTER, HyperbolicNumber(1.0, 0.8), n_boundary=512, nr=200, nth=256)
    got = bbpf_reconstruct(get_field("zbar"), fine, W_OFF)
    want = BCNumber(np.conj(W_OFF.z1), np.conj(W_OFF.z2))
    assert abs(got - want) / abs(want) <= 1e-2


def test_classical_reconstruction_rejects_exterior_point():
    with pytest.raises(DomainError):
        bbpf_reconstruct(get_field("z2"), BALL, BCNumber(C1 + 2.0, C2))


# -- weighted reconstruction ----------------------------------------------------------------


def test_weighted_reconstruction_constant_law():
    res = bc_weighted_bp_reconstruct(get_field("z2"), WTS, BALL, W_OFF)
    for c in res.c_empirical:
        assert abs(c - (-1j)) <= 1e-3
    assert res.defined == (True, True)
    want = BCNumber(W_OFF.z1**2, W_OFF.z2**2)
    assert abs(res.value - (-1j) * want) / abs(want) <= 1e-3


def test_weighted_reconstruction_constant_spread_across_points():
    cs = []
    for Z in [W_CENTER, W_OFF, BCNumber(C1 - 0.2j, C2 + 0.1)]:
        res = bc_weighted_bp_reconstruct(get_field("z_plus_3"), WTS, BALL, Z)
        cs.extend(res.c_empirical)
    spread = max(abs(c - cs[0]) for c in cs) / abs(cs[0])
    assert spread <= 1e-3


def test_weighted_reconstruction_zero_field_undefined():
    zero = BCProductField(
        CField(lambda z: np.zeros_like(z)), CField(lambda z: np.zeros_like(z)), label="zero"
    )
    res = bc_weighted_bp_reconstruct(zero, WTS, BALL, W_OFF)
    assert res.defined == (False, False)
    assert abs(res.value) < 1e-10


# -- reductions -------------------------------------------------------------------------------


def test_reduction_kinds_enumeration():
    assert REDUCTION_KINDS == ("conj-conj", "plain-plain", "conj-plain", "plain-conj")
    with pytest.raises(DomainError):
        reduction_weights("sideways")
    with pytest.raises(DomainError):
        reduction_reference("sideways", get_field("z"), PROBES[0])


@pytest.mark.parametrize("kind", REDUCTION_KINDS)
@pytest.mark.parametrize("name", ["mixed", "one", "z", "z2", "z_plus_3", "zbar"])
def test_reductions_reproduce_wirtinger_operators(kind, name):
    F = get_field(name)
    for Z in PROBES:
        got = apply_D_thetaphi(F, reduction_weights(kind), Z)
        want = reduction_reference(kind, F, Z)
        assert max(abs(got.z1 - want.z1), abs(got.z2 - want.z2)) <= 1e-8


def test_reduction_weights_are_orthogonal_pairs():
    probes = np.asarray([0.1 + 0.2j, 0.7 - 0.4j])
    for kind in REDUCTION_KINDS:
        assert bc_weights_orthogonal(reduction_weights(kind), probes)
