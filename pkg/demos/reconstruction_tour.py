"""Weighted reconstruction on disks and on the product ball.

First variable only: a constant weight pair (psi0, psi1) defines a directional
derivative D_psi = psi0 d/dx + psi1 d/dy, a boundary one-form, and a Cauchy
kernel twisted by the linear map T that sends the pair to (1, i).  Integrating
field values against the kernel over a disk reproduces the field value at any
interior point up to one multiplicative constant; empirically that constant is
-i / |det T|, and its invariance across evaluation points is the actual check.

Then both variables at once: fields on a product of two disks, reconstructed
componentwise, plus the four one-variable reductions of the two-sided
directional operator.
"""

import numpy as np

from bcfrac import (
    BCBall,
    BCNumber,
    CField,
    Disk,
    HyperbolicNumber,
    PsiPair,
    REDUCTION_KINDS,
    WeightPairBC,
    apply_D_thetaphi,
    bbpf_reconstruct,
    bc_weighted_bp_reconstruct,
    cauchy_pompeiu_reconstruct,
    gauss_residual_complex,
    get_field,
    reduction_reference,
    reduction_weights,
    solve_transform_T,
    weighted_monomial,
)

print("== weighted Gauss identity on a disk ==")
disk = Disk(0.3 + 0.2j, 1.0, nr=64, nth=128)
pair = PsiPair.constant(1, 1j)
f = get_field("z2").component(1)
res = gauss_residual_complex(f, pair, disk, n_boundary=256)
print(f"classical pair (1, i), field z^2: residual {res:.2e}")

print("\n== reconstruction constants on the disk ==")
print("for each pair, the empirical constant should match -i/|det T| at every")
print("interior point (the field is chosen in the pair's kernel directions):\n")
for psi0, psi1, label in ((1, 1j, "classical"), (0.5, 0.5j, "scaled"), (1 + 1j, 1 - 1j, "sheared")):
    p = PsiPair.constant(psi0, psi1)
    T = solve_transform_T(p)
    want = -1j / abs(T.det)
    a0, a1 = p.constants()
    rho = a0 / a1

    def u(z, rho=rho):
        z = np.asarray(z, dtype=complex)
        return z.real - rho * z.imag

    # the degree-2 monomial in the pair's kernel direction, with analytic
    # partials so the area term vanishes identically
    g = CField(
        fn=lambda z: u(z) ** 2,
        dx=lambda z: 2.0 * u(z),
        dy=lambda z: -2.0 * rho * u(z),
    )
    assert np.allclose(g(0.3 + 0.4j), weighted_monomial(p, np.asarray([0.3 + 0.4j]), 2))

    cs = []
    for z in (0.45 + 0.3j, 0.1 - 0.1j, 0.62 + 0.55j):
        _, c = cauchy_pompeiu_reconstruct(g, p, disk, z, n_boundary=256)
        cs.append(c)
    spread = max(abs(c - cs[0]) for c in cs)
    print(f"{label:>9}: c = {cs[0]:.6f}, predicted {want:.6f}, spread {spread:.1e}")

print("\n== product-ball reconstruction ==")
ball = BCBall(
    BCNumber(0.3 + 0.2j, -0.1 + 0.4j),
    HyperbolicNumber(1.0, 0.8),
    n_boundary=256,
    nr=64,
    nth=128,
)
F = get_field("z2")
Wp = BCNumber(0.45 + 0.3j, 0.1 + 0.55j)
rec = bbpf_reconstruct(F, ball, Wp)
want = F(Wp)
print(f"field z^2 at {Wp}:")
print(f"  reconstructed {rec}")
print(f"  exact         {want}")
print(f"  error         {max(abs(rec.z1 - want.z1), abs(rec.z2 - want.z2)):.2e}")

print("\n== weighted version and its empirical constants ==")
wts = WeightPairBC.constant(1, 1, 1j, 1j)
out = bc_weighted_bp_reconstruct(get_field("z_plus_3"), wts, ball, Wp)
print(f"c_empirical per component: {out.c_empirical[0]:.6f}, {out.c_empirical[1]:.6f}")
print("(the classical weights give -i in both components)")

print("\n== the four one-variable reductions ==")
Z = BCNumber(0.4 + 0.3j, -0.2 + 0.5j)
F = get_field("mixed")
for kind in REDUCTION_KINDS:
    w = reduction_weights(kind)
    got = apply_D_thetaphi(F, w, Z)
    ref = reduction_reference(kind, F, Z)
    err = max(abs(got.z1 - ref.z1), abs(got.z2 - ref.z2))
    print(f"{kind:>12}: matches the Wirtinger reference to {err:.1e}")
