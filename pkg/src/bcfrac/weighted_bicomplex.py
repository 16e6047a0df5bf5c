"""Weighted first-order structure on bicomplex product domains.

Everything here reduces componentwise to :mod:`bcfrac.weighted_complex`: a
bicomplex weight pair is literally one scalar :class:`~bcfrac.weighted_complex.PsiPair`
per idempotent component, and the directional operator, Gauss identity and
Cauchy-Pompeiu reconstruction are evaluated through the very same code paths
on each component.  That is deliberate — the reduction claims (special weight
choices turn the weighted operator into the Wirtinger operators and their
mixed combinations) are then exact by construction wherever they should be,
and any residual measures only genuine quadrature error.

Domains are product balls: one disk per component, with the distinguished
boundary being the product of the two circles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bicomplex import BCNumber, HyperbolicNumber
from .errors import DomainError
from .fields import BCProductField, CField
from .quadrature import Circle, Disk, circle_nodes, disk_nodes, integrate_circle
from .weighted_complex import (
    PsiPair,
    apply_D_psi,
    cauchy_pompeiu_reconstruct,
    gauss_residual_complex,
    psi_orthogonal,
)

__all__ = [
    "WeightPairBC",
    "BCBall",
    "WeightedBPResult",
    "bc_weights_orthogonal",
    "apply_D_thetaphi",
    "fields_A_B",
    "bc_gauss_residual",
    "bbpf_reconstruct",
    "bc_weighted_bp_reconstruct",
    "REDUCTION_KINDS",
    "reduction_weights",
    "reduction_reference",
]


@dataclass(frozen=True)
class WeightPairBC:
    """Bicomplex weight pair (theta, phi) stored as one PsiPair per component.

    Component l uses the scalar pair (theta_l, phi_l).
    """

    pair1: PsiPair
    pair2: PsiPair
    label: str = ""

    @classmethod
    def constant(
        cls, theta1: complex, theta2: complex, phi1: complex, phi2: complex, label: str = ""
    ) -> "WeightPairBC":
        return cls(
            PsiPair.constant(theta1, phi1),
            PsiPair.constant(theta2, phi2),
            label=label or f"theta=({theta1},{theta2}) phi=({phi1},{phi2})",
        )

    @property
    def is_constant(self) -> bool:
        return self.pair1.is_constant and self.pair2.is_constant

    def pair(self, which: int) -> PsiPair:
        if which == 1:
            return self.pair1
        if which == 2:
            return self.pair2
        raise ValueError(f"component index must be 1 or 2, got {which}")


@dataclass(frozen=True)
class BCBall:
    """Product ball: disk of radius r.l1 around center.z1 times disk of radius
    r.l2 around center.z2, with the polar grid parameters baked in."""

    center: BCNumber
    radius: HyperbolicNumber
    n_boundary: int = 256
    nr: int = 64
    nth: int = 256

    def __post_init__(self) -> None:
        if not (self.radius.l1 > 0.0 and self.radius.l2 > 0.0):
            raise DomainError(f"ball radius components must be positive, got {self.radius}")

    def disk(self, which: int) -> Disk:
        c = self.center.z1 if which == 1 else self.center.z2
        r = self.radius.l1 if which == 1 else self.radius.l2
        return Disk(c, r, nr=self.nr, nth=self.nth)

    def circle(self, which: int) -> Circle:
        c = self.center.z1 if which == 1 else self.center.z2
        r = self.radius.l1 if which == 1 else self.radius.l2
        return Circle(c, r, n=self.n_boundary)

    def contains(self, Z: BCNumber, margin_frac: float = 0.0) -> bool:
        return abs(Z.z1 - self.center.z1) <= self.radius.l1 * (1.0 - margin_frac) and abs(
            Z.z2 - self.center.z2
        ) <= self.radius.l2 * (1.0 - margin_frac)


def bc_weights_orthogonal(w: WeightPairBC, probes, tol: float = 1e-12) -> bool:
    """Componentwise weight orthogonality, cross-checked two ways.

    The inner-product form Re(conj(theta_l) phi_l) = 0 must agree with the
    equivalent componentwise identity Im(theta_l)*phi_l = -i*Re(phi_l)*theta_l
    at every probe; disagreement beyond tolerance means a broken weight pair
    and raises instead of returning.
    """
    z = np.asarray(probes, dtype=complex)
    ok = True
    for which in (1, 2):
        pair = w.pair(which)
        th = np.asarray(pair.psi0(z))
        ph = np.asarray(pair.psi1(z))
        inner = (np.conj(th) * ph).real
        # The equivalent form: Im(theta)*phi + i*Re(phi)*theta expands to
        # exactly i * <theta, phi>, so its magnitude must track the inner
        # product to rounding; a mismatch means one of the two encodings is
        # being computed wrongly.
        alt = np.abs(th.imag * ph + 1j * ph.real * th)
        scale = 1.0 + np.abs(th) * np.abs(ph)
        if np.max(np.abs(alt - np.abs(inner)) / scale) > 64.0 * np.finfo(float).eps:
            raise DomainError(f"orthogonality cross-check failed on component {which}")
        ok = ok and bool(np.max(np.abs(inner)) <= tol)
    return ok


def apply_D_thetaphi(F: BCProductField, w: WeightPairBC, Z: BCNumber) -> BCNumber:
    """Weighted directional operator, componentwise D_psi."""
    v1 = apply_D_psi(F.f1, w.pair1, np.asarray([Z.z1], dtype=complex))[0]
    v2 = apply_D_psi(F.f2, w.pair2, np.asarray([Z.z2], dtype=complex))[0]
    return BCNumber(complex(v1), complex(v2))


def fields_A_B(w: WeightPairBC, Z: BCNumber) -> tuple[BCNumber, BCNumber]:
    """Zero-order coefficient fields (A, B) of the bicomplex Gauss identity."""
    A1, B1 = w.pair1.divergence_terms(np.asarray([Z.z1], dtype=complex))
    A2, B2 = w.pair2.divergence_terms(np.asarray([Z.z2], dtype=complex))
    return (
        BCNumber(complex(A1[0]), complex(A2[0])),
        BCNumber(complex(B1[0]), complex(B2[0])),
    )


def bc_gauss_residual(F: BCProductField, w: WeightPairBC, ball: BCBall) -> float:
    """Max componentwise residual of the weighted Gauss identity on the ball."""
    r1 = gauss_residual_complex(F.f1, w.pair1, ball.disk(1), n_boundary=ball.n_boundary)
    r2 = gauss_residual_complex(F.f2, w.pair2, ball.disk(2), n_boundary=ball.n_boundary)
    return max(r1, r2)


def bbpf_reconstruct(F: BCProductField, ball: BCBall, W: BCNumber) -> BCNumber:
    """Unweighted reconstruction from the classical integral representation:

        F(W) = (1/2 pi i) ∮ F/(Z - W) dZ
             + (1/2 pi i) ∬ (dF/dZ*) / (Z - W) dZ∧dZ*,

    evaluated componentwise on the product ball (the area wedge carries the
    -2i factor of dz∧dconj(z)).
    """
    if not ball.contains(W, margin_frac=0.02):
        raise DomainError(f"evaluation point must be strictly inside the ball: {W}")
    comps: list[complex] = []
    for which in (1, 2):
        f = F.component(which)
        wl = W.z1 if which == 1 else W.z2
        circ = ball.circle(which)
        boundary = integrate_circle(lambda z, f=f, wl=wl: np.asarray(f(z)) / (z - wl), circ)
        disk = ball.disk(which)
        za, wa = disk_nodes(disk, avoid=wl)
        area = complex(np.sum(np.asarray(f.d_zbar(za)) / (za - wl) * wa)) * (-2j)
        comps.append((boundary + area) / (2j * np.pi))
    return BCNumber(comps[0], comps[1])


class WeightedBPResult(NamedTuple):
    """Outcome of the weighted reconstruction: the integral value, the
    componentwise empirical constant value/F(W), and per-component flags
    telling whether that constant was defined (F(W) invertible)."""

    value: BCNumber
    c_empirical: tuple[complex, complex]
    defined: tuple[bool, bool]


def bc_weighted_bp_reconstruct(
    F: BCProductField,
    w: WeightPairBC,
    ball: BCBall,
    W: BCNumber,
    mode: str = "closed",
) -> WeightedBPResult:
    """Weighted Cauchy-Pompeiu reconstruction on the product ball.

    Runs the scalar reconstruction on each component (same code path as
    :func:`bcfrac.weighted_complex.cauchy_pompeiu_reconstruct`) and reports
    the componentwise empirical normalization constant.
    """
    vals: list[complex] = []
    cs: list[complex] = []
    flags: list[bool] = []
    for which in (1, 2):
        wl = W.z1 if which == 1 else W.z2
        value, c_emp = cauchy_pompeiu_reconstruct(
            F.component(which), w.pair(which), ball.disk(which), wl,
            n_boundary=ball.n_boundary, mode=mode,
        )
        vals.append(value)
        cs.append(c_emp)
        flags.append(not (np.isnan(c_emp.real) or np.isnan(c_emp.imag)))
    return WeightedBPResult(BCNumber(vals[0], vals[1]), (cs[0], cs[1]), (flags[0], flags[1]))


# ---------------------------------------------------------------------------
# Reductions: the special constant weight choices that collapse the weighted
# operator onto the Wirtinger operators, componentwise.

REDUCTION_KINDS = ("conj-conj", "plain-plain", "conj-plain", "plain-conj")

_HALF = 0.5 + 0j
_IHALF = 0.5j


def reduction_weights(kind: str) -> WeightPairBC:
    """The constant weight pair that reduces the weighted operator to the
    requested combination of d/dz and d/dconj(z) per component.

    'conj' picks d/dconj(z) (phi_l = +i/2) and 'plain' picks d/dz
    (phi_l = -i/2); the two tokens select components 1 and 2.
    """
    if kind not in REDUCTION_KINDS:
        raise DomainError(f"unknown reduction {kind!r}, expected one of {REDUCTION_KINDS}")
    tok1, tok2 = kind.split("-")
    phi1 = _IHALF if tok1 == "conj" else -_IHALF
    phi2 = _IHALF if tok2 == "conj" else -_IHALF
    return WeightPairBC.constant(_HALF, _HALF, phi1, phi2, label=f"reduction:{kind}")


def reduction_reference(kind: str, F: BCProductField, Z: BCNumber) -> BCNumber:
    """The target operator of a reduction, from the analytic Wirtinger data."""
    if kind not in REDUCTION_KINDS:
        raise DomainError(f"unknown reduction {kind!r}, expected one of {REDUCTION_KINDS}")
    tok1, tok2 = kind.split("-")
    z1 = np.asarray([Z.z1], dtype=complex)
    z2 = np.asarray([Z.z2], dtype=complex)
    v1 = F.f1.d_zbar(z1)[0] if tok1 == "conj" else F.f1.d_z(z1)[0]
    v2 = F.f2.d_zbar(z2)[0] if tok2 == "conj" else F.f2.d_z(z2)[0]
    return BCNumber(complex(v1), complex(v2))
