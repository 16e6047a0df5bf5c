"""Weighted first-order operators on C and their integral identities.

The directional operator is ``D_psi = psi0 * d/dx + psi1 * d/dy`` for a pair
of complex weight functions ``(psi0, psi1)`` that are orthogonal in the real
inner product ``<z,w> = Re(conj(z) w)``.  The classical Wirtinger operators
are the special cases (psi0, psi1) = (1/2, i/2) and (1/2, -i/2) up to the
usual conventions; see the reduction helpers in :mod:`bcfrac.weighted_bicomplex`.

For constant pairs, a real-linear change of coordinates T (solved from
``a psi0 + b psi1 = 1`` and ``c psi0 + d psi1 = i``) turns D_psi into the
plain conjugate-Wirtinger operator, and the weighted Cauchy kernel is the
classical one composed with T:

    E_psi(w, z) = 1 / (2 pi i (T(w) - T(z))),

with the first argument the integration variable.  The boundary 1-form is
``dsigma_psi = psi0 dy - psi1 dx``.

Two integral identities are exercised here: the weighted Gauss/divergence
identity (with zero-order correction terms when the weights vary) and the
weighted Cauchy-Pompeiu reconstruction.  The reconstruction reports an
empirical normalization constant — the ratio of the two sides — rather than
asserting any closed-form constant; ``compute_c_psi`` separately evaluates
the angular-integral constant so callers can compare the two side by side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DegeneracyError, DomainError, SingularityError
from .fields import CField
from .quadrature import Circle, Disk, circle_nodes, disk_nodes

__all__ = [
    "PsiPair",
    "TransformT",
    "psi_orthogonal",
    "apply_D_psi",
    "solve_transform_T",
    "eval_kernel_E_psi",
    "compute_c_psi",
    "weighted_monomial",
    "sigma_boundary_integral",
    "gauss_residual_complex",
    "cauchy_pompeiu_reconstruct",
]

_CFun = Callable[[np.ndarray], np.ndarray]


def _const_fn(c: complex) -> _CFun:
    def fn(z: np.ndarray) -> np.ndarray:
        return np.full_like(np.asarray(z, dtype=complex), c)

    return fn


@dataclass(frozen=True)
class PsiPair:
    """Weight pair (psi0, psi1); callables are vectorized over node arrays.

    ``is_constant`` marks pairs whose values do not depend on z; the kernel
    and transform machinery require it.  Optional analytic partials (complex
    derivatives of each weight with respect to x and y) sharpen the
    zero-order terms of the Gauss identity; central differences are the
    fallback.
    """

    psi0: _CFun
    psi1: _CFun
    is_constant: bool = False
    psi0_dx: _CFun | None = None
    psi0_dy: _CFun | None = None
    psi1_dx: _CFun | None = None
    psi1_dy: _CFun | None = None
    label: str = ""

    @classmethod
    def constant(cls, c0: complex, c1: complex, label: str = "") -> "PsiPair":
        zero = _const_fn(0.0)
        return cls(
            _const_fn(c0),
            _const_fn(c1),
            is_constant=True,
            psi0_dx=zero,
            psi0_dy=zero,
            psi1_dx=zero,
            psi1_dy=zero,
            label=label or f"({c0}, {c1})",
        )

    def constants(self, at: complex = 0j) -> tuple[complex, complex]:
        if not self.is_constant:
            raise DomainError("weight pair is not constant")
        arr = np.asarray([at], dtype=complex)
        return complex(self.psi0(arr)[0]), complex(self.psi1(arr)[0])

    def divergence_terms(self, z) -> tuple[np.ndarray, np.ndarray]:
        """Zero-order coefficients (A, B) of the weighted Gauss identity:

        A = dx Re(psi0) + dy Re(psi1),  B = dx Im(psi0) + dy Im(psi1).
        """
        z = np.asarray(z, dtype=complex)
        if self.psi0_dx is not None and self.psi1_dy is not None:
            p0x = np.asarray(self.psi0_dx(z))
            q1y = np.asarray(self.psi1_dy(z))
        else:
            h = 1e-6 * np.maximum(1.0, np.abs(z))
            p0x = (self.psi0(z + h) - self.psi0(z - h)) / (2.0 * h)
            q1y = (self.psi1(z + 1j * h) - self.psi1(z - 1j * h)) / (2.0 * h)
        A = p0x.real + q1y.real
        B = p0x.imag + q1y.imag
        return A, B


def psi_orthogonal(psi: PsiPair, probes, tol: float = 1e-12) -> bool:
    """True when Re(conj(psi0) psi1) vanishes (to tol) at every probe point."""
    z = np.asarray(probes, dtype=complex)
    v0 = np.asarray(psi.psi0(z))
    v1 = np.asarray(psi.psi1(z))
    return bool(np.max(np.abs((np.conj(v0) * v1).real)) <= tol)


def apply_D_psi(f: CField, psi: PsiPair, z):
    """D_psi f = psi0 * df/dx + psi1 * df/dy, vectorized over z."""
    z = np.asarray(z, dtype=complex)
    fx, fy = f.partials(z)
    return np.asarray(psi.psi0(z)) * fx + np.asarray(psi.psi1(z)) * fy


@dataclass(frozen=True)
class TransformT:
    """Real-linear plane map T(x + iy) = (a x + b y) + i (c x + d y)."""

    a: float
    b: float
    c: float
    d: float

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = (self.a * z.real + self.b * z.imag) + 1j * (self.c * z.real + self.d * z.imag)
        return out if out.shape else complex(out)


def solve_transform_T(psi: PsiPair, at: complex = 0j) -> TransformT:
    """Coefficients (a, b, c, d) with a psi0 + b psi1 = 1, c psi0 + d psi1 = i.

    The 2x2 real system is solved on the (Re, Im) components of the weights;
    a near-singular system (collinear weights) raises DegeneracyError.
    """
    p0, p1 = (complex(v) for v in _pair_values(psi, at))
    m = np.array([[p0.real, p1.real], [p0.imag, p1.imag]])
    scale = max(abs(p0), abs(p1))
    if scale == 0.0 or abs(np.linalg.det(m)) < 1e-14 * scale * scale:
        raise DegeneracyError(f"weight pair is degenerate at {at}: ({p0}, {p1})")
    ab = np.linalg.solve(m, np.array([1.0, 0.0]))
    cd = np.linalg.solve(m, np.array([0.0, 1.0]))
    return TransformT(float(ab[0]), float(ab[1]), float(cd[0]), float(cd[1]))


def _pair_values(psi: PsiPair, at: complex) -> tuple[complex, complex]:
    arr = np.asarray([at], dtype=complex)
    return complex(np.asarray(psi.psi0(arr))[0]), complex(np.asarray(psi.psi1(arr))[0])


def eval_kernel_E_psi(
    psi: PsiPair,
    w,
    z,
    mode: str = "closed",
    n_terms: int = 64,
    center: complex = 0j,
    transform: TransformT | None = None,
):
    """Weighted Cauchy kernel E_psi(w, z); w is the integration variable.

    mode='closed' evaluates 1/(2 pi i (T(w)-T(z))).  mode='series' sums the
    geometric expansion around ``center`` (a point of the transformed plane)
    through n_terms terms; it requires |T(z)-center| < |T(w)-center| and is
    provided as an independent cross-check of the closed form.  Either
    argument may be an ndarray (they broadcast); passing two scalars returns
    a complex scalar.
    """
    T = transform or solve_transform_T(psi)
    scalar = np.ndim(w) == 0 and np.ndim(z) == 0
    tw = T(np.atleast_1d(np.asarray(w, dtype=complex)))
    tz = T(np.atleast_1d(np.asarray(z, dtype=complex)))
    if mode == "closed":
        diff = tw - tz
        if np.any(np.abs(diff) == 0.0):
            raise SingularityError("kernel evaluated at a coincident transformed point")
        out = 1.0 / (2j * np.pi * diff)
    elif mode == "series":
        num = tz - center
        den = tw - center
        if np.any(np.abs(den) == 0.0) or np.any(np.abs(num) >= np.abs(den)):
            raise SingularityError(
                "series mode requires |T(z)-center| < |T(w)-center| at every node"
            )
        ratio, den_b = np.broadcast_arrays(num / den, den)
        # Horner-style evaluation of sum_{k<N} ratio^k / den.
        acc = np.zeros_like(ratio)
        for _ in range(n_terms):
            acc = acc * ratio + 1.0
        out = acc / (2j * np.pi * den_b)
    else:
        raise DomainError(f"unknown kernel mode {mode!r}")
    return complex(out.reshape(-1)[0]) if scalar else out


def compute_c_psi(
    psi0: complex, psi1: complex, r0: float, r1: float, angle: float, n: int = 4096
) -> complex:
    """Angular-integral normalization constant for a constant weight pair.

    Evaluates, with the periodic trapezoid rule,

        sin(angle)^2 * ∮ (psi0 cos t + psi1 sin t) /
            [ (cos t / r0^2 - sin t cos(angle)/(r0 r1)) psi0
            + (sin t / r1^2 - cos t cos(angle)/(r0 r1)) psi1 ] dt.

    This is reported alongside the empirical reconstruction constant; the two
    are intentionally never asserted equal anywhere in the package.
    """
    if r0 <= 0.0 or r1 <= 0.0:
        raise DomainError(f"radii must be positive, got ({r0}, {r1})")
    if not 0.0 < angle < math.pi:
        raise DomainError(f"angle must lie in (0, pi), got {angle}")
    if n < 16:
        raise DomainError(f"need n >= 16 nodes, got {n}")
    t = 2.0 * np.pi * np.arange(n) / n
    ct, st = np.cos(t), np.sin(t)
    ca = math.cos(angle)
    num = psi0 * ct + psi1 * st
    den = (ct / r0**2 - st * ca / (r0 * r1)) * psi0 + (st / r1**2 - ct * ca / (r0 * r1)) * psi1
    if np.any(np.abs(den) < 1e-14):
        raise SingularityError("normalization integrand denominator vanishes at a node")
    return complex(np.sum(num / den) * (2.0 * np.pi / n) * math.sin(angle) ** 2)


def weighted_monomial(psi: PsiPair, z, n: int):
    """Degree-n element (x - (psi0/psi1) y)^n of the kernel of D_psi.

    Requires a constant pair with psi1 != 0.
    """
    if n < 0:
        raise DomainError(f"monomial degree must be >= 0, got {n}")
    c0, c1 = psi.constants()
    if c1 == 0:
        raise DegeneracyError("weighted monomial requires psi1 != 0")
    z = np.asarray(z, dtype=complex)
    out = (z.real - (c0 / c1) * z.imag) ** n
    return out if out.shape else complex(out)


def sigma_boundary_integral(gvals: np.ndarray, psi: PsiPair, z: np.ndarray, wx, wy) -> complex:
    """∮ g dsigma_psi = ∮ g (psi0 dy - psi1 dx) on pre-computed boundary nodes."""
    v0 = np.asarray(psi.psi0(z))
    v1 = np.asarray(psi.psi1(z))
    return complex(np.sum(np.asarray(gvals) * (v0 * wy - v1 * wx)))


def gauss_residual_complex(
    f: CField, psi: PsiPair, d: Disk, n_boundary: int | None = None
) -> float:
    """Residual of the weighted Gauss identity on a disk:

        ∬ (D_psi f + A f + B i f) dx dy  -  ∮ f dsigma_psi,

    with (A, B) the divergence terms of the pair.  Exact (up to quadrature)
    for any C^1 field; variable weights are supported.
    """
    circ = d.boundary(n_boundary)
    zb, wx, wy = circle_nodes(circ)
    boundary = sigma_boundary_integral(f(zb), psi, zb, wx, wy)

    za, wa = disk_nodes(d)
    A, B = psi.divergence_terms(za)
    integrand = apply_D_psi(f, psi, za) + (A + 1j * B) * f(za)
    area = complex(np.sum(integrand * wa))
    return abs(area - boundary)


def cauchy_pompeiu_reconstruct(
    f: CField,
    psi: PsiPair,
    d: Disk,
    z: complex,
    n_boundary: int | None = None,
    mode: str = "closed",
) -> tuple[complex, complex]:
    """Weighted Cauchy-Pompeiu value and its empirical constant at z.

    value = ∮ f E_psi(., z) dsigma_psi - ∬ E_psi(., z) D_psi f dx dy,
    computed with node-avoided area quadrature; returns (value, value/f(z)).
    The second element is nan+nanj when f(z) is (numerically) zero.

    z must be strictly interior; points within 2% of the radius from the
    boundary are refused so the kernel stays resolvable.
    """
    if abs(z - d.center) >= 0.98 * d.radius:
        raise DomainError(f"evaluation point {z} is not strictly inside the disk")
    T = solve_transform_T(psi)

    circ = d.boundary(n_boundary)
    zb, wx, wy = circle_nodes(circ)
    kb = eval_kernel_E_psi(psi, zb, z, mode=mode, transform=T)
    boundary = sigma_boundary_integral(np.asarray(f(zb)) * kb, psi, zb, wx, wy)

    za, wa = disk_nodes(d, avoid=z)
    ka = eval_kernel_E_psi(psi, za, z, mode=mode, transform=T)
    area = complex(np.sum(ka * apply_D_psi(f, psi, za) * wa))

    value = boundary - area
    fz = complex(f(np.asarray([z], dtype=complex))[0])
    if abs(fz) < 1e-300:
        return value, complex(float("nan"), float("nan"))
    return value, value / fz
