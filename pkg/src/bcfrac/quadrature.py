"""Deterministic quadrature engines for circles, disks and axis-aligned boxes.

Contour integrals on circles use the periodic trapezoid rule (spectrally
accurate for smooth integrands); disk area integrals use a tensor product of
Gauss-Legendre in radius (with the polar r dr weight absorbed into the
weights) and trapezoid in angle.  Box support exists because the fractional
Gauss identity integrates over rectangles; each edge gets a Gauss-Legendre
panel, the interior a tensor Gauss-Legendre grid, whose nodes conveniently
never touch the (possibly singular) edges.

All integrand callables receive a complex128 ndarray of nodes and must return
an ndarray of values of the same shape.  Every rule evaluates nodes in a
fixed order and reduces with ``numpy`` pairwise summation, so repeated runs
with identical parameters are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, SingularityError

__all__ = [
    "Circle",
    "Disk",
    "Rect2",
    "circle_nodes",
    "rect_boundary_nodes",
    "disk_nodes",
    "integrate_circle",
    "integrate_disk_area",
    "integrate_disk_wedge",
    "integrate_rect_area",
    "estimate_order",
]


@dataclass(frozen=True)
class Circle:
    """Positively oriented circle |z - center| = radius with n boundary nodes."""

    center: complex
    radius: float
    n: int = 256

    def __post_init__(self) -> None:
        if self.radius <= 0.0:
            raise DomainError(f"circle radius must be positive, got {self.radius}")
        if self.n < 16 or self.n % 2:
            raise DomainError(f"circle node count must be even and >= 16, got {self.n}")


@dataclass(frozen=True)
class Disk:
    """Closed disk |z - center| <= radius with an nr x nth polar grid."""

    center: complex
    radius: float
    nr: int = 64
    nth: int = 256

    def __post_init__(self) -> None:
        if self.radius <= 0.0:
            raise DomainError(f"disk radius must be positive, got {self.radius}")
        if self.nr < 8:
            raise DomainError(f"disk needs nr >= 8, got {self.nr}")
        if self.nth < 16:
            raise DomainError(f"disk needs nth >= 16, got {self.nth}")

    def boundary(self, n: int | None = None) -> Circle:
        return Circle(self.center, self.radius, n or max(16, self.nth))


@dataclass(frozen=True)
class Rect2:
    """Axis-aligned closed rectangle [x0, x1] x [y0, y1] viewed inside C."""

    x0: float
    x1: float
    y0: float
    y1: float

    def __post_init__(self) -> None:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise DomainError(
                f"degenerate rectangle [{self.x0},{self.x1}]x[{self.y0},{self.y1}]"
            )

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        return (
            self.x0 + margin <= z.real <= self.x1 - margin
            and self.y0 + margin <= z.imag <= self.y1 - margin
        )


def _leggauss_mapped(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    u, w = np.polynomial.legendre.leggauss(n)
    return lo + (hi - lo) * (u + 1.0) / 2.0, w * (hi - lo) / 2.0


def circle_nodes(c: Circle, offset: float = 0.0):
    """Boundary nodes and the (dx, dy) trapezoid weights.

    Returns (z, wx, wy) such that a 1-form integral ∮ P dx + Q dy is
    approximated by sum(P(z)*wx + Q(z)*wy); the complex contour measure is
    wx + i*wy.
    """
    th = offset + 2.0 * np.pi * np.arange(c.n) / c.n
    z = c.center + c.radius * np.exp(1j * th)
    dth = 2.0 * np.pi / c.n
    wx = -c.radius * np.sin(th) * dth
    wy = c.radius * np.cos(th) * dth
    return z, wx, wy


def rect_boundary_nodes(r: Rect2, n_per_side: int = 64):
    """Counterclockwise boundary panel nodes of a rectangle.

    Same contract as :func:`circle_nodes`: returns (z, wx, wy).  Each side
    carries an n-point Gauss-Legendre panel, so no node sits on a corner or
    at an endpoint of a side.
    """
    if n_per_side < 2:
        raise DomainError(f"need at least 2 nodes per side, got {n_per_side}")
    tx, wtx = _leggauss_mapped(r.x0, r.x1, n_per_side)
    ty, wty = _leggauss_mapped(r.y0, r.y1, n_per_side)
    zero = np.zeros(n_per_side)
    z = np.concatenate(
        [
            tx + 1j * r.y0,  # bottom, left to right
            r.x1 + 1j * ty,  # right, upward
            tx[::-1] + 1j * r.y1,  # top, right to left
            r.x0 + 1j * ty[::-1],  # left, downward
        ]
    )
    wx = np.concatenate([wtx, zero, -wtx[::-1], zero])
    wy = np.concatenate([zero, wty, zero, -wty[::-1]])
    return z, wx, wy


def disk_nodes(d: Disk, avoid: complex | None = None, avoid_lines: bool = False):
    """Polar tensor nodes and dx dy weights over the disk: (z, w).

    When ``avoid`` is given, the angular grid is rotated by the deterministic
    offset (out of 16 candidates) that keeps nodes farthest from that point —
    and, with ``avoid_lines``, from the horizontal/vertical lines through it,
    which is where the one-sided fractional kernels are singular — so
    near-singular integrands are never evaluated on top of their singularity.
    """
    rr, wr = _leggauss_mapped(0.0, d.radius, d.nr)
    wr = wr * rr  # absorb the polar r dr weight
    dth = 2.0 * np.pi / d.nth
    base_th = dth * np.arange(d.nth)

    offset = 0.0
    if avoid is not None:
        best = -1.0
        for k in range(16):
            cand = (k + 0.5) * dth / 16.0
            z = (d.center + rr[:, None] * np.exp(1j * (base_th + cand))[None, :]).ravel()
            if avoid_lines:
                score = float(
                    np.min(np.minimum(np.abs(z.real - avoid.real), np.abs(z.imag - avoid.imag)))
                )
            else:
                score = float(np.min(np.abs(z - avoid)))
            if score > best:
                best = score
                offset = cand
        if best < 1e-12 * d.radius:
            raise SingularityError(f"cannot keep disk nodes away from {avoid}")

    th = base_th + offset
    z = (d.center + rr[:, None] * np.exp(1j * th)[None, :]).ravel()
    w = (wr[:, None] * np.full(d.nth, dth)[None, :]).ravel()
    return z, w


def integrate_circle(g: Callable[[np.ndarray], np.ndarray], c: Circle) -> complex:
    """∮ g(z) dz by the periodic trapezoid rule."""
    z, wx, wy = circle_nodes(c)
    return complex(np.sum(np.asarray(g(z)) * (wx + 1j * wy)))


def integrate_disk_area(
    g: Callable[[np.ndarray], np.ndarray],
    d: Disk,
    avoid: complex | None = None,
    avoid_lines: bool = False,
) -> complex:
    """∬ g dx dy over the disk (plain area measure)."""
    z, w = disk_nodes(d, avoid=avoid, avoid_lines=avoid_lines)
    return complex(np.sum(np.asarray(g(z)) * w))


def integrate_disk_wedge(
    g: Callable[[np.ndarray], np.ndarray], d: Disk, avoid: complex | None = None
) -> complex:
    """∬ g dz∧dconj(z) = -2i ∬ g dx dy over the disk."""
    return -2j * integrate_disk_area(g, d, avoid=avoid)


def integrate_rect_area(
    g: Callable[[np.ndarray], np.ndarray], r: Rect2, nx: int = 48, ny: int = 48
) -> complex:
    """∬ g dx dy over a rectangle by tensor Gauss-Legendre (interior nodes)."""
    x, wx = _leggauss_mapped(r.x0, r.x1, nx)
    y, wy = _leggauss_mapped(r.y0, r.y1, ny)
    z = (x[:, None] + 1j * y[None, :]).ravel()
    w = (wx[:, None] * wy[None, :]).ravel()
    return complex(np.sum(np.asarray(g(z)) * w))


def estimate_order(residuals: Sequence[tuple[float, float]]) -> float:
    """Least-squares convergence order from (h, residual) pairs.

    Needs at least three levels with strictly decreasing h.  A residual of
    exactly zero means the rule is exact at that level; +inf is returned as
    the order sentinel in that case.
    """
    if len(residuals) < 3:
        raise DomainError(f"order estimate needs >= 3 levels, got {len(residuals)}")
    h = np.array([p[0] for p in residuals], dtype=float)
    r = np.array([p[1] for p in residuals], dtype=float)
    if np.any(h <= 0.0) or np.any(np.diff(h) >= 0.0):
        raise DomainError("h values must be positive and strictly decreasing")
    if np.any(r < 0.0):
        raise DomainError("residuals must be non-negative")
    if np.any(r == 0.0):
        return math.inf
    slope = np.polyfit(np.log(h), np.log(r), 1)[0]
    return float(slope)
