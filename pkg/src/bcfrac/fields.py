"""Scalar complex fields and product-type bicomplex fields.

A :class:`CField` is a function of one complex variable together with its
partial derivatives with respect to the two real coordinates.  Analytic
partials are used when supplied; otherwise a central difference with step
``1e-6 * max(1, |z|)`` fills in.  Everything is vectorized: callables map
complex128 ndarrays to ndarrays.

A :class:`BCProductField` pairs two scalar fields, one per idempotent
component: F(Z) = f1(z1) e + f2(z2) ed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bicomplex import BCNumber

__all__ = ["CField", "BCProductField"]

_FDiff = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class CField:
    """Complex-valued field on C with optional analytic partials."""

    fn: _FDiff
    dx: _FDiff | None = None
    dy: _FDiff | None = None
    label: str = ""

    def __call__(self, z):
        return self.fn(np.asarray(z, dtype=complex))

    def partials(self, z) -> tuple[np.ndarray, np.ndarray]:
        """(df/dx, df/dy) at z, analytic when available."""
        z = np.asarray(z, dtype=complex)
        if self.dx is not None and self.dy is not None:
            return np.asarray(self.dx(z)), np.asarray(self.dy(z))
        h = 1e-6 * np.maximum(1.0, np.abs(z))
        fx = (self.fn(z + h) - self.fn(z - h)) / (2.0 * h)
        fy = (self.fn(z + 1j * h) - self.fn(z - 1j * h)) / (2.0 * h)
        return np.asarray(fx), np.asarray(fy)

    def d_zbar(self, z) -> np.ndarray:
        """Wirtinger derivative with respect to conj(z): (df/dx + i df/dy)/2."""
        fx, fy = self.partials(z)
        return (fx + 1j * fy) / 2.0

    def d_z(self, z) -> np.ndarray:
        """Wirtinger derivative with respect to z: (df/dx - i df/dy)/2."""
        fx, fy = self.partials(z)
        return (fx - 1j * fy) / 2.0


@dataclass(frozen=True)
class BCProductField:
    """Bicomplex field of product type: F(Z) = f1(z1) e + f2(z2) ed."""

    f1: CField
    f2: CField
    label: str = ""

    def component(self, which: int) -> CField:
        if which == 1:
            return self.f1
        if which == 2:
            return self.f2
        raise ValueError(f"component index must be 1 or 2, got {which}")

    def __call__(self, Z: BCNumber) -> BCNumber:
        v1 = complex(self.f1(np.asarray([Z.z1]))[0])
        v2 = complex(self.f2(np.asarray([Z.z2]))[0])
        return BCNumber(v1, v2)
