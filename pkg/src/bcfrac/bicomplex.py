"""Bicomplex numbers in the idempotent representation.

A bicomplex number is written here as ``Z = z1*e + z2*ed`` where ``e`` and
``ed`` are the two zero-divisor idempotents

    e  = (1 + ij)/2,        ed = (1 - ij)/2,

satisfying ``e*ed = 0``, ``e**2 = e``, ``ed**2 = ed``, ``e + ed = 1`` and
``e - ed = ij``.  In this basis addition and multiplication act component by
component, which is what makes the representation the right one for numerics:
every holomorphic construction splits into two ordinary complex ones.

The cartesian form ``Z = w1 + j*w2`` (with ``w1, w2`` complex in ``i``) is
supported through :meth:`BCNumber.from_cartesian` / :meth:`BCNumber.to_cartesian`
via ``z1 = w1 - i*w2`` and ``z2 = w1 + i*w2``.

The modulus ``|Z|_k = |z1| e + |z2| ed`` is hyperbolic-valued, not real; it is
returned as a :class:`HyperbolicNumber`.  The associated partial order
``X ⪯ Y`` holds when ``Y - X`` has both idempotent components real and
non-negative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NumericError

__all__ = ["BCNumber", "HyperbolicNumber", "inner_c"]


def inner_c(z: complex, w: complex) -> float:
    """Real inner product of two complex scalars: ``Re(conj(z) * w)``."""
    return (z.conjugate() * w).real


@dataclass(frozen=True)
class HyperbolicNumber:
    """Hyperbolic number ``l1*e + l2*ed`` with real components.

    Values of the k-modulus live here.  ``is_nonneg`` tests membership in the
    non-negative cone used by the partial order.
    """

    l1: float
    l2: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.l1) and math.isfinite(self.l2)):
            raise NumericError(f"non-finite hyperbolic components ({self.l1}, {self.l2})")

    @property
    def is_nonneg(self) -> bool:
        return self.l1 >= 0.0 and self.l2 >= 0.0

    def __add__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(self.l1 + other.l1, self.l2 + other.l2)

    def __sub__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(self.l1 - other.l1, self.l2 - other.l2)

    def max_component(self) -> float:
        return max(self.l1, self.l2)


def _coerce(value: "BCNumber | complex | float | int") -> "BCNumber":
    if isinstance(value, BCNumber):
        return value
    if isinstance(value, (int, float, complex)):
        # Scalars embed diagonally: c = c*e + c*ed.
        return BCNumber(complex(value), complex(value))
    return NotImplemented  # type: ignore[return-value]


@dataclass(frozen=True)
class BCNumber:
    """A bicomplex number ``z1*e + z2*ed`` in idempotent components.

    Arithmetic is componentwise; scalars (int/float/complex) coerce to the
    diagonal embedding.  All constructed values must be finite — an operation
    that would overflow raises :class:`~bcfrac.errors.NumericError` instead of
    letting NaN/Inf propagate silently.
    """

    z1: complex
    z2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))
        if not (cmath.isfinite(self.z1) and cmath.isfinite(self.z2)):
            raise NumericError(f"non-finite bicomplex components ({self.z1}, {self.z2})")

    # -- conversions -------------------------------------------------------

    @classmethod
    def from_cartesian(cls, w1: complex, w2: complex) -> "BCNumber":
        """Build ``w1 + j*w2`` from the cartesian pair ``(w1, w2)``."""
        w1 = complex(w1)
        w2 = complex(w2)
        return cls(w1 - 1j * w2, w1 + 1j * w2)

    def to_cartesian(self) -> tuple[complex, complex]:
        """Return ``(w1, w2)`` with ``Z = w1 + j*w2``.  Exact inverse of
        :meth:`from_cartesian` up to floating-point rounding."""
        return (self.z1 + self.z2) / 2.0, 1j * (self.z1 - self.z2) / 2.0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BCNumber | complex | float | int") -> "BCNumber":
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return BCNumber(self.z1 + o.z1, self.z2 + o.z2)

    __radd__ = __add__

    def __sub__(self, other: "BCNumber | complex | float | int") -> "BCNumber":
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return BCNumber(self.z1 - o.z1, self.z2 - o.z2)

    def __rsub__(self, other: "BCNumber | complex | float | int") -> "BCNumber":
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return BCNumber(o.z1 - self.z1, o.z2 - self.z2)

    def __mul__(self, other: "BCNumber | complex | float | int") -> "BCNumber":
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return BCNumber(self.z1 * o.z1, self.z2 * o.z2)

    __rmul__ = __mul__

    def __neg__(self) -> "BCNumber":
        return BCNumber(-self.z1, -self.z2)

    def __truediv__(self, other: "BCNumber | complex | float | int") -> "BCNumber":
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.is_invertible:
            raise DomainError(f"division by a zero divisor: {o!r}")
        return BCNumber(self.z1 / o.z1, self.z2 / o.z2)

    # -- structure ---------------------------------------------------------

    def conj_star(self) -> "BCNumber":
        """Componentwise complex conjugation (the *-conjugation); satisfies
        ``Z * Z.conj_star() == |Z|_k**2`` embedded diagonally."""
        return BCNumber(self.z1.conjugate(), self.z2.conjugate())

    def modulus_k(self) -> HyperbolicNumber:
        """Hyperbolic k-modulus ``|z1| e + |z2| ed``."""
        return HyperbolicNumber(abs(self.z1), abs(self.z2))

    def inner_k(self, other: "BCNumber") -> "BCNumber":
        """Hyperbolic-valued inner product ``<Z,W>_k = <z1,w1>_C e + <z2,w2>_C ed``.

        The components are real; they are stored in a :class:`BCNumber` so the
        value can keep participating in bicomplex arithmetic (it equals
        ``(Z.conj_star()*W + W.conj_star()*Z) / 2``).
        """
        return BCNumber(inner_c(self.z1, other.z1), inner_c(self.z2, other.z2))

    def preceq(self, other: "BCNumber") -> bool:
        """Partial order: ``self ⪯ other`` iff ``other - self`` has (numerically)
        real components with non-negative real parts.

        Raises :class:`~bcfrac.errors.DomainError` when the difference is not
        real up to 1e-12, since the order is only defined on the hyperbolic
        slice.
        """
        d = other - self
        if abs(d.z1.imag) > 1e-12 or abs(d.z2.imag) > 1e-12:
            raise DomainError("partial order compared on non-hyperbolic difference")
        return d.z1.real >= 0.0 and d.z2.real >= 0.0

    @property
    def is_invertible(self) -> bool:
        """True iff neither idempotent component vanishes."""
        return self.z1 != 0 and self.z2 != 0

    def inverse(self) -> "BCNumber":
        if not self.is_invertible:
            raise DomainError(f"zero divisor has no inverse: {self!r}")
        return BCNumber(1.0 / self.z1, 1.0 / self.z2)

    def __abs__(self) -> float:
        """Euclidean magnitude (used for tolerances, not the k-modulus)."""
        return math.hypot(abs(self.z1), abs(self.z2)) / math.sqrt(2.0)


# The idempotents and the second imaginary unit, as module constants.
E = BCNumber(1.0, 0.0)
E_DAG = BCNumber(0.0, 1.0)
UNIT_J = BCNumber(-1j, 1j)
