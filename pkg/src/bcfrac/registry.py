"""The closed set of named test fields used by scenarios and tests.

Every entry carries analytic partials so reductions can be checked without
finite-difference noise.  The set is deliberately small and fixed; scenario
configs refer to these names and nothing else.
"""

from __future__ import annotations

import numpy as np

from .fields import BCProductField, CField

__all__ = ["FIELDS", "get_field", "field_names"]


def _const_one(z: np.ndarray) -> np.ndarray:
    return np.ones_like(z)


def _const_zero(z: np.ndarray) -> np.ndarray:
    return np.zeros_like(z)


def _const(c: complex):
    def fn(z: np.ndarray) -> np.ndarray:
        return np.full_like(z, c)

    return fn


_ONE = CField(_const_one, dx=_const_zero, dy=_const_zero, label="1")
_Z = CField(lambda z: z, dx=_const(1.0), dy=_const(1j), label="z")
_Z2 = CField(lambda z: z * z, dx=lambda z: 2.0 * z, dy=lambda z: 2j * z, label="z^2")
_ZBAR = CField(np.conj, dx=_const(1.0), dy=_const(-1j), label="conj(z)")
_Z_PLUS_3 = CField(lambda z: z + 3.0, dx=_const(1.0), dy=_const(1j), label="z+3")

FIELDS: dict[str, BCProductField] = {
    "one": BCProductField(_ONE, _ONE, label="one"),
    "z": BCProductField(_Z, _Z, label="z"),
    "z2": BCProductField(_Z2, _Z2, label="z2"),
    "zbar": BCProductField(_ZBAR, _ZBAR, label="zbar"),
    "z_plus_3": BCProductField(_Z_PLUS_3, _Z_PLUS_3, label="z_plus_3"),
    "mixed": BCProductField(_ZBAR, _Z, label="mixed"),
}


def field_names() -> list[str]:
    return sorted(FIELDS)


def get_field(name: str) -> BCProductField:
    try:
        return FIELDS[name]
    except KeyError:
        raise KeyError(
            f"unknown test field {name!r}; known fields: {', '.join(field_names())}"
        ) from None
