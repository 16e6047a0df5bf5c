"""Scalar/product test fields and the closed field registry."""

import numpy as np
import pytest

from bcfrac import BCProductField, CField, FIELDS, field_names, get_field

PROBES = np.asarray([0.3 + 0.2j, 0.7 - 0.4j, -0.5 + 0.9j, 1.1 + 1.3j])


def _fd_wirtinger(f, z, h=1e-6):
    fx = (f(z + h) - f(z - h)) / (2 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2 * h)
    return (fx - 1j * fy) / 2.0, (fx + 1j * fy) / 2.0  # (d_z, d_zbar)


def test_registry_names_sorted_and_closed():
    assert field_names() == ["mixed", "one", "z", "z2", "z_plus_3", "zbar"]
    assert set(FIELDS) == set(field_names())


def test_get_field_unknown_name_lists_choices():
    with pytest.raises(KeyError) as exc:
        get_field("spiral")
    msg = str(exc.value)
    assert "spiral" in msg and "zbar" in msg


@pytest.mark.parametrize("name", ["mixed", "one", "z", "z2", "z_plus_3", "zbar"])
def test_registry_partials_match_finite_differences(name):
    F = get_field(name)
    for which in (1, 2):
        f = F.component(which)
        dz_fd, dzbar_fd = _fd_wirtinger(f, PROBES)
        got_z = np.asarray(f.d_z(PROBES))
        got_zbar = np.asarray(f.d_zbar(PROBES))
        np.testing.assert_allclose(got_z, dz_fd, atol=5e-6)
        np.testing.assert_allclose(got_zbar, dzbar_fd, atol=5e-6)


def test_registry_analytic_values():
    z = PROBES
    zf = get_field("z")
    np.testing.assert_allclose(zf.f1.d_z(z), np.ones_like(z))
    np.testing.assert_allclose(zf.f1.d_zbar(z), np.zeros_like(z))
    zb = get_field("zbar")
    np.testing.assert_allclose(zb.f1.d_zbar(z), np.ones_like(z))
    np.testing.assert_allclose(zb.f1.d_z(z), np.zeros_like(z))
    z2 = get_field("z2")
    np.testing.assert_allclose(z2.f1.d_z(z), 2.0 * z)
    one = get_field("one")
    np.testing.assert_allclose(one.f1(z), np.ones_like(z))
    np.testing.assert_allclose(one.f1.d_z(z), np.zeros_like(z))


def test_mixed_field_components_differ():
    m = get_field("mixed")
    np.testing.assert_allclose(m.component(1)(PROBES), np.conj(PROBES))
    np.testing.assert_allclose(m.component(2)(PROBES), PROBES)


def test_component_index_validation():
    F = get_field("z")
    with pytest.raises(ValueError):
        F.component(0)
    with pytest.raises(ValueError):
        F.component(3)


def test_cfield_finite_difference_fallback():
    f = CField(lambda z: z**3, label="cube")  # no analytic partials supplied
    got_z = np.asarray(f.d_z(PROBES))
    got_zbar = np.asarray(f.d_zbar(PROBES))
    np.testing.assert_allclose(got_z, 3.0 * PROBES**2, atol=1e-5)
    np.testing.assert_allclose(got_zbar, np.zeros_like(PROBES), atol=1e-5)
    assert f.label == "cube"


def test_product_field_wraps_two_scalars():
    F = BCProductField(CField(lambda z: z), CField(lambda z: -z), label="pm")
    np.testing.assert_allclose(F.component(1)(PROBES), PROBES)
    np.testing.assert_allclose(F.component(2)(PROBES), -PROBES)
    assert F.label == "pm"
