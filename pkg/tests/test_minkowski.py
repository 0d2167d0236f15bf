import cmath
import math

import numpy as np
import pytest
from hypothesis import given

from horolib.minkowski import (
    CelestialPoint,
    Flag,
    MinkVec,
    act_flag,
    act_minkowski,
    flag_of_spinor,
    flags_equal,
    frame_basis,
    g_inv,
    g_map,
    gf,
    hopf,
    hopf_stereo,
    make_flag,
    plucker_residual,
    spinor_mink_identity,
    stereo,
)
from horolib.spinor import (
    Hermitian2,
    Spinor,
    act_spinor,
    derivative_f,
    f_map,
    inner_product,
    zeta,
)
from strategies import angles, random_complex, random_sl2c, random_spinor, random_unit_spinor, sl2c, spinors


def test_g_examples():
    assert g_map(Hermitian2(1, 0, 0)) == MinkVec(1, 0, 0, 1)
    assert g_map(Hermitian2(0, 1, 0)) == MinkVec(1, 0, 0, -1)
    assert g_map(Hermitian2(0, 0, 1)) == MinkVec(0, 2, 0, 0)
    assert g_map(Hermitian2(0, 0, 1j)) == MinkVec(0, 0, 2, 0)


@given(spinors())
def test_g_roundtrip_and_det(k):
    S = f_map(k) + Hermitian2(0.5, -1.25, 0.3 - 0.1j)
    p = g_map(S)
    back = g_inv(p)
    assert (back - S).norm() <= 1e-12 * (1 + S.norm())
    assert p.norm2() == pytest.approx(4 * S.det(), rel=1e-9, abs=1e-9 * (1 + S.norm() ** 2))


@given(spinors())
def test_gf_closed_form(k):
    via_g = g_map(f_map(k))
    assert np.allclose(gf(k).as_array(), via_g.as_array(), rtol=1e-12, atol=1e-12 * k.norm2())
    assert gf(k).on_future_cone()


def test_gf_examples():
    assert gf(Spinor(1, 0)) == MinkVec(1, 0, 0, 1)
    assert gf(Spinor(0, 1)) == MinkVec(1, 0, 0, -1)
    assert gf(Spinor(1, 1)) == MinkVec(2, 2, 0, 0)


@given(spinors(), spinors())
def test_bilinear_form_vs_minkowski(k1, k2):
    scale = k1.norm2() * k2.norm2()
    assert abs(spinor_mink_identity(k1, k2)) <= 1e-11 * scale


def test_causal_character():
    assert MinkVec(1, 0, 0, 1).is_lightlike()
    assert MinkVec(2, 0, 0, 1).is_timelike()
    assert MinkVec(0, 1, 0, 0).is_spacelike()
    assert not MinkVec(-1, 0, 0, 1).on_future_cone()


def test_frame_basis_examples():
    e1, e2, e3 = frame_basis(Spinor(1, 0))
    assert np.array_equal(e1, [1, 0, 0])
    assert np.array_equal(e2, [0, 1, 0])
    assert np.array_equal(e3, [0, 0, 1])


@given(spinors())
def test_frame_basis_orthogonal_right_handed(k):
    e1, e2, e3 = frame_basis(k)
    n = k.norm2()
    for e in (e1, e2, e3):
        assert np.linalg.norm(e) == pytest.approx(n, rel=1e-12)
    assert abs(e1 @ e2) + abs(e2 @ e3) + abs(e1 @ e3) <= 1e-11 * n * n
    assert np.allclose(np.cross(e1, e2), n * e3, atol=1e-11 * n * n)
    assert np.allclose(e3, gf(k).xyz(), atol=1e-12 * n)


@given(spinors())
def test_frame_basis_from_derivatives(k):
    # g of the derivative of f in the zeta and i*zeta directions gives 2 e2 and 2 e1
    e1, e2, _ = frame_basis(k)
    z = zeta(k)
    v2 = g_map(derivative_f(k, z)).as_array()
    v1 = g_map(derivative_f(k, 1j * z)).as_array()
    n = k.norm2()
    assert np.allclose(v2, [0, *(2 * e2)], atol=1e-11 * n)
    assert np.allclose(v1, [0, *(2 * e1)], atol=1e-11 * n)


@given(spinors(), angles)
def test_phase_rotates_frame(k, theta):
    e1, e2, e3 = frame_basis(k)
    f1, f2, f3 = frame_basis(cmath.exp(1j * theta) * k)
    c, s = math.cos(-2 * theta), math.sin(-2 * theta)
    tol = 1e-10 * k.norm2()
    assert np.allclose(f2, e2 * c + e1 * s, atol=tol)
    assert np.allclose(f1, e1 * c - e2 * s, atol=tol)
    assert np.allclose(f3, e3, atol=tol)


def test_flag_of_spinor_examples():
    F = flag_of_spinor(Spinor(1, 0))
    assert F.base == MinkVec(1, 0, 0, 1)
    assert F.dir == MinkVec(0, 0, 1, 0)


def test_flag_validation():
    with pytest.raises(ValueError):
        Flag(MinkVec(1, 0, 0, 1), MinkVec(0, 0, 0, 1))
    with pytest.raises(ValueError):
        Flag(MinkVec(1, 0, 0, 1), MinkVec(0, 0, 2, 0))
    with pytest.raises(ValueError):
        make_flag(MinkVec(1, 0, 0, 1), MinkVec(1, 0, 0, 1))
    F = make_flag(MinkVec(1, 0, 0, 1), MinkVec(3, 0, 5, 3))
    assert F.dir == MinkVec(0, 0, 1, 0)


def test_flag_is_two_to_one(rng):
    for _ in range(200):
        k = random_spinor(rng)
        F = flag_of_spinor(k)
        assert flags_equal(flag_of_spinor(-k), F)
        theta = rng.uniform(0.1, math.pi - 0.1)
        assert not flags_equal(flag_of_spinor(cmath.exp(1j * theta) * k), F)


@given(sl2c(), spinors())
def test_flag_equivariant(A, k):
    assert flags_equal(act_flag(A, flag_of_spinor(k)), flag_of_spinor(act_spinor(A, k)), rtol=1e-8)


def test_lorentz_action_preserves_inner_product(rng):
    for _ in range(300):
        A = random_sl2c(rng)
        p, q = gf(random_spinor(rng)), MinkVec(*rng.normal(size=4))
        before = p.inner(q)
        after = act_minkowski(A, p).inner(act_minkowski(A, q))
        scale = math.sqrt(p.euclid2() * q.euclid2()) * 25**2
        assert abs(after - before) <= 1e-12 * scale


def test_stereo_examples():
    assert np.allclose(stereo(0), [0, 0, -1])
    assert np.allclose(stereo(1), [1, 0, 0])
    assert np.allclose(stereo(1j), [0, 1, 0])
    assert np.allclose(stereo(None), [0, 0, 1])
    assert np.allclose(stereo(math.inf), [0, 0, 1])


def test_hopf_examples():
    assert hopf(Spinor(1, 0)) is None
    assert hopf(Spinor(2j, 1)) == 2j
    assert hopf_stereo(Spinor(1, 0)) == CelestialPoint(0, 0, 1)
    with pytest.raises(ValueError):
        hopf_stereo(Spinor(2, 0))


def test_hopf_stereo_matches_gf(rng):
    for _ in range(500):
        k = random_unit_spinor(rng)
        assert np.allclose(hopf_stereo(k).as_array(), gf(k).xyz(), atol=1e-10)


def test_plucker_random(rng):
    for _ in range(500):
        M = random_complex(rng, (2, 4))
        assert abs(plucker_residual(M)) <= 1e-12 * np.abs(M).max() ** 4 * 10


def test_plucker_matches_ptolemy(rng):
    for _ in range(100):
        ks = [random_spinor(rng) for _ in range(4)]
        M = np.array([[k.xi for k in ks], [k.eta for k in ks]])
        lam = {(i, j): inner_product(ks[i], ks[j]) for i in range(4) for j in range(4)}
        expected = lam[0, 2] * lam[1, 3] - lam[0, 1] * lam[2, 3] - lam[0, 3] * lam[1, 2]
        assert plucker_residual(M) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("theta", [0.2, 1.0, -2.4])
def test_frame_of_phase_spinor(theta):
    _, e2, _ = frame_basis(Spinor(cmath.exp(1j * theta), 0))
    assert np.allclose(e2, [-math.sin(2 * theta), math.cos(2 * theta), 0], atol=1e-15)
