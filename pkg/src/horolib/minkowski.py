"""Minkowski space R^{1,3} with its future light cone and null flags.

Signature is (+, -, -, -).  A Hermitian matrix ``[[a, b], [conj(b), d]]``
corresponds to ``(a + d, 2 Re b, 2 Im b, a - d)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from horolib.spinor import Hermitian2, act_hermitian, inner_product, nonzero
from horolib.tolerance import default_rtol

CONE_TOL = 1e-10


@dataclass(frozen=True)
class MinkVec:
    T: float
    X: float
    Y: float
    Z: float

    def __post_init__(self):
        for name in ("T", "X", "Y", "Z"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_array(cls, arr):
        T, X, Y, Z = arr
        return cls(T, X, Y, Z)

    def as_array(self):
        return np.array([self.T, self.X, self.Y, self.Z])

    def xyz(self):
        return np.array([self.X, self.Y, self.Z])

    def inner(self, other):
        return self.T * other.T - self.X * other.X - self.Y * other.Y - self.Z * other.Z

    def norm2(self):
        """Minkowski square ``T^2 - X^2 - Y^2 - Z^2``."""
        return self.inner(self)

    def euclid2(self):
        return self.T**2 + self.X**2 + self.Y**2 + self.Z**2

    def is_lightlike(self, tol=CONE_TOL):
        return abs(self.norm2()) <= tol * self.euclid2()

    def is_timelike(self, tol=CONE_TOL):
        return self.norm2() > tol * self.euclid2()

    def is_spacelike(self, tol=CONE_TOL):
        return self.norm2() < -tol * self.euclid2()

    def on_future_cone(self, tol=CONE_TOL):
        """Membership of ``L+``: lightlike with ``T > 0``."""
        return self.T > 0 and self.is_lightlike(tol)

    def __add__(self, other):
        return MinkVec(self.T + other.T, self.X + other.X, self.Y + other.Y, self.Z + other.Z)

    def __sub__(self, other):
        return MinkVec(self.T - other.T, self.X - other.X, self.Y - other.Y, self.Z - other.Z)

    def __mul__(self, r):
        return MinkVec(r * self.T, r * self.X, r * self.Y, r * self.Z)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0


def mink_inner(p, q):
    return p.inner(q)


@dataclass(frozen=True)
class Flag:
    """A pointed oriented null flag in canonical form.

    ``base`` lies on ``L+``; ``dir`` has ``T = 0``, is orthogonal to ``base``
    and has Euclidean length ``base.T``.  The orientation is the sign of ``dir``.
    Use :func:`make_flag` to canonicalize an arbitrary representative.
    """

    base: MinkVec
    dir: MinkVec

    def __post_init__(self):
        b, v = self.base, self.dir
        if not b.on_future_cone(1e-8):
            raise ValueError("flag base must lie on the future light cone")
        scale = b.T
        if abs(v.T) > 1e-8 * scale or abs(b.inner(v)) > 1e-8 * scale**2:
            raise ValueError("flag direction is not in canonical form")
        if abs(np.linalg.norm(v.xyz()) - scale) > 1e-8 * scale:
            raise ValueError("flag direction must have Euclidean length base.T")


def make_flag(base, v):
    """Canonical flag ``[[base, v]]`` for any tangent ``v`` with ``<base, v> = 0``.

    Real multiples of ``base`` are projected out (so ``dir.T = 0``) and the
    result is rescaled by a positive factor to length ``base.T``.
    """
    if not base.on_future_cone(1e-8):
        raise ValueError("flag base must lie on the future light cone")
    if abs(base.inner(v)) > 1e-8 * base.T * math.sqrt(v.euclid2()):
        raise ValueError("flag direction must be Minkowski-orthogonal to the base")
    w = v - base * (v.T / base.T)
    xyz = w.xyz()
    # remove any residual component along base.xyz so <base, w> = 0 exactly
    axis = base.xyz()
    xyz = xyz - axis * (xyz @ axis) / (axis @ axis)
    n = np.linalg.norm(xyz)
    if n <= 1e-12 * base.T:
        raise ValueError("flag direction is a multiple of the base")
    xyz = xyz * (base.T / n)
    return Flag(base, MinkVec(0.0, *xyz))


@dataclass(frozen=True)
class CelestialPoint:
    """A point of the unit sphere ``L+ ∩ {T = 1}``, stored by its XYZ part."""

    X: float
    Y: float
    Z: float

    def __post_init__(self):
        for name in ("X", "Y", "Z"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if abs(self.X**2 + self.Y**2 + self.Z**2 - 1) > 1e-12 * 4:
            raise ValueError("celestial point must have unit norm")

    def as_array(self):
        return np.array([self.X, self.Y, self.Z])


def g_map(S):
    return MinkVec(S.a + S.d, 2 * S.b.real, 2 * S.b.imag, S.a - S.d)


def g_inv(p):
    return Hermitian2((p.T + p.Z) / 2, (p.T - p.Z) / 2, complex(p.X, p.Y) / 2)


def gf(k):
    """``g(f(k)) = (|xi|^2 + |eta|^2, 2 Re(xi conj eta), 2 Im(xi conj eta), |xi|^2 - |eta|^2)``."""
    k = nonzero(k)
    a2, b2 = abs(k.xi) ** 2, abs(k.eta) ** 2
    w = k.xi * k.eta.conjugate()
    return MinkVec(a2 + b2, 2 * w.real, 2 * w.imag, a2 - b2)


def frame_basis(k):
    """Right-handed orthogonal basis ``(e1, e2, e3)`` of R^3 attached to ``k``.

    Each vector has length ``|xi|^2 + |eta|^2``; ``e3`` is the XYZ part of
    ``gf(k)`` and ``e2`` the flag direction.
    """
    k = nonzero(k)
    a, b, c, d = k.xi.real, k.xi.imag, k.eta.real, k.eta.imag
    e1 = np.array([a * a - b * b - c * c + d * d, 2 * (a * b + c * d), 2 * (b * d - a * c)])
    e2 = np.array([2 * (c * d - a * b), a * a - b * b + c * c - d * d, 2 * (a * d + b * c)])
    e3 = np.array([2 * (a * c + b * d), 2 * (b * c - a * d), a * a + b * b - c * c - d * d])
    return e1, e2, e3


def flag_of_spinor(k):
    """Null flag ``[[gf(k), e2(k)]]``.

    The tangent vector ``g(D_k f(zeta(k)))`` equals ``2 e2(k)``; the factor 2 is
    dropped so that the stored direction has length ``base.T``.
    """
    _, e2, _ = frame_basis(k)
    return Flag(gf(k), MinkVec(0.0, *e2))


def stereo(z):
    """Stereographic projection of ``C ∪ {inf}`` to the unit sphere (``inf`` -> north pole)."""
    if z is None or (isinstance(z, float) and math.isinf(z)):
        return np.array([0.0, 0.0, 1.0])
    z = complex(z)
    n = abs(z) ** 2
    return np.array([2 * z.real, 2 * z.imag, n - 1]) / (1 + n)


def hopf(k):
    """``xi / eta`` on ``CP^1``; ``None`` stands for the point at infinity."""
    if k.eta == 0:
        return None
    return k.xi / k.eta


def hopf_stereo(k, tol=1e-12):
    """``Stereo(Hopf(k))`` for a unit spinor, computed via the quotient ``xi/eta``.

    :func:`gf` gives the same point as its XYZ part; tests compare the two.
    """
    if abs(k.norm2() - 1) > tol * 4:
        raise ValueError("hopf_stereo requires |xi|^2 + |eta|^2 = 1")
    return CelestialPoint(*stereo(hopf(k)))


def act_minkowski(A, p):
    """Lorentz action ``g(A g^{-1}(p) A*)``; linear in ``p``."""
    return g_map(act_hermitian(A, g_inv(p)))


def act_flag(A, F):
    return make_flag(act_minkowski(A, F.base), act_minkowski(A, F.dir))


def flags_equal(F1, F2, rtol=None):
    if rtol is None:
        rtol = default_rtol()
    scale = F1.base.T + F2.base.T
    db = np.abs(F1.base.as_array() - F2.base.as_array()).max()
    dv = np.abs(F1.dir.as_array() - F2.dir.as_array()).max()
    return db <= rtol * scale and dv <= rtol * scale


def spinor_mink_identity(k1, k2):
    """Residual ``2 |{k1, k2}|^2 - <gf(k1), gf(k2)>``; zero in exact arithmetic."""
    return 2 * abs(inner_product(k1, k2)) ** 2 - gf(k1).inner(gf(k2))


def plucker_residual(M):
    """``det M13 det M24 - det M12 det M34 - det M14 det M23`` for a 2x4 matrix."""
    M = np.asarray(M)

    def minor(i, j):
        return M[0, i] * M[1, j] - M[0, j] * M[1, i]

    return minor(0, 2) * minor(1, 3) - minor(0, 1) * minor(2, 3) - minor(0, 3) * minor(1, 2)
