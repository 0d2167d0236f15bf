"""Models of hyperbolic 3-space and the horospheres living in them.

A horosphere in the hyperboloid model is stored as its light-cone point
``p`` (the horosphere is ``{x : <x, x> = 1, T > 0, <x, p> = 1}``).  In the
upper half-space model a decorated horosphere is a center in ``C ∪ {inf}``
plus one nonzero complex number ``delta`` whose modulus is the Euclidean
diameter (finite center) or height (center at infinity) and whose argument
is the decoration direction at the north pole (or everywhere, for ``inf``).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from horolib.minkowski import CONE_TOL, MinkVec, flag_of_spinor, gf
from horolib.spinor import NonzeroSpinor, nonzero
from horolib.tolerance import default_rtol

HYPERBOLOID_TOL = 1e-9


class _Infinity:
    """The point at infinity of the upper half-space boundary."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinity"

    def __reduce__(self):
        return (_Infinity, ())


Infinity = _Infinity()


@dataclass(frozen=True)
class Finite:
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))


def boundary_point(z):
    """``Finite(z)``, or :data:`Infinity` for ``None`` / ``inf``."""
    if z is Infinity or isinstance(z, Finite):
        return z
    if z is None or (isinstance(z, (int, float)) and math.isinf(z)):
        return Infinity
    return Finite(z)


@dataclass(frozen=True)
class HorosphereH:
    p: MinkVec

    def __post_init__(self):
        if not (self.p.T > 0 and self.p.is_lightlike(CONE_TOL)):
            raise ValueError("horosphere point must be lightlike and future pointing")


@dataclass(frozen=True)
class DecoratedHorosphereU:
    center: object
    delta: complex

    def __post_init__(self):
        object.__setattr__(self, "center", boundary_point(self.center))
        object.__setattr__(self, "delta", complex(self.delta))
        if self.delta == 0 or not cmath.isfinite(self.delta):
            raise ValueError("decoration delta must be finite and nonzero")

    @property
    def size(self):
        """Euclidean diameter (finite center) or height (center at infinity)."""
        return abs(self.delta)

    @property
    def direction(self):
        """Unit complex number giving the decoration direction."""
        return self.delta / abs(self.delta)

    def north_pole(self):
        """``(w, h)`` of the highest point; ``None`` for a horizontal plane."""
        if self.center is Infinity:
            return None
        return self.center.z, self.size


@dataclass(frozen=True)
class SpinDecoratedHorosphereU:
    """Spin-decorated horosphere, represented by its spinor (``k`` and ``-k`` differ)."""

    spinor: NonzeroSpinor

    def __post_init__(self):
        object.__setattr__(self, "spinor", nonzero(self.spinor))

    def decorated(self):
        return K_map(self.spinor)


# hyperboloid model


def on_hyperboloid(q, tol=HYPERBOLOID_TOL):
    return q.T > 0 and abs(q.norm2() - 1) <= tol * q.euclid2()


def _require_hyperboloid(q):
    if not on_hyperboloid(q):
        raise ValueError("point is not on the hyperboloid <q, q> = 1, T > 0")


def hyperboloid_point(x, y, z):
    """The hyperboloid point over the spatial coordinates ``(x, y, z)``."""
    return MinkVec(math.sqrt(1 + x * x + y * y + z * z), x, y, z)


def h_map(p):
    return HorosphereH(p)


def h_inv(H):
    return H.p


def on_horosphere(q, H, tol=1e-9):
    _require_hyperboloid(q)
    return abs(q.inner(H.p) - 1) <= tol


def dist_point_horosphere(q, H):
    """Signed distance ``log <q, p>``; negative inside the horoball."""
    _require_hyperboloid(q)
    return math.log(q.inner(H.p))


def dist_horospheres(H1, H2, tol=1e-12):
    """Signed distance ``log(<p1, p2> / 2)``; ``-inf`` for a common center."""
    s = H1.p.inner(H2.p)
    if s <= tol * H1.p.T * H2.p.T:
        return -math.inf
    return math.log(s / 2)


# disc model


def i_boundary(p):
    """Light-cone point to the unit sphere: ``(X, Y, Z) / T``."""
    if not p.on_future_cone(CONE_TOL):
        raise ValueError("i_boundary requires a point of L+")
    return p.xyz() / p.T


def i_interior(q):
    """Hyperboloid to Poincare ball: ``(X, Y, Z) / (1 + T)``."""
    _require_hyperboloid(q)
    return q.xyz() / (1 + q.T)


def j_boundary(u):
    """Unit sphere to ``C ∪ {inf}``: ``(x + iy) / (1 - z)``, north pole to infinity."""
    x, y, z = u
    if abs(1 - z) <= 1e-15:
        return Infinity
    return Finite(complex(x, y) / (1 - z))


def j_interior(v):
    """Poincare ball to upper half-space, returned as ``(w, h)`` with ``h > 0``.

    Inversion in the sphere of radius sqrt(2) about the north pole followed
    by reflection in the boundary plane; extends :func:`j_boundary`.
    """
    v = np.asarray(v, dtype=float)
    n = np.array([0.0, 0.0, 1.0])
    w = n + 2 * (v - n) / ((v - n) @ (v - n))
    return complex(w[0], w[1]), -w[2]


def upper_distance(P, Q):
    """Hyperbolic distance between points ``(w, h)`` of the upper half-space."""
    (w1, h1), (w2, h2) = P, Q
    return math.acosh(1 + (abs(w1 - w2) ** 2 + (h1 - h2) ** 2) / (2 * h1 * h2))


# the composite map from spinors to decorated horospheres


def K_map(k):
    """Decorated horosphere of a nonzero spinor ``(xi, eta)``.

    ``eta != 0``: center ``xi/eta``, ``delta = i / eta^2``;
    ``eta == 0``: center infinity, ``delta = i xi^2``.
    """
    k = nonzero(k)
    if k.eta == 0:
        return DecoratedHorosphereU(Infinity, 1j * k.xi**2)
    try:
        center, delta = k.xi / k.eta, 1j / k.eta**2
    except (ZeroDivisionError, OverflowError):
        center = delta = complex(math.inf)
    if not (cmath.isfinite(center) and cmath.isfinite(delta)):
        raise ValueError("eta is too small for a finite center; decoration overflows")
    return DecoratedHorosphereU(Finite(center), delta)


def K_inverse(h):
    """One of the two spinors ``±k`` with ``K_map(k) = h``."""
    if h.center is Infinity:
        return NonzeroSpinor(cmath.sqrt(-1j * h.delta), 0)
    eta = cmath.sqrt(1j / h.delta)
    return NonzeroSpinor(h.center.z * eta, eta)


def horosphere_to_hyperboloid(h):
    """Light-cone point of the underlying horosphere of ``h``."""
    return gf(K_inverse(h))


def flag_of_horosphere(h):
    """Null flag carried by the decorated horosphere ``h`` (sign-independent)."""
    return flag_of_spinor(K_inverse(h))


def horospheres_equal(h1, h2, rtol=None):
    """Equality of decorated horospheres with relative tolerances."""
    if rtol is None:
        rtol = default_rtol()
    if (h1.center is Infinity) != (h2.center is Infinity):
        return False
    if h1.center is not Infinity:
        z1, z2 = h1.center.z, h2.center.z
        if abs(z1 - z2) > rtol * max(1.0, abs(z1), abs(z2)):
            return False
    return abs(h1.delta - h2.delta) <= rtol * max(abs(h1.delta), abs(h2.delta))


def mobius_point(A, z):
    """Mobius action on ``C ∪ {inf}``."""
    z = boundary_point(z)
    if z is Infinity:
        if A.gamma == 0:
            return Infinity
        return Finite(A.alpha / A.gamma)
    den = A.gamma * z.z + A.delta
    if den == 0:
        return Infinity
    return Finite((A.alpha * z.z + A.beta) / den)


def mobius_act_horosphere(A, h):
    """Image of a decorated horosphere under ``z -> (alpha z + beta)/(gamma z + delta)``.

    Finite to finite centers scale ``delta`` by the derivative
    ``1/(gamma c + delta)^2`` at the center; a center sent to or from
    infinity exchanges diameter and height through ``-1/(gamma^2 delta)``.
    """
    if h.center is Infinity:
        if A.gamma == 0:
            return DecoratedHorosphereU(Infinity, A.alpha**2 * h.delta)
        return DecoratedHorosphereU(Finite(A.alpha / A.gamma), -1 / (A.gamma**2 * h.delta))
    c = h.center.z
    den = A.gamma * c + A.delta
    if den == 0:
        return DecoratedHorosphereU(Infinity, -1 / (A.gamma**2 * h.delta))
    return DecoratedHorosphereU(Finite((A.alpha * c + A.beta) / den), h.delta / den**2)


def dist_point_horosphere_U(P, h):
    """Signed distance from ``P = (w, height)`` to the horosphere of ``h``."""
    w, height = P
    if h.center is Infinity:
        return math.log(h.size / height)
    c = h.center.z
    return math.log((abs(w - c) ** 2 + height**2) / (h.size * height))


def dist_horospheres_U(h1, h2):
    """Signed distance from Euclidean data; ``-inf`` for a common center.

    Two finite centers: ``e^rho = |z1 - z2|^2 / (|delta1| |delta2|)``;
    one at infinity: ``e^rho = height / diameter``.
    """
    inf1, inf2 = h1.center is Infinity, h2.center is Infinity
    if inf1 and inf2:
        return -math.inf
    if inf1 or inf2:
        return math.log(h1.size / h2.size if inf1 else h2.size / h1.size)
    gap = abs(h1.center.z - h2.center.z)
    if gap == 0:
        return -math.inf
    return math.log(gap**2 / (h1.size * h2.size))

