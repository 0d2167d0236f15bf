"""Two-component spinors, 2x2 Hermitian matrices and the SL(2,C) actions.

The map ``f`` sends a spinor ``k`` to the rank-one Hermitian matrix ``k k*``;
``zeta`` is the antilinear map ``k -> J conj(k)`` with ``J = [[0, i], [-i, 0]]``.
"""

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from horolib.tolerance import DEFAULT_ATOL, default_rtol

SL2C_DET_TOL = 1e-12


@dataclass(frozen=True)
class Spinor:
    xi: complex
    eta: complex

    def __post_init__(self):
        xi, eta = complex(self.xi), complex(self.eta)
        if not all(map(math.isfinite, (xi.real, xi.imag, eta.real, eta.imag))):
            raise ValueError(f"spinor components must be finite, got ({xi}, {eta})")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)

    def norm2(self):
        """``|xi|^2 + |eta|^2``."""
        return abs(self.xi) ** 2 + abs(self.eta) ** 2

    def is_zero(self):
        return self.xi == 0 and self.eta == 0

    def as_array(self):
        return np.array([self.xi, self.eta], dtype=complex)

    def __neg__(self):
        return type(self)(-self.xi, -self.eta)

    def __mul__(self, c):
        return type(self)(c * self.xi, c * self.eta)

    __rmul__ = __mul__

    def __add__(self, other):
        return Spinor(self.xi + other.xi, self.eta + other.eta)

    def __iter__(self):
        yield self.xi
        yield self.eta


class NonzeroSpinor(Spinor):
    """A spinor with ``|xi|^2 + |eta|^2 > 0``, checked at construction."""

    def __post_init__(self):
        super().__post_init__()
        if self.is_zero():
            raise ValueError("spinor must be nonzero")


def nonzero(k):
    """Promote ``k`` to a :class:`NonzeroSpinor`, raising on the zero spinor."""
    if isinstance(k, NonzeroSpinor):
        return k
    if isinstance(k, Spinor):
        return NonzeroSpinor(k.xi, k.eta)
    xi, eta = k
    return NonzeroSpinor(xi, eta)


class HermitianClass(enum.IntEnum):
    """Nested cones of Hermitian matrices; larger values are more specific."""

    GENERIC = 0
    H0 = 1
    H0_NONNEG = 2
    H0_POS = 3


@dataclass(frozen=True)
class Hermitian2:
    """``[[a, b], [conj(b), d]]`` with ``a, d`` real."""

    a: float
    d: float
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "d", float(self.d))
        object.__setattr__(self, "b", complex(self.b))

    @classmethod
    def from_matrix(cls, m, tol=1e-10):
        m = np.asarray(m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        scale = max(1.0, float(np.abs(m).max()))
        if np.abs(m - m.conj().T).max() > tol * scale:
            raise ValueError("matrix is not Hermitian")
        return cls(m[0, 0].real, m[1, 1].real, (m[0, 1] + m[1, 0].conjugate()) / 2)

    def as_matrix(self):
        return np.array([[self.a, self.b], [self.b.conjugate(), self.d]], dtype=complex)

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - abs(self.b) ** 2

    def norm(self):
        """Frobenius norm."""
        return math.sqrt(self.a**2 + self.d**2 + 2 * abs(self.b) ** 2)

    def real_coords(self):
        """Coordinates in the real 4-dimensional space of Hermitian matrices."""
        return np.array([self.a, self.d, self.b.real, self.b.imag])

    def __add__(self, other):
        return Hermitian2(self.a + other.a, self.d + other.d, self.b + other.b)

    def __sub__(self, other):
        return Hermitian2(self.a - other.a, self.d - other.d, self.b - other.b)

    def __mul__(self, r):
        return Hermitian2(r * self.a, r * self.d, r * self.b)

    __rmul__ = __mul__


@dataclass(frozen=True)
class SL2C:
    """``[[alpha, beta], [gamma, delta]]`` with determinant one.

    The determinant is validated, never silently renormalized; use
    :meth:`normalized` to divide by a square root of the determinant explicitly.
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        err = abs(self.det() - 1)
        if err > SL2C_DET_TOL:
            raise ValueError(f"determinant differs from 1 by {err:.3g}")

    @classmethod
    def normalized(cls, alpha, beta, gamma, delta):
        det = complex(alpha) * delta - complex(beta) * gamma
        if det == 0:
            raise ValueError("singular matrix cannot be normalized")
        s = cmath.sqrt(det)
        return cls(alpha / s, beta / s, gamma / s, delta / s)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def det(self):
        return self.alpha * self.delta - self.beta * self.gamma

    def as_matrix(self):
        return np.array([[self.alpha, self.beta], [self.gamma, self.delta]], dtype=complex)

    def inverse(self):
        return SL2C(self.delta, -self.beta, -self.gamma, self.alpha)

    def __neg__(self):
        return SL2C(-self.alpha, -self.beta, -self.gamma, -self.delta)

    def __matmul__(self, other):
        return SL2C(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )


def inner_product(k1, k2):
    """The bilinear form ``{k1, k2} = xi1*eta2 - xi2*eta1``."""
    return k1.xi * k2.eta - k2.xi * k1.eta


def f_map(k):
    """``k k*``: a nonzero spinor to a point of the cone ``H0+``."""
    k = nonzero(k)
    return Hermitian2(abs(k.xi) ** 2, abs(k.eta) ** 2, k.xi * k.eta.conjugate())


def f_preimage(S, tol=1e-10):
    """A spinor ``k`` with ``f(k) = S`` for ``S`` in ``H0+`` (unique up to phase).

    The real coordinate is placed on whichever diagonal entry is larger.
    """
    if classify_hermitian(S, tol=tol) is not HermitianClass.H0_POS:
        raise ValueError("matrix is not in H0+ (rank one, positive trace)")
    if S.a >= S.d:
        xi = math.sqrt(S.a)
        return NonzeroSpinor(xi, S.b.conjugate() / xi)
    eta = math.sqrt(S.d)
    return NonzeroSpinor(S.b / eta, eta)


def arg(z):
    """Principal argument in ``(-pi, pi]``.

    ``cmath.phase`` raises OverflowError for some subnormal imaginary parts;
    ``math.atan2`` does not.
    """
    return math.atan2(z.imag, z.real)


def relative_phase(k1, k2):
    """``theta`` minimizing ``|k1 - e^{i theta} k2|``."""
    return arg(k2.xi.conjugate() * k1.xi + k2.eta.conjugate() * k1.eta)


def zeta(k):
    """``J conj(k) = (i conj(eta), -i conj(xi))``."""
    return Spinor(1j * k.eta.conjugate(), -1j * k.xi.conjugate())


def classify_hermitian(S, tol=1e-10):
    """Most specific cone containing ``S``; tolerances scale with ``||S||``."""
    scale = S.norm()
    if abs(S.det()) > tol * scale**2:
        return HermitianClass.GENERIC
    tr = S.trace()
    if tr > tol * scale and scale > 0:
        return HermitianClass.H0_POS
    if tr >= -tol * scale:
        return HermitianClass.H0_NONNEG
    return HermitianClass.H0


def act_spinor(A, k):
    return type(k)(A.alpha * k.xi + A.beta * k.eta, A.gamma * k.xi + A.delta * k.eta)


def act_hermitian(A, S):
    """``A S A*``."""
    m = A.as_matrix()
    return Hermitian2.from_matrix(m @ S.as_matrix() @ m.conj().T, tol=np.inf)


def derivative_f(k, v):
    """Derivative of ``f`` at ``k`` in direction ``v``: ``k v* + v k*``."""
    return Hermitian2(
        2 * (k.xi * v.xi.conjugate()).real,
        2 * (k.eta * v.eta.conjugate()).real,
        k.xi * v.eta.conjugate() + v.xi * k.eta.conjugate(),
    )


def hermitian_close(S1, S2, atol=DEFAULT_ATOL, rtol=None):
    if rtol is None:
        rtol = default_rtol()
    scale = max(S1.norm(), S2.norm())
    return (S1 - S2).norm() <= atol + rtol * scale
