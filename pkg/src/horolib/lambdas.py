"""Complex lambda lengths and complex distances between decorated horospheres.

Two routes are provided.  :func:`complex_distance_spin` reads the distance
off the spinor bilinear form, ``d = 2 Log {k1, k2}``, and keeps ``theta``
modulo 4 pi.  :func:`complex_distance_geometric` never touches the bilinear
form: it moves the two decorated horospheres by a Mobius map into standard
position (first center at infinity, second at 0) and compares decorations
there, which only determines ``theta`` modulo 2 pi.
"""

import cmath
import math
from dataclasses import dataclass

from horolib.models import Finite, Infinity, mobius_act_horosphere
from horolib.spinor import SL2C, arg, inner_product, nonzero

DECORATED = "decorated"
SPIN = "spin"
_PERIOD = {DECORATED: 2 * math.pi, SPIN: 4 * math.pi}

DEGENERATE_LAMBDA = 1e-6


@dataclass(frozen=True)
class ComplexDistance:
    """``d = rho + i theta``; ``theta`` in ``[0, 2pi)`` or ``[0, 4pi)`` by mode."""

    rho: float
    theta: float
    mode: str
    same_center: bool = False

    def __post_init__(self):
        if self.mode not in _PERIOD:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.same_center:
            if self.rho != -math.inf:
                raise ValueError("same-center distances have rho = -inf")
            return
        if not math.isfinite(self.rho):
            raise ValueError("rho = -inf only for horospheres with a common center")
        if not 0 <= self.theta < _PERIOD[self.mode]:
            raise ValueError(f"theta {self.theta} outside [0, {_PERIOD[self.mode]})")

    @property
    def period(self):
        return _PERIOD[self.mode]

    def as_complex(self):
        if self.same_center:
            return complex(-math.inf, 0)
        return complex(self.rho, self.theta)

    def exp(self):
        """``e^d``; zero for a common center."""
        if self.same_center:
            return 0j
        return cmath.exp(self.as_complex())


def wrap_angle(theta, period):
    """``theta mod period`` in ``[0, period)`` (guarding the rounding edge)."""
    t = math.fmod(theta, period)
    if t < 0:
        t += period
    if t >= period:
        t = 0.0
    return t


def _same_center(mode):
    return ComplexDistance(-math.inf, 0.0, mode, same_center=True)


@dataclass(frozen=True)
class LambdaLength:
    value: complex

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))

    def is_zero(self):
        return self.value == 0

    def complex_distance(self):
        """``2 Log(lambda)`` with ``theta`` modulo 4 pi."""
        if self.value == 0:
            return _same_center(SPIN)
        rho = 2 * math.log(abs(self.value))
        return ComplexDistance(rho, wrap_angle(2 * arg(self.value), 4 * math.pi), SPIN)


def lambda_length(k1, k2):
    """Lambda length between the spin-decorated horospheres of ``k1``, ``k2``."""
    return LambdaLength(inner_product(nonzero(k1), nonzero(k2)))


def is_near_degenerate(k1, k2, threshold=DEGENERATE_LAMBDA):
    """True when ``|{k1, k2}|`` is below ``threshold`` (centers almost coincide)."""
    return abs(inner_product(k1, k2)) < threshold


def complex_distance_spin(k1, k2):
    return lambda_length(k1, k2).complex_distance()


def standardizing_map(c1, c2):
    """An element of SL(2,C) sending ``c1`` to infinity and ``c2`` to 0.

    Built from the two centers only.  The square-root sign is irrelevant for
    decorated (non-spin) horospheres.
    """
    if c1 is Infinity:
        return SL2C(1, -c2.z, 0, 1)
    if c2 is Infinity:
        return SL2C(0, -1, 1, -c1.z)
    # shared factor g makes gamma*c1 + delta and alpha*c2 + beta vanish exactly
    g = 1 / cmath.sqrt(c2.z - c1.z)
    return SL2C(g, -c2.z * g, g, -c1.z * g)


def standard_position(h1, h2):
    """Images of ``h1, h2`` under :func:`standardizing_map`."""
    A = standardizing_map(h1.center, h2.center)
    return mobius_act_horosphere(A, h1), mobius_act_horosphere(A, h2)


def _centers_equal(c1, c2):
    if c1 is Infinity or c2 is Infinity:
        return c1 is c2
    return c1.z == c2.z


def complex_distance_geometric(h1, h2):
    """Complex distance ``d = Log(alpha / beta)`` read off in standard position.

    In standard position ``h1`` is a horizontal plane at height ``|alpha|``
    decorated by ``alpha`` and ``h2`` a sphere on 0 of diameter ``|beta|``
    decorated by ``beta`` at its north pole.
    """
    if _centers_equal(h1.center, h2.center):
        return _same_center(DECORATED)
    s1, s2 = standard_position(h1, h2)
    if s1.center is not Infinity or not isinstance(s2.center, Finite):
        raise ArithmeticError("standardizing map failed to place the centers")
    ratio = s1.delta / s2.delta
    return ComplexDistance(
        math.log(abs(ratio)), wrap_angle(arg(ratio), 2 * math.pi), DECORATED
    )
