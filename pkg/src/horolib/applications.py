"""Applications of lambda lengths: ideal tetrahedra, ideal polygons and Ford circles."""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from horolib.models import Finite, Infinity, K_map
from horolib.spinor import NonzeroSpinor, Spinor, inner_product, nonzero

MINOR_TOL = 1e-9
REAL_TOL = 1e-12
MAX_FAREY_DEPTH = 30


class DegenerateTetrahedron(ValueError):
    pass


def _lambdas(ks):
    k = [nonzero(x) for x in ks]
    return {(i, j): inner_product(k[i], k[j]) for i in range(len(k)) for j in range(len(k))}


def ptolemy_residual(k0, k1, k2, k3):
    """``l01 l23 + l03 l12 - l02 l13`` with ``lij = {ki, kj}``."""
    lam = _lambdas((k0, k1, k2, k3))
    return lam[0, 1] * lam[2, 3] + lam[0, 3] * lam[1, 2] - lam[0, 2] * lam[1, 3]


def ptolemy_scale(k0, k1, k2, k3):
    """Natural magnitude of the Ptolemy terms: the product of the four spinor norms."""
    return math.prod(math.sqrt(k.norm2()) for k in (k0, k1, k2, k3))


@dataclass(frozen=True)
class ShapeTriple:
    """Shape parameters ``(z, z', z'')`` with ``z' = 1/(1-z)``, ``z'' = (z-1)/z``."""

    z: complex
    z_prime: complex
    z_dprime: complex

    def __post_init__(self):
        for name in ("z", "z_prime", "z_dprime"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if not self.residuals_ok():
            raise ValueError(f"inconsistent shape parameters {self}")

    @classmethod
    def from_z(cls, z):
        z = complex(z)
        return cls(z, 1 / (1 - z), (z - 1) / z)

    def residuals(self):
        """Relative residuals of ``z + 1/z' = 1``, ``z' + 1/z'' = 1``, ``z'' + 1/z = 1``."""
        z, zp, zpp = self.z, self.z_prime, self.z_dprime
        out = []
        for a, b in ((z, zp), (zp, zpp), (zpp, z)):
            scale = max(1.0, abs(a), abs(1 / b))
            out.append(abs(a + 1 / b - 1) / scale)
        return out

    def residuals_ok(self, tol=1e-8):
        return max(self.residuals()) <= tol

    def cycled(self):
        return ShapeTriple(self.z_prime, self.z_dprime, self.z)


def shape_parameters(k0, k1, k2, k3, tol=MINOR_TOL):
    """Shape parameters along edge 01 from the six lambda lengths."""
    ks = (k0, k1, k2, k3)
    lam = _lambdas(ks)
    for i in range(4):
        for j in range(i + 1, 4):
            scale = math.sqrt(ks[i].norm2() * ks[j].norm2())
            if abs(lam[i, j]) <= tol * scale:
                raise DegenerateTetrahedron(f"degenerate tetrahedron: lambda_{i}{j} = 0")
    return ShapeTriple(
        lam[0, 2] * lam[1, 3] / (lam[0, 3] * lam[1, 2]),
        -lam[0, 3] * lam[1, 2] / (lam[0, 1] * lam[2, 3]),
        lam[0, 1] * lam[2, 3] / (lam[0, 2] * lam[1, 3]),
    )


# polygons


class PolygonClass(enum.IntEnum):
    """Nested classes of spinor matrices; larger values are more specific."""

    GENERALIZED = 0
    NONDEGENERATE = 1
    IDEAL = 2
    SPIN_COHERENT = 3


@dataclass(frozen=True)
class SpinorMatrix:
    columns: tuple
    field: str = "complex"

    def __post_init__(self):
        cols = tuple(c if isinstance(c, Spinor) else Spinor(*c) for c in self.columns)
        if not cols:
            raise ValueError("a spinor matrix needs at least one column")
        if self.field not in ("real", "complex"):
            raise ValueError(f"field must be 'real' or 'complex', got {self.field!r}")
        if self.field == "real":
            worst = max(max(abs(c.xi.imag), abs(c.eta.imag)) for c in cols)
            if worst > REAL_TOL:
                raise ValueError("real-tagged matrix has a non-real entry")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_columns(cls, columns):
        """Tag as real when every entry is real."""
        cols = [c if isinstance(c, Spinor) else Spinor(*c) for c in columns]
        real = all(c.xi.imag == 0 and c.eta.imag == 0 for c in cols)
        return cls(tuple(cols), "real" if real else "complex")

    @property
    def d(self):
        return len(self.columns)

    def as_array(self):
        return np.array([[c.xi for c in self.columns], [c.eta for c in self.columns]])

    def minor(self, i, j):
        return inner_product(self.columns[i], self.columns[j])


def classify_polygon_matrix(M, tol=MINOR_TOL):
    """Most specific :class:`PolygonClass` of a 2 x d spinor matrix.

    A minor counts as nonzero when ``|det| > tol * |ci| |cj|``.  Complex
    matrices never receive the positivity class.
    """
    norms = [math.sqrt(c.norm2()) for c in M.columns]
    if min(norms) == 0:
        raise ValueError("spinor matrix has a zero column")
    nonzero_minors, positive = [], []
    for i in range(M.d):
        for j in range(i + 1, M.d):
            m = M.minor(i, j)
            thresh = tol * norms[i] * norms[j]
            nonzero_minors.append(abs(m) > thresh)
            positive.append(m.real > thresh)
    if not any(nonzero_minors):
        return PolygonClass.GENERALIZED
    if not all(nonzero_minors):
        return PolygonClass.NONDEGENERATE
    if M.field == "real" and all(positive):
        return PolygonClass.SPIN_COHERENT
    return PolygonClass.IDEAL


def vertices_in_order(points):
    """True iff the points are a cyclic rotation of a strictly decreasing list.

    ``inf`` (or :data:`Infinity`) is the largest point; repeats raise.
    """
    vals = []
    for p in points:
        if p is Infinity or p is None:
            vals.append(math.inf)
        elif isinstance(p, Finite):
            if p.z.imag != 0:
                raise ValueError("vertices must lie on the real line")
            vals.append(p.z.real)
        else:
            vals.append(float(p))
    if len(set(vals)) != len(vals):
        raise ValueError("vertices must be distinct")
    n = len(vals)
    ascents = sum(vals[i] < vals[(i + 1) % n] for i in range(n))
    return ascents <= 1


def coherent_spinors(centers, scales=None):
    """Real spinors with the given centers and every ``{k1, kj} > 0``.

    ``centers`` are real numbers or ``inf``; ``scales`` are positive factors
    (the horocycle sizes).  The first spinor's sign is fixed, the others are
    chosen to make the first row of minors positive.
    """
    if scales is None:
        scales = [1.0] * len(centers)
    ks = []
    for c, s in zip(centers, scales):
        k = NonzeroSpinor(s, 0) if math.isinf(c) else NonzeroSpinor(s * c, s)
        ks.append(k)
    out = [ks[0]]
    for k in ks[1:]:
        out.append(k if inner_product(ks[0], k).real > 0 else -k)
    return out


# Ford circles


@dataclass(frozen=True)
class FordCircle:
    """The Ford circle at the reduced fraction ``p/q`` (``q = 0`` is the circle at infinity)."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("Ford circle coordinates must be integers")
        if self.q < 0:
            raise ValueError("denominator must be non-negative")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")

    @classmethod
    def of(cls, p, q):
        """Normalize signs so that ``q >= 0``."""
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @property
    def fraction(self):
        return Fraction(self.p, self.q) if self.q else None

    def horosphere(self):
        return ford_circle(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


def ford_circle(p, q):
    """Decorated horocycle of the integer spinor ``(p, q)``: center ``p/q``, diameter ``1/q^2``."""
    FordCircle.of(p, q)
    return K_map(NonzeroSpinor(p, q))


def _det(c1, c2):
    return c1.p * c2.q - c2.p * c1.q


def ford_tangent(c1, c2):
    return abs(_det(c1, c2)) == 1


def ford_distance(c1, c2):
    """Signed distance ``2 log |ad - bc|`` between two distinct Ford circles."""
    det = _det(c1, c2)
    if det == 0:
        raise ValueError("the two Ford circles coincide")
    return 2 * math.log(abs(det))


def mediant(c1, c2):
    """Farey sum ``(a + c)/(b + d)`` in lowest terms."""
    p, q = c1.p + c2.p, c1.q + c2.q
    g = math.gcd(p, q)
    if g == 0:
        raise ValueError("mediant of opposite circles is undefined")
    return FordCircle.of(p // g, q // g)


def farey_enumerate(depth):
    """Reduced fractions in ``[0, 1]`` with denominator ``<= depth``, increasing.

    Generated by Stern-Brocot insertion of mediants between neighbors.
    """
    if not (isinstance(depth, int) and 1 <= depth <= MAX_FAREY_DEPTH):
        raise ValueError(f"depth must be an integer in [1, {MAX_FAREY_DEPTH}]")

    def between(left, right):
        m = FordCircle(left.p + right.p, left.q + right.q)
        if m.q > depth:
            return []
        return between(left, m) + [m] + between(m, right)

    lo, hi = FordCircle(0, 1), FordCircle(1, 1)
    return [lo] + between(lo, hi) + [hi]

