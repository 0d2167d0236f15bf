"""Random generators and hypothesis strategies shared by the test modules."""

import math

import numpy as np
from hypothesis import assume
from hypothesis import strategies as st

from horolib.spinor import SL2C, NonzeroSpinor

# magnitudes below 1e-6 snap to zero: subnormal coordinates overflow 1/eta^2
coord = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False).map(
    lambda x: 0.0 if abs(x) < 1e-6 else x
)
complexes = st.builds(complex, coord, coord)


@st.composite
def spinors(draw, min_norm=1e-3):
    xi, eta = draw(complexes), draw(complexes)
    if abs(xi) ** 2 + abs(eta) ** 2 < min_norm**2:
        xi += min_norm
    return NonzeroSpinor(xi, eta)


@st.composite
def sl2c(draw, max_entry=5.0):
    a, b, c, d = (draw(complexes) for _ in range(4))
    assume(abs(a * d - b * c) > 0.1)
    try:
        A = SL2C.normalized(a, b, c, d)
    except ValueError:
        assume(False)
    assume(max(abs(x) for x in (A.alpha, A.beta, A.gamma, A.delta)) <= max_entry)
    return A


angles = st.floats(min_value=-2 * math.pi, max_value=2 * math.pi, allow_nan=False)


def random_complex(rng, size=None):
    return rng.normal(size=size) + 1j * rng.normal(size=size)


def random_spinor(rng):
    xi, eta = random_complex(rng, 2)
    return NonzeroSpinor(xi, eta)


def random_unit_spinor(rng):
    v = random_complex(rng, 2)
    v = v / np.linalg.norm(v)
    return NonzeroSpinor(v[0], v[1])


def random_sl2c(rng, max_entry=5.0):
    """Gaussian matrix divided by a square root of its determinant, entries bounded."""
    while True:
        m = random_complex(rng, 4)
        if abs(m[0] * m[3] - m[1] * m[2]) < 1e-3:
            continue
        A = SL2C.normalized(*m)
        if max(abs(x) for x in (A.alpha, A.beta, A.gamma, A.delta)) <= max_entry:
            return A


def random_hyperboloid_point(rng, spread=1.5):
    from horolib.models import hyperboloid_point

    x, y, z = rng.normal(scale=spread, size=3)
    return hyperboloid_point(x, y, z)
