"""Spinors and the spin-decorated horospheres they describe in hyperbolic 3-space."""

from horolib.applications import (
    FordCircle,
    PolygonClass,
    ShapeTriple,
    SpinorMatrix,
    classify_polygon_matrix,
    farey_enumerate,
    ford_circle,
    ford_distance,
    ford_tangent,
    mediant,
    ptolemy_residual,
    shape_parameters,
    vertices_in_order,
)
from horolib.lambdas import (
    ComplexDistance,
    LambdaLength,
    complex_distance_geometric,
    complex_distance_spin,
    lambda_length,
)
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
    hopf_stereo,
    mink_inner,
)
from horolib.models import (
    DecoratedHorosphereU,
    Finite,
    HorosphereH,
    Infinity,
    K_map,
    SpinDecoratedHorosphereU,
    dist_horospheres,
    dist_point_horosphere,
    h_map,
    mobius_act_horosphere,
)
from horolib.spinor import (
    SL2C,
    Hermitian2,
    NonzeroSpinor,
    Spinor,
    act_hermitian,
    act_spinor,
    classify_hermitian,
    derivative_f,
    f_map,
    inner_product,
    zeta,
)

__version__ = "0.1.0"
