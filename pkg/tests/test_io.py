import json
import math
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from horolib.applications import FordCircle, ShapeTriple, farey_enumerate
from horolib.io import (
    JSONParseError,
    SceneU,
    dumps,
    fmt_complex,
    fmt_real,
    ford_svg,
    from_json,
    loads,
    parse_complex_text,
    scene_svg,
    to_json,
)
from horolib.lambdas import complex_distance_geometric, complex_distance_spin, lambda_length
from horolib.minkowski import CelestialPoint, flag_of_spinor, gf
from horolib.models import HorosphereH, K_map, SpinDecoratedHorosphereU
from horolib.spinor import NonzeroSpinor, Spinor, f_map
from strategies import sl2c, spinors

SVG = "{http://www.w3.org/2000/svg}"


def roundtrip(obj):
    return loads(json.dumps(to_json(obj)))


@given(spinors())
def test_roundtrip_spinor_values(k):
    values = (k, gf(k), flag_of_spinor(k), f_map(k), K_map(k), HorosphereH(gf(k)), SpinDecoratedHorosphereU(k))
    for obj in values:
        assert roundtrip(obj) == obj


@given(spinors(), spinors())
def test_roundtrip_pair_values(k1, k2):
    assert roundtrip(lambda_length(k1, k2)) == lambda_length(k1, k2)
    assert roundtrip(complex_distance_spin(k1, k2)) == complex_distance_spin(k1, k2)


@given(sl2c())
def test_roundtrip_sl2c(A):
    assert roundtrip(A) == A


def test_roundtrip_misc():
    for obj in (
        CelestialPoint(0, 0, 1),
        ShapeTriple.from_z(2 + 1j),
        FordCircle(3, 7),
        complex_distance_geometric(K_map(Spinor(1, 0)), K_map(Spinor(3, 0))),
        K_map(Spinor(1, 0)),
    ):
        assert roundtrip(obj) == obj


def test_wire_format():
    data = to_json(K_map(Spinor(1, 0)))
    assert data == {"type": "DecoratedHorosphereU", "center": "inf", "delta": {"re": 0.0, "im": 1.0}}
    d = to_json(complex_distance_spin(Spinor(1, 0), Spinor(1, 0)))
    assert d["rho"] == "-inf"
    assert json.loads(dumps(FordCircle(1, 2))) == {"type": "FordCircle", "p": 1, "q": 2}


def test_accepts_display_strings():
    k = from_json({"type": "Spinor", "xi": "1+2i", "eta": "-i"})
    assert k == NonzeroSpinor(1 + 2j, -1j)


@pytest.mark.parametrize(
    "payload,field",
    [
        ({"type": "Spinor", "xi": {"re": 1, "im": 0}}, "$.eta"),
        ({"type": "Spinor", "xi": {"re": "x", "im": 0}, "eta": 0}, "$.xi.re"),
        ({"type": "Spinor", "xi": 0, "eta": 0}, "$"),
        ({"type": "SL2C", "entries": [1, 0, 0]}, "$.entries"),
        ({"type": "SL2C", "entries": [2, 0, 0, 1]}, "$"),
        ({"type": "Nope"}, "$.type"),
        ({"type": "DecoratedHorosphereU", "center": "inf", "delta": 0}, "$"),
        (
            {"type": "SpinDecoratedHorosphereU", "spinor": {"type": "Spinor", "xi": "1", "eta": "2k"}},
            "$.spinor.eta",
        ),
        ([1, 2], "$"),
    ],
)
def test_parse_errors_name_field(payload, field):
    with pytest.raises(JSONParseError) as info:
        from_json(payload)
    assert info.value.field == field


def test_invalid_json_text():
    with pytest.raises(JSONParseError):
        loads("{not json")


def test_to_json_rejects_unknown():
    with pytest.raises(TypeError):
        to_json(object())


@pytest.mark.parametrize(
    "text,value",
    [("1", 1), ("-2i", -2j), ("i", 1j), ("2+3i", 2 + 3j), ("1.5e-3-2i", 1.5e-3 - 2j), (" 4 - i ", 4 - 1j)],
)
def test_parse_complex_text(text, value):
    assert parse_complex_text(text) == value


@pytest.mark.parametrize("text", ["", "1+2j", "(1+2i)", "abc", "inf", "nan+1i"])
def test_parse_complex_text_rejects(text):
    with pytest.raises(ValueError):
        parse_complex_text(text)


def test_display_format():
    assert fmt_complex(1j) == "0+1i"
    assert fmt_complex(-0.0 - 2j) == "0-2i"
    assert fmt_complex(1 / 3) == "0.333333333333+0i"
    assert fmt_real(-0.0) == "0"
    assert fmt_real(-math.inf) == "-inf"
    assert parse_complex_text(fmt_complex(2.5 - 1e-20j)) == 2.5 - 1e-20j


def test_ford_svg_structure():
    circles = farey_enumerate(4)
    root = ET.fromstring(ford_svg(circles))
    assert root.tag == SVG + "svg"
    drawn = root.findall(f".//{SVG}circle")
    assert len(drawn) == len(circles)
    radii = sorted(float(c.get("r")) for c in drawn)
    # radii scale as 1/q^2: the largest (q = 1) are 16 times the smallest (q = 4)
    assert radii[-1] / radii[0] == pytest.approx(16, rel=1e-3)
    labels = [t.text for t in root.findall(f".//{SVG}text")]
    assert "1/4" in labels


def test_ford_svg_deterministic():
    assert ford_svg(farey_enumerate(5)) == ford_svg(farey_enumerate(5))


def test_scene_svg():
    hs = [K_map(Spinor(1, 0)), K_map(Spinor(0, 1)), K_map(Spinor(1 + 1j, 1)), K_map(Spinor(2, 1))]
    text = scene_svg(SceneU(hs, ["a", "b", "c", "d"]))
    root = ET.fromstring(text)
    assert len(root.findall(f".//{SVG}circle")) >= 3
    assert root.findall(f".//{SVG}line")
    # the sphere on 1+i has diameter 1 and misses the drawing plane
    assert [t.text for t in root.findall(f".//{SVG}text")] == ["a", "b", "d"]
    with pytest.raises(ValueError):
        SceneU(hs, ["a"], 1, 0)
