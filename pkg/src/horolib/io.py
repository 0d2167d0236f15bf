"""JSON serialization and SVG rendering.

Wire format: every object is a JSON object with a ``"type"`` key.  Complex
numbers are ``{"re": ..., "im": ...}``, the point at infinity is the string
``"inf"`` and a ``-inf`` distance is the string ``"-inf"``.  :func:`from_json`
also accepts the display strings ``"a+bi"`` used by the command line.
"""

import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from horolib.applications import FordCircle, ShapeTriple
from horolib.lambdas import ComplexDistance, LambdaLength
from horolib.minkowski import CelestialPoint, Flag, MinkVec, make_flag
from horolib.models import (
    DecoratedHorosphereU,
    Finite,
    HorosphereH,
    Infinity,
    SpinDecoratedHorosphereU,
)
from horolib.spinor import SL2C, Hermitian2, NonzeroSpinor, Spinor


class JSONParseError(ValueError):
    """Malformed input; ``field`` names the offending key path."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


# encoding


def encode_complex(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _encode_real(x):
    if x == -math.inf:
        return "-inf"
    return float(x)


def to_json(obj):
    """JSON-compatible representation of a library value."""
    if isinstance(obj, Spinor):
        return {
            "type": "Spinor",
            "xi": encode_complex(obj.xi),
            "eta": encode_complex(obj.eta),
        }
    if isinstance(obj, MinkVec):
        return {"type": "MinkVec", "T": obj.T, "X": obj.X, "Y": obj.Y, "Z": obj.Z}
    if isinstance(obj, Flag):
        return {"type": "Flag", "base": to_json(obj.base), "dir": to_json(obj.dir)}
    if isinstance(obj, CelestialPoint):
        return {"type": "CelestialPoint", "X": obj.X, "Y": obj.Y, "Z": obj.Z}
    if isinstance(obj, Hermitian2):
        return {"type": "Hermitian2", "a": obj.a, "d": obj.d, "b": encode_complex(obj.b)}
    if isinstance(obj, SL2C):
        return {
            "type": "SL2C",
            "entries": [encode_complex(x) for x in (obj.alpha, obj.beta, obj.gamma, obj.delta)],
        }
    if isinstance(obj, HorosphereH):
        return {"type": "HorosphereH", "p": to_json(obj.p)}
    if isinstance(obj, DecoratedHorosphereU):
        center = "inf" if obj.center is Infinity else encode_complex(obj.center.z)
        return {"type": "DecoratedHorosphereU", "center": center, "delta": encode_complex(obj.delta)}
    if isinstance(obj, SpinDecoratedHorosphereU):
        return {"type": "SpinDecoratedHorosphereU", "spinor": to_json(obj.spinor)}
    if isinstance(obj, LambdaLength):
        return {"type": "LambdaLength", "value": encode_complex(obj.value)}
    if isinstance(obj, ComplexDistance):
        return {
            "type": "ComplexDistance",
            "rho": _encode_real(obj.rho),
            "theta": obj.theta,
            "mode": obj.mode,
        }
    if isinstance(obj, ShapeTriple):
        return {
            "type": "ShapeTriple",
            "z": encode_complex(obj.z),
            "z_prime": encode_complex(obj.z_prime),
            "z_dprime": encode_complex(obj.z_dprime),
        }
    if isinstance(obj, FordCircle):
        return {"type": "FordCircle", "p": obj.p, "q": obj.q}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, **kwargs):
    return json.dumps(to_json(obj), **kwargs)


# decoding


def parse_complex_text(text):
    """Parse ``"a+bi"``, ``"3"``, ``"-2i"``, ``"1.5e-3-2i"`` and similar."""
    s = text.strip().replace(" ", "")
    if not s or "j" in s or "J" in s or "(" in s:
        raise ValueError(f"not a complex number: {text!r}")
    try:
        z = complex(s.replace("i", "j"))
    except ValueError:
        raise ValueError(f"not a complex number: {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"not a finite complex number: {text!r}")
    return z


def _get(data, key, path):
    if not isinstance(data, dict):
        raise JSONParseError(path, "expected an object")
    if key not in data:
        raise JSONParseError(f"{path}.{key}", "missing field")
    return data[key]


def _real(value, path):
    if value == "-inf":
        return -math.inf
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise JSONParseError(path, f"expected a number, got {value!r}")
    return float(value)


def _complex(value, path):
    if isinstance(value, str):
        try:
            return parse_complex_text(value)
        except ValueError as exc:
            raise JSONParseError(path, str(exc)) from None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    re_, im = _get(value, "re", path), _get(value, "im", path)
    return complex(_real(re_, path + ".re"), _real(im, path + ".im"))


def _mink(value, path):
    return MinkVec(*(_real(_get(value, k, path), f"{path}.{k}") for k in "TXYZ"))


def _build(path, factory, *args):
    try:
        return factory(*args)
    except (ValueError, TypeError) as exc:
        raise JSONParseError(path, str(exc)) from None


def from_json(data, path="$"):
    """Inverse of :func:`to_json`; accepts a parsed object or a JSON string."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise JSONParseError(path, f"invalid JSON ({exc.msg})") from None
    kind = _get(data, "type", path)
    if kind == "Spinor":
        xi = _complex(_get(data, "xi", path), path + ".xi")
        eta = _complex(_get(data, "eta", path), path + ".eta")
        return _build(path, NonzeroSpinor, xi, eta)
    if kind == "MinkVec":
        return _mink(data, path)
    if kind == "Flag":
        base = _mink(_get(data, "base", path), path + ".base")
        direction = _mink(_get(data, "dir", path), path + ".dir")
        try:
            return Flag(base, direction)
        except ValueError:
            return _build(path, make_flag, base, direction)
    if kind == "CelestialPoint":
        vals = [_real(_get(data, k, path), f"{path}.{k}") for k in "XYZ"]
        return _build(path, CelestialPoint, *vals)
    if kind == "Hermitian2":
        a = _real(_get(data, "a", path), path + ".a")
        d = _real(_get(data, "d", path), path + ".d")
        return Hermitian2(a, d, _complex(_get(data, "b", path), path + ".b"))
    if kind == "SL2C":
        entries = _get(data, "entries", path)
        if not isinstance(entries, list) or len(entries) != 4:
            raise JSONParseError(path + ".entries", "expected four entries")
        vals = [_complex(e, f"{path}.entries[{i}]") for i, e in enumerate(entries)]
        return _build(path, SL2C, *vals)
    if kind == "HorosphereH":
        return _build(path, HorosphereH, _mink(_get(data, "p", path), path + ".p"))
    if kind == "DecoratedHorosphereU":
        raw = _get(data, "center", path)
        center = Infinity if raw == "inf" else Finite(_complex(raw, path + ".center"))
        delta = _complex(_get(data, "delta", path), path + ".delta")
        return _build(path, DecoratedHorosphereU, center, delta)
    if kind == "SpinDecoratedHorosphereU":
        spinor = from_json(_get(data, "spinor", path), path + ".spinor")
        return SpinDecoratedHorosphereU(spinor)
    if kind == "LambdaLength":
        return LambdaLength(_complex(_get(data, "value", path), path + ".value"))
    if kind == "ComplexDistance":
        rho = _real(_get(data, "rho", path), path + ".rho")
        theta = _real(_get(data, "theta", path), path + ".theta")
        mode = _get(data, "mode", path)
        return _build(path, ComplexDistance, rho, theta, mode, rho == -math.inf)
    if kind == "ShapeTriple":
        vals = [_complex(_get(data, k, path), f"{path}.{k}") for k in ("z", "z_prime", "z_dprime")]
        return _build(path, ShapeTriple, *vals)
    if kind == "FordCircle":
        p, q = _get(data, "p", path), _get(data, "q", path)
        return _build(path, FordCircle, p, q)
    raise JSONParseError(path + ".type", f"unknown type {kind!r}")


def loads(text):
    return from_json(text)


# display formatting (12 significant digits, used by the CLI)


def fmt_real(x):
    if x == -math.inf:
        return "-inf"
    if x == 0:
        x = 0.0  # drop the sign of negative zero
    return f"{x:.12g}"


def fmt_complex(z):
    z = complex(z)
    re_, im = z.real + 0.0, z.imag + 0.0
    sign = "-" if im < 0 else "+"
    return f"{fmt_real(re_)}{sign}{fmt_real(abs(im))}i"


def display_real(x):
    """Real rounded to 12 significant digits, as a JSON value."""
    if x == -math.inf:
        return "-inf"
    return float(fmt_real(x))


# SVG

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass
class SceneU:
    """Decorated horospheres to draw in the vertical half-plane ``Im w = 0``."""

    horospheres: list
    labels: list = field(default_factory=list)
    xmin: float = -3.0
    xmax: float = 3.0

    def __post_init__(self):
        if not self.xmax > self.xmin:
            raise ValueError("scene viewport must satisfy xmin < xmax")


class _Canvas:
    """Maps model coordinates (x right, y up) to SVG pixels (y down)."""

    def __init__(self, xmin, xmax, ymax, width=800, margin=30):
        self.xmin, self.xmax, self.ymax = xmin, xmax, ymax
        self.margin = margin
        self.scale = (width - 2 * margin) / (xmax - xmin)
        self.width = width
        self.height = int(math.ceil(ymax * self.scale + 2 * margin))
        self.root = ET.Element(
            "svg",
            {
                "xmlns": SVG_NS,
                "version": "1.1",
                "width": str(self.width),
                "height": str(self.height),
                "viewBox": f"0 0 {self.width} {self.height}",
            },
        )

    def px(self, x, y):
        return (
            self.margin + (x - self.xmin) * self.scale,
            self.height - self.margin - y * self.scale,
        )

    def add(self, tag, **attrs):
        clean = {k.rstrip("_").replace("_", "-"): _num(v) for k, v in attrs.items()}
        return ET.SubElement(self.root, tag, clean)

    def tostring(self):
        ET.indent(self.root)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(self.root, encoding="unicode") + "\n"


def _num(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def ford_svg(circles, label=True):
    """Ford circles tangent to the real axis over ``[0, 1]`` with ``p/q`` tick labels."""
    canvas = _Canvas(0.0, 1.0, 0.55, width=900, margin=40)
    x0, y0 = canvas.px(0.0, 0.0)
    x1, _ = canvas.px(1.0, 0.0)
    canvas.add("line", x1=x0 - 20, y1=y0, x2=x1 + 20, y2=y0, stroke="black", stroke_width=1.0)
    for c in circles:
        if c.q == 0:
            continue
        r = 1 / (2 * c.q * c.q)
        cx, cy = canvas.px(c.p / c.q, r)
        canvas.add("circle", cx=cx, cy=cy, r=r * canvas.scale, fill="none", stroke="steelblue", stroke_width=1.0)
        canvas.add("line", x1=cx, y1=y0, x2=cx, y2=y0 + 6, stroke="black", stroke_width=1.0)
        if label:
            t = canvas.add("text", x=cx, y=y0 + 20, font_size=10, text_anchor="middle")
            t.text = f"{c.p}/{c.q}"
    return canvas.tostring()


def scene_svg(scene):
    """Cross-section ``Im w = 0`` of each horosphere with its decoration.

    Spheres appear as circles (a sphere off the plane is cut in a smaller
    circle), a center at infinity as a horizontal line.  The decoration is an
    arrow at the north pole in the direction ``Re(delta)``; a decoration
    perpendicular to the drawing plane is marked by a small dot.
    """
    finite = [h.size for h in scene.horospheres if h.center is not Infinity]
    heights = [h.size for h in scene.horospheres if h.center is Infinity]
    span = scene.xmax - scene.xmin
    ymax = min(max(finite + heights + [0.25 * span]) * 1.15, span)
    canvas = _Canvas(scene.xmin, scene.xmax, ymax)
    ax0, ay = canvas.px(scene.xmin, 0.0)
    ax1, _ = canvas.px(scene.xmax, 0.0)
    canvas.add("line", x1=ax0, y1=ay, x2=ax1, y2=ay, stroke="black", stroke_width=1.0)
    arrow = 0.06 * span
    labels = list(scene.labels) + [""] * (len(scene.horospheres) - len(scene.labels))
    for h, label in zip(scene.horospheres, labels):
        if h.center is Infinity:
            y = h.size
            if y > ymax:
                continue
            xa, ya = canvas.px(scene.xmin, y)
            xb, _ = canvas.px(scene.xmax, y)
            canvas.add("line", x1=xa, y1=ya, x2=xb, y2=ya, stroke="darkred", stroke_width=1.5)
            top = (0.5 * (scene.xmin + scene.xmax), y)
        else:
            c = h.center.z
            radius2 = (h.size / 2) ** 2 - c.imag**2
            if radius2 <= 0:
                continue
            radius = math.sqrt(radius2)
            cx, cy = canvas.px(c.real, h.size / 2)
            canvas.add("circle", cx=cx, cy=cy, r=radius * canvas.scale, fill="none", stroke="darkblue", stroke_width=1.5)
            top = (c.real, h.size / 2 + radius)
        _decoration_mark(canvas, top, h.direction, arrow)
        if label:
            x, y = canvas.px(*top)
            t = canvas.add("text", x=x + 6.0, y=y - 6.0, font_size=12)
            t.text = label
    return canvas.tostring()


def _decoration_mark(canvas, top, direction, length):
    x, y = canvas.px(*top)
    dx = direction.real
    if abs(dx) < 0.2:
        canvas.add("circle", cx=x, cy=y, r=3.0, fill="black")
        return
    tip_x = x + dx * length * canvas.scale
    head = 5.0 if dx > 0 else -5.0
    d = f"M {x:.6g} {y:.6g} L {tip_x:.6g} {y:.6g} M {tip_x - head:.6g} {y - 4:.6g} L {tip_x:.6g} {y:.6g} L {tip_x - head:.6g} {y + 4:.6g}"
    canvas.add("path", d=d, stroke="black", fill="none", stroke_width=1.2)
