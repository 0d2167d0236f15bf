"""Mixed absolute/relative tolerance used by every equality predicate."""

import math
import os

DEFAULT_ATOL = 1e-12
_FALLBACK_RTOL = 1e-9


def default_rtol():
    """Relative tolerance, overridable through the ``HOROLIB_TOL`` variable."""
    raw = os.environ.get("HOROLIB_TOL")
    if raw is None:
        return _FALLBACK_RTOL
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"HOROLIB_TOL must be a float, got {raw!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise ValueError(f"HOROLIB_TOL must be positive and finite, got {raw!r}")
    return value


def close(x, y, atol=None, rtol=None):
    """``|x - y| <= atol + rtol * max(|x|, |y|)`` for real or complex scalars."""
    if atol is None:
        atol = DEFAULT_ATOL
    if rtol is None:
        rtol = default_rtol()
    return abs(x - y) <= atol + rtol * max(abs(x), abs(y))


def rel_err(x, y, floor=0.0):
    """Symmetric relative error ``|x - y| / max(|x|, |y|, floor)``."""
    scale = max(abs(x), abs(y), floor)
    if scale == 0:
        return 0.0
    return abs(x - y) / scale
