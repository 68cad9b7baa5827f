"""Pure-Python evaluation kernels: the reference lane.

Every operation here is mirrored instruction-for-instruction by the compiled
lane in ``_native.pyx``; the parity tests assert bit-identical output.  The
guards around libm calls emulate C99 semantics for non-finite inputs (Python's
``math`` raises where C quietly returns inf/nan); arithmetic overflow and
IEEE division are reproduced explicitly in ``_div``.
"""

from __future__ import annotations

import math

import numpy as np

from ..rng import Rng
from . import program as prg

_INF = math.inf
_NAN = math.nan
_SQRT_PI = 1.7724538509055160273
_TWO_POW_52 = 4503599627370496.0


def erf_double(x: float) -> float:
    """Error function via power series / continued fraction.

    Classic split at |x| = 1.5: 25-term series below, 50-term Lentz-style
    continued fraction for erfc above.  Accurate to ~1 ulp over the reals.
    """
    if x != x:
        return x
    ax = abs(x)
    if ax < 1.5:
        x2 = x * x
        acc = 0.0
        fk = 25.5
        for _ in range(25):
            acc = 2.0 + x2 * acc / fk
            fk -= 1.0
        return acc * x * math.exp(-x2) / _SQRT_PI
    if ax >= 30.0:
        erfc = 0.0
    else:
        x2 = ax * ax
        a = 0.0
        da = 0.5
        p, p_last = 1.0, 0.0
        q, q_last = da + x2, 1.0
        for _ in range(50):
            a += da
            da += 2.0
            b = da + x2
            p, p_last = b * p - a * p_last, p
            q, q_last = b * q - a * q_last, q
        erfc = p / q * ax * math.exp(-x2) / _SQRT_PI
    return 1.0 - erfc if x > 0.0 else erfc - 1.0


def _div(a: float, b: float) -> float:
    # IEEE double division incl. b == 0 (Python raises where C does not).
    if b == 0.0:
        if a != a or a == 0.0:
            return _NAN
        return _INF * math.copysign(1.0, a) * math.copysign(1.0, b)
    return a / b


def apply_func(kind: int, v: float) -> float:
    """One deterministic-function application with C99 edge behavior."""
    if v != v:
        return v
    if kind == prg.FUNC_TANH:
        return math.tanh(v)
    if kind == prg.FUNC_COS:
        return math.cos(v) if -_INF < v < _INF else _NAN
    if kind == prg.FUNC_SIN:
        return math.sin(v) if -_INF < v < _INF else _NAN
    if kind == prg.FUNC_IDENTITY:
        return v
    if kind == prg.FUNC_ABS:
        return abs(v)
    if kind == prg.FUNC_CEIL:
        if -_TWO_POW_52 < v < _TWO_POW_52:
            return float(math.ceil(v))
        return v  # already integral (or infinite), as C ceil returns
    if kind == prg.FUNC_FLOOR:
        if -_TWO_POW_52 < v < _TWO_POW_52:
            return float(math.floor(v))
        return v
    if kind == prg.FUNC_TAN:
        return math.tan(v) if -_INF < v < _INF else _NAN
    if kind == prg.FUNC_ERF:
        return erf_double(v)
    if kind == prg.FUNC_SQRT_ABS:
        return math.sqrt(abs(v))
    if kind == prg.FUNC_LOG_ABS1:
        return math.log1p(abs(v))
    if kind == prg.FUNC_ACOSH_ABS1:
        return math.acosh(abs(v) + 1.0) if v != _INF and v != -_INF else _INF
    if kind == prg.FUNC_ASINH:
        return math.asinh(v)
    raise ValueError(f"unknown function code {kind}")


def atom_value(kind: int, x: float, y: float) -> float:
    """One argument atom; multiplication order is fixed and mirrored in C."""
    if kind == prg.ATOM_XY:
        return x * y
    if kind == prg.ATOM_X:
        return x
    if kind == prg.ATOM_Y:
        return y
    if kind == prg.ATOM_INV_X:
        return _div(1.0, x)
    if kind == prg.ATOM_INV_Y:
        return _div(1.0, y)
    if kind == prg.ATOM_X_OVER_Y:
        return _div(x, y)
    if kind == prg.ATOM_Y_MINUS_X:
        return y - x
    if kind == prg.ATOM_X_MINUS_Y:
        return x - y
    if kind == prg.ATOM_X_PLUS_Y:
        return x + y
    if kind == prg.ATOM_X_CUBED:
        return (x * x) * x
    if kind == prg.ATOM_Y_CUBED:
        return (y * y) * y
    if kind == prg.ATOM_X_SQUARED:
        return x * x
    if kind == prg.ATOM_Y_SQUARED:
        return y * y
    if kind == prg.ATOM_X2_Y:
        return (x * x) * y
    if kind == prg.ATOM_Y2_X:
        return (y * y) * x
    if kind == prg.ATOM_X2_PLUS_Y2:
        return x * x + y * y
    if kind == prg.ATOM_Y2_MINUS_X2:
        return y * y - x * x
    if kind == prg.ATOM_X2_Y3:
        return (x * x) * ((y * y) * y)
    if kind == prg.ATOM_X3_Y2:
        return ((x * x) * x) * (y * y)
    if kind == prg.ATOM_X_Y3:
        return x * ((y * y) * y)
    if kind == prg.ATOM_Y_X3:
        return y * ((x * x) * x)
    raise ValueError(f"unknown atom code {kind}")


def _binop(kind: int, a: float, b: float) -> float:
    if kind == prg.BOP_ADD:
        return a + b
    if kind == prg.BOP_SUB:
        return a - b
    if kind == prg.BOP_MUL:
        return a * b
    return _div(a, b)


def run_program(rows, samples, x: float, y: float) -> float:
    """Interpret one compiled equation at (x, y) with pre-drawn samples."""
    stack = []
    for op, a, b in rows:
        if op == prg.OP_ATOM:
            stack.append(atom_value(a, x, y))
        elif op == prg.OP_APPLY:
            stack[-1] = samples[b] * apply_func(a, stack[-1])
        else:
            r = stack.pop()
            stack[-1] = _binop(a, stack[-1], r)
    return stack[-1]


def _mode_map(mode, v1, v2, x, y, i):
    if mode == 0:
        return v1, v2
    if mode == 1:
        return v2, v1
    if mode == 2:
        return v2, float(i)
    if mode == 3:
        return v1, float(i)
    if mode == 4:
        return float(i), v1
    if mode == 5:
        return float(i), v2
    if mode == 6:
        return v1, x
    if mode == 7:
        return v2, x
    if mode == 8:
        return v1, y
    if mode == 9:
        return v2, y
    if mode == 10:
        return x, v1
    if mode == 11:
        return x, v2
    if mode == 12:
        return y, v1
    return y, v2


def transform_grid(axis, prog1, prog2, mode: int, words):
    """Map the full axis x axis grid through both equations under one stream.

    Both equations are evaluated at every point, whatever the mode, so the
    stream is identical across modes.  Non-finite mapped points are dropped
    and counted; the stream has already advanced.
    """
    rng = Rng.from_words(words)
    axis = [float(v) for v in axis]
    m = len(axis)
    rows1, ns1, d1 = prog1.rows, prog1.n_samples, prog1.dist
    rows2, ns2, d2 = prog2.rows, prog2.n_samples, prog2.dist
    draw = rng.sample_kind
    xs_out: list[float] = []
    ys_out: list[float] = []
    idx_out: list[int] = []
    dropped = 0
    i = 0
    for ix in range(m):
        x = axis[ix]
        for iy in range(m):
            y = axis[iy]
            i += 1
            s1 = [draw(d1) for _ in range(ns1)]
            v1 = run_program(rows1, s1, x, y)
            s2 = [draw(d2) for _ in range(ns2)]
            v2 = run_program(rows2, s2, x, y)
            a, b = _mode_map(mode, v1, v2, x, y, i)
            if -_INF < a < _INF and -_INF < b < _INF:
                xs_out.append(a)
                ys_out.append(b)
                idx_out.append(i)
            else:
                dropped += 1
    return (
        np.asarray(xs_out, dtype=np.float64),
        np.asarray(ys_out, dtype=np.float64),
        np.asarray(idx_out, dtype=np.int64),
        dropped,
    )


def sample_stream(words, dist: int, n: int):
    """n successive draws of one sampler from raw state words (test surface)."""
    rng = Rng.from_words(words)
    out = np.empty(n, dtype=np.float64)
    for k in range(n):
        out[k] = rng.sample_kind(dist)
    return out


def blend_markers(canvas, px, py, offsets, coverage, colors):
    """Alpha-blend one marker footprint per point onto an opaque canvas.

    canvas: float64 (H, W, 3), mutated in place.
    px, py: int64 pixel anchors per point.
    offsets: int32 (k, 2) mask offsets (dx, dy); coverage: float64 (k,).
    colors: float64 (n, 4): RGB in 0..255 plus effective alpha in 0..1.
    """
    h, w = canvas.shape[0], canvas.shape[1]
    k = offsets.shape[0]
    for p in range(px.shape[0]):
        cx = int(px[p])
        cy = int(py[p])
        cr = colors[p, 0]
        cg = colors[p, 1]
        cb = colors[p, 2]
        ca = colors[p, 3]
        for j in range(k):
            xx = cx + int(offsets[j, 0])
            yy = cy + int(offsets[j, 1])
            if xx < 0 or xx >= w or yy < 0 or yy >= h:
                continue
            ea = ca * float(coverage[j])
            keep = 1.0 - ea
            canvas[yy, xx, 0] = ea * cr + keep * canvas[yy, xx, 0]
            canvas[yy, xx, 1] = ea * cg + keep * canvas[yy, xx, 1]
            canvas[yy, xx, 2] = ea * cb + keep * canvas[yy, xx, 2]
