"""Point-cloud rendering: projection, rotation, colors, SVG and PNG output.

SVG is the deterministic golden format: fixed element order, 6-decimal
coordinates, byte-identical across runs.  PNG rasterizes the same geometry
through the marker-blend kernel onto an opaque background.
"""

from __future__ import annotations

import math
import struct
import zlib
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernel
from .colors import parse_color
from .errors import RenderError
from .generator import PointSet


class ProjectionKind(Enum):
    RECTILINEAR = "rectilinear"
    POLAR = "polar"
    LAMBERT = "lambert"


class MarkerKind(Enum):
    POINT = "point"
    CIRCLE = "circle"
    SQUARE = "square"
    TRIANGLE = "triangle"
    PLUS = "plus"
    CROSS = "cross"
    DIAMOND = "diamond"


@dataclass(frozen=True)
class ColorSpec:
    """Either one constant color or per-point scalars through a gradient."""

    name: str | None = None
    scalars: tuple[float, ...] | None = None
    cmap: tuple[str, ...] | None = None

    def __post_init__(self):
        if (self.name is None) == (self.scalars is None):
            raise RenderError("color spec needs a constant name or scalars, not both")
        if self.scalars is not None and (self.cmap is None or len(self.cmap) < 2):
            raise RenderError("per-point scalars need a cmap of at least two colors")

    @classmethod
    def constant(cls, name: str) -> "ColorSpec":
        return cls(name=name)

    @classmethod
    def per_point(cls, scalars, cmap) -> "ColorSpec":
        return cls(scalars=tuple(float(v) for v in scalars), cmap=tuple(cmap))


DEFAULT_COLOR = ColorSpec.constant("black")


@dataclass(frozen=True)
class PlotSpec:
    """Everything the plot layer needs beyond the points themselves."""

    color: ColorSpec = DEFAULT_COLOR
    bgcolor: str = "white"
    spot_size: float = 1.0
    marker: MarkerKind = MarkerKind.POINT
    linewidth: float = 1.0
    alpha: float = 1.0
    projection: ProjectionKind = ProjectionKind.RECTILINEAR
    rotation: float = 0.0

    def __post_init__(self):
        if not (self.spot_size > 0):
            raise RenderError(f"spot_size must be positive, got {self.spot_size}")
        if self.linewidth < 0:
            raise RenderError(f"linewidth must be non-negative, got {self.linewidth}")
        if not (0.0 <= self.alpha <= 1.0):
            raise RenderError(f"alpha must be within [0, 1], got {self.alpha}")


def _as_xy(points) -> np.ndarray:
    if isinstance(points, PointSet):
        return points.points
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise RenderError("points must be an (n, 2) array or a PointSet")
    return arr


def project(points, kind: ProjectionKind) -> np.ndarray:
    """Rectilinear: identity.  Polar: (x, y) -> (y cos x, y sin x).
    Lambert: (x, y) -> (arcsin(clamp(x, -1, 1)), y)."""
    xy = _as_xy(points)
    x, y = xy[:, 0], xy[:, 1]
    if kind is ProjectionKind.POLAR:
        return np.column_stack((y * np.cos(x), y * np.sin(x)))
    if kind is ProjectionKind.LAMBERT:
        return np.column_stack((np.arcsin(np.clip(x, -1.0, 1.0)), y))
    return xy.copy()


def rotate(points, degrees: float) -> np.ndarray:
    """Counter-clockwise rotation about the bounding-box center."""
    xy = _as_xy(points)
    if xy.shape[0] == 0:
        return xy.copy()
    theta = math.radians(degrees)
    c, s = math.cos(theta), math.sin(theta)
    x, y = xy[:, 0], xy[:, 1]
    cx = (x.min() + x.max()) / 2.0
    cy = (y.min() + y.max()) / 2.0
    dx, dy = x - cx, y - cy
    return np.column_stack((cx + dx * c - dy * s, cy + dx * s + dy * c))


def resolve_colors(spec: ColorSpec, n: int, alpha: float = 1.0) -> np.ndarray:
    """Per-point RGBA (uint8, shape (n, 4)); alpha multiplied into channel A.

    Scalars are min-max normalized (all-equal collapses to 0.5) and read off
    the piecewise-linear gradient through the cmap stops at equal parameter
    intervals.  Channel rounding is Python round (half to even): 0.5 between
    black and white lands on 128.
    """
    if n < 1:
        raise RenderError("need at least one point to color")
    out = np.empty((n, 4), dtype=np.uint8)
    if spec.name is not None:
        r, g, b, a = parse_color(spec.name)
        out[:, 0] = r
        out[:, 1] = g
        out[:, 2] = b
        out[:, 3] = round(a / 255.0 * alpha * 255.0)
        return out

    scalars = spec.scalars
    if len(scalars) != n:
        raise RenderError(f"got {len(scalars)} color scalars for {n} points")
    stops = [parse_color(name) for name in spec.cmap]
    lo = min(scalars)
    hi = max(scalars)
    span = hi - lo
    segs = len(stops) - 1
    for i, v in enumerate(scalars):
        t = 0.5 if span == 0.0 else (v - lo) / span
        pos = t * segs
        j = min(int(pos), segs - 1)
        frac = pos - j
        c0, c1 = stops[j], stops[j + 1]
        out[i, 0] = round(c0[0] + (c1[0] - c0[0]) * frac)
        out[i, 1] = round(c0[1] + (c1[1] - c0[1]) * frac)
        out[i, 2] = round(c0[2] + (c1[2] - c0[2]) * frac)
        a = c0[3] + (c1[3] - c0[3]) * frac
        out[i, 3] = round(a / 255.0 * alpha * 255.0)
    return out


def _fit_canvas(xy: np.ndarray, width: float, height: float):
    """Scale the data bbox into the canvas with a 5% margin, preserving aspect.

    Returns pixel coords with y flipped (SVG/raster axes point down)."""
    x, y = xy[:, 0], xy[:, 1]
    minx, maxx = float(x.min()), float(x.max())
    miny, maxy = float(y.min()), float(y.max())
    bw, bh = maxx - minx, maxy - miny
    usable_w, usable_h = width * 0.9, height * 0.9
    sx = usable_w / bw if bw > 0 else math.inf
    sy = usable_h / bh if bh > 0 else math.inf
    scale = min(sx, sy)
    if not math.isfinite(scale):
        scale = 1.0
    ox = (width - bw * scale) / 2.0 - minx * scale
    oy = (height - bh * scale) / 2.0 - miny * scale
    px = x * scale + ox
    py = height - (y * scale + oy)
    return px, py


def _geometry(points, spec: PlotSpec, width: int, height: int):
    xy = _as_xy(points)
    if xy.shape[0] == 0:
        raise RenderError("empty artwork: no points to draw")
    if width <= 0 or height <= 0:
        raise RenderError(f"canvas dimensions must be positive, got {width}x{height}")
    placed = rotate(project(xy, spec.projection), spec.rotation)
    px, py = _fit_canvas(placed, float(width), float(height))
    rgba = resolve_colors(spec.color, xy.shape[0], spec.alpha)
    return px, py, rgba


# --------------------------------------------------------------------------
# SVG
# --------------------------------------------------------------------------

def _hex(r: int, g: int, b: int) -> str:
    return f"#{r:02x}{g:02x}{b:02x}"


def _f(v: float) -> str:
    return f"{v:.6f}"


_SQRT3_2 = math.sqrt(3.0) / 2.0
_INV_SQRT2 = math.sqrt(0.5)


def _svg_marker(marker: MarkerKind, cx: str, cy: str, x: float, y: float,
                size: float, attrs: str) -> str:
    s = size
    if marker is MarkerKind.POINT:
        return f'<circle cx="{cx}" cy="{cy}" r="{_f(s)}"{attrs}/>'
    if marker is MarkerKind.CIRCLE:
        return f'<circle cx="{cx}" cy="{cy}" r="{_f(s)}"{attrs}/>'
    if marker is MarkerKind.SQUARE:
        return (
            f'<rect x="{_f(x - s)}" y="{_f(y - s)}" '
            f'width="{_f(2 * s)}" height="{_f(2 * s)}"{attrs}/>'
        )
    if marker is MarkerKind.TRIANGLE:
        pts = (
            f"{_f(x)},{_f(y - s)} "
            f"{_f(x - _SQRT3_2 * s)},{_f(y + s / 2)} "
            f"{_f(x + _SQRT3_2 * s)},{_f(y + s / 2)}"
        )
        return f'<polygon points="{pts}"{attrs}/>'
    if marker is MarkerKind.DIAMOND:
        pts = (
            f"{_f(x)},{_f(y - s)} {_f(x + s)},{_f(y)} "
            f"{_f(x)},{_f(y + s)} {_f(x - s)},{_f(y)}"
        )
        return f'<polygon points="{pts}"{attrs}/>'
    if marker is MarkerKind.PLUS:
        d = (
            f"M{_f(x - s)} {cy}L{_f(x + s)} {cy}"
            f"M{cx} {_f(y - s)}L{cx} {_f(y + s)}"
        )
        return f'<path d="{d}"{attrs}/>'
    # CROSS
    t = s * _INV_SQRT2
    d = (
        f"M{_f(x - t)} {_f(y - t)}L{_f(x + t)} {_f(y + t)}"
        f"M{_f(x - t)} {_f(y + t)}L{_f(x + t)} {_f(y - t)}"
    )
    return f'<path d="{d}"{attrs}/>'


def render_svg(points, spec: PlotSpec, width: int = 800, height: int = 800) -> bytes:
    """Deterministic SVG: one background rect plus one element per point."""
    px, py, rgba = _geometry(points, spec, width, height)
    stroked = spec.marker in (MarkerKind.CIRCLE, MarkerKind.PLUS, MarkerKind.CROSS)
    bg_r, bg_g, bg_b, _ = parse_color(spec.bgcolor)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" '
        f'fill="{_hex(bg_r, bg_g, bg_b)}"/>',
    ]

    constant = spec.color.name is not None
    if constant:
        r, g, b, a = rgba[0]
        color_hex = _hex(int(r), int(g), int(b))
        opacity = _f(int(a) / 255.0)
        if stroked:
            group = (
                f'<g fill="none" stroke="{color_hex}" stroke-opacity="{opacity}" '
                f'stroke-width="{_f(spec.linewidth)}">'
            )
        else:
            group = f'<g fill="{color_hex}" fill-opacity="{opacity}">'
        parts.append(group)
        attrs = ""
    else:
        parts.append("<g>")
        attrs = None  # computed per point

    marker = spec.marker
    size = spec.spot_size
    if constant and marker in (MarkerKind.POINT, MarkerKind.CIRCLE):
        # Fast path for the dominant case: one attribute set, circle markers.
        # Emits exactly the bytes the general loop below would.
        r_text = _f(size)
        parts.extend(
            f'<circle cx="{x:.6f}" cy="{y:.6f}" r="{r_text}"/>'
            for x, y in zip(px.tolist(), py.tolist())
        )
    else:
        for i in range(px.shape[0]):
            x = float(px[i])
            y = float(py[i])
            if attrs is None:
                r, g, b, a = rgba[i]
                color_hex = _hex(int(r), int(g), int(b))
                opacity = _f(int(a) / 255.0)
                if stroked:
                    point_attrs = (
                        f' fill="none" stroke="{color_hex}" stroke-opacity="{opacity}"'
                        f' stroke-width="{_f(spec.linewidth)}"'
                    )
                else:
                    point_attrs = f' fill="{color_hex}" fill-opacity="{opacity}"'
            else:
                point_attrs = attrs
            parts.append(_svg_marker(marker, _f(x), _f(y), x, y, size, point_attrs))

    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts).encode("utf-8")


# --------------------------------------------------------------------------
# PNG
# --------------------------------------------------------------------------

def _marker_mask(marker: MarkerKind, size: float, linewidth: float):
    """Pixel offsets and coverage for one marker footprint at the origin."""
    r = max(size, 0.5)
    lw = max(linewidth, 0.5)
    half = lw / 2.0
    reach = int(math.ceil(r + half)) + 1
    offsets = []
    coverage = []
    for dy in range(-reach, reach + 1):
        for dx in range(-reach, reach + 1):
            if marker is MarkerKind.POINT:
                cov = r + 0.5 - math.hypot(dx, dy)
            elif marker is MarkerKind.CIRCLE:
                cov = half + 0.5 - abs(math.hypot(dx, dy) - r)
            elif marker is MarkerKind.SQUARE:
                cov = min(r + 0.5 - abs(dx), r + 0.5 - abs(dy))
            elif marker is MarkerKind.DIAMOND:
                cov = r + 0.5 - (abs(dx) + abs(dy))
            elif marker is MarkerKind.TRIANGLE:
                # Signed inside-distances to the three edges of an equilateral
                # triangle inscribed in radius r, apex up (raster y grows down).
                e1 = r / 2.0 - dy
                e2 = r / 2.0 + 0.5 * dy - _SQRT3_2 * dx
                e3 = r / 2.0 + 0.5 * dy + _SQRT3_2 * dx
                cov = 0.5 + min(e1, e2, e3)
            elif marker is MarkerKind.PLUS:
                arm_h = min(half + 0.5 - abs(dy), r + 0.5 - abs(dx))
                arm_v = min(half + 0.5 - abs(dx), r + 0.5 - abs(dy))
                cov = max(arm_h, arm_v)
            else:  # CROSS
                u = (dx + dy) * _INV_SQRT2
                v = (dx - dy) * _INV_SQRT2
                arm_1 = min(half + 0.5 - abs(v), r + 0.5 - abs(u))
                arm_2 = min(half + 0.5 - abs(u), r + 0.5 - abs(v))
                cov = max(arm_1, arm_2)
            cov = min(max(cov, 0.0), 1.0)
            if cov > 0.0:
                offsets.append((dx, dy))
                coverage.append(cov)
    return (
        np.ascontiguousarray(np.array(offsets, dtype=np.int32).reshape(-1, 2)),
        np.asarray(coverage, dtype=np.float64),
    )


def _encode_png(rgb: np.ndarray) -> bytes:
    """Minimal PNG writer: 8-bit RGBA, non-interlaced, zlib level 6."""
    h, w = rgb.shape[0], rgb.shape[1]
    rgba = np.dstack((rgb, np.full((h, w), 255, dtype=np.uint8)))
    raw = bytearray()
    for row in rgba:
        raw.append(0)  # filter: None
        raw.extend(row.tobytes())
    compressed = zlib.compress(bytes(raw), 6)

    def chunk(tag: bytes, payload: bytes) -> bytes:
        body = tag + payload
        return struct.pack(">I", len(payload)) + body + struct.pack(
            ">I", zlib.crc32(body) & 0xFFFFFFFF
        )

    ihdr = struct.pack(">IIBBBBB", w, h, 8, 6, 0, 0, 0)
    return (
        b"\x89PNG\r\n\x1a\n"
        + chunk(b"IHDR", ihdr)
        + chunk(b"IDAT", compressed)
        + chunk(b"IEND", b"")
    )


def render_png(points, spec: PlotSpec, width: int = 800, height: int = 800) -> bytes:
    """Rasterize the same geometry as render_svg onto an opaque background."""
    px, py, rgba = _geometry(points, spec, width, height)
    bg_r, bg_g, bg_b, _ = parse_color(spec.bgcolor)

    canvas = np.empty((height, width, 3), dtype=np.float64)
    canvas[:, :, 0] = bg_r
    canvas[:, :, 1] = bg_g
    canvas[:, :, 2] = bg_b

    offsets, coverage = _marker_mask(spec.marker, spec.spot_size, spec.linewidth)
    colors = np.empty((px.shape[0], 4), dtype=np.float64)
    colors[:, 0] = rgba[:, 0]
    colors[:, 1] = rgba[:, 1]
    colors[:, 2] = rgba[:, 2]
    colors[:, 3] = rgba[:, 3] / 255.0

    ix = np.floor(px + 0.5).astype(np.int64)
    iy = np.floor(py + 0.5).astype(np.int64)
    kernel.blend_markers(canvas, ix, iy, offsets, coverage, colors)

    out = np.clip(np.rint(canvas), 0, 255).astype(np.uint8)
    return _encode_png(out)
