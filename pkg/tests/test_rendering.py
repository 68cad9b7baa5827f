"""Projection, rotation, color, and image-output tests."""

import math
import re
import zlib

import numpy as np
import pytest

from pointforge import (
    ColorSpec,
    MarkerKind,
    PlotSpec,
    ProjectionKind,
    RenderError,
    UnknownColorError,
    project,
    render_png,
    render_svg,
    resolve_colors,
    rotate,
)

SQUARE = [(0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (2.0, 2.0)]


def decode_png(data: bytes) -> np.ndarray:
    """Tiny independent PNG reader for 8-bit RGBA, filter 0 rows."""
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    pos = 8
    idat = b""
    w = h = None
    while pos < len(data):
        length = int.from_bytes(data[pos : pos + 4], "big")
        tag = data[pos + 4 : pos + 8]
        payload = data[pos + 8 : pos + 8 + length]
        if tag == b"IHDR":
            w = int.from_bytes(payload[0:4], "big")
            h = int.from_bytes(payload[4:8], "big")
            assert payload[8] == 8 and payload[9] == 6
        elif tag == b"IDAT":
            idat += payload
        pos += 12 + length
    raw = zlib.decompress(idat)
    stride = w * 4 + 1
    rows = []
    for r in range(h):
        row = raw[r * stride : (r + 1) * stride]
        assert row[0] == 0, "only filter 0 expected"
        rows.append(np.frombuffer(row[1:], dtype=np.uint8).reshape(w, 4))
    return np.stack(rows)


class TestProject:
    def test_rectilinear_identity(self):
        out = project([(1.5, -2.0)], ProjectionKind.RECTILINEAR)
        assert out[0, 0] == 1.5 and out[0, 1] == -2.0

    def test_polar_formula(self):
        out = project([(0.0, 2.0)], ProjectionKind.POLAR)
        assert abs(out[0, 0] - 2.0) < 1e-9
        assert abs(out[0, 1] - 0.0) < 1e-9
        out = project([(math.pi / 2, 2.0)], ProjectionKind.POLAR)
        assert abs(out[0, 0] - 0.0) < 1e-9
        assert abs(out[0, 1] - 2.0) < 1e-9

    def test_lambert_formula(self):
        out = project([(1.0, 0.3)], ProjectionKind.LAMBERT)
        assert abs(out[0, 0] - math.pi / 2) < 1e-9
        assert out[0, 1] == 0.3

    def test_lambert_clamps_instead_of_dropping(self):
        out = project([(5.0, 0.1), (-5.0, 0.2)], ProjectionKind.LAMBERT)
        assert out.shape == (2, 2)
        assert abs(out[0, 0] - math.pi / 2) < 1e-12
        assert abs(out[1, 0] + math.pi / 2) < 1e-12

    def test_polar_circle_property(self):
        thetas = np.arange(0.0, 2 * math.pi, 0.01)
        pts = np.column_stack((thetas, np.full_like(thetas, 3.0)))
        out = project(pts, ProjectionKind.POLAR)
        radii = np.hypot(out[:, 0], out[:, 1])
        assert np.all(np.abs(radii - 3.0) < 1e-9)


class TestRotate:
    def test_zero_degrees_unchanged(self):
        out = rotate(SQUARE, 0.0)
        assert np.array_equal(out, np.asarray(SQUARE))

    def test_square_symmetry_at_90(self):
        out = rotate(SQUARE, 90.0)
        got = {(round(x, 9), round(y, 9)) for x, y in out}
        assert got == {(0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (2.0, 2.0)}

    def test_full_turn(self):
        out = rotate(SQUARE, 360.0)
        assert np.all(np.abs(out - np.asarray(SQUARE)) < 1e-9)

    def test_distances_preserved(self):
        rng = np.random.default_rng(7)
        pts = rng.normal(size=(40, 2))
        out = rotate(pts, 37.5)
        for i in range(0, 40, 7):
            for j in range(i + 1, 40, 5):
                before = math.dist(pts[i], pts[j])
                after = math.dist(out[i], out[j])
                assert abs(before - after) < 1e-9

    def test_pivot_is_bbox_center(self):
        pts = [(1.0, 1.0), (3.0, 5.0)]
        out = rotate(pts, 180.0)
        # 180 degrees about center (2, 3) swaps the two corners
        assert np.all(np.abs(out[0] - np.array([3.0, 5.0])) < 1e-9)
        assert np.all(np.abs(out[1] - np.array([1.0, 1.0])) < 1e-9)


class TestResolveColors:
    def test_constant_red(self):
        out = resolve_colors(ColorSpec.constant("red"), 3)
        assert out.shape == (3, 4)
        assert np.all(out == np.array([255, 0, 0, 255], dtype=np.uint8))

    def test_endpoints_hit_cmap_ends(self):
        spec = ColorSpec.per_point([0.0, 1.0], ["green", "white", "red", "red"])
        out = resolve_colors(spec, 2)
        assert tuple(out[0][:3]) == (0, 128, 0)  # green
        assert tuple(out[1][:3]) == (255, 0, 0)  # red

    def test_midpoint_gray(self):
        spec = ColorSpec.per_point([0.0, 0.5, 1.0], ["black", "white"])
        out = resolve_colors(spec, 3)
        assert tuple(out[1][:3]) == (128, 128, 128)  # round-half-even

    def test_degenerate_scalars_center(self):
        spec = ColorSpec.per_point([4.0, 4.0], ["black", "white"])
        out = resolve_colors(spec, 2)
        assert tuple(out[0][:3]) == (128, 128, 128)

    def test_alpha_multiplied_in(self):
        out = resolve_colors(ColorSpec.constant("blue"), 2, alpha=0.1)
        assert np.all(out[:, 3] == round(0.1 * 255))

    def test_length_mismatch_rejected(self):
        spec = ColorSpec.per_point([0.0, 1.0], ["black", "white"])
        with pytest.raises(RenderError):
            resolve_colors(spec, 3)

    def test_unknown_color_name(self):
        with pytest.raises(UnknownColorError):
            resolve_colors(ColorSpec.constant("notacolor"), 1)

    def test_channels_in_range_random_scalars(self):
        rng = np.random.default_rng(3)
        scalars = rng.normal(size=50).tolist()
        spec = ColorSpec.per_point(scalars, ["green", "white", "red", "red"])
        out = resolve_colors(spec, 50, alpha=0.5)
        assert out.dtype == np.uint8
        assert np.all(out[:, 3] == round(0.5 * 255))


class TestSvg:
    def test_single_point_structure(self):
        svg = render_svg(
            [(0.0, 0.0)],
            PlotSpec(color=ColorSpec.constant("black"), bgcolor="white",
                     marker=MarkerKind.CIRCLE),
            200,
            100,
        ).decode()
        assert svg.count("<rect") == 1  # background only
        assert svg.count("<circle") == 1
        assert 'width="200"' in svg and 'height="100"' in svg

    def test_element_count_is_points_plus_background(self):
        pts = [(float(i), float(i % 3)) for i in range(50)]
        svg = render_svg(pts, PlotSpec(), 300, 300).decode()
        drawn = len(re.findall(r"<(?:circle|rect|path|polygon)\b", svg))
        assert drawn == 50 + 1

    def test_byte_determinism(self):
        pts = [(0.1 * i, math.sin(i)) for i in range(200)]
        spec = PlotSpec(color=ColorSpec.constant("teal"), rotation=15.0,
                        projection=ProjectionKind.POLAR, alpha=0.4)
        assert render_svg(pts, spec) == render_svg(pts, spec)

    def test_marker_elements(self):
        cases = {
            MarkerKind.POINT: "<circle",
            MarkerKind.CIRCLE: "<circle",
            MarkerKind.SQUARE: "<rect",
            MarkerKind.TRIANGLE: "<polygon",
            MarkerKind.DIAMOND: "<polygon",
            MarkerKind.PLUS: "<path",
            MarkerKind.CROSS: "<path",
        }
        for marker, element in cases.items():
            svg = render_svg([(0.0, 0.0), (1.0, 1.0)], PlotSpec(marker=marker)).decode()
            assert svg.count(element) >= 2

    def test_per_point_colors_in_svg(self):
        spec = PlotSpec(
            color=ColorSpec.per_point([0.0, 1.0], ["black", "white"]), alpha=1.0
        )
        svg = render_svg([(0.0, 0.0), (1.0, 1.0)], spec).decode()
        assert 'fill="#000000"' in svg
        assert 'fill="#ffffff"' in svg

    def test_empty_artwork_rejected(self):
        with pytest.raises(RenderError):
            render_svg(np.empty((0, 2)), PlotSpec())

    def test_bad_dimensions_rejected(self):
        with pytest.raises(RenderError):
            render_svg([(0.0, 0.0)], PlotSpec(), 0, 100)
        with pytest.raises(RenderError):
            render_svg([(0.0, 0.0)], PlotSpec(), 100, -5)

    def test_fixed_precision_six(self):
        svg = render_svg([(0.123456789, 1.0), (2.0, 3.0)], PlotSpec()).decode()
        for num in re.findall(r'cx="([0-9.]+)"', svg):
            whole, frac = num.split(".")
            assert len(frac) == 6


class TestPng:
    def test_background_and_content_pixels(self):
        spec = PlotSpec(color=ColorSpec.constant("beige"), bgcolor="black",
                        projection=ProjectionKind.POLAR, spot_size=2.0)
        pts = [(x, math.cos(x)) for x in np.arange(0, 6.28, 0.05)]
        png = render_png(pts, spec, 120, 120)
        img = decode_png(png)
        assert img.shape == (120, 120, 4)
        assert tuple(img[0, 0]) == (0, 0, 0, 255)  # corner stays background
        assert (img[:, :, :3].sum(axis=2) > 0).any()  # something was drawn

    def test_byte_determinism(self):
        pts = [(0.3 * i, (i * i) % 7 - 3.0) for i in range(100)]
        spec = PlotSpec(color=ColorSpec.constant("red"), alpha=0.3)
        assert render_png(pts, spec, 64, 64) == render_png(pts, spec, 64, 64)

    def test_all_markers_rasterize(self):
        for marker in MarkerKind:
            png = render_png(
                [(0.0, 0.0), (1.0, 0.5)],
                PlotSpec(marker=marker, spot_size=3.0, linewidth=1.0),
                32,
                32,
            )
            assert png[:4] == b"\x89PNG"[:4]

    def test_errors_match_svg(self):
        with pytest.raises(RenderError):
            render_png(np.empty((0, 2)), PlotSpec())
        with pytest.raises(RenderError):
            render_png([(0.0, 0.0)], PlotSpec(), -1, 5)


class TestPlotSpecValidation:
    def test_bounds(self):
        with pytest.raises(RenderError):
            PlotSpec(alpha=1.5)
        with pytest.raises(RenderError):
            PlotSpec(spot_size=0.0)
        with pytest.raises(RenderError):
            PlotSpec(linewidth=-1.0)

    def test_color_spec_exclusive(self):
        with pytest.raises(RenderError):
            ColorSpec(name="red", scalars=(1.0,), cmap=("black", "white"))
        with pytest.raises(RenderError):
            ColorSpec(name=None, scalars=None)
        with pytest.raises(RenderError):
            ColorSpec.per_point([1.0], ["black"])  # one-stop cmap
