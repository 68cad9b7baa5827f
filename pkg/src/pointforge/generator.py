"""Grid construction and the grid-to-latent-space transform.

The transform threads a single sampler stream (keyed by the point seed)
through the grid in x-major order, evaluating both equations at every point
regardless of mode, so switching modes re-projects the exact same randomness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernel
from .equations import Equation, compile_equation
from .errors import InvalidParamsError
from .rng import Rng, normalize_seed


class ModeKind(Enum):
    """The 14 ways the output pair is assembled from f1, f2, x, y, index."""

    F1_VS_F2 = "f1_vs_f2"
    F2_VS_F1 = "f2_vs_f1"
    F2_VS_INDEX = "f2_vs_index"
    F1_VS_INDEX = "f1_vs_index"
    INDEX_VS_F1 = "index_vs_f1"
    INDEX_VS_F2 = "index_vs_f2"
    F1_VS_X1 = "f1_vs_x1"
    F2_VS_X1 = "f2_vs_x1"
    F1_VS_X2 = "f1_vs_x2"
    F2_VS_X2 = "f2_vs_x2"
    X1_VS_F1 = "x1_vs_f1"
    X1_VS_F2 = "x1_vs_f2"
    X2_VS_F1 = "x2_vs_f1"
    X2_VS_F2 = "x2_vs_f2"

    @property
    def code(self) -> int:
        return _MODE_CODES[self]


_MODE_CODES = {mode: i for i, mode in enumerate(ModeKind)}

DEFAULT_START = -math.pi
DEFAULT_STOP = math.pi
DEFAULT_STEP = 0.01


@dataclass(frozen=True)
class GenerateParams:
    """Full key to the point cloud: seed plus grid interval plus mode."""

    seed: str
    start: float = DEFAULT_START
    stop: float = DEFAULT_STOP
    step: float = DEFAULT_STEP
    mode: ModeKind = ModeKind.F1_VS_F2

    def __post_init__(self):
        object.__setattr__(self, "seed", normalize_seed(self.seed))
        if not (self.step > 0):
            raise InvalidParamsError(f"step must be positive, got {self.step}")
        if not (self.stop > self.start):
            raise InvalidParamsError(
                f"stop must exceed start, got [{self.start}, {self.stop}]"
            )
        if math.floor((self.stop - self.start) / self.step) < 1:
            raise InvalidParamsError("interval holds no grid points")


@dataclass(frozen=True, eq=False)
class PointSet:
    """Ordered latent-space points with grid provenance.

    Coordinates are finite; ``source_index`` holds each retained point's
    1-based position in the x-major grid traversal; ``dropped`` counts the
    non-finite points filtered out.
    """

    xs: np.ndarray
    ys: np.ndarray
    source_index: np.ndarray
    dropped: int

    def __post_init__(self):
        for arr, dtype in ((self.xs, np.float64), (self.ys, np.float64)):
            if arr.dtype != dtype:
                raise TypeError(f"expected {dtype}, got {arr.dtype}")

    @property
    def points(self) -> np.ndarray:
        """(n, 2) array of (x', y') pairs in traversal order."""
        return np.column_stack((self.xs, self.ys))

    def __len__(self) -> int:
        return int(self.xs.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return (
            self.dropped == other.dropped
            and np.array_equal(self.xs, other.xs)
            and np.array_equal(self.ys, other.ys)
            and np.array_equal(self.source_index, other.source_index)
        )

    __hash__ = None  # type: ignore[assignment]


def axis_points(start: float, stop: float, step: float) -> np.ndarray:
    """The interval: start + k*step for k in [0, floor((stop-start)/step))."""
    count = math.floor((stop - start) / step)
    if count < 1:
        raise InvalidParamsError("interval holds no grid points")
    k = np.arange(count, dtype=np.float64)
    return start + k * step


def build_grid(start: float, stop: float, step: float) -> list[tuple[float, float]]:
    """The full grid in x-major traversal order (outer x, inner y, ascending)."""
    axis = [float(v) for v in axis_points(start, stop, step)]
    return [(x, y) for x in axis for y in axis]


def generate_points(f1: Equation, f2: Equation, params: GenerateParams) -> PointSet:
    """Transform the params' grid; deterministic in (f1, f2, params)."""
    axis = axis_points(params.start, params.stop, params.step)
    return _transform_axis(axis, f1, f2, params)


def transform(grid, f1: Equation, f2: Equation, params: GenerateParams) -> PointSet:
    """Transform an explicit grid as produced by ``build_grid``."""
    m = math.isqrt(len(grid))
    if m * m != len(grid) or m == 0:
        raise InvalidParamsError("grid is not a full square traversal")
    axis = np.array([grid[k][1] for k in range(m)], dtype=np.float64)
    return _transform_axis(axis, f1, f2, params)


def _transform_axis(axis: np.ndarray, f1, f2, params: GenerateParams) -> PointSet:
    rng = Rng(params.seed)
    p1 = compile_equation(f1)
    p2 = compile_equation(f2)
    xs, ys, src, dropped = kernel.transform_grid(
        axis, p1, p2, params.mode.code, rng.state_words()
    )
    return PointSet(xs=xs, ys=ys, source_index=src, dropped=dropped)
