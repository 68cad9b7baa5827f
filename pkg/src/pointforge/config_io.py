"""The three I/O levels: image files, data files, and configuration files.

A configuration file is the artwork's complete regeneration key: equations,
seeds, grid parameters, and plot settings.  A data file holds only the latent
points plus plot settings, enough to re-plot (new projection, rotation,
colors) but not to regenerate.  Images are terminal.

The loader also accepts the older config layout: ``random.``/``math.``
prefixes in equation strings, ``f1``/``f2`` nested inside ``generate``,
numeric seeds, a ``matplotlib_version`` field (ignored), missing ``mode``
(defaults), trailing commas, and unknown plot keys such as ``depth`` (kept
as opaque extras).  Everything tolerated is warned about.
"""

from __future__ import annotations

import json
import re
import secrets
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import equations
from .errors import ConfigError, EngineError
from .generator import GenerateParams, ModeKind, PointSet, generate_points
from .rendering import ColorSpec, MarkerKind, PlotSpec, ProjectionKind
from .rng import Rng, normalize_seed

FORMAT_VERSION = "1"


class ConfigWarning(UserWarning):
    """Raised (as a warning) for every tolerated legacy quirk."""


# Legacy function spellings outside the supported table, with their
# documented stand-ins.  Substitution happens only in the loader and warns.
_LEGACY_FUNC_SUBSTITUTIONS = {
    "math.atan": "math.tanh",
}

_PLOT_KEYS = (
    "color", "cmap", "bgcolor", "spot_size", "marker",
    "linewidth", "alpha", "projection", "rotation",
)

_TRAILING_COMMA_RE = re.compile(r",(\s*[}\]])")


@dataclass
class ArtworkConfig:
    """The unique signature of an artwork; regenerates it exactly."""

    f1: str
    f2: str
    generate: GenerateParams
    plot: PlotSpec
    func_seed: str | None = None
    extras: dict = field(default_factory=dict)
    format_version: str = FORMAT_VERSION


@dataclass
class ArtworkData:
    """Latent points plus plot settings; re-plottable without any seeds."""

    points: np.ndarray  # (n, 2) float64
    plot: PlotSpec
    format_version: str = FORMAT_VERSION


def fresh_seed() -> str:
    """A new human-shareable seed token from OS entropy."""
    return str(secrets.randbelow(1_000_000))


# --------------------------------------------------------------------------
# Plot <-> JSON
# --------------------------------------------------------------------------

def _plot_to_obj(plot: PlotSpec, extras: dict) -> dict:
    obj: dict = {}
    if plot.color.name is not None:
        obj["color"] = plot.color.name
    else:
        obj["color"] = list(plot.color.scalars)
        obj["cmap"] = list(plot.color.cmap)
    obj["bgcolor"] = plot.bgcolor
    obj["spot_size"] = plot.spot_size
    obj["marker"] = plot.marker.value
    obj["linewidth"] = plot.linewidth
    obj["alpha"] = plot.alpha
    obj["projection"] = plot.projection.value
    obj["rotation"] = plot.rotation
    for key in sorted(extras):
        obj[key] = extras[key]
    return obj


def _plot_from_obj(obj, path: str) -> tuple[PlotSpec, dict]:
    if not isinstance(obj, dict):
        raise ConfigError("plot section must be an object", path)
    extras = {}
    kwargs: dict = {}
    color_value = obj.get("color")
    if color_value is None:
        kwargs["color"] = ColorSpec.constant("black")
    elif isinstance(color_value, str):
        kwargs["color"] = ColorSpec.constant(color_value)
    elif isinstance(color_value, list):
        cmap = obj.get("cmap")
        if cmap is None:
            cmap = ["black", "white"]
            warnings.warn(
                "per-point color list without cmap; defaulting to black-white",
                ConfigWarning,
                stacklevel=3,
            )
        try:
            kwargs["color"] = ColorSpec.per_point(color_value, cmap)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc), f"{path}.color") from None
    else:
        raise ConfigError("color must be a name or a list of scalars", f"{path}.color")

    for key, cast in (
        ("bgcolor", str), ("spot_size", float), ("linewidth", float),
        ("alpha", float), ("rotation", float),
    ):
        if key in obj:
            try:
                kwargs[key] = cast(obj[key])
            except (TypeError, ValueError):
                raise ConfigError(f"bad value for {key}", f"{path}.{key}") from None
    if "marker" in obj:
        try:
            kwargs["marker"] = MarkerKind(obj["marker"])
        except ValueError:
            raise ConfigError(f"unknown marker {obj['marker']!r}", f"{path}.marker") from None
    if "projection" in obj:
        try:
            kwargs["projection"] = ProjectionKind(obj["projection"])
        except ValueError:
            raise ConfigError(
                f"unknown projection {obj['projection']!r}", f"{path}.projection"
            ) from None

    for key, value in obj.items():
        if key not in _PLOT_KEYS:
            extras[key] = value
            warnings.warn(
                f"unknown plot key {key!r} preserved as an opaque extra",
                ConfigWarning,
                stacklevel=3,
            )
    try:
        return PlotSpec(**kwargs), extras
    except EngineError as exc:
        raise ConfigError(str(exc), path) from None


# --------------------------------------------------------------------------
# Config save/load
# --------------------------------------------------------------------------

def save_config(cfg: ArtworkConfig) -> bytes:
    """Serialize with fixed key order; byte-deterministic."""
    obj: dict = {
        "format_version": cfg.format_version,
        "f1": cfg.f1,
        "f2": cfg.f2,
    }
    if cfg.func_seed is not None:
        obj["func_seed"] = cfg.func_seed
    obj["generate"] = {
        "seed": cfg.generate.seed,
        "start": cfg.generate.start,
        "step": cfg.generate.step,
        "stop": cfg.generate.stop,
        "mode": cfg.generate.mode.value,
    }
    obj["plot"] = _plot_to_obj(cfg.plot, cfg.extras)
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def _loads_tolerant(data) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError:
        repaired = _TRAILING_COMMA_RE.sub(r"\1", data)
        try:
            obj = json.loads(repaired)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON: {exc}", "$") from None
        warnings.warn("trailing commas removed from document", ConfigWarning, stacklevel=3)
    if not isinstance(obj, dict):
        raise ConfigError("document must be a JSON object", "$")
    return obj


def _parse_equation_field(text, path: str) -> str:
    if not isinstance(text, str):
        raise ConfigError("equation must be a string", path)
    for legacy, replacement in _LEGACY_FUNC_SUBSTITUTIONS.items():
        if legacy + "(" in text:
            text = text.replace(legacy + "(", replacement + "(")
            warnings.warn(
                f"{path}: unsupported legacy function {legacy} replaced by {replacement}",
                ConfigWarning,
                stacklevel=4,
            )
    try:
        equations.parse(text)
    except EngineError as exc:
        raise ConfigError(f"unparseable equation: {exc}", path) from None
    return text


def load_config(data) -> ArtworkConfig:
    """Parse a config document (current or legacy layout)."""
    obj = _loads_tolerant(data)

    gen_obj = obj.get("generate")
    if gen_obj is None:
        raise ConfigError("missing required key", "$.generate")
    if not isinstance(gen_obj, dict):
        raise ConfigError("generate section must be an object", "$.generate")
    gen_obj = dict(gen_obj)

    parts = {}
    for name in ("f1", "f2"):
        text = obj.get(name)
        if text is None and name in gen_obj:
            text = gen_obj.pop(name)
            warnings.warn(
                f"legacy layout: {name} found inside generate", ConfigWarning, stacklevel=2
            )
        if text is None:
            raise ConfigError("missing required key", f"$.{name}")
        parts[name] = _parse_equation_field(text, f"$.{name}")

    if "matplotlib_version" in obj:
        warnings.warn("matplotlib_version is ignored", ConfigWarning, stacklevel=2)

    if "seed" not in gen_obj:
        raise ConfigError("missing required key", "$.generate.seed")
    try:
        seed = normalize_seed(gen_obj["seed"])
    except EngineError as exc:
        raise ConfigError(str(exc), "$.generate.seed") from None

    gen_kwargs: dict = {"seed": seed}
    for key in ("start", "stop", "step"):
        if key in gen_obj:
            try:
                gen_kwargs[key] = float(gen_obj[key])
            except (TypeError, ValueError):
                raise ConfigError(f"bad value for {key}", f"$.generate.{key}") from None
    if "mode" in gen_obj:
        try:
            gen_kwargs["mode"] = ModeKind(str(gen_obj["mode"]).lower())
        except ValueError:
            raise ConfigError(
                f"unknown mode {gen_obj['mode']!r}", "$.generate.mode"
            ) from None
    try:
        generate = GenerateParams(**gen_kwargs)
    except EngineError as exc:
        raise ConfigError(str(exc), "$.generate") from None

    plot_obj = obj.get("plot")
    if plot_obj is None:
        plot, extras = PlotSpec(), {}
    else:
        plot, extras = _plot_from_obj(plot_obj, "$.plot")

    func_seed = obj.get("func_seed")
    if func_seed is not None:
        func_seed = normalize_seed(func_seed)

    version = obj.get("format_version")
    if version is None:
        version = FORMAT_VERSION

    return ArtworkConfig(
        f1=parts["f1"],
        f2=parts["f2"],
        generate=generate,
        plot=plot,
        func_seed=func_seed,
        extras=extras,
        format_version=str(version),
    )


# --------------------------------------------------------------------------
# Data save/load
# --------------------------------------------------------------------------

def save_data(data: ArtworkData) -> bytes:
    pts = np.asarray(data.points, dtype=np.float64)
    obj = {
        "format_version": data.format_version,
        "points": [[float(x), float(y)] for x, y in pts],
        "plot": _plot_to_obj(data.plot, {}),
    }
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def load_data(data) -> ArtworkData:
    obj = _loads_tolerant(data)
    raw = obj.get("points")
    if raw is None:
        raise ConfigError("missing required key", "$.points")
    if not isinstance(raw, list):
        raise ConfigError("points must be a list", "$.points")
    pts = np.empty((len(raw), 2), dtype=np.float64)
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ConfigError("point must be an [x, y] pair", f"$.points[{i}]")
        for j in (0, 1):
            v = pair[j]
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ConfigError("coordinate must be a number", f"$.points[{i}][{j}]")
            if not np.isfinite(v):
                raise ConfigError("coordinate must be finite", f"$.points[{i}][{j}]")
            pts[i, j] = float(v)
    plot_obj = obj.get("plot")
    if plot_obj is None:
        plot = PlotSpec()
    else:
        plot, _ = _plot_from_obj(plot_obj, "$.plot")
    version = obj.get("format_version", FORMAT_VERSION)
    return ArtworkData(points=pts, plot=plot, format_version=str(version))


# --------------------------------------------------------------------------
# Regeneration
# --------------------------------------------------------------------------

def _align_scalars(plot: PlotSpec, n: int) -> PlotSpec:
    """Resample per-point color scalars to the actual retained point count.

    A foreign config's scalar list was sized to its own engine's points;
    nearest-index resampling keeps the gradient sweep intact.
    """
    spec = plot.color
    if spec.scalars is None or len(spec.scalars) == n or n < 1:
        return plot
    warnings.warn(
        f"resampling {len(spec.scalars)} color scalars to {n} points",
        ConfigWarning,
        stacklevel=3,
    )
    src = spec.scalars
    m = len(src)
    resampled = tuple(src[min(m - 1, (j * m) // n)] for j in range(n))
    color = ColorSpec.per_point(resampled, spec.cmap)
    return PlotSpec(
        color=color,
        bgcolor=plot.bgcolor,
        spot_size=plot.spot_size,
        marker=plot.marker,
        linewidth=plot.linewidth,
        alpha=plot.alpha,
        projection=plot.projection,
        rotation=plot.rotation,
    )


def regenerate(cfg: ArtworkConfig) -> tuple[PointSet, PlotSpec]:
    """Rebuild the exact point set the config was saved with."""
    f1 = equations.parse(cfg.f1)
    f2 = equations.parse(cfg.f2)
    points = generate_points(f1, f2, cfg.generate)
    return points, _align_scalars(cfg.plot, len(points))


def new_config(
    func_seed: str,
    seed: str,
    generate_overrides: dict | None = None,
    plot: PlotSpec | None = None,
    gen_config: equations.GenConfig = equations.DEFAULT_GEN_CONFIG,
) -> ArtworkConfig:
    """Draw fresh equations from func_seed and assemble a complete config."""
    func_seed = normalize_seed(func_seed)
    rng = Rng(func_seed)
    f1 = equations.generate_equation(rng, gen_config)
    f2 = equations.generate_equation(rng, gen_config)
    params = GenerateParams(seed=seed, **(generate_overrides or {}))
    return ArtworkConfig(
        f1=equations.serialize(f1),
        f2=equations.serialize(f2),
        generate=params,
        plot=plot if plot is not None else PlotSpec(),
        func_seed=func_seed,
    )
