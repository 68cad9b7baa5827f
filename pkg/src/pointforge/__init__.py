"""pointforge: a seeded generative-art engine.

Random equations drawn from a fixed grammar map a dense square grid into a
latent point cloud, which is projected, rotated, colored, and rendered to
SVG or PNG.  Two seed tokens fully determine an artwork: ``func_seed`` picks
the equations' structure; ``seed`` drives the per-point sampler draws.  A
saved configuration file regenerates the artwork bit-for-bit.
"""

from .config_io import (
    ArtworkConfig,
    ArtworkData,
    ConfigWarning,
    fresh_seed,
    load_config,
    load_data,
    new_config,
    regenerate,
    save_config,
    save_data,
)
from .equations import (
    ArgKind,
    Equation,
    FuncKind,
    GenConfig,
    OpKind,
    Term,
    count_samples,
    evaluate,
    generate_equation,
    parse,
    serialize,
)
from .errors import (
    ConfigError,
    EngineError,
    EquationSyntaxError,
    InvalidParamsError,
    InvalidSeedError,
    RenderError,
    UnknownColorError,
)
from .generator import (
    GenerateParams,
    ModeKind,
    PointSet,
    build_grid,
    generate_points,
    transform,
)
from .rendering import (
    ColorSpec,
    MarkerKind,
    PlotSpec,
    ProjectionKind,
    project,
    render_png,
    render_svg,
    resolve_colors,
    rotate,
)
from .rng import Distribution, Rng, normalize_seed

__version__ = "0.1.0"

__all__ = [
    "ArgKind",
    "ArtworkConfig",
    "ArtworkData",
    "ColorSpec",
    "ConfigError",
    "ConfigWarning",
    "Distribution",
    "EngineError",
    "Equation",
    "EquationSyntaxError",
    "FuncKind",
    "GenConfig",
    "GenerateParams",
    "InvalidParamsError",
    "InvalidSeedError",
    "MarkerKind",
    "ModeKind",
    "OpKind",
    "PlotSpec",
    "PointSet",
    "ProjectionKind",
    "RenderError",
    "Rng",
    "Term",
    "UnknownColorError",
    "build_grid",
    "count_samples",
    "evaluate",
    "fresh_seed",
    "generate_equation",
    "generate_points",
    "load_config",
    "load_data",
    "new_config",
    "normalize_seed",
    "parse",
    "project",
    "regenerate",
    "render_png",
    "render_svg",
    "resolve_colors",
    "rotate",
    "save_config",
    "save_data",
    "serialize",
    "transform",
    "__version__",
]
