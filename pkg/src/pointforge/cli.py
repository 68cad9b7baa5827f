"""Command-line front end.

Pipeline: load or generate equations, transform the grid, project/rotate/
colorize, write the requested outputs.  Omitted seeds come from OS entropy
and are printed in verbose mode and embedded in saved configs, so every run
stays reproducible after the fact.

Exit codes: 0 success, 1 engine errors, 2 flag conflicts.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__, config_io
from .errors import EngineError
from .generator import GenerateParams, ModeKind
from .rendering import ColorSpec, MarkerKind, PlotSpec, ProjectionKind, render_png, render_svg

DEFAULT_PREVIEW = "preview.png"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointforge",
        description="Generate seeded point-cloud artworks.",
    )
    parser.add_argument("--version", action="version", version=f"pointforge {__version__}")
    parser.add_argument("--seed", help="point-generation seed token")
    parser.add_argument("--func-seed", help="equation-structure seed token")
    parser.add_argument("--start", type=float, help="grid interval start (default -pi)")
    parser.add_argument("--stop", type=float, help="grid interval stop (default pi)")
    parser.add_argument("--step", type=float, help="grid step (default 0.01)")
    parser.add_argument(
        "--mode",
        type=str.lower,
        choices=[m.value for m in ModeKind],
        help="coordinate assembly mode (default f1_vs_f2)",
    )
    parser.add_argument(
        "--projection",
        type=str.lower,
        choices=[p.value for p in ProjectionKind],
        help="plot projection (default rectilinear)",
    )
    parser.add_argument("--rotation", type=float, help="rotation in degrees (default 0)")
    parser.add_argument("--color", help="point color name or #hex")
    parser.add_argument("--bgcolor", help="background color name or #hex")
    parser.add_argument("--spot-size", type=float, help="marker size in canvas units")
    parser.add_argument(
        "--marker",
        type=str.lower,
        choices=[m.value for m in MarkerKind],
        help="marker shape (default point)",
    )
    parser.add_argument("--linewidth", type=float, help="stroke width for stroked markers")
    parser.add_argument("--alpha", type=float, help="point opacity in [0, 1]")
    parser.add_argument("--save-image", metavar="PATH", help="write .png or .svg image")
    parser.add_argument("--save-data", metavar="PATH", help="write the data file (JSON)")
    parser.add_argument("--save-config", metavar="PATH", help="write the config file (JSON)")
    parser.add_argument("--load-config", metavar="PATH", help="regenerate from a config file")
    parser.add_argument("--width", type=int, default=800, help="image width (default 800)")
    parser.add_argument("--height", type=int, default=800, help="image height (default 800)")
    parser.add_argument("--verbose", action="store_true", help="log generation details")
    parser.add_argument(
        "--no-display",
        action="store_true",
        help=f"skip writing the default preview file ({DEFAULT_PREVIEW})",
    )
    parser.add_argument("--serve", metavar="HOST:PORT", help="run the studio HTTP API")
    return parser


def _log(verbose: bool, message: str) -> None:
    if verbose:
        print(f"pointforge: {message}", file=sys.stderr)


def _plot_from_flags(args, base: PlotSpec) -> PlotSpec:
    color = base.color
    if args.color is not None:
        color = ColorSpec.constant(args.color)
    return PlotSpec(
        color=color,
        bgcolor=args.bgcolor if args.bgcolor is not None else base.bgcolor,
        spot_size=args.spot_size if args.spot_size is not None else base.spot_size,
        marker=MarkerKind(args.marker) if args.marker is not None else base.marker,
        linewidth=args.linewidth if args.linewidth is not None else base.linewidth,
        alpha=args.alpha if args.alpha is not None else base.alpha,
        projection=(
            ProjectionKind(args.projection)
            if args.projection is not None
            else base.projection
        ),
        rotation=args.rotation if args.rotation is not None else base.rotation,
    )


def run(argv: list[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.serve is not None:
        from . import server

        return server.serve(args.serve)

    if args.load_config is not None:
        conflicts = [
            name
            for name, value in (
                ("--seed", args.seed),
                ("--func-seed", args.func_seed),
                ("--start", args.start),
                ("--stop", args.stop),
                ("--step", args.step),
            )
            if value is not None
        ]
        if conflicts:
            parser.error(f"--load-config cannot be combined with {', '.join(conflicts)}")

    try:
        return _run_pipeline(args)
    except EngineError as exc:
        print(f"pointforge: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pointforge: error: {exc}", file=sys.stderr)
        return 1


def _run_pipeline(args) -> int:
    verbose = args.verbose
    t0 = time.perf_counter()

    if args.load_config is not None:
        with open(args.load_config, "rb") as fh:
            cfg = config_io.load_config(fh.read())
        if args.mode is not None:
            cfg.generate = GenerateParams(
                seed=cfg.generate.seed,
                start=cfg.generate.start,
                stop=cfg.generate.stop,
                step=cfg.generate.step,
                mode=ModeKind(args.mode),
            )
        cfg.plot = _plot_from_flags(args, cfg.plot)
        _log(verbose, f"loaded config from {args.load_config}")
    else:
        func_seed = args.func_seed if args.func_seed is not None else config_io.fresh_seed()
        seed = args.seed if args.seed is not None else config_io.fresh_seed()
        overrides = {}
        if args.start is not None:
            overrides["start"] = args.start
        if args.stop is not None:
            overrides["stop"] = args.stop
        if args.step is not None:
            overrides["step"] = args.step
        if args.mode is not None:
            overrides["mode"] = ModeKind(args.mode)
        cfg = config_io.new_config(
            func_seed, seed, overrides, _plot_from_flags(args, PlotSpec())
        )
        _log(verbose, f"func_seed={cfg.func_seed} seed={cfg.generate.seed}")

    _log(verbose, f"f1 = {cfg.f1}")
    _log(verbose, f"f2 = {cfg.f2}")

    points, plot = config_io.regenerate(cfg)
    t1 = time.perf_counter()
    _log(
        verbose,
        f"generated {len(points)} points ({points.dropped} dropped) in {t1 - t0:.3f}s",
    )

    wrote_any = False
    if args.save_config is not None:
        with open(args.save_config, "wb") as fh:
            fh.write(config_io.save_config(cfg))
        _log(verbose, f"wrote config to {args.save_config}")
        wrote_any = True
    if args.save_data is not None:
        data = config_io.ArtworkData(points=points.points, plot=plot)
        with open(args.save_data, "wb") as fh:
            fh.write(config_io.save_data(data))
        _log(verbose, f"wrote data to {args.save_data}")
        wrote_any = True
    if args.save_image is not None:
        _write_image(args.save_image, points, plot, args.width, args.height)
        _log(verbose, f"wrote image to {args.save_image}")
        wrote_any = True

    if not args.no_display:
        _write_image(DEFAULT_PREVIEW, points, plot, args.width, args.height)
        _log(verbose, f"wrote preview to {DEFAULT_PREVIEW}")
        wrote_any = True

    t2 = time.perf_counter()
    _log(verbose, f"finished in {t2 - t0:.3f}s")
    if not wrote_any:
        _log(verbose, "nothing to write (all outputs suppressed)")
    return 0


def _write_image(path: str, points, plot: PlotSpec, width: int, height: int) -> None:
    lower = path.lower()
    if lower.endswith(".svg"):
        payload = render_svg(points, plot, width, height)
    elif lower.endswith(".png"):
        payload = render_png(points, plot, width, height)
    else:
        raise EngineError(f"unsupported image extension on {path!r} (use .png or .svg)")
    with open(path, "wb") as fh:
        fh.write(payload)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
