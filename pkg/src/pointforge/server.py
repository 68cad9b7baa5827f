"""Studio HTTP API: generate, re-render, export, health.

Stateless apart from a bounded LRU of export tokens: generate/render
responses depend only on their request bodies, and identical fully-specified
requests give identical responses.  Artworks render synchronously within the
request.
"""

from __future__ import annotations

import json
import secrets
import sys
import threading
from collections import OrderedDict
from typing import Optional, Union

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field

from . import __version__, config_io
from .errors import EngineError
from .generator import ModeKind
from .rendering import ColorSpec, MarkerKind, PlotSpec, ProjectionKind, render_png, render_svg

EXPORT_CACHE_CAPACITY = 64


class GeneratePart(BaseModel):
    seed: Optional[Union[str, int]] = None
    start: Optional[float] = None
    stop: Optional[float] = None
    step: Optional[float] = Field(default=None, gt=0)
    mode: Optional[str] = None


class PlotPart(BaseModel):
    color: Optional[Union[str, list[float]]] = None
    cmap: Optional[list[str]] = None
    bgcolor: Optional[str] = None
    spot_size: Optional[float] = Field(default=None, gt=0)
    marker: Optional[str] = None
    linewidth: Optional[float] = Field(default=None, ge=0)
    alpha: Optional[float] = Field(default=None, ge=0, le=1)
    projection: Optional[str] = None
    rotation: Optional[float] = None


class GenerateRequest(BaseModel):
    func_seed: Optional[Union[str, int]] = None
    seed: Optional[Union[str, int]] = None
    generate: GeneratePart = GeneratePart()
    plot: PlotPart = PlotPart()
    downsample: Optional[int] = Field(default=None, ge=1)
    width: int = Field(default=800, gt=0)
    height: int = Field(default=800, gt=0)


class RenderRequest(BaseModel):
    config: dict
    plot: PlotPart = PlotPart()
    downsample: Optional[int] = Field(default=None, ge=1)
    width: int = Field(default=800, gt=0)
    height: int = Field(default=800, gt=0)


class _ExportCache:
    """Thread-safe bounded LRU keyed by response token."""

    def __init__(self, capacity: int = EXPORT_CACHE_CAPACITY):
        self._capacity = capacity
        self._lock = threading.Lock()
        self._entries: OrderedDict[str, dict] = OrderedDict()

    def put(self, token: str, entry: dict) -> None:
        with self._lock:
            self._entries[token] = entry
            self._entries.move_to_end(token)
            while len(self._entries) > self._capacity:
                self._entries.popitem(last=False)

    def get(self, token: str) -> dict | None:
        with self._lock:
            entry = self._entries.get(token)
            if entry is not None:
                self._entries.move_to_end(token)
            return entry


def _merge_plot(base: PlotSpec, part: PlotPart) -> PlotSpec:
    color = base.color
    if part.color is not None:
        if isinstance(part.color, str):
            color = ColorSpec.constant(part.color)
        else:
            cmap = part.cmap or (base.color.cmap or ("black", "white"))
            color = ColorSpec.per_point(part.color, cmap)
    return PlotSpec(
        color=color,
        bgcolor=part.bgcolor if part.bgcolor is not None else base.bgcolor,
        spot_size=part.spot_size if part.spot_size is not None else base.spot_size,
        marker=MarkerKind(part.marker) if part.marker is not None else base.marker,
        linewidth=part.linewidth if part.linewidth is not None else base.linewidth,
        alpha=part.alpha if part.alpha is not None else base.alpha,
        projection=(
            ProjectionKind(part.projection) if part.projection is not None else base.projection
        ),
        rotation=part.rotation if part.rotation is not None else base.rotation,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="pointforge studio API", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    cache = _ExportCache()

    def _respond(cfg, width: int, height: int, downsample: int | None):
        points, plot = config_io.regenerate(cfg)
        svg = render_svg(points, plot, width, height)
        token = secrets.token_hex(8)
        cache.put(
            token,
            {
                "config": cfg,
                "points": points,
                "plot": plot,
                "svg": svg,
                "width": width,
                "height": height,
            },
        )
        pairs = points.points
        n = pairs.shape[0]
        if downsample is not None and n > downsample:
            stride = -(-n // downsample)  # ceil
            pairs = pairs[::stride][:downsample]
        return JSONResponse(
            {
                "token": token,
                "config": json.loads(config_io.save_config(cfg)),
                "points_preview": pairs.tolist(),
                "dropped": points.dropped,
                "svg": svg.decode("utf-8"),
            }
        )

    @app.get("/api/health")
    def health():
        return {"version": __version__}

    @app.post("/api/generate")
    def generate(req: GenerateRequest):
        func_seed = req.func_seed if req.func_seed is not None else config_io.fresh_seed()
        seed = req.seed if req.seed is not None else req.generate.seed
        if seed is None:
            seed = config_io.fresh_seed()
        overrides = {}
        if req.generate.start is not None:
            overrides["start"] = req.generate.start
        if req.generate.stop is not None:
            overrides["stop"] = req.generate.stop
        if req.generate.step is not None:
            overrides["step"] = req.generate.step
        if req.generate.mode is not None:
            try:
                overrides["mode"] = ModeKind(req.generate.mode.lower())
            except ValueError:
                return JSONResponse(
                    {"detail": f"unknown mode {req.generate.mode!r}", "path": "$.generate.mode"},
                    status_code=400,
                )
        try:
            plot = _merge_plot(PlotSpec(), req.plot)
            cfg = config_io.new_config(str(func_seed), str(seed), overrides, plot)
            return _respond(cfg, req.width, req.height, req.downsample)
        except (EngineError, ValueError) as exc:
            return JSONResponse({"detail": str(exc)}, status_code=400)

    @app.post("/api/render")
    def render(req: RenderRequest):
        try:
            cfg = config_io.load_config(json.dumps(req.config))
        except EngineError as exc:
            return JSONResponse(
                {"detail": str(exc), "path": getattr(exc, "path", "$")}, status_code=400
            )
        try:
            cfg.plot = _merge_plot(cfg.plot, req.plot)
            return _respond(cfg, req.width, req.height, req.downsample)
        except (EngineError, ValueError) as exc:
            return JSONResponse({"detail": str(exc)}, status_code=400)

    @app.get("/api/export")
    def export(token: str, format: str):
        entry = cache.get(token)
        if entry is None:
            return JSONResponse({"detail": "unknown export token"}, status_code=404)
        if format == "svg":
            return Response(entry["svg"], media_type="image/svg+xml")
        if format == "png":
            png = render_png(
                entry["points"], entry["plot"], entry["width"], entry["height"]
            )
            return Response(png, media_type="image/png")
        if format == "config":
            return Response(
                config_io.save_config(entry["config"]), media_type="application/json"
            )
        if format == "data":
            data = config_io.ArtworkData(
                points=entry["points"].points, plot=entry["plot"]
            )
            return Response(config_io.save_data(data), media_type="application/json")
        return JSONResponse({"detail": f"unknown format {format!r}"}, status_code=400)

    _mount_ui(app)
    return app


def _mount_ui(app: FastAPI) -> None:
    import os

    from fastapi.staticfiles import StaticFiles

    ui_dir = os.environ.get("POINTFORGE_UI_DIR", os.path.join("frontend", "dist"))
    if os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="studio")


def serve(bind: str) -> int:
    """Run the API on host:port; port 0 binds an ephemeral port."""
    import uvicorn

    host, _, port_text = bind.rpartition(":")
    if not host:
        host, port_text = bind, "8000"
    try:
        port = int(port_text)
    except ValueError:
        print(f"pointforge: error: bad bind address {bind!r}", file=sys.stderr)
        return 1
    try:
        uvicorn.run(create_app(), host=host, port=port, log_level="info")
    except (OSError, SystemExit) as exc:
        print(f"pointforge: error: serve failed: {exc}", file=sys.stderr)
        return 1
    return 0


app = create_app()
