"""Hot-loop kernels: compiled extension when importable, pure Python otherwise.

Both lanes implement identical arithmetic and produce bit-identical output.
Set ``POINTFORGE_PURE=1`` to force the fallback (used by the parity tests and
the lane benchmark).
"""

import os

from . import program, pure

if os.environ.get("POINTFORGE_PURE") == "1":
    _impl = pure
    LANE = "pure"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        LANE = "native"
    except ImportError:
        _impl = pure
        LANE = "pure"

transform_grid = _impl.transform_grid
sample_stream = _impl.sample_stream
blend_markers = _impl.blend_markers

__all__ = ["LANE", "program", "pure", "transform_grid", "sample_stream", "blend_markers"]
