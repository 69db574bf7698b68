"""Structured-grid field ingestion, texture transcoding, and sampling.

A solver snapshot arrives as whitespace-delimited ASCII (one node per row,
`#` comments allowed) and becomes a StructuredGrid of four float32 node
values: x-velocity, y-velocity, temperature and OH mass fraction. Transcoding
packs those planes untouched into a 4-channel float32 texture (R=Ux, G=Uy,
B=T_K, A=OH) which round-trips bitwise through the EXR writer. A time array
stacks snapshots for bilinear-in-space, linear-in-time sampling.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import exr
from .errors import EmptyInputError, FormatError, InvalidArgumentError, ParseError

log = logging.getLogger("vizlab.fields")

# field name -> column index of the default .dat layout
DEFAULT_SCHEMA: dict[str, int] = {"x": 0, "y": 1, "Ux": 2, "Uy": 3, "T": 4, "OH": 5}

_FIELDS = ("Ux", "Uy", "T", "OH")


@dataclass(frozen=True)
class StructuredGrid:
    """Uniform 2D node grid; value planes are float32 arrays of shape (ny, nx)."""

    nx: int
    ny: int
    spacing: tuple[float, float]
    origin: tuple[float, float]
    ux: np.ndarray
    uy: np.ndarray
    t_k: np.ndarray
    oh: np.ndarray

    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.ux, self.uy, self.t_k, self.oh


@dataclass(frozen=True)
class FieldTexture:
    """Four float32 planes of shape (height, width): R=Ux, G=Uy, B=T_K, A=OH."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray
    a: np.ndarray

    @property
    def height(self) -> int:
        return int(self.r.shape[0])

    @property
    def width(self) -> int:
        return int(self.r.shape[1])

    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.r, self.g, self.b, self.a


@dataclass(frozen=True)
class FieldTextureArray:
    """Time-ordered stack of equally sized textures."""

    textures: tuple[FieldTexture, ...]
    times: np.ndarray  # float64, strictly increasing

    @property
    def width(self) -> int:
        return self.textures[0].width

    @property
    def height(self) -> int:
        return self.textures[0].height


@dataclass(frozen=True)
class FieldSample:
    ux: float
    uy: float
    t_k: float
    oh: float


def parse_dat(text: str, schema: dict[str, int] | None = None) -> StructuredGrid:
    """Parse one ASCII snapshot into a StructuredGrid.

    Grid shape is inferred from the distinct x and y coordinates; every
    (x, y) pair must appear exactly once. Raises ParseError (with the
    1-based line number where applicable) on ragged rows, unparseable or
    non-finite numbers, and non-rectangular node sets.
    """
    schema = dict(DEFAULT_SCHEMA if schema is None else schema)
    missing = [k for k in ("x", "y", *_FIELDS) if k not in schema]
    if missing:
        raise InvalidArgumentError(f"column schema is missing {missing}")
    need = max(schema.values()) + 1

    xs: list[float] = []
    ys: list[float] = []
    rows: list[tuple[float, float, float, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < need:
            raise ParseError(f"expected at least {need} columns, found {len(tokens)}", lineno)
        try:
            values = {name: float(tokens[col]) for name, col in schema.items()}
        except ValueError as e:
            raise ParseError(str(e), lineno) from None
        if not all(math.isfinite(v) for v in values.values()):
            raise ParseError("non-finite value", lineno)
        xs.append(values["x"])
        ys.append(values["y"])
        rows.append(tuple(values[f] for f in _FIELDS))
    if not rows:
        raise EmptyInputError("no data rows")

    ux_sorted = np.unique(np.asarray(xs))
    uy_sorted = np.unique(np.asarray(ys))
    nx, ny = len(ux_sorted), len(uy_sorted)
    if nx * ny != len(rows):
        raise ParseError(
            f"non-rectangular grid: {len(rows)} rows cannot tile {nx} x {ny} nodes")

    xi = {v: i for i, v in enumerate(ux_sorted.tolist())}
    yi = {v: i for i, v in enumerate(uy_sorted.tolist())}
    planes = [np.full((ny, nx), np.nan, dtype=np.float64) for _ in _FIELDS]
    filled = np.zeros((ny, nx), dtype=bool)
    for (x, y, vals) in zip(xs, ys, rows):
        i, j = xi[x], yi[y]
        if filled[j, i]:
            raise ParseError(f"non-rectangular grid: duplicate node ({x}, {y})")
        filled[j, i] = True
        for plane, v in zip(planes, vals):
            plane[j, i] = v
    if not filled.all():
        raise ParseError("non-rectangular grid: missing nodes")

    oh = planes[3]
    if np.any(oh < 0) or np.any(oh > 1):
        log.warning("OH mass fraction outside [0, 1] (min %.4g, max %.4g); kept as-is",
                    float(oh.min()), float(oh.max()))

    dx = float(np.diff(ux_sorted).mean()) if nx > 1 else 1.0
    dy = float(np.diff(uy_sorted).mean()) if ny > 1 else 1.0
    return StructuredGrid(
        nx=nx, ny=ny, spacing=(dx, dy),
        origin=(float(ux_sorted[0]), float(uy_sorted[0])),
        ux=planes[0].astype(np.float32), uy=planes[1].astype(np.float32),
        t_k=planes[2].astype(np.float32), oh=planes[3].astype(np.float32),
    )


def transcode(grid: StructuredGrid) -> FieldTexture:
    """Pack grid planes into a texture; a bitwise copy, no normalization."""
    return FieldTexture(r=grid.ux.copy(), g=grid.uy.copy(),
                        b=grid.t_k.copy(), a=grid.oh.copy())


def texture_to_grid(texture: FieldTexture, spacing: tuple[float, float] = (1.0, 1.0),
                    origin: tuple[float, float] = (0.0, 0.0)) -> StructuredGrid:
    """Inverse of transcode up to the grid's coordinate metadata."""
    return StructuredGrid(nx=texture.width, ny=texture.height, spacing=spacing,
                          origin=origin, ux=texture.r.copy(), uy=texture.g.copy(),
                          t_k=texture.b.copy(), oh=texture.a.copy())


def write_texture(path: str | Path, texture: FieldTexture) -> None:
    exr.write_rgba(path, texture.r, texture.g, texture.b, texture.a)


def read_texture(path: str | Path) -> FieldTexture:
    r, g, b, a = exr.read_rgba(path)
    return FieldTexture(r=r, g=g, b=b, a=a)


def build_time_array(textures: list[FieldTexture] | tuple[FieldTexture, ...],
                     times: list[float] | np.ndarray) -> FieldTextureArray:
    if len(textures) == 0:
        raise InvalidArgumentError("a time array needs at least one slice")
    if len(times) != len(textures):
        raise InvalidArgumentError("times and slices differ in length")
    shape = (textures[0].height, textures[0].width)
    for i, tex in enumerate(textures):
        if (tex.height, tex.width) != shape:
            raise InvalidArgumentError(f"slice {i} has shape {(tex.height, tex.width)},"
                                       f" expected {shape}")
    t = np.asarray(times, dtype=np.float64)
    if np.any(np.diff(t) <= 0):
        raise InvalidArgumentError("slice times must be strictly increasing")
    return FieldTextureArray(textures=tuple(textures), times=t)


def _bilinear(plane: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Bilinear lookup with texel centers at (i + 0.5) / n and clamp addressing.

    Interpolation runs in float64 so exactly-representable texel values are
    reproduced to double precision.
    """
    h, w = plane.shape
    fx = xs * w - 0.5
    fy = ys * h - 0.5
    i0 = np.floor(fx)
    j0 = np.floor(fy)
    tx = fx - i0
    ty = fy - j0
    i0c = np.clip(i0, 0, w - 1).astype(np.intp)
    i1c = np.clip(i0 + 1, 0, w - 1).astype(np.intp)
    j0c = np.clip(j0, 0, h - 1).astype(np.intp)
    j1c = np.clip(j0 + 1, 0, h - 1).astype(np.intp)
    p = plane.astype(np.float64, copy=False)
    v00 = p[j0c, i0c]
    v10 = p[j0c, i1c]
    v01 = p[j1c, i0c]
    v11 = p[j1c, i1c]
    top = v00 * (1.0 - tx) + v10 * tx
    bot = v01 * (1.0 - tx) + v11 * tx
    return top * (1.0 - ty) + bot * ty


def _sample_slice(tex: FieldTexture, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    return np.stack([_bilinear(pl, xs, ys) for pl in tex.planes()], axis=-1)


def sample_channels(array: FieldTextureArray, xy: np.ndarray, t: float) -> np.ndarray:
    """Sample all four channels at positions xy (n, 2) in [0,1]^2, time t.

    Space: bilinear with clamp addressing. Time: linear between bracketing
    slices, clamped at the ends. Returns an (n, 4) float64 array.
    """
    xy = np.asarray(xy, dtype=np.float64)
    xs = np.clip(xy[..., 0], 0.0, 1.0)
    ys = np.clip(xy[..., 1], 0.0, 1.0)
    times = array.times
    if t <= times[0]:
        return _sample_slice(array.textures[0], xs, ys)
    if t >= times[-1]:
        return _sample_slice(array.textures[-1], xs, ys)
    k = int(np.searchsorted(times, t, side="right") - 1)
    u = (t - times[k]) / (times[k + 1] - times[k])
    s0 = _sample_slice(array.textures[k], xs, ys)
    s1 = _sample_slice(array.textures[k + 1], xs, ys)
    return s0 * (1.0 - u) + s1 * u


def sample(array: FieldTextureArray, x: float, y: float, t: float) -> FieldSample:
    """Point sample; see sample_channels for the interpolation rules."""
    vals = sample_channels(array, np.array([[x, y]]), t)[0]
    return FieldSample(ux=float(vals[0]), uy=float(vals[1]),
                       t_k=float(vals[2]), oh=float(vals[3]))


def derive_vorticity(grid: StructuredGrid) -> np.ndarray:
    """Out-of-plane vorticity dUy/dx - dUx/dy on grid nodes (float64).

    Central differences at interior nodes, one-sided at edges.
    """
    if grid.nx < 2 or grid.ny < 2:
        raise InvalidArgumentError("vorticity needs at least a 2 x 2 grid")
    dx, dy = grid.spacing
    duy_dx = np.gradient(grid.uy.astype(np.float64), dx, axis=1)
    dux_dy = np.gradient(grid.ux.astype(np.float64), dy, axis=0)
    return duy_dx - dux_dy


def percentile(plane: np.ndarray, p: float) -> float:
    """Nearest-rank percentile: sorted index ceil(p/100 * N) - 1, clamped."""
    if not (0.0 <= p <= 100.0):
        raise InvalidArgumentError("percentile must lie in [0, 100]")
    flat = np.asarray(plane).ravel()
    if flat.size == 0:
        raise InvalidArgumentError("percentile of an empty plane")
    idx = math.ceil(p / 100.0 * flat.size) - 1
    idx = min(max(idx, 0), flat.size - 1)
    return float(np.sort(flat, kind="stable")[idx])


# -- snapshot manifests -------------------------------------------------------

MANIFEST_SCHEMA = "vizlab-field-manifest/1"


def write_manifest(path: str | Path, slice_files: list[str], times: list[float],
                   extra: dict | None = None) -> None:
    doc = {"schema": MANIFEST_SCHEMA, "slices": list(slice_files),
           "times": [float(t) for t in times]}
    if extra:
        doc.update(extra)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_manifest(path: str | Path) -> tuple[FieldTextureArray, dict]:
    """Load a manifest and the textures it references (paths relative to it)."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FormatError(f"manifest {path.name}: {e}") from None
    if doc.get("schema") != MANIFEST_SCHEMA:
        raise FormatError(f"manifest {path.name}: unknown schema {doc.get('schema')!r}")
    files = doc.get("slices") or []
    times = doc.get("times") or []
    if not files:
        raise FormatError(f"manifest {path.name}: no slices listed")
    textures = [read_texture(path.parent / f) for f in files]
    return build_time_array(textures, times), doc
