"""Deterministic software rasterizer for sphere impostors.

Objects are drawn in ascending id order as screen-space discs whose
per-pixel depth is the sphere surface depth (center depth minus
sqrt(r^2 - d^2) in view space, d = lateral distance at the pixel center).
The depth test is strict less-than, so at equal depth the earlier write
wins. Detail levels change submitted primitive counts, not footprints.

The implementation is vectorized but bit-equivalent to the sequential
definition: fragments are sorted by (pixel, draw order) and a segmented
prefix-minimum replays the depth test exactly, including per-write success
and failure counts.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import numpy as np

from .errors import InvalidArgumentError
from .fields import FieldTextureArray, sample_channels
from .optimizer import _KIND_MAX_LEVEL, _PRIM_TABLE, VisibleSet, view_coordinates
from .scene import KIND_INDEX, Camera, EmissiveCurve, Scene

_BOND_KIND = KIND_INDEX["bond_segment"]

_MAX_FRAGMENTS_PER_CHUNK = 4_000_000


@dataclass
class FrameBuffer:
    width: int
    height: int
    color: np.ndarray  # (H, W, 3) float64 in [0, 1]
    depth: np.ndarray  # (H, W) float64; far plane where never written
    owner: np.ndarray  # (H, W) int64 object id, -1 = background

    @staticmethod
    def blank(width: int, height: int, far: float) -> "FrameBuffer":
        if width < 1 or height < 1:
            raise InvalidArgumentError("framebuffer must be at least 1 x 1")
        return FrameBuffer(width=width, height=height,
                           color=np.zeros((height, width, 3)),
                           depth=np.full((height, width), far),
                           owner=np.full((height, width), -1, dtype=np.int64))


@dataclass(frozen=True)
class DrawStats:
    primitives_rasterized: int
    pixels_shaded: int
    overdraw_events: int
    wall_time_ms: float = dc_field(default=0.0, compare=False)  # informational


@dataclass(frozen=True)
class EmissiveShading:
    """Colors objects by sampling a field channel at their domain position."""

    array: FieldTextureArray
    curve: EmissiveCurve
    driver: str = "T_K"
    time: float = 0.0
    extent: float = 100.0


def _segmented_cummin(values: np.ndarray, segments: np.ndarray,
                      max_run: int) -> np.ndarray:
    """Inclusive running minimum within runs of equal `segments` values."""
    m = values.copy()
    shift = 1
    while shift < max_run:
        same = segments[shift:] == segments[:-shift]
        np.minimum(m[shift:], np.where(same, m[:-shift], np.inf), out=m[shift:])
        shift *= 2
    return m


def _resolve_chunk(fb: FrameBuffer, pix: np.ndarray, depth: np.ndarray,
                   owner: np.ndarray, colors: np.ndarray,
                   shaded_per_object: np.ndarray) -> tuple[int, int]:
    """Apply one fragment batch with sequential draw-order semantics.

    `pix`/`depth`/`owner` are fragment arrays already in draw order. Returns
    (pixels_shaded, overdraw_events) for the batch.
    """
    order = np.lexsort((np.arange(len(pix)), pix))
    pix_s = pix[order]
    d_s = depth[order]
    own_s = owner[order]

    starts = np.empty(len(pix_s), dtype=bool)
    starts[0] = True
    np.not_equal(pix_s[1:], pix_s[:-1], out=starts[1:])
    seg_sizes = np.diff(np.append(np.nonzero(starts)[0], len(pix_s)))
    run_min = _segmented_cummin(d_s, pix_s, int(seg_sizes.max()))

    prev_min = np.empty_like(run_min)
    prev_min[0] = np.inf
    prev_min[1:] = run_min[:-1]
    prev_min[starts] = np.inf

    depth_flat = fb.depth.reshape(-1)
    before = depth_flat[pix_s]
    success = d_s < np.minimum(before, prev_min)

    np.minimum.at(depth_flat, pix_s, d_s)
    winner = success & (d_s == depth_flat[pix_s])
    owner_flat = fb.owner.reshape(-1)
    owner_flat[pix_s[winner]] = own_s[winner]
    color_flat = fb.color.reshape(-1, 3)
    color_flat[pix_s[winner]] = colors[own_s[winner]]

    np.add.at(shaded_per_object, own_s[success], 1)
    n_success = int(np.count_nonzero(success))
    return n_success, len(pix_s) - n_success


def _expand_impostors(scene: Scene, ids: np.ndarray
                      ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Visible entries -> impostor (position, radius, owner id) arrays.

    Single-disc kinds emit one impostor; bond segments emit both endpoints
    plus the midpoint, all at the bond radius. Order follows ascending id.
    """
    is_bond = scene.kinds[ids] == _BOND_KIND
    reps = np.where(is_bond, 3, 1)
    owners = np.repeat(ids, reps)
    radii = scene.radii[owners]
    positions = scene.positions[owners].copy()
    if is_bond.any() and scene.seg_a is not None:
        # sub-impostor index within each owner run
        run_start = np.repeat(np.cumsum(reps) - reps, reps)
        sub = np.arange(len(owners)) - run_start
        a_rows = sub == 0
        b_rows = sub == 1
        bond_rows = np.repeat(is_bond, reps)
        positions[a_rows & bond_rows] = scene.seg_a[owners[a_rows & bond_rows]]
        positions[b_rows & bond_rows] = scene.seg_b[owners[b_rows & bond_rows]]
        # sub == 2 keeps the midpoint position
    return positions, radii, owners


def _object_colors(scene: Scene, visible: VisibleSet,
                   shading: str | EmissiveShading) -> np.ndarray:
    colors = scene.colors.copy()
    if isinstance(shading, EmissiveShading):
        uv = scene.positions[:, :2] / shading.extent
        vals = sample_channels(shading.array, uv, shading.time)
        drivers = vals[:, 2] if shading.driver == "T_K" else vals[:, 3]
        colors = shading.curve.eval_many(drivers)
    elif shading != "flat":
        raise InvalidArgumentError(f"unknown shading mode {shading!r}")
    if len(visible.ids):
        colors[visible.ids[visible.deprioritized]] = 0.0  # deprioritized draw black
    return colors


def render_frame(scene: Scene, visible: VisibleSet, camera: Camera,
                 size: tuple[int, int] = (320, 240),
                 shading: str | EmissiveShading = "flat"
                 ) -> tuple[FrameBuffer, DrawStats]:
    """Rasterize a visible set; returns the framebuffer and draw counters."""
    t_start = time.perf_counter()
    w, h = size
    fb = FrameBuffer.blank(w, h, camera.far)
    vis_kinds = scene.kinds[visible.ids]
    vis_levels = np.minimum(visible.lod_levels, _KIND_MAX_LEVEL[vis_kinds])
    prims = int(_PRIM_TABLE[vis_kinds, vis_levels].sum())
    shaded_per_object = np.zeros(len(scene) + 1, dtype=np.int64)
    colors = _object_colors(scene, visible, shading)

    pixels_shaded = 0
    overdraw = 0
    if len(visible.ids):
        positions, radii, owners = _expand_impostors(scene, visible.ids)
        view = view_coordinates(camera, positions)
        drawable = view[:, 2] > camera.near
        view = view[drawable]
        radii = radii[drawable]
        owners = owners[drawable]
        if len(view):
            ty = math.tan(camera.vfov / 2.0)
            tx = ty * camera.aspect
            cz = view[:, 2]
            px = w / 2.0 * (view[:, 0] / (cz * tx)) + w / 2.0
            py = h / 2.0 - h / 2.0 * (view[:, 1] / (cz * ty))
            rx = radii / (cz * tx) * (w / 2.0)
            ry = radii / (cz * ty) * (h / 2.0)
            i0 = np.clip(np.ceil(px - rx - 0.5).astype(np.int64), 0, w - 1)
            i1 = np.clip(np.floor(px + rx - 0.5).astype(np.int64), 0, w - 1)
            j0 = np.clip(np.ceil(py - ry - 0.5).astype(np.int64), 0, h - 1)
            j1 = np.clip(np.floor(py + ry - 0.5).astype(np.int64), 0, h - 1)
            bw = np.maximum(i1 - i0 + 1, 0)
            bh = np.maximum(j1 - j0 + 1, 0)
            counts = (bw * bh).astype(np.int64)
            nonempty = counts > 0

            idx_all = np.nonzero(nonempty)[0]
            if len(idx_all) == 0:
                chunk_bounds = np.array([0, 0])
            else:
                cum = np.cumsum(counts[idx_all])
                # soft chunking at impostor boundaries; overshoot <= one screen
                chunk_of = (cum - 1) // _MAX_FRAGMENTS_PER_CHUNK
                splits = np.nonzero(np.diff(chunk_of))[0] + 1
                chunk_bounds = np.concatenate(([0], splits, [len(idx_all)]))

            for c0, c1 in zip(chunk_bounds[:-1], chunk_bounds[1:]):
                sel = idx_all[c0:c1]
                if len(sel) == 0:
                    continue
                ps, od = _raster_select(
                    fb, scene, colors, shaded_per_object, camera, w, h,
                    view[sel], radii[sel], owners[sel],
                    i0[sel], j0[sel], bw[sel], bh[sel], px[sel], py[sel],
                    tx, ty)
                pixels_shaded += ps
                overdraw += od

    stats = DrawStats(primitives_rasterized=prims, pixels_shaded=pixels_shaded,
                      overdraw_events=overdraw,
                      wall_time_ms=(time.perf_counter() - t_start) * 1e3)
    return fb, stats


def _raster_select(fb, scene, colors, shaded_per_object, camera, w, h,
                   view, radii, owners, i0, j0, bw, bh, px, py, tx, ty
                   ) -> tuple[int, int]:
    counts = (bw * bh).astype(np.int64)
    total = int(counts.sum())
    if total == 0:
        return 0, 0
    frag_of = np.repeat(np.arange(len(counts)), counts)
    base = np.repeat(np.cumsum(counts) - counts, counts)
    local = np.arange(total, dtype=np.int64) - base
    fx = i0[frag_of] + local % bw[frag_of]
    fy = j0[frag_of] + local // bw[frag_of]

    cz = view[frag_of, 2]
    du = ((fx + 0.5) - px[frag_of]) / (w / 2.0) * tx * cz
    dv = (py[frag_of] - (fy + 0.5)) / (h / 2.0) * ty * cz
    d2 = du * du + dv * dv
    r = radii[frag_of]
    keep = d2 <= r * r
    if not keep.any():
        return 0, 0
    depth = cz[keep] - np.sqrt(r[keep] * r[keep] - d2[keep])
    np.clip(depth, camera.near, camera.far, out=depth)
    pix = fy[keep] * w + fx[keep]
    return _resolve_chunk(fb, pix, depth, owners[frag_of[keep]], colors,
                          shaded_per_object)


def reference_render(scene: Scene, camera: Camera, size: tuple[int, int] = (320, 240),
                     shading: str | EmissiveShading = "flat"
                     ) -> tuple[FrameBuffer, DrawStats, np.ndarray]:
    """Render every object at its base detail level, with per-object
    contributed-pixel counts (pixels whose final owner is that object)."""
    n = len(scene)
    ids = np.arange(n, dtype=np.int64)
    levels = scene.base_levels_array()
    visible = VisibleSet(ids=ids, lod_levels=levels,
                         deprioritized=np.zeros(n, dtype=bool), batches={})
    fb, stats = render_frame(scene, visible, camera, size, shading)
    owners = fb.owner.reshape(-1)
    contributions = np.bincount(owners[owners >= 0], minlength=n)
    assert int(contributions.sum()) <= fb.width * fb.height
    return fb, stats, contributions


def write_ppm(fb: FrameBuffer, path: str | Path) -> None:
    """Binary P6 dump of the color buffer (debugging aid)."""
    rgb = np.clip(fb.color, 0.0, 1.0)
    data = (rgb * 255.0 + 0.5).astype(np.uint8)
    with open(path, "wb") as fh:
        fh.write(f"P6\n{fb.width} {fb.height}\n255\n".encode("ascii"))
        fh.write(data.tobytes())
