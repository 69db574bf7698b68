"""Per-frame visibility pipeline.

Passes run in a fixed order - level streaming, distance culling, frustum
culling, occlusion culling, LOD selection, whisker override, batching - and
a removal is always attributed to the first pass that removed the object.
Disabled passes are identities. Every pass is conservative with respect to
the reference renderer: an object that would contribute at least one pixel
is never removed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from .catalog import OBJECT_KINDS, PRIMITIVES, RunProfile
from .errors import InvalidArgumentError
from .scene import KIND_INDEX, Camera, Scene, WhiskerSelection, apply_whisker

_BOND_KIND = KIND_INDEX["bond_segment"]

# primitive counts as a (kind, level) lookup table, last column repeated so
# clamped levels stay valid
_MAX_LEVELS = max(len(v) for v in PRIMITIVES.values())
_PRIM_TABLE = np.array(
    [[PRIMITIVES[k][min(l, len(PRIMITIVES[k]) - 1)] for l in range(_MAX_LEVELS)]
     for k in OBJECT_KINDS], dtype=np.int64)
_KIND_MAX_LEVEL = np.array([len(PRIMITIVES[k]) - 1 for k in OBJECT_KINDS], dtype=np.int64)


def frustum_planes(camera: Camera) -> np.ndarray:
    """Six inward-facing world-space planes as rows [nx, ny, nz, d].

    A point p is inside plane k iff dot(n_k, p) + d_k >= 0. Order: near,
    far, left, right, top, bottom.
    """
    ty = math.tan(camera.vfov / 2.0)
    tx = ty * camera.aspect
    f, u, r = camera.forward, camera.up, camera.right
    pos = camera.position
    planes = np.empty((6, 4))
    planes[0, :3] = f
    planes[0, 3] = -float(np.dot(f, pos)) - camera.near
    planes[1, :3] = -f
    planes[1, 3] = float(np.dot(f, pos)) + camera.far
    # side planes pass through the camera position
    for row, (a, b, t) in enumerate(((1.0, r, tx), (-1.0, r, tx),
                                     (-1.0, u, ty), (1.0, u, ty)), start=2):
        n = a * b + t * f
        n = n / np.linalg.norm(n)
        planes[row, :3] = n
        planes[row, 3] = -float(np.dot(n, pos))
    return planes


def view_coordinates(camera: Camera, positions: np.ndarray) -> np.ndarray:
    """World positions -> (x right, y up, z forward-depth) view coordinates."""
    rel = np.asarray(positions, dtype=np.float64) - camera.position
    basis = np.stack([camera.right, camera.up, camera.forward], axis=1)
    return rel @ basis


def cull_frustum_mask(positions: np.ndarray, bound_radii: np.ndarray,
                      planes: np.ndarray) -> np.ndarray:
    """True where the bounding sphere is fully outside at least one plane."""
    signed = positions @ planes[:, :3].T + planes[:, 3]
    return np.any(signed < -np.asarray(bound_radii)[:, None], axis=1)


def cull_distance_mask(positions: np.ndarray, bound_radii: np.ndarray,
                       camera: Camera, max_draw: np.ndarray,
                       default_max: float) -> np.ndarray:
    """True where the sphere lies wholly beyond its maximum draw distance."""
    if default_max <= 0:
        raise InvalidArgumentError("default max draw distance must be > 0")
    dist = np.linalg.norm(positions - camera.position, axis=1)
    limit = np.where(np.isnan(max_draw), default_max, max_draw)
    return (dist - bound_radii) > limit


# -- occlusion ----------------------------------------------------------------

@dataclass(frozen=True)
class DepthPyramid:
    """Max-reduction pyramid over a conservative occluder depth buffer.

    levels[0] is resolution x resolution; each coarser level is the
    componentwise max of 2x2 blocks, down to 1x1. Texels never fully covered
    by a single occluder hold the far-plane depth.
    """

    levels: tuple[np.ndarray, ...]
    camera: Camera

    @property
    def resolution(self) -> int:
        return int(self.levels[0].shape[0])


def _tex_projection(camera: Camera, view: np.ndarray, radii: np.ndarray,
                    res: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Continuous texel-space disc centers and radii (x right, y down)."""
    ty = math.tan(camera.vfov / 2.0)
    tx = ty * camera.aspect
    cz = view[:, 2]
    x = (view[:, 0] / (cz * tx) + 1.0) / 2.0 * res
    y = (1.0 - view[:, 1] / (cz * ty)) / 2.0 * res
    rx = radii / (cz * tx) / 2.0 * res
    ry = radii / (cz * ty) / 2.0 * res
    return x, y, rx, ry


def build_occluder_depth(camera: Camera, view: np.ndarray, draw_radii: np.ndarray,
                         resolution: int = 64, occluder_count: int = 64) -> DepthPyramid:
    """Rasterize the largest discs conservatively and build the max pyramid.

    `view` holds view coordinates of candidate occluders (post-frustum,
    single-disc kinds only). A texel is written only when one disc covers
    its entire square; the stored value is that disc's farthest surface
    depth over the texel, so the buffer never overstates occlusion.
    """
    if resolution < 1 or resolution > 256 or resolution & (resolution - 1):
        raise InvalidArgumentError("occlusion resolution must be a power of two <= 256")
    res = resolution
    buf = np.full((res, res), camera.far)
    ty = math.tan(camera.vfov / 2.0)
    tx = ty * camera.aspect

    drawable = view[:, 2] > camera.near
    view = view[drawable]
    draw_radii = np.asarray(draw_radii, dtype=np.float64)[drawable]
    if len(view):
        order = np.argsort(-(draw_radii / view[:, 2]), kind="stable")[:occluder_count]
        xs, ys, rxs, rys = _tex_projection(camera, view[order], draw_radii[order], res)
        for x, y, rx, ry, cz, r in zip(xs, ys, rxs, rys,
                                       view[order][:, 2], draw_radii[order]):
            i0 = max(int(math.floor(x - rx)), 0)
            i1 = min(int(math.ceil(x + rx)), res - 1)
            j0 = max(int(math.floor(y - ry)), 0)
            j1 = min(int(math.ceil(y + ry)), res - 1)
            if i1 < i0 or j1 < j0:
                continue
            # farthest-corner lateral distance per candidate texel
            ix = np.arange(i0, i1 + 2, dtype=np.float64)
            jy = np.arange(j0, j1 + 2, dtype=np.float64)
            du = (ix / res * 2.0 - 1.0) * tx * cz - (x / res * 2.0 - 1.0) * tx * cz
            dv = (1.0 - jy / res * 2.0) * ty * cz - (1.0 - y / res * 2.0) * ty * cz
            du2 = np.maximum(du[:-1] ** 2, du[1:] ** 2)
            dv2 = np.maximum(dv[:-1] ** 2, dv[1:] ** 2)
            d2 = dv2[:, None] + du2[None, :]
            covered = d2 <= r * r
            if not covered.any():
                continue
            depth = cz - np.sqrt(np.maximum(r * r - d2, 0.0))
            np.clip(depth, camera.near, camera.far, out=depth)
            tile = buf[j0:j1 + 1, i0:i1 + 1]
            np.minimum(tile, np.where(covered, depth, camera.far), out=tile)

    levels = [buf]
    while levels[-1].shape[0] > 1:
        h, w = levels[-1].shape
        levels.append(levels[-1].reshape(h // 2, 2, w // 2, 2).max(axis=(1, 3)))
    return DepthPyramid(levels=tuple(levels), camera=camera)


def cull_occlusion_mask(camera: Camera, view: np.ndarray, bound_radii: np.ndarray,
                        pyramid: DepthPyramid) -> np.ndarray:
    """True where the sphere is provably hidden behind the occluder buffer.

    Spheres intersecting the near plane are never culled. The footprint
    rectangle is rounded outward and queried at the pyramid level where it
    spans at most 2x2 texels; the sphere is culled only when its nearest
    possible depth is strictly farther than the gathered maximum.
    """
    n = len(view)
    culled = np.zeros(n, dtype=bool)
    bound_radii = np.asarray(bound_radii, dtype=np.float64)
    cz = view[:, 2]
    testable = (cz - bound_radii) > camera.near
    if not testable.any():
        return culled
    idx = np.nonzero(testable)[0]
    res = pyramid.resolution
    x, y, rx, ry = _tex_projection(camera, view[idx], bound_radii[idx], res)
    i0 = np.floor(x - rx).astype(np.int64)
    i1 = np.floor(x + rx).astype(np.int64)
    j0 = np.floor(y - ry).astype(np.int64)
    j1 = np.floor(y + ry).astype(np.int64)

    offscreen = (i1 < 0) | (i0 > res - 1) | (j1 < 0) | (j0 > res - 1)
    i0c = np.clip(i0, 0, res - 1)
    i1c = np.clip(i1, 0, res - 1)
    j0c = np.clip(j0, 0, res - 1)
    j1c = np.clip(j1, 0, res - 1)
    span = np.maximum(i1c - i0c + 1, j1c - j0c + 1)
    level = np.ceil(np.log2(span)).astype(np.int64)
    level = np.clip(level, 0, len(pyramid.levels) - 1)

    gathered = np.empty(len(idx))
    for lv in np.unique(level):
        sel = level == lv
        a = i0c[sel] >> lv
        b = i1c[sel] >> lv
        c = j0c[sel] >> lv
        d = j1c[sel] >> lv
        plane = pyramid.levels[lv]
        hi = plane.shape[0] - 1
        a, b, c, d = (np.clip(v, 0, hi) for v in (a, b, c, d))
        gathered[sel] = np.maximum.reduce([plane[c, a], plane[c, b],
                                           plane[d, a], plane[d, b]])
    nearest = cz[idx] - bound_radii[idx]
    culled[idx] = offscreen | (nearest > gathered)
    return culled


# -- streaming ----------------------------------------------------------------

def resolve_streaming(scene: Scene, camera: Camera,
                      radius_cells: int) -> tuple[set[tuple[int, int, int]], np.ndarray]:
    """Occupied cells within a Chebyshev radius of the camera cell, plus the
    per-object loaded mask. A camera outside the populated region anchors at
    the nearest occupied-cell coordinate (componentwise clamp)."""
    if radius_cells < 0:
        raise InvalidArgumentError("streaming radius must be >= 0")
    cam_cell = np.floor((camera.position - scene.cell_anchor) / scene.cell_size)
    occ = scene.occupied_cells
    cam_cell = np.clip(cam_cell, occ.min(axis=0), occ.max(axis=0)).astype(np.int64)
    within = np.max(np.abs(occ - cam_cell), axis=1) <= radius_cells
    loaded = {tuple(int(v) for v in c) for c in occ[within]}
    mask = np.zeros(len(scene), dtype=bool)
    for cell in loaded:
        mask[scene.cell_map[cell]] = True
    return loaded, mask


def select_lod(distances: np.ndarray, base_levels: np.ndarray,
               thresholds: tuple[float, ...]) -> np.ndarray:
    """base level + number of thresholds strictly below the camera distance."""
    th = np.asarray(thresholds, dtype=np.float64)
    if np.any(np.diff(th) <= 0):
        raise InvalidArgumentError("thresholds must be strictly ascending")
    return base_levels + np.searchsorted(th, distances, side="left")


# -- pipeline -----------------------------------------------------------------

@dataclass(frozen=True)
class VisibleSet:
    """Surviving objects with final detail levels, in ascending id order."""

    ids: np.ndarray
    lod_levels: np.ndarray
    deprioritized: np.ndarray
    batches: dict[tuple[str, int], int]

    def entries(self) -> Iterator[tuple[int, int, bool]]:
        for i in range(len(self.ids)):
            yield (int(self.ids[i]), int(self.lod_levels[i]), bool(self.deprioritized[i]))

    def __len__(self) -> int:
        return len(self.ids)


@dataclass(frozen=True)
class FrameCullStats:
    total_objects: int
    streamed_out: int
    distance_culled: int
    frustum_culled: int
    occlusion_culled: int
    whisker_deprioritized: int
    submitted_primitives: int
    batch_count: int
    # informational wall times; excluded from equality so determinism claims
    # cover everything else
    pass_times_ms: dict = dc_field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "total_objects": self.total_objects,
            "streamed_out": self.streamed_out,
            "distance_culled": self.distance_culled,
            "frustum_culled": self.frustum_culled,
            "occlusion_culled": self.occlusion_culled,
            "whisker_deprioritized": self.whisker_deprioritized,
            "submitted_primitives": self.submitted_primitives,
            "batch_count": self.batch_count,
        }


def run_pipeline(scene: Scene, camera: Camera, profile: RunProfile,
                 whisker_flags: np.ndarray | None = None
                 ) -> tuple[VisibleSet, FrameCullStats]:
    """Run the enabled passes in fixed order and batch the survivors.

    `whisker_flags` (boolean, one per object) overrides the profile's own
    whisker span; it is ignored unless the whisker technique is enabled.
    """
    n = len(scene)
    mask = np.ones(n, dtype=bool)
    timings: dict[str, float] = {}
    counts = {"streamed_out": 0, "distance_culled": 0,
              "frustum_culled": 0, "occlusion_culled": 0}
    distances: np.ndarray | None = None

    if profile.has("level_streaming"):
        t0 = time.perf_counter()
        _, loaded_mask = resolve_streaming(
            scene, camera, profile.param("level_streaming", "streaming_radius"))
        counts["streamed_out"] = int(np.count_nonzero(mask & ~loaded_mask))
        mask &= loaded_mask
        timings["level_streaming"] = (time.perf_counter() - t0) * 1e3

    if profile.has("distance_culling"):
        t0 = time.perf_counter()
        distances = np.linalg.norm(scene.positions - camera.position, axis=1)
        limit = np.where(np.isnan(scene.max_draw),
                         profile.param("distance_culling", "max_draw_distance"),
                         scene.max_draw)
        far_away = (distances - scene.bound_radii) > limit
        counts["distance_culled"] = int(np.count_nonzero(mask & far_away))
        mask &= ~far_away
        timings["distance_culling"] = (time.perf_counter() - t0) * 1e3

    if profile.has("frustum_culling"):
        t0 = time.perf_counter()
        outside = cull_frustum_mask(scene.positions, scene.bound_radii,
                                    frustum_planes(camera))
        counts["frustum_culled"] = int(np.count_nonzero(mask & outside))
        mask &= ~outside
        timings["frustum_culling"] = (time.perf_counter() - t0) * 1e3

    if profile.has("occlusion_culling"):
        t0 = time.perf_counter()
        idx = np.nonzero(mask)[0]
        view = view_coordinates(camera, scene.positions[idx])
        disc = scene.kinds[idx] != _BOND_KIND
        pyramid = build_occluder_depth(
            camera, view[disc], scene.radii[idx][disc],
            resolution=profile.param("occlusion_culling", "occlusion_resolution"),
            occluder_count=profile.param("occlusion_culling", "occluder_count"))
        hidden = cull_occlusion_mask(camera, view, scene.bound_radii[idx], pyramid)
        counts["occlusion_culled"] = int(np.count_nonzero(hidden))
        mask[idx[hidden]] = False
        timings["occlusion_culling"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    levels = scene.base_levels_array().copy()
    if profile.has("lod"):
        if distances is None:
            distances = np.linalg.norm(scene.positions - camera.position, axis=1)
        levels = select_lod(distances, levels, profile.param("lod", "lod_thresholds"))
    np.minimum(levels, _KIND_MAX_LEVEL[scene.kinds], out=levels)
    timings["lod"] = (time.perf_counter() - t0) * 1e3

    depri = np.zeros(n, dtype=bool)
    if profile.has("whisker"):
        t0 = time.perf_counter()
        if whisker_flags is None:
            whisker_flags = apply_whisker(scene, WhiskerSelection(
                profile.param("whisker", "lo"), profile.param("whisker", "hi")))
        depri = np.asarray(whisker_flags, dtype=bool) & mask
        levels[depri] = _KIND_MAX_LEVEL[scene.kinds[depri]]
        timings["whisker"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    ids = np.nonzero(mask)[0]
    vis_levels = levels[ids]
    vis_kinds = scene.kinds[ids]
    submitted = int(_PRIM_TABLE[vis_kinds, vis_levels].sum())

    batches: dict[tuple[str, int], int] = {}
    if len(ids):
        combo = vis_kinds.astype(np.int64) * (_MAX_LEVELS + 1) + vis_levels
        uniq, cnt = np.unique(combo, return_counts=True)
        for key, c in zip(uniq.tolist(), cnt.tolist()):
            batches[(OBJECT_KINDS[key // (_MAX_LEVELS + 1)], key % (_MAX_LEVELS + 1))] = c
    batch_count = len(batches) if profile.has("instancing") else len(ids)
    timings["batching"] = (time.perf_counter() - t0) * 1e3

    removed = sum(counts.values())
    assert removed + len(ids) == n, "pass attribution lost objects"
    stats = FrameCullStats(
        total_objects=n, whisker_deprioritized=int(np.count_nonzero(depri)),
        submitted_primitives=submitted, batch_count=batch_count,
        pass_times_ms=timings, **counts)
    return VisibleSet(ids=ids, lod_levels=vis_levels,
                      deprioritized=depri[ids], batches=batches), stats
