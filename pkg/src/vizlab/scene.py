"""Scene construction: positioned renderable objects with detail groups,
streaming cells, and whisker coordinates, plus the camera model.

Object storage is column-oriented (one numpy array per attribute) so frame
pipelines on half-million-object scenes stay vectorized; SceneObject is the
row view used for construction-by-hand and inspection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .catalog import OBJECT_KINDS
from .errors import InvalidArgumentError
from .fields import FieldSample, FieldTextureArray, percentile, sample_channels
from .geom import AABB, normalize, orthonormal_up, vec3
from .ingest import (FALLBACK_VDW_RADIUS, VDW_RADIUS, LodAssignment, Molecule,
                     assign_streaming_cells)

KIND_INDEX = {kind: i for i, kind in enumerate(OBJECT_KINDS)}
GROUP_INDEX = {"core": 0, "mid": 1, "periphery": 2}
GROUP_NAMES = ("core", "mid", "periphery")

# flat per-element sphere colors (RGB in [0,1])
ELEMENT_COLORS: dict[str, tuple[float, float, float]] = {
    "H": (1.0, 1.0, 1.0), "C": (0.565, 0.565, 0.565), "N": (0.188, 0.314, 0.973),
    "O": (1.0, 0.051, 0.051), "S": (1.0, 1.0, 0.188), "P": (1.0, 0.502, 0.0),
    "Fe": (0.878, 0.400, 0.200), "Mg": (0.541, 1.0, 0.0), "Zn": (0.490, 0.502, 0.690),
    "Ca": (0.239, 1.0, 0.0), "Cl": (0.121, 0.941, 0.121), "Na": (0.671, 0.361, 0.949),
}
DEFAULT_ELEMENT_COLOR = (1.0, 0.080, 0.576)


@dataclass(frozen=True)
class Camera:
    """Pinhole camera; forward/up are orthonormal, vfov is vertical, radians."""

    position: np.ndarray
    forward: np.ndarray
    up: np.ndarray
    vfov: float = np.deg2rad(60.0)
    aspect: float = 4.0 / 3.0
    near: float = 0.1
    far: float = 10000.0

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=np.float64))
        fwd = normalize(np.asarray(self.forward, dtype=np.float64))
        up = np.asarray(self.up, dtype=np.float64)
        if abs(float(np.dot(normalize(up), fwd))) > 1.0 - 1e-9:
            raise InvalidArgumentError("camera up is parallel to forward")
        object.__setattr__(self, "forward", fwd)
        object.__setattr__(self, "up", orthonormal_up(fwd, up))
        if not (0.0 < self.vfov < np.pi):
            raise InvalidArgumentError("vfov must lie in (0, pi)")
        if self.aspect <= 0.0:
            raise InvalidArgumentError("aspect must be > 0")
        if not (0.0 < self.near < self.far):
            raise InvalidArgumentError("need 0 < near < far")

    @property
    def right(self) -> np.ndarray:
        return np.cross(self.forward, self.up)

    @staticmethod
    def look_at(eye: np.ndarray, target: np.ndarray, up_hint: np.ndarray | None = None,
                **kw) -> "Camera":
        eye = np.asarray(eye, dtype=np.float64)
        fwd = normalize(np.asarray(target, dtype=np.float64) - eye)
        up = orthonormal_up(fwd, vec3(0, 0, 1) if up_hint is None else up_hint)
        return Camera(position=eye, forward=fwd, up=up, **kw)


@dataclass(frozen=True)
class SceneObject:
    """Row view of one renderable object."""

    id: int
    kind: str
    position: np.ndarray
    radius: float
    color: tuple[float, float, float]
    lod_group: str
    cell: tuple[int, int, int]
    whisker_coord: float
    max_draw_distance: float | None = None
    bound_radius: float | None = None  # culling sphere; defaults to radius
    endpoints: np.ndarray | None = None  # (2, 3), bond segments only

    def bounding_radius(self) -> float:
        return self.radius if self.bound_radius is None else self.bound_radius


class Scene:
    """Column store of objects plus streaming-cell and detail-group metadata."""

    def __init__(self, dataset_id: str, kinds: np.ndarray, positions: np.ndarray,
                 radii: np.ndarray, colors: np.ndarray, lod_groups: np.ndarray,
                 whisker: np.ndarray, cell_size: float,
                 cell_anchor: np.ndarray | None = None,
                 bound_radii: np.ndarray | None = None,
                 max_draw: np.ndarray | None = None,
                 seg_a: np.ndarray | None = None, seg_b: np.ndarray | None = None,
                 base_lod: dict[str, int] | None = None):
        n = len(positions)
        self.dataset_id = dataset_id
        self.kinds = np.asarray(kinds, dtype=np.int8)
        self.positions = np.asarray(positions, dtype=np.float64).reshape(n, 3)
        self.radii = np.asarray(radii, dtype=np.float64)
        self.colors = np.asarray(colors, dtype=np.float64).reshape(n, 3)
        self.lod_groups = np.asarray(lod_groups, dtype=np.int8)
        self.whisker = np.asarray(whisker, dtype=np.float64)
        self.bound_radii = (self.radii.copy() if bound_radii is None
                            else np.asarray(bound_radii, dtype=np.float64))
        self.max_draw = (np.full(n, np.nan) if max_draw is None
                         else np.asarray(max_draw, dtype=np.float64))
        self.seg_a = seg_a
        self.seg_b = seg_b
        self.base_lod = dict(base_lod) if base_lod else {"core": 0, "mid": 1, "periphery": 2}

        for name, arr in (("kinds", self.kinds), ("radii", self.radii),
                          ("lod_groups", self.lod_groups), ("whisker", self.whisker),
                          ("max_draw", self.max_draw)):
            if len(arr) != n:
                raise InvalidArgumentError(f"{name}: expected {n} rows")
        if n == 0:
            raise InvalidArgumentError("a scene needs at least one object")
        if np.any(self.radii <= 0) or np.any(self.bound_radii < self.radii - 1e-12):
            raise InvalidArgumentError("radii must be > 0 and bound_radii >= radii")
        if np.any(self.whisker < 0) or np.any(self.whisker > 1):
            raise InvalidArgumentError("whisker coordinates must lie in [0, 1]")
        if not np.all(np.isfinite(self.positions)):
            raise InvalidArgumentError("positions must be finite")

        if cell_size <= 0:
            raise InvalidArgumentError("cell_size must be > 0")
        self.cell_size = float(cell_size)
        self.cell_anchor = (self.positions.min(axis=0) if cell_anchor is None
                            else np.asarray(cell_anchor, dtype=np.float64))
        self.cells = assign_streaming_cells(self.positions, self.cell_size,
                                            self.cell_anchor)
        self.bounds = AABB(
            (self.positions - self.bound_radii[:, None]).min(axis=0),
            (self.positions + self.bound_radii[:, None]).max(axis=0))

        # streaming map: occupied cell -> ascending object ids
        self.cell_map: dict[tuple[int, int, int], np.ndarray] = {}
        order = np.lexsort((self.cells[:, 2], self.cells[:, 1], self.cells[:, 0]))
        sorted_cells = self.cells[order]
        change = np.nonzero(np.any(np.diff(sorted_cells, axis=0) != 0, axis=1))[0] + 1
        for chunk in np.split(order, change):
            key = tuple(int(c) for c in self.cells[chunk[0]])
            self.cell_map[key] = np.sort(chunk)
        self.occupied_cells = np.array(sorted(self.cell_map.keys()), dtype=np.int64)

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def total_objects(self) -> int:
        return len(self)

    def base_levels_array(self) -> np.ndarray:
        lut = np.array([self.base_lod[g] for g in GROUP_NAMES], dtype=np.int64)
        return lut[self.lod_groups]

    def object(self, i: int) -> SceneObject:
        kind = OBJECT_KINDS[int(self.kinds[i])]
        endpoints = None
        if kind == "bond_segment" and self.seg_a is not None:
            endpoints = np.stack([self.seg_a[i], self.seg_b[i]])
        md = float(self.max_draw[i])
        return SceneObject(
            id=i, kind=kind, position=self.positions[i], radius=float(self.radii[i]),
            color=tuple(self.colors[i]), lod_group=GROUP_NAMES[int(self.lod_groups[i])],
            cell=tuple(int(c) for c in self.cells[i]),
            whisker_coord=float(self.whisker[i]),
            max_draw_distance=None if np.isnan(md) else md,
            bound_radius=float(self.bound_radii[i]), endpoints=endpoints)

    def objects(self) -> Iterator[SceneObject]:
        return (self.object(i) for i in range(len(self)))


@dataclass(frozen=True)
class SceneStyle:
    atom_radius_scale: float = 1.0
    bond_radius: float = 0.25
    element_colors: dict[str, tuple[float, float, float]] = field(
        default_factory=lambda: dict(ELEMENT_COLORS))
    default_color: tuple[float, float, float] = DEFAULT_ELEMENT_COLOR


def scene_from_molecule(molecule: Molecule, lod: LodAssignment,
                        style: SceneStyle | None = None,
                        cell_size: float = 25.0) -> Scene:
    """One atom_sphere per atom plus one bond_segment per bond.

    Atom radii are van-der-Waals radii scaled by the style; bond segments sit
    at the bond midpoint with the style's bond radius, keep their endpoints,
    and carry a culling sphere that encloses the whole segment.
    """
    style = style or SceneStyle()
    if style.atom_radius_scale <= 0 or style.bond_radius <= 0:
        raise InvalidArgumentError("style radii must be > 0")
    n_atoms = len(molecule.atoms)
    n_bonds = len(molecule.bonds)
    n = n_atoms + n_bonds

    kinds = np.empty(n, dtype=np.int8)
    positions = np.empty((n, 3))
    radii = np.empty(n)
    bound = np.empty(n)
    colors = np.empty((n, 3))
    groups = np.empty(n, dtype=np.int8)
    whisker = np.empty(n)

    kinds[:n_atoms] = KIND_INDEX["atom_sphere"]
    positions[:n_atoms] = molecule.positions
    radii[:n_atoms] = [
        VDW_RADIUS.get(a.element, FALLBACK_VDW_RADIUS) * style.atom_radius_scale
        for a in molecule.atoms]
    bound[:n_atoms] = radii[:n_atoms]
    colors[:n_atoms] = [
        style.element_colors.get(a.element, style.default_color)
        for a in molecule.atoms]
    groups[:n_atoms] = lod.groups
    whisker[:n_atoms] = molecule.whisker_coord

    seg_a = seg_b = None
    if n_bonds:
        ia = np.array([b.a for b in molecule.bonds])
        ib = np.array([b.b for b in molecule.bonds])
        pa, pb = molecule.positions[ia], molecule.positions[ib]
        seg_a = np.zeros((n, 3))
        seg_b = np.zeros((n, 3))
        seg_a[n_atoms:] = pa
        seg_b[n_atoms:] = pb
        kinds[n_atoms:] = KIND_INDEX["bond_segment"]
        positions[n_atoms:] = (pa + pb) / 2.0
        radii[n_atoms:] = style.bond_radius
        bound[n_atoms:] = np.linalg.norm(pb - pa, axis=1) / 2.0 + style.bond_radius
        colors[n_atoms:] = (colors[ia] + colors[ib]) / 2.0
        groups[n_atoms:] = np.minimum(lod.groups[ia], lod.groups[ib])
        whisker[n_atoms:] = (molecule.whisker_coord[ia] + molecule.whisker_coord[ib]) / 2.0

    return Scene(dataset_id=molecule.id, kinds=kinds, positions=positions,
                 radii=radii, colors=colors, lod_groups=groups, whisker=whisker,
                 cell_size=cell_size, cell_anchor=molecule.aabb.min,
                 bound_radii=bound, seg_a=seg_a, seg_b=seg_b,
                 base_lod=lod.base_levels)


def scene_from_field(array: FieldTextureArray, dataset_id: str = "field",
                     emitter_grid: tuple[int, int] = (32, 32), extent: float = 100.0,
                     importance_filter: tuple[np.ndarray, float] | None = None,
                     cell_size: float | None = None,
                     curve: "EmissiveCurve | None" = None,
                     driver: str = "T_K") -> Scene:
    """Flow-particle emitters at the centers of an emitter grid.

    The field's unit-square domain is scaled by `extent` into world space
    (z = 0 plane). With an importance filter (plane, p), only grid cells
    whose plane value reaches the plane's p-th nearest-rank percentile emit;
    this is how empty regions of a field are skipped.
    """
    gx, gy = emitter_grid
    if gx < 1 or gy < 1:
        raise InvalidArgumentError("emitter grid must be at least 1 x 1")
    if extent <= 0:
        raise InvalidArgumentError("extent must be > 0")
    ii, jj = np.meshgrid(np.arange(gx), np.arange(gy), indexing="xy")
    ii = ii.ravel()
    jj = jj.ravel()
    keep = np.ones(len(ii), dtype=bool)
    if importance_filter is not None:
        plane, p = importance_filter
        plane = np.asarray(plane)
        if plane.shape != (gy, gx):
            raise InvalidArgumentError(
                f"filter plane shape {plane.shape} does not match grid ({gy}, {gx})")
        keep = plane[jj, ii] >= percentile(plane, p)
        if not keep.any():
            raise InvalidArgumentError("importance filter removed every emitter")
    ii, jj = ii[keep], jj[keep]

    u = (ii + 0.5) / gx
    v = (jj + 0.5) / gy
    n = len(ii)
    positions = np.column_stack([u * extent, v * extent, np.zeros(n)])
    radius = 0.45 * extent / max(gx, gy)
    if curve is not None:
        vals = sample_channels(array, np.column_stack([u, v]), float(array.times[0]))
        drivers = vals[:, 2] if driver == "T_K" else vals[:, 3]
        colors = curve.eval_many(drivers)
    else:
        colors = np.tile((0.9, 0.6, 0.2), (n, 1))
    return Scene(dataset_id=dataset_id,
                 kinds=np.full(n, KIND_INDEX["flow_particle_emitter"], dtype=np.int8),
                 positions=positions, radii=np.full(n, radius), colors=colors,
                 lod_groups=np.zeros(n, dtype=np.int8), whisker=u,
                 cell_size=cell_size if cell_size is not None else extent / 4.0,
                 cell_anchor=vec3(0, 0, 0), base_lod={"core": 0, "mid": 1, "periphery": 2})


@dataclass(frozen=True)
class WhiskerSelection:
    """Closed span [lo, hi] of the normalized principal-axis coordinate."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise InvalidArgumentError("whisker span must satisfy 0 <= lo <= hi <= 1")


def apply_whisker(scene: Scene, selection: WhiskerSelection) -> np.ndarray:
    """Boolean flag per object: whisker_coord inside the selection span."""
    return (scene.whisker >= selection.lo) & (scene.whisker <= selection.hi)


@dataclass(frozen=True)
class EmissiveCurve:
    """Piecewise-linear scalar -> RGB map, clamped at both ends."""

    points: tuple[tuple[float, tuple[float, float, float]], ...]

    def __post_init__(self):
        if not self.points:
            raise InvalidArgumentError("an emissive curve needs control points")
        xs = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise InvalidArgumentError("control point scalars must be strictly ascending")

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.float64)
        knots = np.array([p[0] for p in self.points])
        rgb = np.array([p[1] for p in self.points], dtype=np.float64)
        out = np.empty(xs.shape + (3,))
        for c in range(3):
            out[..., c] = np.interp(xs, knots, rgb[:, c])
        return out

    def eval(self, x: float) -> tuple[float, float, float]:
        r, g, b = self.eval_many(np.array([x]))[0]
        return (float(r), float(g), float(b))


DEFAULT_FLAME_CURVE = EmissiveCurve(points=(
    (300.0, (0.02, 0.02, 0.10)),
    (900.0, (0.80, 0.20, 0.05)),
    (1600.0, (1.00, 0.75, 0.10)),
    (2300.0, (1.00, 1.00, 0.90)),
))


def emissive_color(sample: FieldSample, curve: EmissiveCurve,
                   driver: str = "T_K") -> tuple[float, float, float]:
    """Color for one field sample, driven by temperature or OH fraction."""
    if driver == "T_K":
        x = sample.t_k
    elif driver == "OH":
        x = sample.oh
    else:
        raise InvalidArgumentError(f"unknown emissive driver {driver!r}")
    return curve.eval(x)
