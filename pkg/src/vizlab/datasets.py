"""Dataset resolution: one string id to a renderable Scene.

Accepted forms:
  synthetic:<count>[:<seed>]   procedural constant-density assembly
  <path>.pdb                   local structure file
  field:<name>                 flow-field manifest under <data_dir>/fields/
  <4-char id>                  PDB entry, downloaded once into the cache
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import InvalidArgumentError
from .fields import load_manifest
from .ingest import assign_lod_groups, fetch_pdb, infer_bonds, parse_pdb
from .scene import KIND_INDEX, Scene, SceneStyle, scene_from_field, scene_from_molecule

_SYNTH_RE = re.compile(r"^synthetic:(\d+)(?::(\d+))?$")
_PDB_ID_RE = re.compile(r"^[0-9][A-Za-z0-9]{3}$")
_FIELD_RE = re.compile(r"^field:([A-Za-z0-9._-]+)$")

DEFAULT_DATA_DIR = Path.home() / ".vizlab"


def synthetic_scene(count: int, seed: int = 0) -> Scene:
    """Constant-density spherical assembly of atom-like objects.

    The blob radius grows as count^(1/3), keeping local density flat so
    occlusion and streaming behave the same at any scale. Whisker
    coordinates follow the x axis, detail groups follow distance ranks
    from the centroid, matching the treatment of real structures.
    """
    if count < 1:
        raise InvalidArgumentError("synthetic dataset needs count >= 1")
    rng = np.random.default_rng(seed)
    spacing = 4.0  # mean center separation, same length unit as radii
    blob_radius = spacing * max(count, 2) ** (1.0 / 3.0)

    # rejection-free uniform ball: direction x cube-root radius
    direction = rng.normal(size=(count, 3))
    direction /= np.linalg.norm(direction, axis=1, keepdims=True)
    r = blob_radius * rng.random(count) ** (1.0 / 3.0)
    positions = direction * r[:, None]

    radii = rng.uniform(1.2, 2.0, size=count)
    colors = rng.uniform(0.2, 0.9, size=(count, 3))

    span = positions[:, 0].max() - positions[:, 0].min()
    whisker = (np.zeros(count) + 0.5 if span == 0.0
               else (positions[:, 0] - positions[:, 0].min()) / span)

    dist = np.linalg.norm(positions - positions.mean(axis=0), axis=1)
    order = np.argsort(dist, kind="stable")
    groups = np.empty(count, dtype=np.int8)
    groups[order[:count // 3]] = 0
    groups[order[count // 3:(2 * count) // 3]] = 1
    groups[order[(2 * count) // 3:]] = 2

    return Scene(dataset_id=f"synthetic:{count}:{seed}",
                 kinds=np.full(count, KIND_INDEX["atom_sphere"], dtype=np.int8),
                 positions=positions, radii=radii, colors=colors,
                 lod_groups=groups, whisker=whisker,
                 cell_size=max(blob_radius / 3.0, spacing))


def _molecule_scene(molecule, dataset_id: str, style: SceneStyle | None) -> Scene:
    from .ingest import Molecule

    molecule = Molecule(id=molecule.id, atoms=molecule.atoms,
                        bonds=infer_bonds(molecule))
    scene = scene_from_molecule(molecule, assign_lod_groups(molecule), style=style)
    scene.dataset_id = dataset_id
    return scene


def resolve_dataset(spec: str, data_dir: str | Path | None = None,
                    style: SceneStyle | None = None) -> Scene:
    data_dir = Path(data_dir) if data_dir is not None else DEFAULT_DATA_DIR
    spec = spec.strip()

    m = _SYNTH_RE.match(spec)
    if m:
        return synthetic_scene(int(m.group(1)), int(m.group(2) or 0))

    m = _FIELD_RE.match(spec)
    if m:
        manifest = data_dir / "fields" / f"{m.group(1)}.json"
        if not manifest.exists():
            raise InvalidArgumentError(f"no field manifest at {manifest}")
        array, meta = load_manifest(manifest)
        return scene_from_field(array, dataset_id=spec,
                                extent=float(meta.get("extent", 100.0)))

    if spec.lower().endswith(".pdb"):
        path = Path(spec)
        if not path.exists():
            raise InvalidArgumentError(f"no such file: {path}")
        molecule = parse_pdb(path.read_text(encoding="utf-8", errors="replace"),
                             molecule_id=path.stem)
        return _molecule_scene(molecule, dataset_id=spec, style=style)

    if _PDB_ID_RE.match(spec):
        molecule = fetch_pdb(spec, data_dir)
        return _molecule_scene(molecule, dataset_id=spec.upper(), style=style)

    raise InvalidArgumentError(
        f"cannot resolve dataset {spec!r}; expected synthetic:<n>[:seed], "
        "a .pdb path, field:<name>, or a 4-character structure id")


def list_datasets(data_dir: str | Path | None = None) -> list[dict[str, str]]:
    """Everything resolvable right now without a network trip."""
    data_dir = Path(data_dir) if data_dir is not None else DEFAULT_DATA_DIR
    out = [
        {"id": "synthetic:10000", "kind": "synthetic",
         "description": "procedural assembly, 10k objects, seed 0"},
        {"id": "synthetic:500000", "kind": "synthetic",
         "description": "procedural assembly at full production scale"},
    ]
    pdb_dir = data_dir / "pdb"
    if pdb_dir.is_dir():
        for path in sorted(pdb_dir.glob("*.pdb")):
            out.append({"id": path.stem.upper(), "kind": "structure",
                        "description": f"cached structure file {path.name}"})
    field_dir = data_dir / "fields"
    if field_dir.is_dir():
        for path in sorted(field_dir.glob("*.json")):
            out.append({"id": f"field:{path.stem}", "kind": "field",
                        "description": f"flow field manifest {path.name}"})
    return out
