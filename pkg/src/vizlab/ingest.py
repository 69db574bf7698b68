"""PDB ingestion: fixed-column parsing, bond inference, detail grouping.

Parsing follows the classic fixed-column record layout (serial 7-11,
name 13-16, resName 18-20, chain 22, resSeq 23-26, x/y/z 31-38/39-46/47-54,
element 77-78, 1-based). Only the first model of multi-model files is read.
CONECT records are token-split since serial lists are the only payload.
"""

from __future__ import annotations

import logging
import math
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (EmptyInputError, FetchError, FetchTimeoutError,
                     InvalidArgumentError, ParseError)
from .geom import AABB

log = logging.getLogger("vizlab.ingest")

# single-bond covalent radii in Angstrom (common biomolecular elements)
COVALENT_RADIUS: dict[str, float] = {
    "H": 0.31, "He": 0.28, "Li": 1.28, "Be": 0.96, "B": 0.84, "C": 0.76,
    "N": 0.71, "O": 0.66, "F": 0.57, "Na": 1.66, "Mg": 1.41, "Al": 1.21,
    "Si": 1.11, "P": 1.07, "S": 1.05, "Cl": 1.02, "K": 2.03, "Ca": 1.76,
    "Mn": 1.39, "Fe": 1.32, "Co": 1.26, "Ni": 1.24, "Cu": 1.32, "Zn": 1.22,
    "Se": 1.20, "Br": 1.20, "I": 1.39,
}
FALLBACK_COVALENT_RADIUS = 0.77

# van der Waals radii in Angstrom, used for sphere styling
VDW_RADIUS: dict[str, float] = {
    "H": 1.20, "He": 1.40, "Li": 1.82, "C": 1.70, "N": 1.55, "O": 1.52,
    "F": 1.47, "Na": 2.27, "Mg": 1.73, "Si": 2.10, "P": 1.80, "S": 1.80,
    "Cl": 1.75, "K": 2.75, "Ca": 2.31, "Mn": 2.05, "Fe": 2.04, "Co": 2.00,
    "Ni": 1.63, "Cu": 1.40, "Zn": 1.39, "Se": 1.90, "Br": 1.85, "I": 1.98,
}
FALLBACK_VDW_RADIUS = 1.70

LOD_GROUPS = ("core", "mid", "periphery")
DEFAULT_BASE_LEVELS = {"core": 0, "mid": 1, "periphery": 2}

_PDB_ID_RE = re.compile(r"^[0-9][A-Za-z0-9]{3}$")


@dataclass(frozen=True)
class Atom:
    index: int
    serial: int
    name: str
    element: str
    chain: str
    residue_seq: int
    residue_name: str
    position: np.ndarray


@dataclass(frozen=True)
class Bond:
    a: int
    b: int
    source: str  # "conect" | "inferred"


@dataclass
class Molecule:
    id: str
    atoms: list[Atom]
    bonds: list[Bond]
    positions: np.ndarray = field(repr=False, default=None)  # (N, 3) float64
    aabb: AABB = field(init=False, repr=False, default=None)
    principal_axis: np.ndarray = field(init=False, repr=False, default=None)
    whisker_coord: np.ndarray = field(init=False, repr=False, default=None)

    def __post_init__(self):
        if not self.atoms:
            raise EmptyInputError("molecule has no atoms")
        if self.positions is None:
            self.positions = np.array([a.position for a in self.atoms], dtype=np.float64)
        self.aabb = AABB.of_points(self.positions)
        self.principal_axis = _principal_axis(self.positions)
        self.whisker_coord = _whisker_coords(self.positions, self.principal_axis)

    @property
    def centroid(self) -> np.ndarray:
        return self.positions.mean(axis=0)

    @property
    def elements(self) -> list[str]:
        return [a.element for a in self.atoms]


def _principal_axis(positions: np.ndarray) -> np.ndarray:
    """Unit eigenvector of the largest covariance eigenvalue.

    Eigenvalue ties resolve toward the candidate most aligned with +x, then
    +y; the sign is canonicalized the same way.
    """
    centered = positions - positions.mean(axis=0)
    cov = centered.T @ centered / max(len(positions), 1)
    evals, evecs = np.linalg.eigh(cov)
    top = evals[-1]
    if top <= 0.0:
        return np.array([1.0, 0.0, 0.0])
    idx = [i for i in range(3) if evals[i] >= top * (1.0 - 1e-9)]
    best = max(idx, key=lambda i: (abs(evecs[0, i]), abs(evecs[1, i]), abs(evecs[2, i])))
    axis = evecs[:, best]
    for comp in axis:
        if comp != 0.0:
            if comp < 0.0:
                axis = -axis
            break
    return axis


def _whisker_coords(positions: np.ndarray, axis: np.ndarray) -> np.ndarray:
    proj = positions @ axis
    lo, hi = float(proj.min()), float(proj.max())
    if hi - lo == 0.0:
        return np.full(len(positions), 0.5)
    return (proj - lo) / (hi - lo)


def _element_of(line: str, name: str, lineno: int) -> str:
    elem = line[76:78].strip() if len(line) > 76 else ""
    if not elem:
        # legacy files often leave columns 77-78 blank
        for ch in name:
            if ch.isalpha():
                elem = ch
                break
    if not elem:
        raise ParseError("cannot determine element", lineno)
    return elem.capitalize()


def parse_pdb(text: str, molecule_id: str = "unnamed") -> Molecule:
    """Parse ATOM/HETATM/CONECT records; first model only.

    Altloc and insertion-code columns are ignored. Malformed numeric fields
    raise ParseError with the 1-based line number; an input with zero atom
    records raises EmptyInputError.
    """
    atoms: list[Atom] = []
    serial_to_index: dict[int, int] = {}
    conect_pairs: set[tuple[int, int]] = set()
    model_done = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        record = line[:6].strip()
        if record == "ENDMDL":
            model_done = True
        elif record in ("ATOM", "HETATM") and not model_done:
            try:
                serial = int(line[6:11])
                x = float(line[30:38])
                y = float(line[38:46])
                z = float(line[46:54])
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
            if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
                raise ParseError("non-finite coordinate", lineno)
            name = line[12:16].strip()
            seq_text = line[22:26].strip()
            try:
                residue_seq = int(seq_text) if seq_text else 0
            except ValueError:
                raise ParseError(f"bad residue number {seq_text!r}", lineno) from None
            atom = Atom(
                index=len(atoms),
                serial=serial,
                name=name,
                element=_element_of(line, name, lineno),
                chain=line[21].strip() if len(line) > 21 else "",
                residue_seq=residue_seq,
                residue_name=line[17:20].strip(),
                position=np.array([x, y, z]),
            )
            serial_to_index[serial] = atom.index
            atoms.append(atom)
        elif record == "CONECT":
            tokens = line.split()[1:]
            try:
                serials = [int(tok) for tok in tokens]
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
            if serials:
                base = serials[0]
                for other in serials[1:]:
                    if other != base:
                        conect_pairs.add((min(base, other), max(base, other)))
    if not atoms:
        raise EmptyInputError("no ATOM/HETATM records")

    bonds: list[Bond] = []
    for sa, sb in sorted(conect_pairs):
        ia, ib = serial_to_index.get(sa), serial_to_index.get(sb)
        if ia is None or ib is None:
            log.debug("CONECT references unknown serial pair (%d, %d); skipped", sa, sb)
            continue
        bonds.append(Bond(min(ia, ib), max(ia, ib), "conect"))
    bonds.sort(key=lambda b: (b.a, b.b))
    return Molecule(id=molecule_id, atoms=atoms, bonds=bonds)


def fetch_pdb(pdb_id: str, data_dir: str | Path,
              endpoint: str = "https://files.rcsb.org/download",
              timeout: float = 30.0) -> Molecule:
    """Download (or reuse a cached copy of) a PDB entry and parse it.

    The cache lives at <data_dir>/pdb/<ID>.pdb; a cache hit makes no network
    request. Non-200 responses raise FetchError, timeouts FetchTimeoutError.
    """
    if not _PDB_ID_RE.match(pdb_id):
        raise InvalidArgumentError(
            f"{pdb_id!r} is not a valid entry id (digit + 3 alphanumerics)")
    pdb_id = pdb_id.upper()
    cache = Path(data_dir) / "pdb" / f"{pdb_id}.pdb"
    if not cache.exists():
        url = f"{endpoint.rstrip('/')}/{pdb_id}.pdb"
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                if resp.status != 200:
                    raise FetchError(f"{url}: HTTP {resp.status}")
                body = resp.read()
        except TimeoutError as e:
            raise FetchTimeoutError(f"{url}: timed out after {timeout}s") from e
        except urllib.error.HTTPError as e:
            raise FetchError(f"{url}: HTTP {e.code}") from None
        except urllib.error.URLError as e:
            if isinstance(e.reason, TimeoutError):
                raise FetchTimeoutError(f"{url}: timed out after {timeout}s") from e
            raise FetchError(f"{url}: {e.reason}") from e
        cache.parent.mkdir(parents=True, exist_ok=True)
        tmp = cache.with_suffix(".part")
        tmp.write_bytes(body)
        tmp.replace(cache)
    return parse_pdb(cache.read_text(encoding="utf-8", errors="replace"), pdb_id)


def _covalent_radii(elements: list[str]) -> np.ndarray:
    radii = np.empty(len(elements))
    unknown: set[str] = set()
    for i, elem in enumerate(elements):
        r = COVALENT_RADIUS.get(elem)
        if r is None:
            unknown.add(elem)
            r = FALLBACK_COVALENT_RADIUS
        radii[i] = r
    for elem in sorted(unknown):
        log.warning("no covalent radius for element %r; using fallback %.2f A",
                    elem, FALLBACK_COVALENT_RADIUS)
    return radii


def infer_bonds(molecule: Molecule, tolerance: float = 0.4) -> list[Bond]:
    """Distance-rule bonds merged with existing CONECT bonds.

    Two atoms bond when their separation is at most r_cov(a) + r_cov(b) +
    tolerance. Neighbor search uses a uniform spatial hash whose cell edge
    equals the largest possible bond length, so only the 27-cell
    neighborhood needs scanning. Result is sorted by (a, b) and free of
    duplicates and self-bonds.
    """
    pos = molecule.positions
    n = len(pos)
    radii = _covalent_radii(molecule.elements)
    cell = 2.0 * float(radii.max()) + tolerance
    cells = np.floor(pos / cell).astype(np.int64)
    buckets: dict[tuple[int, int, int], list[int]] = {}
    for i, key in enumerate(map(tuple, cells)):
        buckets.setdefault(key, []).append(i)

    existing = {(b.a, b.b) for b in molecule.bonds}
    pairs: list[tuple[int, int]] = []
    # half-space neighbor offsets: each unordered cell pair visited once
    offsets = [(dx, dy, dz)
               for dx in (-1, 0, 1) for dy in (-1, 0, 1) for dz in (-1, 0, 1)
               if (dx, dy, dz) > (0, 0, 0)]
    for key, members in buckets.items():
        mem = np.array(members)
        # within-cell pairs (i < j)
        if len(mem) > 1:
            ai, bi = np.triu_indices(len(mem), k=1)
            _collect_pairs(pos, radii, tolerance, mem[ai], mem[bi], pairs)
        for off in offsets:
            other = buckets.get((key[0] + off[0], key[1] + off[1], key[2] + off[2]))
            if other is None:
                continue
            omem = np.array(other)
            ai = np.repeat(mem, len(omem))
            bi = np.tile(omem, len(mem))
            _collect_pairs(pos, radii, tolerance, ai, bi, pairs)

    merged = set(existing)
    inferred = []
    for a, b in pairs:
        lo, hi = (a, b) if a < b else (b, a)
        if (lo, hi) not in merged:
            merged.add((lo, hi))
            inferred.append(Bond(lo, hi, "inferred"))
    out = list(molecule.bonds) + inferred
    out.sort(key=lambda b: (b.a, b.b))
    assert all(b.a < b.b for b in out) and n >= 0
    return out


def _collect_pairs(pos, radii, tolerance, ai, bi, pairs):
    d = np.linalg.norm(pos[ai] - pos[bi], axis=1)
    ok = d <= radii[ai] + radii[bi] + tolerance
    pairs.extend(zip(ai[ok].tolist(), bi[ok].tolist()))


@dataclass(frozen=True)
class LodAssignment:
    """Per-atom detail group plus the base detail level of each group."""

    groups: np.ndarray  # (N,) int8: 0=core 1=mid 2=periphery
    base_levels: dict[str, int]

    def group_name(self, atom_index: int) -> str:
        return LOD_GROUPS[int(self.groups[atom_index])]


def assign_lod_groups(molecule: Molecule,
                      focus: list[tuple[str, int, int]] | None = None,
                      base_levels: dict[str, int] | None = None) -> LodAssignment:
    """Split atoms into core/mid/periphery.

    Focus regions ((chain, first_residue, last_residue), inclusive) are
    always core. Remaining atoms are ranked by distance to the molecule
    centroid and cut into thirds; zero spread degenerates to all-core.
    """
    base = dict(DEFAULT_BASE_LEVELS if base_levels is None else base_levels)
    missing = [g for g in LOD_GROUPS if g not in base]
    if missing:
        raise InvalidArgumentError(f"base_levels is missing groups {missing}")
    if any(v < 0 for v in base.values()):
        raise InvalidArgumentError("base levels must be >= 0")
    if base["core"] > base["periphery"]:
        raise InvalidArgumentError("core may not be coarser than periphery")

    n = len(molecule.atoms)
    groups = np.zeros(n, dtype=np.int8)
    in_focus = np.zeros(n, dtype=bool)
    if focus:
        chains = {a.chain for a in molecule.atoms}
        for chain, lo, hi in focus:
            if chain not in chains:
                raise InvalidArgumentError(f"focus chain {chain!r} not present")
            for a in molecule.atoms:
                if a.chain == chain and lo <= a.residue_seq <= hi:
                    in_focus[a.index] = True

    rest = np.where(~in_focus)[0]
    if len(rest):
        d = np.linalg.norm(molecule.positions[rest] - molecule.centroid, axis=1)
        if float(d.max() - d.min()) == 0.0:
            pass  # degenerate spread: everything stays core
        else:
            order = np.argsort(d, kind="stable")
            k = len(rest)
            groups[rest[order[k // 3:(2 * k) // 3]]] = 1
            groups[rest[order[(2 * k) // 3:]]] = 2
    return LodAssignment(groups=groups, base_levels=base)


def assign_streaming_cells(positions: np.ndarray, cell_size: float,
                           anchor: np.ndarray | None = None) -> np.ndarray:
    """Integer 3-tuple cell per position: floor((p - anchor) / cell_size).

    Anchor defaults to the componentwise minimum of the positions.
    """
    if cell_size <= 0:
        raise InvalidArgumentError("cell_size must be > 0")
    positions = np.asarray(positions, dtype=np.float64).reshape(-1, 3)
    if anchor is None:
        anchor = positions.min(axis=0)
    return np.floor((positions - np.asarray(anchor)) / cell_size).astype(np.int64)
