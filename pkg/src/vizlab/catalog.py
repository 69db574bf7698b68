"""Optimization technique catalog and run-profile validation.

The catalog is editorial metadata loaded from ``data/catalog.tsv`` (one record
per technique). Six fixed families partition 22 techniques; a subset of seven
is executable by the optimizer. Profiles name the enabled subset plus per
technique parameters and are validated/normalized here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Mapping

from .errors import ProfileError, InvalidArgumentError

# Families in display order. Colors are the exact RGB triples used by every
# surface that renders the taxonomy (CLI reports, HTTP catalog, dashboard).
FAMILIES: dict[str, dict[str, Any]] = {
    "rendering": {"display_name": "Rendering", "color": (0.996, 0.851, 0.412)},
    "shadow": {"display_name": "Shadow", "color": (0.431, 0.906, 0.824)},
    "data": {"display_name": "Data", "color": (0.706, 0.949, 0.733)},
    "geometry": {"display_name": "Geometry", "color": (0.839, 0.710, 1.0)},
    "cpu": {"display_name": "CPU", "color": (0.984, 0.780, 0.714)},
    "engine": {"display_name": "Engine", "color": (0.929, 0.929, 0.929)},
}

METRIC_KINDS = ("fps", "frame_time_ms", "cpu_load_pct", "ram_mb", "gpu_frame_time_ms")

OBJECT_KINDS = ("atom_sphere", "bond_segment", "flow_particle_emitter")


@dataclass(frozen=True)
class ParameterSpec:
    name: str
    type: str  # float | floats | int | pow2 | unit
    default: Any


@dataclass(frozen=True)
class TechniqueDescriptor:
    id: str
    family: str
    display_name: str
    description: str
    implemented: bool
    radar: dict[str, int]  # MetricKind -> expected impact in [-2, +2]
    parameters: tuple[ParameterSpec, ...] = ()


def _parse_default(ptype: str, text: str) -> Any:
    if ptype == "floats":
        return tuple(float(tok) for tok in text.split(","))
    if ptype in ("int", "pow2"):
        return int(text)
    return float(text)


def _parse_params(cell: str) -> tuple[ParameterSpec, ...]:
    if cell == "-":
        return ()
    specs = []
    for entry in cell.split(";"):
        name, ptype, default = entry.split(":")
        specs.append(ParameterSpec(name, ptype, _parse_default(ptype, default)))
    return tuple(specs)


def _load_catalog() -> dict[str, TechniqueDescriptor]:
    text = resources.files("vizlab.data").joinpath("catalog.tsv").read_text("utf-8")
    out: dict[str, TechniqueDescriptor] = {}
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        tid, family, display, impl, radar_cell, params_cell, desc = line.split("\t")
        if family not in FAMILIES:
            raise InvalidArgumentError(f"catalog: unknown family {family!r} for {tid}")
        radar_vals = [int(tok) for tok in radar_cell.split(",")]
        if len(radar_vals) != 5 or any(v < -2 or v > 2 for v in radar_vals):
            raise InvalidArgumentError(f"catalog: bad radar vector for {tid}")
        out[tid] = TechniqueDescriptor(
            id=tid,
            family=family,
            display_name=display,
            description=desc,
            implemented=impl == "1",
            radar=dict(zip(METRIC_KINDS, radar_vals)),
            parameters=_parse_params(params_cell),
        )
    return out


_CATALOG: dict[str, TechniqueDescriptor] = _load_catalog()
TECHNIQUES: dict[str, TechniqueDescriptor] = _CATALOG

IMPLEMENTED: frozenset[str] = frozenset(t.id for t in _CATALOG.values() if t.implemented)

_FAMILY_ORDER = {fam: i for i, fam in enumerate(FAMILIES)}


def list_families() -> list[dict[str, Any]]:
    """Family descriptors in display order, with technique counts."""
    counts: dict[str, int] = {fam: 0 for fam in FAMILIES}
    for t in _CATALOG.values():
        counts[t.family] += 1
    return [
        {"id": fam, "display_name": meta["display_name"],
         "color": meta["color"], "technique_count": counts[fam]}
        for fam, meta in FAMILIES.items()
    ]


def family_color(family: str) -> tuple[float, float, float]:
    """Exact catalog RGB (unit-interval, linear) for one family."""
    if family not in FAMILIES:
        raise InvalidArgumentError(f"unknown family: {family!r}")
    return FAMILIES[family]["color"]


def list_techniques(family: str | None = None,
                    implemented_only: bool = False) -> list[TechniqueDescriptor]:
    """Techniques in stable order: family display order, then catalog order."""
    if family is not None and family not in FAMILIES:
        raise InvalidArgumentError(f"unknown family: {family!r}")
    items = [t for t in _CATALOG.values()
             if (family is None or t.family == family)
             and (not implemented_only or t.implemented)]
    items.sort(key=lambda t: _FAMILY_ORDER[t.family])  # stable within family
    return items


def technique(tid: str) -> TechniqueDescriptor:
    try:
        return _CATALOG[tid]
    except KeyError:
        raise ProfileError(f"unknown technique id: {tid!r}") from None


# -- primitive count table ---------------------------------------------------

def _load_primitives() -> dict[str, tuple[int, ...]]:
    text = resources.files("vizlab.data").joinpath("primitives.json").read_text("utf-8")
    raw = json.loads(text)
    table: dict[str, tuple[int, ...]] = {}
    for kind in OBJECT_KINDS:
        counts = tuple(int(c) for c in raw[kind])
        if not counts or any(b > a for a, b in zip(counts, counts[1:])):
            raise InvalidArgumentError(f"primitive counts for {kind} must be non-increasing")
        table[kind] = counts
    return table


PRIMITIVES: dict[str, tuple[int, ...]] = _load_primitives()


def primitive_count(kind: str, lod_level: int) -> int:
    counts = PRIMITIVES[kind]
    return counts[min(lod_level, len(counts) - 1)]


def max_lod_level(kind: str) -> int:
    return len(PRIMITIVES[kind]) - 1


# -- run profiles ------------------------------------------------------------

@dataclass(frozen=True)
class RunProfile:
    """A named set of enabled techniques with normalized parameters."""

    name: str
    enabled: tuple[str, ...] = ()
    params: Mapping[str, Mapping[str, Any]] = field(default_factory=dict)

    def param(self, tid: str, pname: str) -> Any:
        return self.params[tid][pname]

    def has(self, tid: str) -> bool:
        return tid in self.enabled

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "enabled": list(self.enabled),
            "params": {t: dict(p) for t, p in self.params.items()},
        }


EMPTY_PROFILE = RunProfile(name="empty")


def _check_value(tid: str, spec: ParameterSpec, value: Any) -> Any:
    err = lambda why: ProfileError(
        f"profile parameter {tid}.{spec.name}: {why} (got {value!r})")
    if spec.type == "float":
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise err("expected a number")
        value = float(value)
        if not value > 0:
            raise err("must be > 0")
        return value
    if spec.type == "floats":
        try:
            vals = tuple(float(v) for v in value)
        except (TypeError, ValueError):
            raise err("expected a list of numbers") from None
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise err("must be strictly ascending")
        return vals
    if spec.type == "int":
        if not isinstance(value, int) or isinstance(value, bool):
            raise err("expected an integer")
        if value < 0:
            raise err("must be >= 0")
        return value
    if spec.type == "pow2":
        if not isinstance(value, int) or isinstance(value, bool):
            raise err("expected an integer")
        if value < 1 or value > 256 or (value & (value - 1)) != 0:
            raise err("must be a power of two <= 256")
        return value
    if spec.type == "unit":
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise err("expected a number")
        value = float(value)
        if not (0.0 <= value <= 1.0):
            raise err("must lie in [0, 1]")
        return value
    raise InvalidArgumentError(f"unknown parameter type {spec.type!r}")


def validate_profile(profile: RunProfile | Mapping[str, Any]) -> RunProfile:
    """Check ids and parameters, fill defaults; idempotent.

    Unknown or unimplemented technique ids, unknown parameter names, and
    out-of-range values raise ProfileError.
    """
    if isinstance(profile, RunProfile):
        raw: Mapping[str, Any] = profile.to_json()
    else:
        raw = profile
    name = raw.get("name", "unnamed")
    if not isinstance(name, str) or not name:
        raise ProfileError("profile name must be a non-empty string")
    enabled_raw = raw.get("enabled", [])
    seen: list[str] = []
    for tid in enabled_raw:
        desc = technique(tid)  # raises on unknown id
        if not desc.implemented:
            raise ProfileError(f"technique {tid!r} is catalog-only, not executable")
        if tid not in seen:
            seen.append(tid)
    enabled = tuple(sorted(seen))

    params_in = raw.get("params", {}) or {}
    params: dict[str, dict[str, Any]] = {}
    for tid, overrides in params_in.items():
        desc = technique(tid)
        specs = {s.name: s for s in desc.parameters}
        for pname in overrides:
            if pname not in specs:
                raise ProfileError(f"technique {tid!r} has no parameter {pname!r}")
    for tid in enabled:
        desc = technique(tid)
        if not desc.parameters:
            continue
        filled: dict[str, Any] = {}
        overrides = params_in.get(tid, {})
        for spec in desc.parameters:
            value = overrides.get(spec.name, spec.default)
            filled[spec.name] = _check_value(tid, spec, value)
        params[tid] = filled
    if "whisker" in params and params["whisker"]["lo"] > params["whisker"]["hi"]:
        raise ProfileError("whisker span must satisfy lo <= hi")
    return RunProfile(name=name, enabled=enabled, params=params)


def profile_from_json(data: Mapping[str, Any]) -> RunProfile:
    return validate_profile(data)


def catalog_json() -> dict[str, Any]:
    """Full catalog as plain JSON-ready data (served by the HTTP API)."""
    return {
        "families": list_families(),
        "techniques": [
            {
                "id": t.id,
                "family": t.family,
                "display_name": t.display_name,
                "description": t.description,
                "implemented": t.implemented,
                "radar": t.radar,
                "parameters": [
                    {"name": p.name, "type": p.type,
                     "default": list(p.default) if isinstance(p.default, tuple) else p.default}
                    for p in t.parameters
                ],
            }
            for t in list_techniques()
        ],
    }
