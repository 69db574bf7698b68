"""Per-frame metric capture and portable session logs.

A session log is a JSON document (schema_version 1) holding run metadata
plus one sample per frame. Derived rates follow directly from the frame
delta: fps = 1 / dt, frame_time_ms = 1000 * dt. Synthetic probes make
whole sessions bit-reproducible; platform probes read live host metrics.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Protocol

from .catalog import METRIC_KINDS, TECHNIQUES
from .errors import InvalidArgumentError, SessionFormatError

SCHEMA_VERSION = 1

_SAMPLE_FIELDS = ("t", "fps", "frame_time_ms", "cpu_load_pct", "ram_mb",
                  "gpu_frame_time_ms")
_SESSION_FIELDS = ("schema_version", "name", "description", "dataset",
                   "template", "optimizations", "started_at",
                   "sample_interval_ms", "samples")
_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


@dataclass(frozen=True)
class FrameSample:
    t: float
    fps: float
    frame_time_ms: float
    cpu_load_pct: float
    ram_mb: float
    gpu_frame_time_ms: float

    def value(self, metric: str) -> float:
        if metric not in METRIC_KINDS:
            raise InvalidArgumentError(f"unknown metric {metric!r}")
        return getattr(self, metric)

    def to_json(self) -> dict[str, float]:
        return {k: getattr(self, k) for k in _SAMPLE_FIELDS}


class Probe(Protocol):
    def measure(self, t: float, submitted_primitives: int
                ) -> tuple[float, float, float]:
        """Return (cpu_load_pct, ram_mb, render_stage_ms) at time t."""
        ...


def _default_cpu(t: float) -> float:
    return 35.0 + 15.0 * math.sin(2.0 * math.pi * t / 10.0)


def _default_ram(t: float) -> float:
    return 1024.0 + 64.0 * math.sin(2.0 * math.pi * t / 30.0)


@dataclass(frozen=True)
class SyntheticProbe:
    """Deterministic probe. The render stage time is an affine function of
    the submitted primitive count; host metrics come from injected
    schedules, so repeated runs produce identical sessions."""

    primitives_per_ms: float = 25000.0
    base_ms: float = 0.2
    cpu_schedule: Callable[[float], float] = _default_cpu
    ram_schedule: Callable[[float], float] = _default_ram

    def measure(self, t: float, submitted_primitives: int
                ) -> tuple[float, float, float]:
        gpu_ms = self.base_ms + submitted_primitives / self.primitives_per_ms
        return self.cpu_schedule(t), self.ram_schedule(t), gpu_ms


class PlatformProbe:
    """Live host metrics via psutil; the render stage time stays synthetic
    (there is no hardware rasterizer to time)."""

    def __init__(self, primitives_per_ms: float = 25000.0, base_ms: float = 0.2):
        import psutil

        self._psutil = psutil
        self._process = psutil.Process()
        self.primitives_per_ms = primitives_per_ms
        self.base_ms = base_ms
        psutil.cpu_percent(interval=None)  # prime the sampler

    def measure(self, t: float, submitted_primitives: int
                ) -> tuple[float, float, float]:
        cpu = float(self._psutil.cpu_percent(interval=None))
        ram = self._process.memory_info().rss / (1024.0 * 1024.0)
        return cpu, ram, self.base_ms + submitted_primitives / self.primitives_per_ms


@dataclass
class Session:
    name: str
    dataset: str
    optimizations: tuple[str, ...]
    sample_interval_ms: float
    template: str | None = None
    description: str = ""
    started_at: str = ""
    samples: list[FrameSample] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if not _NAME_RE.match(self.name):
            raise InvalidArgumentError(
                f"session name must match {_NAME_RE.pattern}, got {self.name!r}")
        self.optimizations = tuple(self.optimizations)
        for tid in self.optimizations:
            if tid not in TECHNIQUES:
                raise InvalidArgumentError(f"unknown technique id {tid!r}")
        if not self.started_at:
            self.started_at = datetime.now(timezone.utc).isoformat()

    def metric(self, kind: str) -> list[float]:
        if kind not in METRIC_KINDS:
            raise InvalidArgumentError(f"unknown metric {kind!r}")
        return [getattr(s, kind) for s in self.samples]

    def times(self) -> list[float]:
        return [s.t for s in self.samples]

    def to_json(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "name": self.name,
            "description": self.description,
            "dataset": self.dataset,
            "template": self.template,
            "optimizations": list(self.optimizations),
            "started_at": self.started_at,
            "sample_interval_ms": self.sample_interval_ms,
            "samples": [s.to_json() for s in self.samples],
        }


class Recorder:
    """Appends one sample per frame; non-positive deltas are rejected and
    counted in `dropped` rather than raised."""

    def __init__(self, session: Session, probe: Probe):
        self.session = session
        self.probe = probe
        self.dropped = 0
        self._clock = 0.0

    def sample_frame(self, delta_time: float, submitted_primitives: int = 0,
                     t: float | None = None) -> FrameSample | None:
        if delta_time <= 0.0 or not math.isfinite(delta_time):
            self.dropped += 1
            return None
        t = self._clock if t is None else float(t)
        cpu, ram, gpu_ms = self.probe.measure(t, submitted_primitives)
        sample = FrameSample(t=t, fps=1.0 / delta_time,
                             frame_time_ms=1000.0 * delta_time,
                             cpu_load_pct=cpu, ram_mb=ram,
                             gpu_frame_time_ms=gpu_ms)
        self.session.samples.append(sample)
        self._clock = t + delta_time
        return sample


def _check_invariants(session: Session) -> None:
    prev = -math.inf
    for i, s in enumerate(session.samples):
        for k in _SAMPLE_FIELDS:
            v = getattr(s, k)
            if not math.isfinite(v) or v < 0.0:
                raise InvalidArgumentError(
                    f"samples[{i}].{k} = {v!r} must be finite and >= 0")
        if abs(s.fps * s.frame_time_ms - 1000.0) > 1e-6 * 1000.0:
            raise InvalidArgumentError(
                f"samples[{i}]: fps * frame_time_ms must equal 1000")
        if s.t <= prev:
            raise InvalidArgumentError(
                f"samples[{i}].t = {s.t} does not increase past {prev}")
        prev = s.t


def export_session(session: Session, out_dir: str | Path) -> Path:
    """Write <out_dir>/<session-name>.json. Numbers keep full precision."""
    _check_invariants(session)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{session.name}.json"
    path.write_text(json.dumps(session.to_json(), indent=2) + "\n",
                    encoding="utf-8")
    return path


def _require(doc: dict, key: str, where: str) -> Any:
    if key not in doc:
        raise SessionFormatError(f"{where} is missing field {key!r}",
                                 code="missing_field")
    return doc[key]


def _number(doc: dict, key: str, where: str) -> float:
    value = _require(doc, key, where)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SessionFormatError(f"{where}.{key} must be a number", code="type")
    return float(value)


def parse_session(doc: Any, source: str = "session") -> Session:
    """Validate a decoded JSON document and build a Session.

    Error codes: "version" on schema mismatch, "missing_field" for absent
    keys, "monotonicity" for non-increasing sample times, "type" for wrong
    value types, "value" for out-of-range values or unknown technique ids.
    """
    if not isinstance(doc, dict):
        raise SessionFormatError(f"{source}: document must be an object",
                                 code="type")
    version = _require(doc, "schema_version", source)
    if version != SCHEMA_VERSION:
        raise SessionFormatError(
            f"{source}: unsupported schema_version {version!r}", code="version")
    for key in _SESSION_FIELDS:
        _require(doc, key, source)

    raw_samples = doc["samples"]
    if not isinstance(raw_samples, list):
        raise SessionFormatError(f"{source}: samples must be a list", code="type")
    samples = []
    prev_t = -math.inf
    for i, raw in enumerate(raw_samples):
        where = f"{source}.samples[{i}]"
        if not isinstance(raw, dict):
            raise SessionFormatError(f"{where} must be an object", code="type")
        values = {k: _number(raw, k, where) for k in _SAMPLE_FIELDS}
        for k, v in values.items():
            if not math.isfinite(v) or v < 0.0:
                raise SessionFormatError(
                    f"{where}.{k} = {v} must be finite and >= 0", code="value")
        if abs(values["fps"] * values["frame_time_ms"] - 1000.0) > 1e-6 * 1000.0:
            raise SessionFormatError(
                f"{where}: fps * frame_time_ms must equal 1000", code="value")
        if values["t"] <= prev_t:
            raise SessionFormatError(
                f"{where}.t = {values['t']} does not increase past {prev_t}",
                code="monotonicity")
        prev_t = values["t"]
        samples.append(FrameSample(**values))

    opts = doc["optimizations"]
    if not isinstance(opts, list) or not all(isinstance(o, str) for o in opts):
        raise SessionFormatError(f"{source}.optimizations must be a list of "
                                 "technique ids", code="type")
    for tid in opts:
        if tid not in TECHNIQUES:
            raise SessionFormatError(f"{source}.optimizations: unknown "
                                     f"technique id {tid!r}", code="value")
    template = doc["template"]
    if template is not None and not isinstance(template, str):
        raise SessionFormatError(f"{source}.template must be a string or null",
                                 code="type")
    interval = _number(doc, "sample_interval_ms", source)
    if interval <= 0.0 or not math.isfinite(interval):
        raise SessionFormatError(f"{source}.sample_interval_ms must be > 0",
                                 code="value")
    for key in ("name", "description", "dataset", "started_at"):
        if not isinstance(doc[key], str):
            raise SessionFormatError(f"{source}.{key} must be a string",
                                     code="type")
    return Session(name=doc["name"], description=doc["description"],
                   dataset=doc["dataset"], template=template,
                   optimizations=tuple(opts), started_at=doc["started_at"],
                   sample_interval_ms=interval, samples=samples)


def load_session(path: str | Path) -> Session:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SessionFormatError(f"{path}: not valid JSON ({exc})",
                                 code="type") from exc
    return parse_session(doc, source=str(path))
