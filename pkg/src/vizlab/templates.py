"""Deterministic camera-path benchmark templates and the headless runner.

Three templates, all pure functions of scene bounds and time:
  t1_spawn      30 s static pose at 2.5x the bounds radius.
  t2_lookaround 30 s orbit, exactly one revolution at 15 deg elevation.
  t3_stress     180 s: static (0-60), orbit at one revolution per 40 s
                (60-100), then a spline fly-through entering the bounds
                and returning to the start pose by t=180.

Phase boundaries belong to the later phase. Benchmark runs advance a
simulated clock by a fixed timestep, so repeated runs are bit-identical
under a synthetic probe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .catalog import RunProfile, validate_profile
from .errors import InvalidArgumentError
from .geom import AABB, normalize, ray_aabb_exit, vec3
from .optimizer import FrameCullStats, run_pipeline
from .render import DrawStats, render_frame
from .scene import Camera, Scene, WhiskerSelection, apply_whisker
from .telemetry import Probe, Recorder, Session, SyntheticProbe

TEMPLATE_IDS = ("t1_spawn", "t2_lookaround", "t3_stress")
_ALIASES = {"t1": "t1_spawn", "t2": "t2_lookaround", "t3": "t3_stress"}
_LABELS = {"t1_spawn": "T1", "t2_lookaround": "T2", "t3_stress": "T3"}

_ORBIT_ELEVATION = math.radians(15.0)
_RADIUS_FACTOR = 2.5


def parse_timestep(value) -> float:
    """Accept a number or an "a/b" fraction string (e.g. "1/60")."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        step = float(value)
    else:
        text = str(value).strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                step = float(num) / float(den)
            else:
                step = float(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgumentError(
                f"bad timestep {value!r}; use a number or a/b") from exc
    if not math.isfinite(step) or step <= 0.0:
        raise InvalidArgumentError(f"timestep must be positive, got {value!r}")
    return step


def normalize_template(name: str) -> str:
    """Map any accepted spelling (t1, T1, t1_spawn) to the canonical id."""
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in TEMPLATE_IDS:
        raise InvalidArgumentError(
            f"unknown template {name!r}; expected one of {TEMPLATE_IDS} "
            "or t1/t2/t3")
    return key


def template_label(template_id: str) -> str:
    return _LABELS[normalize_template(template_id)]


@dataclass(frozen=True)
class StaticController:
    eye: np.ndarray
    target: np.ndarray

    def pose_at(self, local_t: float) -> tuple[np.ndarray, np.ndarray]:
        return self.eye, self.target


@dataclass(frozen=True)
class OrbitController:
    center: np.ndarray
    radius: float
    elevation: float
    angular_velocity: float  # rad/s
    start_azimuth: float = 0.0

    def eye_at(self, local_t: float) -> np.ndarray:
        az = self.start_azimuth + self.angular_velocity * local_t
        ce = math.cos(self.elevation)
        offset = vec3(ce * math.cos(az), ce * math.sin(az),
                      math.sin(self.elevation)) * self.radius
        return self.center + offset

    def pose_at(self, local_t: float) -> tuple[np.ndarray, np.ndarray]:
        return self.eye_at(local_t), self.center


@dataclass(frozen=True)
class SplineController:
    """Cubic Hermite through keyframes, tangents from neighbor differences
    over their time span (one-sided at the ends). The camera looks at the
    next keyframe, except on the final approach where it looks at
    `final_target` so the closing pose matches the template start."""

    times: tuple[float, ...]
    points: np.ndarray  # (K, 3)
    final_target: np.ndarray

    def _tangent(self, i: int) -> np.ndarray:
        k = len(self.times)
        lo = max(i - 1, 0)
        hi = min(i + 1, k - 1)
        return (self.points[hi] - self.points[lo]) / (self.times[hi] - self.times[lo])

    def position_at(self, t: float) -> np.ndarray:
        times = self.times
        if t <= times[0]:
            return self.points[0].copy()
        if t >= times[-1]:
            return self.points[-1].copy()
        i = int(np.searchsorted(times, t, side="right") - 1)
        dt = times[i + 1] - times[i]
        s = (t - times[i]) / dt
        h00 = 2 * s**3 - 3 * s**2 + 1
        h10 = s**3 - 2 * s**2 + s
        h01 = -2 * s**3 + 3 * s**2
        h11 = s**3 - s**2
        return (h00 * self.points[i] + h10 * dt * self._tangent(i)
                + h01 * self.points[i + 1] + h11 * dt * self._tangent(i + 1))

    def pose_at(self, local_t: float) -> tuple[np.ndarray, np.ndarray]:
        t = local_t + self.times[0]
        eye = self.position_at(t)
        if t >= self.times[-2]:
            return eye, self.final_target
        i = int(np.searchsorted(self.times, t, side="right") - 1)
        i = min(max(i, 0), len(self.times) - 2)
        return eye, self.points[i + 1]


Controller = Union[StaticController, OrbitController, SplineController]


@dataclass(frozen=True)
class Phase:
    start: float
    end: float
    controller: Controller


@dataclass(frozen=True)
class PhaseSchedule:
    template_id: str
    phases: tuple[Phase, ...]
    total: float
    vfov: float
    aspect: float
    near: float
    far: float


def _check_bounds(bounds: AABB) -> None:
    if bounds.radius <= 0.0:
        raise InvalidArgumentError("scene bounds have zero extent")


def _lens(bounds: AABB) -> dict[str, float]:
    r = bounds.radius
    return {"vfov": math.pi / 3.0, "aspect": 4.0 / 3.0,
            "near": max(r * 1e-3, 1e-6), "far": r * 10.0}


def _orbit(bounds: AABB, period: float) -> OrbitController:
    return OrbitController(center=bounds.centroid, radius=_RADIUS_FACTOR * bounds.radius,
                           elevation=_ORBIT_ELEVATION,
                           angular_velocity=2.0 * math.pi / period)


def _static_pose(bounds: AABB) -> StaticController:
    orbit = _orbit(bounds, 1.0)
    return StaticController(eye=orbit.eye_at(0.0), target=bounds.centroid)


def _fly_keyframes(bounds: AABB) -> SplineController:
    """Fly-through keyframes: enter along the orbit-end sight line at 95%
    of the ray exit distance (strictly inside), thread the core along the
    extent-ranked axes, and land back on the start eye."""
    c = bounds.centroid
    h = bounds.half_extent
    start_eye = _static_pose(bounds).eye
    entry_dir = normalize(start_eye - c)
    entry = c + 0.95 * ray_aabb_exit(c, entry_dir, bounds) * entry_dir

    order = np.argsort(-h, kind="stable")  # axes by descending extent
    axis = [np.eye(3)[order[k]] * h[order[k]] for k in range(3)]
    waypoints = np.array([
        entry,
        c + 0.55 * axis[0] + 0.25 * axis[1],
        c - 0.50 * axis[0] + 0.30 * axis[2],
        c - 0.35 * axis[1] - 0.45 * axis[2],
        start_eye,
    ])
    times = (100.0, 120.0, 140.0, 160.0, 180.0)
    return SplineController(times=times, points=waypoints, final_target=c)


def build_schedule(template: str, bounds: AABB) -> PhaseSchedule:
    tid = normalize_template(template)
    _check_bounds(bounds)
    lens = _lens(bounds)
    if tid == "t1_spawn":
        phases = (Phase(0.0, 30.0, _static_pose(bounds)),)
        total = 30.0
    elif tid == "t2_lookaround":
        phases = (Phase(0.0, 30.0, _orbit(bounds, 30.0)),)
        total = 30.0
    else:
        phases = (Phase(0.0, 60.0, _static_pose(bounds)),
                  Phase(60.0, 100.0, _orbit(bounds, 40.0)),
                  Phase(100.0, 180.0, _fly_keyframes(bounds)))
        total = 180.0
    return PhaseSchedule(template_id=tid, phases=phases, total=total, **lens)


def camera_at(schedule: PhaseSchedule, t: float) -> Camera:
    """Pose at time t; pure, and total on [0, total]."""
    if not 0.0 <= t <= schedule.total:
        raise InvalidArgumentError(
            f"t = {t} outside template range [0, {schedule.total}]")
    phase = schedule.phases[-1]
    for p in schedule.phases:
        if p.start <= t < p.end:
            phase = p
            break
    eye, target = phase.controller.pose_at(t - phase.start)
    return Camera.look_at(eye, target, vfov=schedule.vfov, aspect=schedule.aspect,
                          near=schedule.near, far=schedule.far)


def run_template(scene: Scene, profile: RunProfile | dict, template: str,
                 timestep: float = 1.0 / 60.0, probe: Probe | None = None,
                 *, name: str = "run", description: str = "",
                 dataset: str = "", fb_size: tuple[int, int] | None = (160, 120),
                 shading="flat",
                 stats_out: list[tuple[FrameCullStats, DrawStats | None]] | None = None
                 ) -> Session:
    """Execute a template headless: fixed-timestep loop of pose, culling
    pipeline, rasterization, and telemetry sampling.

    fb_size None skips rasterization; telemetry is unaffected because the
    synthetic render stage time depends only on submitted primitives.
    """
    if timestep <= 0.0:
        raise InvalidArgumentError("timestep must be positive")
    profile = validate_profile(profile)
    schedule = build_schedule(template, scene.bounds)
    probe = probe if probe is not None else SyntheticProbe()

    session = Session(name=name, description=description, dataset=dataset,
                      template=template_label(schedule.template_id),
                      optimizations=profile.enabled,
                      sample_interval_ms=timestep * 1000.0)
    recorder = Recorder(session, probe)

    whisker_flags = None
    if profile.has("whisker"):
        span = WhiskerSelection(lo=profile.param("whisker", "lo"),
                                hi=profile.param("whisker", "hi"))
        whisker_flags = apply_whisker(scene, span)

    n_frames = round(schedule.total / timestep)
    for i in range(n_frames):
        t = i * timestep
        camera = camera_at(schedule, t)
        visible, cull_stats = run_pipeline(scene, camera, profile,
                                           whisker_flags=whisker_flags)
        draw_stats = None
        if fb_size is not None:
            _, draw_stats = render_frame(scene, visible, camera, fb_size, shading)
        recorder.sample_frame(timestep, cull_stats.submitted_primitives, t=t)
        if stats_out is not None:
            stats_out.append((cull_stats, draw_stats))
    return session
