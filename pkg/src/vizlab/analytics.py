"""Comparative analytics over recorded sessions.

All statistics are plain arithmetic means over the samples inside a time
window. The 1% low is the mean fps over the ceil(N/100) samples with the
largest frame times (ties broken by sample order), which for N < 100
degenerates to the single worst frame. Pairwise verdicts use metric
direction rules: fps is higher-better, everything else lower-better,
with a relative tie epsilon of 1e-9. Comparisons use means, so sessions
of different lengths compare fairly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from .catalog import METRIC_KINDS
from .errors import EmptyWindowError, InvalidArgumentError
from .telemetry import FrameSample, Session

TIE_EPSILON = 1e-9
HIGHER_BETTER = frozenset({"fps"})


@dataclass(frozen=True)
class TimeWindow:
    t0: float
    t1: float

    def __post_init__(self):
        if not (0.0 <= self.t0 <= self.t1):
            raise InvalidArgumentError(
                f"window must satisfy 0 <= t0 <= t1, got [{self.t0}, {self.t1}]")


@dataclass(frozen=True)
class MetricStats:
    mean: float
    min: float
    max: float

    def to_json(self) -> dict[str, float]:
        return {"mean": self.mean, "min": self.min, "max": self.max}


@dataclass(frozen=True)
class SessionSummary:
    name: str
    metrics: dict[str, MetricStats]
    one_pct_low_fps: float
    duration: float
    sample_count: int

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "metrics": {k: v.to_json() for k, v in self.metrics.items()},
            "one_pct_low_fps": self.one_pct_low_fps,
            "duration": self.duration,
            "sample_count": self.sample_count,
        }


@dataclass(frozen=True)
class Verdict:
    metric: str
    winner: str  # "A" | "B" | "tie"
    mean_a: float
    mean_b: float

    def to_json(self) -> dict[str, Any]:
        return {"metric": self.metric, "winner": self.winner,
                "mean_a": self.mean_a, "mean_b": self.mean_b}


@dataclass(frozen=True)
class ThresholdReport:
    metric: str
    threshold: float
    sessions: tuple[str, ...]
    fractions: tuple[float, ...]

    def to_json(self) -> dict[str, Any]:
        return {"metric": self.metric, "threshold": self.threshold,
                "sessions": list(self.sessions),
                "fractions": list(self.fractions)}


def _check_metric(metric: str) -> None:
    if metric not in METRIC_KINDS:
        raise InvalidArgumentError(
            f"unknown metric {metric!r}; expected one of {METRIC_KINDS}")


def _window_samples(session: Session, window: TimeWindow | None
                    ) -> list[FrameSample]:
    if window is None:
        return session.samples
    return [s for s in session.samples if window.t0 <= s.t <= window.t1]


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def one_pct_low_fps(samples: Sequence[FrameSample]) -> float:
    """Mean fps over the ceil(N/100) samples with the largest frame times."""
    k = math.ceil(len(samples) / 100)
    ranked = sorted(range(len(samples)),
                    key=lambda i: (-samples[i].frame_time_ms, i))
    return _mean([samples[i].fps for i in ranked[:k]])


def summarize(session: Session, window: TimeWindow | None = None
              ) -> SessionSummary:
    samples = _window_samples(session, window)
    if not samples:
        raise EmptyWindowError(f"window selects no samples of {session.name!r}")
    metrics = {}
    for kind in METRIC_KINDS:
        vals = [getattr(s, kind) for s in samples]
        metrics[kind] = MetricStats(mean=_mean(vals), min=min(vals), max=max(vals))
    return SessionSummary(name=session.name, metrics=metrics,
                          one_pct_low_fps=one_pct_low_fps(samples),
                          duration=samples[-1].t - samples[0].t,
                          sample_count=len(samples))


def compare(a: Session, b: Session, metric: str,
            window: TimeWindow | None = None) -> Verdict:
    _check_metric(metric)
    sa = _window_samples(a, window)
    sb = _window_samples(b, window)
    if not sa or not sb:
        raise EmptyWindowError("window selects no samples of one session")
    mean_a = _mean([getattr(s, metric) for s in sa])
    mean_b = _mean([getattr(s, metric) for s in sb])
    if abs(mean_a - mean_b) <= TIE_EPSILON * max(abs(mean_a), abs(mean_b)):
        winner = "tie"
    elif (mean_a > mean_b) == (metric in HIGHER_BETTER):
        winner = "A"
    else:
        winner = "B"
    return Verdict(metric=metric, winner=winner, mean_a=mean_a, mean_b=mean_b)


def compare_all(a: Session, b: Session, window: TimeWindow | None = None
                ) -> list[Verdict]:
    return [compare(a, b, m, window) for m in METRIC_KINDS]


def threshold_report(sessions: Sequence[Session], metric: str,
                     threshold: float) -> ThresholdReport:
    """Fraction of samples meeting the threshold, per session.

    Meeting means value >= threshold for fps and value <= threshold for the
    lower-better metrics. A session with no samples scores 0.0.
    """
    _check_metric(metric)
    if not math.isfinite(threshold):
        raise InvalidArgumentError("threshold must be finite")
    fractions = []
    for session in sessions:
        n = len(session.samples)
        if n == 0:
            fractions.append(0.0)
            continue
        if metric in HIGHER_BETTER:
            meeting = sum(1 for s in session.samples
                          if getattr(s, metric) >= threshold)
        else:
            meeting = sum(1 for s in session.samples
                          if getattr(s, metric) <= threshold)
        fractions.append(meeting / n)
    return ThresholdReport(metric=metric, threshold=threshold,
                           sessions=tuple(s.name for s in sessions),
                           fractions=tuple(fractions))


def small_multiples(sessions: Sequence[Session], metric: str,
                    target_points: int) -> list[dict[str, Any]]:
    """Downsample each session to at most target_points equal-time buckets.

    Bucket value is the mean of its samples, bucket time its midpoint;
    empty buckets are dropped. Sessions already short enough pass through
    at full resolution.
    """
    _check_metric(metric)
    if target_points < 2:
        raise InvalidArgumentError("target_points must be >= 2")
    out = []
    for session in sessions:
        samples = session.samples
        if len(samples) <= target_points:
            series = [(s.t, getattr(s, metric)) for s in samples]
        else:
            t0 = samples[0].t
            width = (samples[-1].t - t0) / target_points
            buckets: list[list[float]] = [[] for _ in range(target_points)]
            for s in samples:
                idx = min(int((s.t - t0) / width), target_points - 1)
                buckets[idx].append(getattr(s, metric))
            series = [(t0 + (i + 0.5) * width, _mean(vals))
                      for i, vals in enumerate(buckets) if vals]
        out.append({"name": session.name,
                    "t": [p[0] for p in series],
                    "values": [p[1] for p in series]})
    return out
