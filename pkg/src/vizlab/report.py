"""File reports for the analyze commands: delimited tables plus rendered
figures.

Every writer emits a CSV and a PNG side by side in the chosen directory
and returns the created paths. Figures are drawn straight onto Agg
canvases so no interactive backend or display is ever needed.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .analytics import (ThresholdReport, TimeWindow, Verdict, compare_all,
                        small_multiples, summarize)
from .catalog import METRIC_KINDS
from .telemetry import Session

_SERIES_COLORS = ("#2b6cb0", "#c05621", "#2f855a", "#6b46c1", "#c53030",
                  "#2c7a7b", "#b83280", "#975a16")


def _figure(width: float, height: float) -> Figure:
    fig = Figure(figsize=(width, height), dpi=110)
    FigureCanvasAgg(fig)
    return fig


def _save(fig: Figure, path: Path) -> None:
    fig.savefig(path, bbox_inches="tight")


def _color(i: int) -> str:
    return _SERIES_COLORS[i % len(_SERIES_COLORS)]


def summary_files(sessions: Sequence[Session], out_dir: str | Path,
                  stem: str = "summary",
                  window: TimeWindow | None = None) -> list[Path]:
    """Per-metric stats table plus a stacked timeline figure."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summaries = [summarize(s, window) for s in sessions]

    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["session", "metric", "mean", "min", "max"])
        for summary in summaries:
            for kind in METRIC_KINDS:
                st = summary.metrics[kind]
                w.writerow([summary.name, kind,
                            repr(st.mean), repr(st.min), repr(st.max)])
            w.writerow([summary.name, "one_pct_low_fps",
                        repr(summary.one_pct_low_fps), "", ""])
            w.writerow([summary.name, "duration_s", repr(summary.duration), "", ""])
            w.writerow([summary.name, "sample_count", summary.sample_count, "", ""])

    fig = _figure(8.0, 10.0)
    axes = fig.subplots(len(METRIC_KINDS), 1, sharex=True)
    for ax, kind in zip(axes, METRIC_KINDS):
        for i, session in enumerate(sessions):
            ax.plot(session.times(), session.metric(kind),
                    color=_color(i), linewidth=0.9, label=session.name)
        ax.set_ylabel(kind, fontsize=8)
        ax.tick_params(labelsize=7)
        ax.grid(True, alpha=0.25)
    axes[-1].set_xlabel("t (s)", fontsize=8)
    axes[0].legend(fontsize=7, loc="upper right")
    fig.suptitle("session timelines", fontsize=10)
    png_path = out_dir / f"{stem}.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def compare_files(a: Session, b: Session, out_dir: str | Path,
                  stem: str = "compare", metric: str = "fps",
                  window: TimeWindow | None = None) -> list[Path]:
    """Verdict table over all metrics plus an overlay of one metric."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    verdicts = compare_all(a, b, window)

    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["metric", "winner", "mean_a", "mean_b", "session_a", "session_b"])
        for v in verdicts:
            w.writerow([v.metric, v.winner, repr(v.mean_a), repr(v.mean_b),
                        a.name, b.name])

    chosen: Verdict = next(v for v in verdicts if v.metric == metric)
    fig = _figure(8.0, 4.5)
    ax = fig.subplots()
    for i, session in enumerate((a, b)):
        ax.plot(session.times(), session.metric(metric), color=_color(i),
                linewidth=0.9, label=session.name)
    ax.axhline(chosen.mean_a, color=_color(0), linestyle="--", linewidth=0.8)
    ax.axhline(chosen.mean_b, color=_color(1), linestyle="--", linewidth=0.8)
    if window is not None:
        ax.axvspan(window.t0, window.t1, color="#888888", alpha=0.12)
    ax.set_xlabel("t (s)")
    ax.set_ylabel(metric)
    ax.grid(True, alpha=0.25)
    ax.legend(fontsize=8)
    ax.set_title(f"{metric}: winner {chosen.winner}", fontsize=10)
    png_path = out_dir / f"{stem}.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def threshold_files(report: ThresholdReport, out_dir: str | Path,
                    stem: str = "threshold") -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["session", "metric", "threshold", "fraction_meeting"])
        for name, frac in zip(report.sessions, report.fractions):
            w.writerow([name, report.metric, repr(report.threshold), repr(frac)])

    fig = _figure(max(4.0, 1.2 * len(report.sessions) + 2.0), 4.0)
    ax = fig.subplots()
    xs = range(len(report.sessions))
    ax.bar(xs, report.fractions, color=[_color(i) for i in xs], width=0.6)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(report.sessions, rotation=20, ha="right", fontsize=8)
    ax.set_ylim(0.0, 1.0)
    ax.set_ylabel("fraction meeting")
    ax.set_title(f"{report.metric} vs threshold {report.threshold:g}", fontsize=10)
    ax.grid(True, axis="y", alpha=0.25)
    png_path = out_dir / f"{stem}.png"
    _save(fig, png_path)
    return [csv_path, png_path]


def multiples_files(sessions: Sequence[Session], metric: str,
                    target_points: int, out_dir: str | Path,
                    stem: str = "multiples",
                    threshold: float | None = None) -> list[Path]:
    """Small-multiples grid, one tile per session, shared y scale."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    series = small_multiples(sessions, metric, target_points)

    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["session", "t", "value"])
        for entry in series:
            for t, v in zip(entry["t"], entry["values"]):
                w.writerow([entry["name"], repr(t), repr(v)])

    n = len(series)
    cols = max(1, min(3, n))
    rows = (n + cols - 1) // cols
    fig = _figure(3.2 * cols + 1.0, 2.4 * rows + 0.8)
    axes = fig.subplots(rows, cols, squeeze=False, sharey=True)
    lo = min((min(e["values"]) for e in series if e["values"]), default=0.0)
    hi = max((max(e["values"]) for e in series if e["values"]), default=1.0)
    if threshold is not None:
        lo, hi = min(lo, threshold), max(hi, threshold)
    for i, entry in enumerate(series):
        ax = axes[i // cols][i % cols]
        ax.plot(entry["t"], entry["values"], color=_color(i), linewidth=0.9)
        if threshold is not None:
            ax.axhline(threshold, color="#b83232", linestyle="--", linewidth=0.8)
        pad = 0.05 * (hi - lo) if hi > lo else 1.0
        ax.set_ylim(lo - pad, hi + pad)
        ax.set_title(entry["name"], fontsize=8)
        ax.tick_params(labelsize=7)
        ax.grid(True, alpha=0.25)
    for j in range(n, rows * cols):
        axes[j // cols][j % cols].set_visible(False)
    fig.suptitle(metric, fontsize=10)
    png_path = out_dir / f"{stem}.png"
    _save(fig, png_path)
    return [csv_path, png_path]
