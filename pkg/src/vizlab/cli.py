"""Command-line entry point.

Subcommands: ingest, transcode, bench, analyze, serve, view. Reports go
to stdout as JSON; analyze additionally renders CSV tables and PNG
figures when --out-dir is given. Exit codes: 0 success, 2 invalid
arguments or malformed inputs, 1 runtime failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import report
from .analytics import (TimeWindow, compare_all, small_multiples, summarize,
                        threshold_report)
from .catalog import METRIC_KINDS, RunProfile, validate_profile
from .datasets import DEFAULT_DATA_DIR, list_datasets, resolve_dataset
from .errors import (FormatError, InvalidArgumentError, ParseError,
                     UnsupportedModeError, VizlabError)
from .fields import parse_dat, transcode, write_manifest, write_texture
from .server import serve
from .telemetry import (PlatformProbe, SyntheticProbe, export_session,
                        load_session)
from .templates import parse_timestep, run_template
from .viewer import run_interactive, run_playback

_VALIDATION_ERRORS = (InvalidArgumentError, ParseError, FormatError)


def _data_dir(args) -> Path:
    if args.data_dir:
        return Path(args.data_dir)
    env = os.environ.get("VIZLAB_DATA_DIR")
    return Path(env) if env else DEFAULT_DATA_DIR


def _load_profile(spec: str | None) -> RunProfile:
    if not spec:
        return validate_profile({"name": "empty", "enabled": []})
    path = Path(spec)
    if not path.exists():
        raise InvalidArgumentError(f"no profile file at {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"profile {path}: not valid JSON ({exc})") from None
    return validate_profile(doc)


def _parse_window(text: str | None) -> TimeWindow | None:
    if text is None:
        return None
    try:
        t0, t1 = text.split(":", 1)
        return TimeWindow(float(t0), float(t1))
    except ValueError:
        raise InvalidArgumentError(
            f"bad window {text!r}; use t0:t1 (e.g. 5:25)") from None


def _parse_fb(text: str) -> tuple[int, int] | None:
    if text.lower() == "none":
        return None
    try:
        w, h = text.lower().split("x", 1)
        return (int(w), int(h))
    except ValueError:
        raise InvalidArgumentError(
            f"bad framebuffer size {text!r}; use WxH or none") from None


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------


def cmd_ingest(args) -> int:
    scene = resolve_dataset(args.dataset, _data_dir(args))
    kinds = scene.kinds
    doc = {
        "dataset": scene.dataset_id,
        "objects": len(scene),
        "atoms": int((kinds == 0).sum()),
        "bonds": int((kinds == 1).sum()),
        "emitters": int((kinds == 2).sum()),
        "bounds_min": [float(v) for v in scene.bounds.min],
        "bounds_max": [float(v) for v in scene.bounds.max],
        "bounds_radius": scene.bounds.radius,
        "streaming_cells": len(scene.cell_map),
    }
    _emit(doc, args.out)
    return 0


def cmd_datasets(args) -> int:
    _emit({"datasets": list_datasets(_data_dir(args))}, args.out)
    return 0


def cmd_transcode(args) -> int:
    times = ([float(t) for t in args.times.split(",")] if args.times
             else [float(i) for i in range(len(args.inputs))])
    if len(times) != len(args.inputs):
        raise InvalidArgumentError(
            f"{len(args.inputs)} input files but {len(times)} times")
    field_dir = _data_dir(args) / "fields"
    slice_dir = field_dir / args.name
    slice_dir.mkdir(parents=True, exist_ok=True)

    rel_files = []
    for i, in_path in enumerate(args.inputs):
        grid = parse_dat(Path(in_path).read_text(encoding="utf-8"))
        texture = transcode(grid)
        rel = f"{args.name}/{i:04d}.exr"
        write_texture(field_dir / rel, texture)
        rel_files.append(rel)

    manifest = field_dir / f"{args.name}.json"
    write_manifest(manifest, rel_files, times, extra={"extent": args.extent})
    _emit({"manifest": str(manifest), "slices": rel_files, "times": times},
          args.out)
    return 0


def cmd_bench(args) -> int:
    scene = resolve_dataset(args.dataset, _data_dir(args))
    profile = _load_profile(args.profile)
    probe = PlatformProbe() if args.probe == "platform" else SyntheticProbe()
    session = run_template(scene, profile, args.template,
                           timestep=parse_timestep(args.timestep), probe=probe,
                           name=args.name, description=args.description,
                           dataset=args.dataset, fb_size=_parse_fb(args.fb))
    path = export_session(session, args.out_dir)
    summary = summarize(session)
    _emit({"session_file": str(path), "samples": len(session.samples),
           "template": session.template,
           "mean_gpu_frame_time_ms": summary.metrics["gpu_frame_time_ms"].mean,
           "one_pct_low_fps": summary.one_pct_low_fps}, None)
    return 0


def cmd_analyze(args) -> int:
    sessions = [load_session(p) for p in args.sessions]
    window = _parse_window(args.window)
    out_dir = args.out_dir

    if args.mode == "summary":
        doc = {"summaries": [summarize(s, window).to_json() for s in sessions]}
        files = report.summary_files(sessions, out_dir, window=window) \
            if out_dir else []
    elif args.mode == "compare":
        if len(sessions) != 2:
            raise InvalidArgumentError("compare needs exactly two session files")
        doc = {"a": sessions[0].name, "b": sessions[1].name,
               "verdicts": [v.to_json()
                            for v in compare_all(sessions[0], sessions[1], window)]}
        files = report.compare_files(sessions[0], sessions[1], out_dir,
                                     metric=args.metric, window=window) \
            if out_dir else []
    elif args.mode == "threshold":
        if args.value is None:
            raise InvalidArgumentError("threshold mode needs --value")
        rep = threshold_report(sessions, args.metric, args.value)
        doc = rep.to_json()
        files = report.threshold_files(rep, out_dir) if out_dir else []
    else:  # multiples
        doc = {"metric": args.metric, "target_points": args.points,
               "series": small_multiples(sessions, args.metric, args.points)}
        files = report.multiples_files(sessions, args.metric, args.points,
                                       out_dir, threshold=args.value) \
            if out_dir else []

    if files:
        doc = dict(doc)
        doc["files"] = [str(p) for p in files]
    _emit(doc, args.out)
    return 0


def cmd_serve(args) -> int:
    serve(state_dir=args.state_dir, data_dir=_data_dir(args), port=args.port,
          host=args.host, assets_dir=args.assets)
    return 0


def cmd_view(args) -> int:
    profile = _load_profile(args.profile)
    if args.playback:
        path = run_playback(args.dataset, profile, args.playback,
                            out_dir=args.out_dir, data_dir=_data_dir(args),
                            session_name=args.name)
    else:
        path = run_interactive(args.dataset, profile, out_dir=args.out_dir,
                               data_dir=_data_dir(args), session_name=args.name)
    _emit({"session_file": str(path)}, None)
    return 0


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vizlab",
        description="rendering-optimization lab for scientific datasets")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--data-dir", default=None,
                       help="cache directory (default $VIZLAB_DATA_DIR or ~/.vizlab)")
        p.add_argument("--out", default=None, help="write the JSON report here "
                       "instead of stdout")

    p = sub.add_parser("ingest", help="resolve a dataset and print its shape")
    p.add_argument("dataset")
    common(p)
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("datasets", help="list resolvable datasets")
    common(p)
    p.set_defaults(fn=cmd_datasets)

    p = sub.add_parser("transcode", help="convert .dat field slices to "
                       "textures plus a manifest")
    p.add_argument("inputs", nargs="+", help=".dat files, one per time slice")
    p.add_argument("--name", required=True, help="field name (manifest stem)")
    p.add_argument("--times", default=None,
                   help="comma-separated slice times (default 0,1,2,...)")
    p.add_argument("--extent", type=float, default=100.0,
                   help="world-space size of the unit domain")
    common(p)
    p.set_defaults(fn=cmd_transcode)

    p = sub.add_parser("bench", help="run a benchmark template headless")
    p.add_argument("--dataset", required=True)
    p.add_argument("--template", required=True, help="t1 | t2 | t3")
    p.add_argument("--profile", default=None, help="profile JSON file "
                   "(omit for the empty profile)")
    p.add_argument("--timestep", default="1/60", help="seconds or a/b fraction")
    p.add_argument("--out-dir", default="sessions")
    p.add_argument("--name", default="bench-run")
    p.add_argument("--description", default="")
    p.add_argument("--fb", default="160x120",
                   help="framebuffer WxH, or 'none' to skip rasterization")
    p.add_argument("--probe", choices=("synthetic", "platform"),
                   default="synthetic")
    common(p)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("analyze", help="reports over exported session files")
    p.add_argument("mode", choices=("summary", "compare", "threshold",
                                    "multiples"))
    p.add_argument("sessions", nargs="+", help="session JSON files")
    p.add_argument("--metric", choices=METRIC_KINDS, default="fps")
    p.add_argument("--value", type=float, default=None,
                   help="threshold value (threshold mode; optional line in "
                   "multiples figures)")
    p.add_argument("--points", type=int, default=100,
                   help="target points per small-multiples series")
    p.add_argument("--window", default=None, help="time window t0:t1")
    p.add_argument("--out-dir", default=None,
                   help="also render CSV + PNG report files here")
    common(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("serve", help="HTTP service for the dashboard")
    p.add_argument("--state-dir", default="vizlab-state")
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--assets", default=None, help="static dashboard directory")
    common(p)
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("view", help="interactive viewer (or scripted playback)")
    p.add_argument("--dataset", required=True)
    p.add_argument("--profile", default=None)
    p.add_argument("--playback", default=None, help="input script JSON; "
                   "replays headless and saves the session")
    p.add_argument("--out-dir", default="sessions")
    p.add_argument("--name", default="viewer-session")
    common(p)
    p.set_defaults(fn=cmd_view)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedModeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VizlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
