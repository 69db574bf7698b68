"""HTTP service exposing the catalog, session store, analytics, and a
single-worker benchmark run queue.

All bodies are JSON. Analytics endpoints delegate to the library
functions and serialize their to_json() output verbatim, so a response
is byte-identical to the corresponding direct call. Session files live
under <state_dir>/sessions and are written atomically, making concurrent
reads safe. Static dashboard assets, when configured, are served at /.
"""

from __future__ import annotations

import json
import logging
import mimetypes
import os
import threading
import uuid
from collections import deque
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any
from urllib.parse import parse_qs, urlparse

from .analytics import (TimeWindow, compare, compare_all, small_multiples,
                        threshold_report)
from .catalog import catalog_json, validate_profile
from .datasets import list_datasets, resolve_dataset
from .errors import VizlabError
from .telemetry import SyntheticProbe, export_session, load_session
from .templates import normalize_template, parse_timestep, run_template

log = logging.getLogger(__name__)

RUN_STATUSES = ("queued", "running", "done", "failed")


@dataclass
class RunState:
    run_id: str
    dataset: str
    template: str
    profile: Any
    name: str
    description: str = ""
    timestep: float = 1.0 / 60.0
    status: str = "queued"
    session: str | None = None
    error: str | None = None

    def to_json(self) -> dict[str, Any]:
        doc = {"run_id": self.run_id, "status": self.status,
               "dataset": self.dataset, "template": self.template,
               "name": self.name}
        if self.session is not None:
            doc["session"] = self.session
        if self.error is not None:
            doc["error"] = self.error
        return doc


class AppState:
    """Shared mutable state: the run queue and its single worker."""

    def __init__(self, state_dir: Path, data_dir: Path,
                 assets_dir: Path | None, queue_limit: int = 8,
                 fb_size: tuple[int, int] | None = (160, 120)):
        self.state_dir = state_dir
        self.sessions_dir = state_dir / "sessions"
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self.data_dir = data_dir
        self.assets_dir = assets_dir
        self.queue_limit = queue_limit
        self.fb_size = fb_size
        self.lock = threading.Lock()
        self.runs: dict[str, RunState] = {}
        self.queue: deque[str] = deque()
        self.wakeup = threading.Event()
        self.worker = threading.Thread(target=self._work, daemon=True,
                                       name="bench-worker")
        self.worker.start()

    # -- session store ------------------------------------------------

    def session_path(self, name: str) -> Path:
        path = (self.sessions_dir / f"{name}.json").resolve()
        if path.parent != self.sessions_dir.resolve():
            raise VizlabError(f"bad session id {name!r}")
        return path

    def list_sessions(self) -> list[dict[str, Any]]:
        out = []
        for path in sorted(self.sessions_dir.glob("*.json")):
            try:
                s = load_session(path)
            except VizlabError as exc:
                log.warning("skipping unreadable session %s: %s", path.name, exc)
                continue
            out.append({
                "name": s.name, "description": s.description,
                "dataset": s.dataset, "template": s.template,
                "optimizations": list(s.optimizations),
                "started_at": s.started_at,
                "sample_count": len(s.samples),
                "duration": (s.samples[-1].t - s.samples[0].t) if s.samples else 0.0,
            })
        return out

    # -- run queue ----------------------------------------------------

    def submit(self, run: RunState) -> None:
        with self.lock:
            if len(self.queue) >= self.queue_limit:
                raise QueueFullError(f"run queue is full ({self.queue_limit})")
            self.runs[run.run_id] = run
            self.queue.append(run.run_id)
        self.wakeup.set()

    def _next_run(self) -> RunState | None:
        with self.lock:
            if not self.queue:
                return None
            run = self.runs[self.queue.popleft()]
            run.status = "running"
            return run

    def _work(self) -> None:
        while True:
            run = self._next_run()
            if run is None:
                self.wakeup.wait()
                self.wakeup.clear()
                continue
            try:
                scene = resolve_dataset(run.dataset, self.data_dir)
                session = run_template(scene, run.profile, run.template,
                                       timestep=run.timestep,
                                       probe=SyntheticProbe(), name=run.name,
                                       description=run.description,
                                       dataset=run.dataset,
                                       fb_size=self.fb_size)
                tmp_dir = self.state_dir / "tmp"
                written = export_session(session, tmp_dir)
                os.replace(written, self.session_path(session.name))
                with self.lock:
                    run.session = session.name
                    run.status = "done"
            except Exception as exc:  # failed runs must not kill the worker
                log.exception("run %s failed", run.run_id)
                with self.lock:
                    run.error = str(exc)
                    run.status = "failed"


class QueueFullError(VizlabError):
    pass


class HttpError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message
        super().__init__(message)


def _float_param(params: dict, key: str) -> float | None:
    if key not in params:
        return None
    try:
        return float(params[key][0])
    except ValueError:
        raise HttpError(400, f"query parameter {key} must be a number") from None


def _window_from(params: dict) -> TimeWindow | None:
    t0 = _float_param(params, "t0")
    t1 = _float_param(params, "t1")
    if (t0 is None) != (t1 is None):
        raise HttpError(400, "t0 and t1 must be given together")
    if t0 is None:
        return None
    try:
        return TimeWindow(t0, t1)
    except VizlabError as exc:
        raise HttpError(400, str(exc)) from None


class Handler(BaseHTTPRequestHandler):
    server_version = "vizlab"
    protocol_version = "HTTP/1.1"

    @property
    def app(self) -> AppState:
        return self.server.app  # type: ignore[attr-defined]

    def log_message(self, fmt: str, *args) -> None:
        log.debug("%s " + fmt, self.address_string(), *args)

    # -- plumbing -----------------------------------------------------

    def _send(self, status: int, payload: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def _json(self, status: int, doc: Any) -> None:
        self._send(status, (json.dumps(doc, indent=1) + "\n").encode("utf-8"),
                   "application/json")

    def _error(self, status: int, message: str) -> None:
        self._json(status, {"error": message})

    def _read_body(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        if length <= 0 or length > 1 << 20:
            raise HttpError(400, "request body required (at most 1 MiB)")
        try:
            return json.loads(self.rfile.read(length).decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise HttpError(400, f"body is not valid JSON: {exc}") from None

    def _load_session_or_404(self, name: str):
        path = self.app.session_path(name)
        if not path.exists():
            raise HttpError(404, f"no session named {name!r}")
        return load_session(path)

    # -- routes -------------------------------------------------------

    def do_GET(self) -> None:  # noqa: N802 (stdlib naming)
        try:
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            params = parse_qs(url.query)
            self._route_get(parts, params)
        except HttpError as exc:
            self._error(exc.status, exc.message)
        except VizlabError as exc:
            self._error(400, str(exc))
        except Exception as exc:  # pragma: no cover - defensive
            log.exception("GET %s failed", self.path)
            self._error(500, f"internal error: {exc}")

    def do_POST(self) -> None:  # noqa: N802
        try:
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            if parts == ["runs"]:
                self._post_run(self._read_body())
            else:
                raise HttpError(404, f"no POST route {url.path}")
        except HttpError as exc:
            self._error(exc.status, exc.message)
        except VizlabError as exc:
            self._error(400, str(exc))
        except Exception as exc:  # pragma: no cover - defensive
            log.exception("POST %s failed", self.path)
            self._error(500, f"internal error: {exc}")

    def _route_get(self, parts: list[str], params: dict) -> None:
        if parts == ["catalog"]:
            self._json(200, catalog_json())
        elif parts == ["datasets"]:
            self._json(200, {"datasets": list_datasets(self.app.data_dir)})
        elif parts == ["sessions"]:
            self._json(200, {"sessions": self.app.list_sessions()})
        elif len(parts) == 2 and parts[0] == "sessions":
            self._json(200, self._load_session_or_404(parts[1]).to_json())
        elif len(parts) == 2 and parts[0] == "runs":
            with self.app.lock:
                run = self.app.runs.get(parts[1])
                doc = run.to_json() if run else None
            if doc is None:
                raise HttpError(404, f"no run {parts[1]!r}")
            self._json(200, doc)
        elif parts[:1] == ["analytics"]:
            self._analytics(parts[1:], params)
        else:
            self._static(parts)

    def _analytics(self, parts: list[str], params: dict) -> None:
        def required(key: str) -> str:
            if key not in params:
                raise HttpError(400, f"missing query parameter {key!r}")
            return params[key][0]

        if parts == ["compare"]:
            a = self._load_session_or_404(required("a"))
            b = self._load_session_or_404(required("b"))
            window = _window_from(params)
            if "metric" in params:
                verdict = compare(a, b, params["metric"][0], window)
                self._json(200, verdict.to_json())
            else:
                self._json(200, {"a": a.name, "b": b.name,
                                 "verdicts": [v.to_json()
                                              for v in compare_all(a, b, window)]})
        elif parts == ["threshold"]:
            ids = [s for s in required("ids").split(",") if s]
            sessions = [self._load_session_or_404(i) for i in ids]
            value = _float_param(params, "value")
            if value is None:
                raise HttpError(400, "missing query parameter 'value'")
            report = threshold_report(sessions, required("metric"), value)
            self._json(200, report.to_json())
        elif parts == ["multiples"]:
            ids = [s for s in required("ids").split(",") if s]
            sessions = [self._load_session_or_404(i) for i in ids]
            points = _float_param(params, "points")
            points = 100 if points is None else int(points)
            metric = required("metric")
            series = small_multiples(sessions, metric, points)
            self._json(200, {"metric": metric, "target_points": points,
                             "series": series})
        else:
            raise HttpError(404, f"no analytics route {'/'.join(parts)}")

    def _post_run(self, body: Any) -> None:
        if not isinstance(body, dict):
            raise HttpError(400, "body must be a JSON object")
        try:
            dataset = body["dataset"]
            template = normalize_template(body["template"])
            profile = validate_profile(body.get("profile",
                                                {"name": "adhoc", "enabled": []}))
            name = body.get("name") or f"run-{uuid.uuid4().hex[:8]}"
            timestep = parse_timestep(body.get("timestep", 1.0 / 60.0))
        except KeyError as exc:
            raise HttpError(400, f"missing field {exc.args[0]!r}") from None
        except VizlabError as exc:
            raise HttpError(400, str(exc)) from None
        if not isinstance(dataset, str) or not dataset:
            raise HttpError(400, "dataset must be a non-empty string")
        if self.app.session_path(str(name)).exists():
            raise HttpError(400, f"session name {name!r} already exists")

        run = RunState(run_id=f"r-{uuid.uuid4().hex[:12]}", dataset=dataset,
                       template=template, profile=profile, name=str(name),
                       description=str(body.get("description", "")),
                       timestep=timestep)
        try:
            self.app.submit(run)
        except QueueFullError as exc:
            raise HttpError(409, str(exc)) from None
        self._json(202, run.to_json())

    def _static(self, parts: list[str]) -> None:
        root = self.app.assets_dir
        if root is None:
            if not parts:
                self._send(200, _PLACEHOLDER_INDEX.encode("utf-8"),
                           "text/html; charset=utf-8")
                return
            raise HttpError(404, f"no route /{'/'.join(parts)}")
        target = (root / Path(*parts)) if parts else (root / "index.html")
        if target.is_dir():
            target = target / "index.html"
        resolved = target.resolve()
        if not str(resolved).startswith(str(root.resolve()) + os.sep) \
                and resolved != root.resolve():
            raise HttpError(404, "not found")
        if not resolved.is_file():
            raise HttpError(404, f"no route /{'/'.join(parts)}")
        ctype = mimetypes.guess_type(str(resolved))[0] or "application/octet-stream"
        self._send(200, resolved.read_bytes(), ctype)


_PLACEHOLDER_INDEX = """<!doctype html>
<title>vizlab service</title>
<h1>vizlab service</h1>
<p>No dashboard assets configured. API routes: /catalog /datasets /sessions
/runs /analytics/compare /analytics/threshold /analytics/multiples</p>
"""


def make_server(state_dir: str | Path, data_dir: str | Path,
                port: int = 8321, host: str = "127.0.0.1",
                assets_dir: str | Path | None = None,
                queue_limit: int = 8) -> ThreadingHTTPServer:
    state_dir = Path(state_dir)
    app = AppState(state_dir=state_dir, data_dir=Path(data_dir),
                   assets_dir=Path(assets_dir) if assets_dir else None,
                   queue_limit=queue_limit)
    httpd = ThreadingHTTPServer((host, port), Handler)
    httpd.app = app  # type: ignore[attr-defined]
    return httpd


def serve(state_dir: str | Path, data_dir: str | Path, port: int = 8321,
          host: str = "127.0.0.1", assets_dir: str | Path | None = None) -> None:
    httpd = make_server(state_dir, data_dir, port=port, host=host,
                        assets_dir=assets_dir)
    log.info("serving on http://%s:%d", host, port)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
