"""Interactive free-flight viewer and its headless playback twin.

One frame core serves both modes. Keys: W/A/S/D translate in the
horizontal plane, pointer drag rotates, E spawns the dataset, P toggles
telemetry recording (with a live fps overlay in the window), Q stops and
saves the session. A playback script drives the same core without any
display: a JSON array of frame records {"dt": seconds, "keys": ["w",...],
"drag": [dx, dy]}, sampled once per record while recording is on; the end
of the script behaves like Q.
"""

from __future__ import annotations

import json
import math
import time
from pathlib import Path

import numpy as np

from .catalog import RunProfile, validate_profile
from .datasets import resolve_dataset
from .errors import InvalidArgumentError, UnsupportedModeError
from .geom import vec3
from .optimizer import run_pipeline
from .render import FrameBuffer, render_frame
from .scene import Camera
from .telemetry import (PlatformProbe, Probe, Recorder, Session,
                        SyntheticProbe, export_session)

_KEYS = frozenset("wasdepq")
_NOMINAL_INTERVAL_MS = 1000.0 / 60.0


class Viewer:
    """Frame-by-frame state machine behind both viewer modes."""

    def __init__(self, dataset: str, profile: RunProfile | dict,
                 out_dir: str | Path, data_dir: str | Path | None = None,
                 probe: Probe | None = None, fb_size: tuple[int, int] = (320, 240),
                 session_name: str = "viewer-session"):
        self.dataset_spec = dataset
        self.profile = validate_profile(profile)
        self.out_dir = Path(out_dir)
        self.data_dir = data_dir
        self.probe = probe
        self.fb_size = fb_size
        self.session_name = session_name

        self.scene = None
        self.position = vec3(0.0, -10.0, 0.0)
        self.yaw = math.pi / 2.0  # looking +y
        self.pitch = 0.0
        self.move_speed = 5.0
        self.drag_sensitivity = 0.005

        self.recording = False
        self.session: Session | None = None
        self.recorder: Recorder | None = None
        self.finished = False
        self.saved_path: Path | None = None
        self.last_frame: FrameBuffer | None = None
        self.last_fps = 0.0

    # -- camera ---------------------------------------------------------

    def _forward(self) -> np.ndarray:
        cp = math.cos(self.pitch)
        return vec3(cp * math.cos(self.yaw), cp * math.sin(self.yaw),
                    math.sin(self.pitch))

    def camera(self) -> Camera:
        far = 10.0 * max(self.scene.bounds.radius, 1.0) if self.scene else 1000.0
        near = max(far * 1e-4, 1e-6)
        return Camera.look_at(self.position, self.position + self._forward(),
                              vfov=math.pi / 3.0, aspect=4.0 / 3.0,
                              near=near, far=far)

    def _spawn(self) -> None:
        if self.scene is not None:
            return
        self.scene = resolve_dataset(self.dataset_spec, self.data_dir)
        bounds = self.scene.bounds
        radius = max(bounds.radius, 1e-6)
        eye = bounds.centroid + vec3(2.5 * radius * math.cos(math.radians(15)),
                                     0.0,
                                     2.5 * radius * math.sin(math.radians(15)))
        self.position = eye
        look = bounds.centroid - eye
        self.yaw = math.atan2(look[1], look[0])
        self.pitch = math.asin(look[2] / np.linalg.norm(look))
        self.move_speed = radius * 0.5  # cross the dataset in a few seconds

    def _toggle_recording(self) -> None:
        if self.session is None:
            self.session = Session(name=self.session_name,
                                   dataset=self.dataset_spec,
                                   optimizations=self.profile.enabled,
                                   template=None,
                                   sample_interval_ms=_NOMINAL_INTERVAL_MS)
            probe = self.probe if self.probe is not None else PlatformProbe()
            self.recorder = Recorder(self.session, probe)
        self.recording = not self.recording

    def finish(self) -> Path:
        """Stop and save, creating an empty session if none was started."""
        if self.saved_path is not None:
            return self.saved_path
        self.finished = True
        self.recording = False
        if self.session is None:
            self.session = Session(name=self.session_name,
                                   dataset=self.dataset_spec,
                                   optimizations=self.profile.enabled,
                                   template=None,
                                   sample_interval_ms=_NOMINAL_INTERVAL_MS)
        self.saved_path = export_session(self.session, self.out_dir)
        return self.saved_path

    # -- frame loop -------------------------------------------------------

    def frame(self, dt: float, keys: tuple[str, ...] = (),
              drag: tuple[float, float] = (0.0, 0.0)) -> bool:
        """Advance one frame. Returns False once the viewer has stopped."""
        if self.finished:
            return False
        if dt <= 0.0 or not math.isfinite(dt):
            raise InvalidArgumentError(f"frame dt must be positive, got {dt}")
        keys = tuple(k.lower() for k in keys)
        for k in keys:
            if k not in _KEYS:
                raise InvalidArgumentError(f"unknown key {k!r}")

        if "q" in keys:
            self.finish()
            return False
        if "e" in keys:
            self._spawn()
        if "p" in keys:
            self._toggle_recording()

        self.yaw -= drag[0] * self.drag_sensitivity
        self.pitch = float(np.clip(self.pitch - drag[1] * self.drag_sensitivity,
                                   -1.55, 1.55))
        fwd = self._forward()
        flat = vec3(fwd[0], fwd[1], 0.0)
        norm = np.linalg.norm(flat)
        flat = flat / norm if norm > 0 else vec3(1.0, 0.0, 0.0)
        left = vec3(-flat[1], flat[0], 0.0)
        step = self.move_speed * dt
        if "w" in keys:
            self.position = self.position + flat * step
        if "s" in keys:
            self.position = self.position - flat * step
        if "a" in keys:
            self.position = self.position + left * step
        if "d" in keys:
            self.position = self.position - left * step

        submitted = 0
        if self.scene is not None:
            camera = self.camera()
            visible, stats = run_pipeline(self.scene, camera, self.profile)
            self.last_frame, _ = render_frame(self.scene, visible, camera,
                                              self.fb_size)
            submitted = stats.submitted_primitives
        else:
            self.last_frame = FrameBuffer.blank(*self.fb_size, far=1.0)
        self.last_fps = 1.0 / dt
        if self.recording and self.recorder is not None:
            self.recorder.sample_frame(dt, submitted)
        return True


def load_playback_script(path: str | Path) -> list[dict]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"playback script: not valid JSON ({exc})")
    if not isinstance(doc, list):
        raise InvalidArgumentError("playback script must be a JSON array")
    frames = []
    for i, rec in enumerate(doc):
        if not isinstance(rec, dict) or "dt" not in rec:
            raise InvalidArgumentError(f"playback frame {i}: need an object "
                                       "with a 'dt' field")
        frames.append({"dt": float(rec["dt"]),
                       "keys": tuple(rec.get("keys", ())),
                       "drag": tuple(rec.get("drag", (0.0, 0.0)))})
    return frames


def run_playback(dataset: str, profile: RunProfile | dict, script: str | Path,
                 out_dir: str | Path, data_dir: str | Path | None = None,
                 probe: Probe | None = None,
                 session_name: str = "viewer-session") -> Path:
    """Drive the viewer with a recorded input script, then stop and save."""
    frames = load_playback_script(script)
    viewer = Viewer(dataset, profile, out_dir, data_dir,
                    probe=probe if probe is not None else SyntheticProbe(),
                    session_name=session_name)
    for rec in frames:
        if not viewer.frame(rec["dt"], rec["keys"], rec["drag"]):
            break
    return viewer.finish()


def run_interactive(dataset: str, profile: RunProfile | dict,
                    out_dir: str | Path, data_dir: str | Path | None = None,
                    session_name: str = "viewer-session") -> Path:
    """Windowed mode. Needs a usable display and tkinter; raises
    UnsupportedModeError otherwise (use playback for headless work)."""
    try:
        import tkinter
    except ImportError as exc:
        raise UnsupportedModeError(
            "interactive mode needs tkinter; use --playback headless") from exc
    try:
        root = tkinter.Tk()
    except tkinter.TclError as exc:
        raise UnsupportedModeError(
            f"no usable display ({exc}); use --playback headless") from None

    viewer = Viewer(dataset, profile, out_dir, data_dir,
                    session_name=session_name)
    w, h = viewer.fb_size
    root.title("vizlab viewer")
    canvas = tkinter.Canvas(root, width=w, height=h, highlightthickness=0)
    canvas.pack()
    held: set[str] = set()
    drag_state = {"x": None, "y": None, "dx": 0.0, "dy": 0.0}

    def on_press(ev):
        key = ev.keysym.lower()
        if key in _KEYS:
            held.add(key)

    def on_release(ev):
        held.discard(ev.keysym.lower())

    def on_motion(ev):
        if drag_state["x"] is not None:
            drag_state["dx"] += ev.x - drag_state["x"]
            drag_state["dy"] += ev.y - drag_state["y"]
        drag_state["x"], drag_state["y"] = ev.x, ev.y

    def on_button(ev):
        drag_state["x"], drag_state["y"] = ev.x, ev.y

    def on_button_up(_ev):
        drag_state["x"] = drag_state["y"] = None

    root.bind("<KeyPress>", on_press)
    root.bind("<KeyRelease>", on_release)
    canvas.bind("<ButtonPress-1>", on_button)
    canvas.bind("<B1-Motion>", on_motion)
    canvas.bind("<ButtonRelease-1>", on_button_up)

    state = {"last": time.perf_counter(), "photo": None}

    def tick():
        now = time.perf_counter()
        dt = max(now - state["last"], 1e-4)
        state["last"] = now
        drag = (drag_state["dx"], drag_state["dy"])
        drag_state["dx"] = drag_state["dy"] = 0.0
        alive = viewer.frame(dt, tuple(held), drag)
        held.discard("e")
        held.discard("p")
        if not alive:
            root.destroy()
            return
        fb = viewer.last_frame
        rgb = (np.clip(fb.color, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)
        ppm = b"P6\n%d %d\n255\n" % (fb.width, fb.height) + rgb.tobytes()
        state["photo"] = tkinter.PhotoImage(data=ppm)
        canvas.delete("all")
        canvas.create_image(0, 0, image=state["photo"], anchor="nw")
        if viewer.recording:
            canvas.create_text(8, 8, anchor="nw", fill="#7CFC00",
                               text=f"REC {viewer.last_fps:6.1f} fps")
        root.after(16, tick)

    root.after(16, tick)
    root.mainloop()
    return viewer.finish()
