"""Particle advection through time-varying 2D flow fields.

Every random draw comes from a counter-based generator keyed by
(system seed, particle index) with the spawn step as the counter, so a
respawn produces the same position no matter how many other particles
respawn alongside it or in what order batches are processed.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidArgumentError
from .fields import FieldTextureArray, sample_channels

_INTEGRATORS = ("rk2", "euler")


class EmitterRegion:
    """Axis-aligned spawn rectangle in domain coordinates."""

    def __init__(self, lo: tuple[float, float], hi: tuple[float, float]):
        self.lo = np.asarray(lo, dtype=np.float64)
        self.hi = np.asarray(hi, dtype=np.float64)
        if self.lo.shape != (2,) or self.hi.shape != (2,):
            raise InvalidArgumentError("emitter corners must be 2D points")
        if not np.all(self.hi >= self.lo):
            raise InvalidArgumentError("emitter hi must be >= lo per axis")


class ParticleSystem:
    """Fixed-count particle pool advected by a field's Ux/Uy channels.

    Positions live in [0, extent]^2; field lookups normalize by extent.
    With several emitter regions, particle i belongs to region i mod R
    for its whole life. Particles that leave the domain or exceed
    max_age respawn inside their own region on the step where the
    condition is detected, keeping the pool size constant.
    """

    def __init__(self, array: FieldTextureArray, *, extent: float, count: int,
                 seed: int = 0, dt: float = 1.0 / 240.0,
                 emitters: list[EmitterRegion] | None = None,
                 max_age: float = math.inf, integrator: str = "rk2"):
        if count < 0:
            raise InvalidArgumentError("particle count must be >= 0")
        if extent <= 0.0:
            raise InvalidArgumentError("domain extent must be positive")
        if dt <= 0.0:
            raise InvalidArgumentError("dt must be positive")
        if integrator not in _INTEGRATORS:
            raise InvalidArgumentError(
                f"integrator must be one of {_INTEGRATORS}, got {integrator!r}")
        if max_age <= 0.0:
            raise InvalidArgumentError("max_age must be positive")
        self.array = array
        self.extent = float(extent)
        self.count = int(count)
        self.seed = int(seed)
        self.dt = float(dt)
        self.emitters = emitters or [EmitterRegion((0.0, 0.0), (extent, extent))]
        self.max_age = float(max_age)
        self.integrator = integrator
        self.time = 0.0
        self.step_index = 0
        self.positions = np.empty((count, 2), dtype=np.float64)
        self.ages = np.zeros(count, dtype=np.float64)
        if count:
            self._spawn(np.arange(count))

    def _spawn(self, idx: np.ndarray) -> None:
        n_regions = len(self.emitters)
        for i in idx:
            region = self.emitters[int(i) % n_regions]
            bitgen = np.random.Philox(key=[self.seed, int(i)],
                                      counter=[self.step_index, 0, 0, 0])
            u = np.random.Generator(bitgen).random(2)
            self.positions[i] = region.lo + u * (region.hi - region.lo)
        self.ages[idx] = 0.0

    def _velocity(self, positions: np.ndarray, t: float) -> np.ndarray:
        vals = sample_channels(self.array, positions / self.extent, t)
        return vals[:, :2]

    def step(self, dt: float | None = None) -> None:
        dt = self.dt if dt is None else float(dt)
        if dt <= 0.0:
            raise InvalidArgumentError("dt must be positive")
        if self.count == 0:
            self.time += dt
            self.step_index += 1
            return
        p = self.positions
        t0 = self.time
        if self.integrator == "rk2":
            v1 = self._velocity(p, t0)
            v2 = self._velocity(p + v1 * dt, t0 + dt)
            p_new = p + dt * 0.5 * (v1 + v2)
        else:
            p_new = p + dt * self._velocity(p, t0)
        self.positions = p_new
        self.ages += dt
        self.time = t0 + dt
        self.step_index += 1

        outside = ((p_new < 0.0) | (p_new > self.extent)).any(axis=1)
        expired = self.ages > self.max_age
        dead = np.nonzero(outside | expired)[0]
        if len(dead):
            self._spawn(dead)

    def advance(self, steps: int, dt: float | None = None) -> None:
        for _ in range(steps):
            self.step(dt)
