"""Small vector/AABB helpers used throughout the package.

Vectors are plain float64 numpy arrays of shape (3,). World space is
right-handed; cameras look down their `forward` axis and depth is the
view-space distance along it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError


def vec3(x: float, y: float, z: float) -> np.ndarray:
    return np.array([x, y, z], dtype=np.float64)


def normalize(v: np.ndarray) -> np.ndarray:
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise InvalidArgumentError("cannot normalize a zero vector")
    return v / n


@dataclass(frozen=True)
class AABB:
    """Axis-aligned bounding box, inclusive on both corners."""

    min: np.ndarray
    max: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "min", np.asarray(self.min, dtype=np.float64))
        object.__setattr__(self, "max", np.asarray(self.max, dtype=np.float64))
        if self.min.shape != (3,) or self.max.shape != (3,):
            raise InvalidArgumentError("AABB corners must be 3-vectors")
        if np.any(self.max < self.min):
            raise InvalidArgumentError("AABB max must be >= min componentwise")

    @property
    def centroid(self) -> np.ndarray:
        return (self.min + self.max) / 2.0

    @property
    def half_extent(self) -> np.ndarray:
        return (self.max - self.min) / 2.0

    @property
    def radius(self) -> float:
        """Radius of the bounding sphere (half the diagonal)."""
        return float(np.linalg.norm(self.half_extent))

    def contains(self, p: np.ndarray, strict: bool = False) -> bool:
        p = np.asarray(p, dtype=np.float64)
        if strict:
            return bool(np.all(p > self.min) and np.all(p < self.max))
        return bool(np.all(p >= self.min) and np.all(p <= self.max))

    @staticmethod
    def of_points(points: np.ndarray) -> "AABB":
        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        if len(points) == 0:
            raise InvalidArgumentError("cannot bound zero points")
        return AABB(points.min(axis=0), points.max(axis=0))


def orthonormal_up(forward: np.ndarray, up_hint: np.ndarray) -> np.ndarray:
    """Project `up_hint` onto the plane orthogonal to `forward`.

    Falls back to +Y (then +X) when the hint is parallel to forward.
    """
    forward = normalize(np.asarray(forward, dtype=np.float64))
    for hint in (np.asarray(up_hint, dtype=np.float64), vec3(0, 1, 0), vec3(1, 0, 0)):
        up = hint - forward * float(np.dot(hint, forward))
        n = float(np.linalg.norm(up))
        if n > 1e-12:
            return up / n
    raise InvalidArgumentError("no orthogonal up direction found")


def ray_aabb_exit(origin: np.ndarray, direction: np.ndarray, box: AABB) -> float:
    """Distance along `direction` at which a ray starting inside `box` exits it."""
    origin = np.asarray(origin, dtype=np.float64)
    direction = np.asarray(direction, dtype=np.float64)
    t_exit = np.inf
    for axis in range(3):
        d = direction[axis]
        if abs(d) < 1e-300:
            continue
        t1 = (box.min[axis] - origin[axis]) / d
        t2 = (box.max[axis] - origin[axis]) / d
        t_exit = min(t_exit, max(t1, t2))
    if not np.isfinite(t_exit) or t_exit <= 0.0:
        raise InvalidArgumentError("ray does not exit the box forward of the origin")
    return float(t_exit)
