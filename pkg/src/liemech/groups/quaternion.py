"""Unit quaternions ``(scalar, vector)`` as an alternative rotation parametrization."""

from dataclasses import dataclass, field

import numpy as np

from liemech.errors import NotUnitAxis


@dataclass(frozen=True, eq=False)
class Quaternion:
    scalar: float = 1.0
    vector: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "scalar", float(self.scalar))
        vec = np.array(self.vector, dtype=float).reshape(3)
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)

    def as_array(self):
        return np.array([self.scalar, *self.vector])

    def norm(self):
        return float(np.linalg.norm(self.as_array()))

    def __mul__(self, other):
        s1, v1 = self.scalar, self.vector
        s2, v2 = other.scalar, other.vector
        return Quaternion(s1 * s2 - v1 @ v2, s1 * v2 + s2 * v1 + np.cross(v1, v2))

    def conjugate(self):
        return Quaternion(self.scalar, -self.vector)

    def to_rotation(self):
        w, (x, y, z) = self.scalar, self.vector
        n = w * w + x * x + y * y + z * z
        s = 2.0 / n
        return np.array([
            [1 - s * (y * y + z * z), s * (x * y - w * z), s * (x * z + w * y)],
            [s * (x * y + w * z), 1 - s * (x * x + z * z), s * (y * z - w * x)],
            [s * (x * z - w * y), s * (y * z + w * x), 1 - s * (x * x + y * y)],
        ])


def quaternion_from_axis_angle(u, theta, tol=1e-9):
    """``q = (cos(theta/2), u sin(theta/2))`` for a unit axis ``u``."""
    u = np.asarray(u, dtype=float)
    n = np.linalg.norm(u)
    if abs(n - 1.0) > tol:
        raise NotUnitAxis(f"rotation axis must be a unit vector (|u| = {n:.12g})")
    half = 0.5 * theta
    return Quaternion(np.cos(half), u * np.sin(half))


def quaternion_from_rotation(r):
    """Unit quaternion with non-negative scalar part representing rotation matrix ``r``."""
    r = np.asarray(r, dtype=float)
    tr = np.trace(r)
    # branch on the largest of (w, x, y, z)^2 for conditioning
    diag = np.array([tr, r[0, 0], r[1, 1], r[2, 2]])
    k = int(np.argmax(diag))
    if k == 0:
        s = 2.0 * np.sqrt(1.0 + tr)
        q = np.array([0.25 * s, (r[2, 1] - r[1, 2]) / s, (r[0, 2] - r[2, 0]) / s, (r[1, 0] - r[0, 1]) / s])
    elif k == 1:
        s = 2.0 * np.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2])
        q = np.array([(r[2, 1] - r[1, 2]) / s, 0.25 * s, (r[0, 1] + r[1, 0]) / s, (r[0, 2] + r[2, 0]) / s])
    elif k == 2:
        s = 2.0 * np.sqrt(1.0 - r[0, 0] + r[1, 1] - r[2, 2])
        q = np.array([(r[0, 2] - r[2, 0]) / s, (r[0, 1] + r[1, 0]) / s, 0.25 * s, (r[1, 2] + r[2, 1]) / s])
    else:
        s = 2.0 * np.sqrt(1.0 - r[0, 0] - r[1, 1] + r[2, 2])
        q = np.array([(r[1, 0] - r[0, 1]) / s, (r[0, 2] + r[2, 0]) / s, (r[1, 2] + r[2, 1]) / s, 0.25 * s])
    q /= np.linalg.norm(q)
    if q[0] < 0:
        q = -q
    return Quaternion(q[0], q[1:])
