"""Rigid motions in 3D: twists, poses, exponential/logarithm and the se(3) bracket."""

from dataclasses import dataclass, field

import numpy as np

from liemech.errors import InvariantViolation
from liemech.groups.so3 import SMALL_ANGLE, Rotation3, exp_so3, hat3, is_rotation, log_so3


def _frozen_vec(x, n=3):
    a = np.array(x, dtype=float).reshape(n)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Twist:
    """se(3) element: angular part ``w`` and linear part ``v``."""

    w: np.ndarray = field(default_factory=lambda: np.zeros(3))
    v: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "w", _frozen_vec(self.w))
        object.__setattr__(self, "v", _frozen_vec(self.v))

    def as_matrix(self):
        m = np.zeros((4, 4))
        m[:3, :3] = hat3(self.w)
        m[:3, 3] = self.v
        return m

    def as_vector(self):
        return np.concatenate([self.w, self.v])

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=float)
        return cls(np.array([m[2, 1], m[0, 2], m[1, 0]]), m[:3, 3])

    def __add__(self, other):
        return Twist(self.w + other.w, self.v + other.v)

    def __sub__(self, other):
        return Twist(self.w - other.w, self.v - other.v)

    def __mul__(self, s):
        return Twist(s * self.w, s * self.v)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Twist(w={self.w.tolist()}, v={self.v.tolist()})"


@dataclass(frozen=True, eq=False)
class Pose3:
    """SE(3) element ``(rot, p)`` acting on points as ``rot @ q + p``."""

    rot: np.ndarray = field(default_factory=lambda: np.eye(3))
    p: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        rot = self.rot.m if isinstance(self.rot, Rotation3) else np.array(self.rot, dtype=float)
        if not is_rotation(rot, tol=1e-9):
            raise InvariantViolation("pose rotation is not in SO(3)")
        rot.setflags(write=False)
        object.__setattr__(self, "rot", rot)
        object.__setattr__(self, "p", _frozen_vec(self.p))

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=float)
        if m.shape != (4, 4) or not np.allclose(m[3], [0.0, 0.0, 0.0, 1.0], rtol=0, atol=1e-12):
            raise InvariantViolation("homogeneous matrix must be 4x4 with bottom row (0,0,0,1)")
        return cls(m[:3, :3], m[:3, 3])

    def as_matrix(self):
        m = np.eye(4)
        m[:3, :3] = self.rot
        m[:3, 3] = self.p
        return m

    def compose(self, other):
        return Pose3(self.rot @ other.rot, self.rot @ other.p + self.p)

    __matmul__ = compose

    def inverse(self):
        rt = self.rot.T
        return Pose3(rt, -rt @ self.p)

    def act(self, q):
        return self.rot @ np.asarray(q, dtype=float) + self.p

    def __repr__(self):
        return f"Pose3(rot={self.rot.tolist()}, p={self.p.tolist()})"


def left_jacobian_so3(w):
    """``A = I + (1 - cos t)/t^2 W + (t - sin t)/t^3 W^2`` with Taylor branch near zero."""
    w = np.asarray(w, dtype=float)
    theta = float(np.linalg.norm(w))
    if theta < SMALL_ANGLE:
        t2 = theta * theta
        b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0
        c = 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0
    else:
        half = 0.5 * theta
        s = np.sin(half) / half
        b = 0.5 * s * s
        c = (theta - np.sin(theta)) / theta ** 3
    W = hat3(w)
    return np.eye(3) + b * W + c * (W @ W)


def exp_se3(t):
    """Closed-form exponential of a twist."""
    if not isinstance(t, Twist):
        t = Twist(t[:3], t[3:])
    return Pose3(exp_so3(t.w), left_jacobian_so3(t.w) @ t.v)


def log_se3(g):
    """Inverse of :func:`exp_se3` on the principal branch."""
    if not isinstance(g, Pose3):
        g = Pose3.from_matrix(g)
    w = log_so3(g.rot)
    v = np.linalg.solve(left_jacobian_so3(w), g.p)
    return Twist(w, v)


def se3_bracket(a, b):
    """``[(w1, v1), (w2, v2)] = (w1 x w2, w1 x v2 - w2 x v1)``."""
    return Twist(np.cross(a.w, b.w), np.cross(a.w, b.v) - np.cross(b.w, a.v))


def se3_adjoint(g, t):
    """Adjoint action ``Ad_g`` on a twist (conjugation of the 4x4 embedding)."""
    w = g.rot @ t.w
    return Twist(w, g.rot @ t.v + np.cross(g.p, w))
