"""Planar rigid motions SE(2) and the coordinate forms of its adjoint and coadjoint actions.

Algebra elements are pairs ``(xi, v)`` embedded as ``[[-xi J, v], [0, 0]]`` with
``J = [[0, 1], [-1, 0]]``. Dual elements ``(mu, alpha)`` pair with them through
``mu * xi + alpha . v``.
"""

from dataclasses import dataclass, field

import numpy as np

from liemech.groups.so2 import Rotation2, rot2

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


@dataclass(frozen=True, eq=False)
class Pose2:
    rot: Rotation2 = field(default_factory=Rotation2)
    a: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __post_init__(self):
        if not isinstance(self.rot, Rotation2):
            object.__setattr__(self, "rot", Rotation2(float(self.rot)))
        a = np.array(self.a, dtype=float).reshape(2)
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def theta(self):
        return self.rot.theta

    def as_matrix(self):
        m = np.eye(3)
        m[:2, :2] = rot2(self.theta)
        m[:2, 2] = self.a
        return m

    def compose(self, other):
        return Pose2(self.rot.compose(other.rot), rot2(self.theta) @ other.a + self.a)

    __matmul__ = compose

    def inverse(self):
        r_inv = rot2(-self.theta)
        return Pose2(Rotation2(-self.theta), -r_inv @ self.a)

    def act(self, z):
        return rot2(self.theta) @ np.asarray(z, dtype=float) + self.a


def se2_hat(xi, v):
    m = np.zeros((3, 3))
    m[:2, :2] = -xi * J2
    m[:2, 2] = v
    return m


def se2_vee(m):
    m = np.asarray(m, dtype=float)
    return float(m[1, 0]), m[:2, 2].copy()


def se2_bracket(a, b):
    """Bracket ``[(xi, v), (zeta, w)] = (0, xi J^T w - zeta J^T v)``."""
    xi, v = a
    zeta, w = b
    return 0.0, xi * (J2.T @ np.asarray(w, dtype=float)) - zeta * (J2.T @ np.asarray(v, dtype=float))


def se2_adjoint(g, x):
    """``Ad_(R, a) (xi, v) = (xi, xi J a + R v)``."""
    xi, v = x
    return float(xi), xi * (J2 @ g.a) + rot2(g.theta) @ np.asarray(v, dtype=float)


def se2_coadjoint(g, m):
    """``Ad*_(R, a)^-1 (mu, alpha) = (mu - (R alpha) . (J a), R alpha)``."""
    mu, alpha = m
    r_alpha = rot2(g.theta) @ np.asarray(alpha, dtype=float)
    return float(mu - r_alpha @ (J2 @ g.a)), r_alpha


def se2_pairing(m, x):
    return float(m[0] * x[0] + np.dot(m[1], x[1]))
