"""The ten-parameter Galilei group acting on space-time events ``(t, x)``."""

from dataclasses import dataclass, field

import numpy as np

from liemech.groups.so3 import is_rotation
from liemech.errors import InvariantViolation


def _vec(x):
    a = np.array(x, dtype=float).reshape(3)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GalileiTransform:
    """``(t, x) -> (t + s, rot @ x + vel * t + a)``."""

    s: float = 0.0
    a: np.ndarray = field(default_factory=lambda: np.zeros(3))
    vel: np.ndarray = field(default_factory=lambda: np.zeros(3))
    rot: np.ndarray = field(default_factory=lambda: np.eye(3))

    def __post_init__(self):
        rot = np.array(self.rot, dtype=float)
        if not is_rotation(rot, tol=1e-9):
            raise InvariantViolation("Galilei rotation part is not in SO(3)")
        rot.setflags(write=False)
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "a", _vec(self.a))
        object.__setattr__(self, "vel", _vec(self.vel))
        object.__setattr__(self, "rot", rot)

    @classmethod
    def identity(cls):
        return cls()

    def inverse(self):
        rt = self.rot.T
        vel = -rt @ self.vel
        return GalileiTransform(-self.s, -rt @ self.a - vel * self.s, vel, rt)


def galilei_apply(g, event):
    t, x = event
    return t + g.s, g.rot @ np.asarray(x, dtype=float) + g.vel * t + g.a


def galilei_compose(g2, g1):
    """Transform equal to applying ``g1`` first, then ``g2``."""
    return GalileiTransform(
        s=g1.s + g2.s,
        a=g2.rot @ g1.a + g2.vel * g1.s + g2.a,
        vel=g2.rot @ g1.vel + g2.vel,
        rot=g2.rot @ g1.rot,
    )
