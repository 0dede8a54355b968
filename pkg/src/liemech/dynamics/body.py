"""Body parameters, states, wrenches and the kinetic-energy observables."""

from dataclasses import dataclass, field

import numpy as np

from liemech.errors import InvariantViolation, ValidationError
from liemech.groups.se3 import Pose3


def _vec3(x, name):
    a = np.array(x, dtype=float).reshape(-1)
    if a.shape != (3,):
        raise ValidationError(f"{name} must have 3 components, got {a.size}")
    if not np.all(np.isfinite(a)):
        raise ValidationError(f"{name} has non-finite entries")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class BodyParams:
    """Principal masses ``m`` and inertias ``i``, plus heavy-top and hovercraft extras.

    ``mgl`` is the gravity moment of the heavy top, ``chi`` the unit body-frame
    direction from the fixed point to the centre of mass, and ``h`` the hovercraft
    lever arm (torque per unit lateral thrust is ``-h``).
    """

    m: np.ndarray = field(default_factory=lambda: np.ones(3))
    i: np.ndarray = field(default_factory=lambda: np.ones(3))
    mgl: float = 0.0
    chi: np.ndarray = None
    h: float = 0.0

    def __post_init__(self):
        m = _vec3(self.m, "m")
        i = _vec3(self.i, "i")
        if np.any(m <= 0):
            raise ValidationError(f"masses must be positive, got {m.tolist()}")
        if np.any(i <= 0):
            raise ValidationError(f"inertias must be positive, got {i.tolist()}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "mgl", float(self.mgl))
        object.__setattr__(self, "h", float(self.h))
        if self.chi is not None:
            chi = _vec3(self.chi, "chi")
            if abs(np.linalg.norm(chi) - 1.0) > 1e-9:
                raise ValidationError(f"chi must be a unit vector, |chi| = {np.linalg.norm(chi)!r}")
            object.__setattr__(self, "chi", chi)


@dataclass(frozen=True, eq=False)
class BodyState:
    """Body-frame velocities, spatial pose, and the optional gravity direction ``gamma``."""

    v: np.ndarray = field(default_factory=lambda: np.zeros(3))
    w: np.ndarray = field(default_factory=lambda: np.zeros(3))
    pose: Pose3 = field(default_factory=Pose3)
    gamma: np.ndarray = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "v", _vec3(self.v, "v"))
            object.__setattr__(self, "w", _vec3(self.w, "w"))
        except ValidationError as exc:
            raise InvariantViolation(str(exc)) from None
        if self.gamma is not None:
            g = _vec3(self.gamma, "gamma")
            if abs(np.linalg.norm(g) - 1.0) > 1e-6:
                raise InvariantViolation(f"gamma must be a unit vector, |gamma| = {np.linalg.norm(g)!r}")
            object.__setattr__(self, "gamma", g)


@dataclass(frozen=True, eq=False)
class Wrench:
    f: np.ndarray = field(default_factory=lambda: np.zeros(3))
    t: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "f", _vec3(self.f, "f"))
        object.__setattr__(self, "t", _vec3(self.t, "t"))


def kinetic_energy(p, s):
    """``E = 1/2 v.Mv + 1/2 w.Iw``."""
    return 0.5 * float(np.sum(p.m * s.v * s.v) + np.sum(p.i * s.w * s.w))


def momenta(p, s):
    """Linear and angular momentum covectors ``(Mv, Iw)``."""
    return p.m * s.v, p.i * s.w


def permutation_symbol(i, j, k):
    """Levi-Civita symbol with 1-based indices: +1 on even, -1 on odd permutations of (1, 2, 3)."""
    if len({i, j, k}) < 3:
        return 0
    return 1 if (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def levi_civita():
    """The 3x3x3 array of :func:`permutation_symbol` (0-based)."""
    eps = np.zeros((3, 3, 3))
    for a in range(3):
        for b in range(3):
            for c in range(3):
                eps[a, b, c] = permutation_symbol(a + 1, b + 1, c + 1)
    return eps
