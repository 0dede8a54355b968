"""Planar rotations, their generator field on R^2, and the lifted momentum map."""

from dataclasses import dataclass

import numpy as np


def canonical_angle(theta):
    """Representative of ``theta`` modulo 2*pi in (-pi, pi]."""
    t = float(np.remainder(theta + np.pi, 2.0 * np.pi) - np.pi)
    return np.pi if t == -np.pi else t


def rot2(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


@dataclass(frozen=True)
class Rotation2:
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", canonical_angle(self.theta))

    def matrix(self):
        return rot2(self.theta)

    def compose(self, other):
        return Rotation2(self.theta + other.theta)

    def inverse(self):
        return Rotation2(-self.theta)

    def act(self, x):
        return rot2(self.theta) @ np.asarray(x, dtype=float)


def so2_generator_field(xi, point):
    """Infinitesimal generator of the rotation action: ``xi * (-y, x)``."""
    x, y = np.asarray(point, dtype=float)
    return xi * np.array([-y, x])


def momentum_map_so2(x, y, p_x, p_y):
    """Angular momentum ``x p_y - y p_x`` of the lifted planar rotation action."""
    return x * p_y - y * p_x
