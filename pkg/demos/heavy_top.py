"""Spin up a heavy top and watch what it does and does not conserve.

The top's own spin keeps |Gamma| and the total energy fixed to round-off, while
the kinetic energy trades back and forth with the potential.

    python demos/heavy_top.py
"""

import math

import numpy as np

from liemech.dynamics import BodyParams, BodyState, conservation_drifts, integrate

params = BodyParams(i=(1.0, 2.0, 3.0), mgl=1.0, chi=(0.0, 0.0, 1.0))
state = BodyState(w=(0.5, -0.3, 1.2), gamma=(0.0, math.sin(0.5), math.cos(0.5)))

traj = integrate("heavy_top", params, state, dt=1e-3, steps=10_000)
kinetic = 0.5 * np.sum(params.i * traj.w ** 2, axis=1)
print(f"kinetic energy ranges over [{kinetic.min():.4f}, {kinetic.max():.4f}]")
for name, value in conservation_drifts(traj, params).items():
    print(f"{name:>14} drift {value:.2e}")

# nutation: the tilt of the symmetry axis away from the vertical
tilt = np.degrees(np.arccos(np.clip(traj.gamma[:, 2], -1.0, 1.0)))
print(f"tilt stays between {tilt.min():.2f} and {tilt.max():.2f} degrees")
