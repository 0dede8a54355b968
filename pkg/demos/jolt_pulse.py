"""Jolt of a hovercraft hit by thrust steps.

A step in thrust is a jump in force, so the finite-difference jolt spikes at
each knot and the spike grows as the step shrinks (it approximates a delta).

    python demos/jolt_pulse.py
"""

from liemech.dynamics import BodyParams, BodyState, ControlTable, integrate
from liemech.jolt import jolt_report

params = BodyParams(m=(2.0, 2.0, 2.0), i=(1.0, 1.0, 0.5), h=0.3)
thrust = ControlTable([0.0, 1.0, 2.0], [[1.0, 0.0], [0.0, 0.5], [0.0, 0.0]])

for dt in (4e-3, 2e-3, 1e-3):
    traj = integrate("hovercraft", params, BodyState(v=(0.5, 0.0, 0.0)), dt, round(4 / dt),
                     controls=thrust)
    rep = jolt_report(traj, params, thresholds=(50.0, 50.0))
    (f_peak, f_at), (t_peak, t_at) = rep.peak_f, rep.peak_t
    print(f"dt={dt:g}: peak |F'|={f_peak:9.2f} at t={f_at:.3f}, peak |T'|={t_peak:8.2f} at t={t_at:.3f}, "
          f"over threshold: {rep.exceed_f}")
