"""Finite-difference kinematics and the Newton/Euler jolt covectors.

With ``p = Mv`` and ``pi = Iw`` (body frame),

    F' = p'' - p' x w - p x w'
    T' = pi'' - pi' x w - pi x w' - p' x v - p x v'

Derivative series use second-order stencils throughout: central differences in
the interior and one-sided second-order forms at both ends.
"""

from dataclasses import dataclass

import numpy as np

from liemech.dynamics.integrate import fmt
from liemech.errors import NonUniformDt, TooFewSamples, ValidationError

MIN_SAMPLES = 5


def first_derivative(f, h):
    """Second-order derivative of equally spaced samples along axis 0."""
    f = np.asarray(f, dtype=float)
    d = np.empty_like(f)
    d[1:-1] = (f[2:] - f[:-2]) / (2.0 * h)
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h)
    d[-1] = (3.0 * f[-1] - 4.0 * f[-2] + f[-3]) / (2.0 * h)
    return d


def second_derivative(f, h):
    """Second-order second derivative; the ends use the four-point one-sided form."""
    f = np.asarray(f, dtype=float)
    d = np.empty_like(f)
    h2 = h * h
    d[1:-1] = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / h2
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2
    d[-1] = (2.0 * f[-1] - 5.0 * f[-2] + 4.0 * f[-3] - f[-4]) / h2
    return d


@dataclass(frozen=True, eq=False)
class KinematicDerivatives:
    """Velocities, accelerations and jerks; arrays are ``(3,)`` or ``(N, 3)`` series."""

    v: np.ndarray
    w: np.ndarray
    a_v: np.ndarray
    a_w: np.ndarray
    j_v: np.ndarray
    j_w: np.ndarray
    t: np.ndarray = None

    def at(self, k):
        return KinematicDerivatives(self.v[k], self.w[k], self.a_v[k], self.a_w[k],
                                    self.j_v[k], self.j_w[k],
                                    None if self.t is None else self.t[k])


def _uniform_step(t, rtol=1e-9):
    t = np.asarray(t, dtype=float)
    steps = np.diff(t)
    h = float(np.mean(steps))
    if h <= 0 or np.max(np.abs(steps - h)) > rtol * max(abs(h), abs(t[-1])):
        raise NonUniformDt(f"sample times must be uniformly spaced (step range "
                           f"{steps.min()!r} to {steps.max()!r})")
    return h


def derivatives_from_trajectory(traj, v=None, w=None):
    """Differentiate the body velocities of a trajectory.

    ``traj`` is a :class:`~liemech.dynamics.Trajectory`, or a time array when
    ``v`` and ``w`` series are passed separately.
    """
    if v is None:
        t, v, w = traj.t, traj.v, traj.w
    else:
        t = traj
    t = np.asarray(t, dtype=float)
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if len(t) < MIN_SAMPLES:
        raise TooFewSamples(f"need at least {MIN_SAMPLES} samples, got {len(t)}")
    h = _uniform_step(t)
    return KinematicDerivatives(v, w, first_derivative(v, h), first_derivative(w, h),
                                second_derivative(v, h), second_derivative(w, h), t)


@dataclass(frozen=True)
class JoltSample:
    t: float
    f_dot: np.ndarray
    t_dot: np.ndarray

    @property
    def f_norm(self):
        return float(np.linalg.norm(self.f_dot))

    @property
    def t_norm(self):
        return float(np.linalg.norm(self.t_dot))


def _jolt_arrays(m, i, k):
    """Vectorized jolt over the leading axis of ``k``'s arrays."""
    p, pd, pdd = m * k.v, m * k.a_v, m * k.j_v
    pi, pid, pidd = i * k.w, i * k.a_w, i * k.j_w
    f_dot = pdd - np.cross(pd, k.w) - np.cross(p, k.a_w)
    t_dot = (pidd - np.cross(pid, k.w) - np.cross(pi, k.a_w)
             - np.cross(pd, k.v) - np.cross(p, k.a_v))
    return f_dot, t_dot


def se3_jolt(params, k):
    """Newton and Euler jolt at one instant."""
    f_dot, t_dot = _jolt_arrays(params.m, params.i, k)
    return JoltSample(0.0 if k.t is None else float(k.t), f_dot, t_dot)


def jolt_series(params, k):
    """``(F', T')`` arrays of shape ``(N, 3)`` for a derivative series."""
    return _jolt_arrays(params.m, params.i, k)


def _intervals(t, mask):
    """Closed time intervals covering maximal runs of ``True`` in ``mask``."""
    out = []
    start = None
    for idx, flag in enumerate(mask):
        if flag and start is None:
            start = idx
        if not flag and start is not None:
            out.append((float(t[start]), float(t[idx - 1])))
            start = None
    if start is not None:
        out.append((float(t[start]), float(t[-1])))
    return out


@dataclass(frozen=True, eq=False)
class JoltReport:
    t: np.ndarray
    f_dot: np.ndarray
    t_dot: np.ndarray
    thresholds: tuple
    mass: np.ndarray
    inertia: np.ndarray

    @property
    def f_norm(self):
        return np.linalg.norm(self.f_dot, axis=1)

    @property
    def t_norm(self):
        return np.linalg.norm(self.t_dot, axis=1)

    @property
    def peak_f(self):
        k = int(np.argmax(self.f_norm))
        return float(self.f_norm[k]), float(self.t[k])

    @property
    def peak_t(self):
        k = int(np.argmax(self.t_norm))
        return float(self.t_norm[k]), float(self.t[k])

    @property
    def exceed_f(self):
        return _intervals(self.t, self.f_norm > self.thresholds[0])

    @property
    def exceed_t(self):
        return _intervals(self.t, self.t_norm > self.thresholds[1])

    def sample(self, k):
        return JoltSample(float(self.t[k]), self.f_dot[k], self.t_dot[k])


def jolt_report(traj, params, thresholds):
    """Jolt series, peaks and threshold exceedances along a trajectory.

    ``thresholds`` is ``(max |F'|, max |T'|)``; there are no defaults.
    """
    if thresholds is None or len(thresholds) != 2:
        raise ValidationError("thresholds must be a pair (max |Fdot|, max |Tdot|)")
    th = tuple(float(x) for x in thresholds)
    if not all(x >= 0 and np.isfinite(x) for x in th):
        raise ValidationError(f"thresholds must be finite and non-negative, got {th}")
    k = derivatives_from_trajectory(traj)
    f_dot, t_dot = jolt_series(params, k)
    return JoltReport(k.t, f_dot, t_dot, th, params.m, params.i)


REPORT_CSV_HEADER = "t,Fdot_x,Fdot_y,Fdot_z,Tdot_x,Tdot_y,Tdot_z,Fdot_norm,Tdot_norm"


def _fmt_intervals(iv):
    if not iv:
        return "none"
    return "; ".join(f"{fmt(a)}..{fmt(b)}" for a, b in iv)


def report_to_text(rep):
    """Key/value header followed by the per-sample CSV body."""
    pf, tf = rep.peak_f
    pt, tt = rep.peak_t
    head = [
        "# jolt report",
        f"samples = {len(rep.t)}",
        f"mass = {', '.join(fmt(x) for x in rep.mass)}",
        f"inertia = {', '.join(fmt(x) for x in rep.inertia)}",
        f"threshold_fdot = {fmt(rep.thresholds[0])}",
        f"threshold_tdot = {fmt(rep.thresholds[1])}",
        f"peak_fdot = {fmt(pf)}",
        f"peak_fdot_time = {fmt(tf)}",
        f"peak_tdot = {fmt(pt)}",
        f"peak_tdot_time = {fmt(tt)}",
        f"exceed_fdot = {_fmt_intervals(rep.exceed_f)}",
        f"exceed_tdot = {_fmt_intervals(rep.exceed_t)}",
        "",
    ]
    return "\n".join(head) + "\n" + report_to_csv(rep)


def report_to_csv(rep):
    """Per-sample jolt series under ``REPORT_CSV_HEADER``."""
    fn, tn = rep.f_norm, rep.t_norm
    body = [",".join(fmt(x) for x in (rep.t[k], *rep.f_dot[k], *rep.t_dot[k], fn[k], tn[k]))
            for k in range(len(rep.t))]
    return "\n".join([REPORT_CSV_HEADER] + body) + "\n"
