"""Fixed-step integration of the rigid-body systems and trajectory plumbing."""

import io
from dataclasses import dataclass

import numpy as np

from liemech.dynamics.body import BodyState, Wrench, kinetic_energy
from liemech.dynamics.equations import (
    cross,
    euler_rhs,
    heavy_top_energy,
    heavy_top_field,
    hovercraft_rhs,
    kirchhoff_submarine_rhs,
    newton_euler_rhs,
    satellite_rhs,
)
from liemech.errors import MissingGamma, NonFiniteState, NonUniformDt, ParseError, ValidationError
from liemech.groups.quaternion import Quaternion, quaternion_from_rotation
from liemech.groups.se3 import Pose3
from liemech.groups.so3 import exp_so3


def rk4_step(f, t, y, dt):
    k1 = f(t, y)
    k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1)
    k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2)
    k4 = f(t + dt, y + dt * k3)
    return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def euler_step(f, t, y, dt):
    return y + dt * f(t, y)


METHODS = {"rk4": rk4_step, "euler": euler_step}


def integrate_ode(f, y0, dt, steps, method="rk4", t0=0.0, step_field=None):
    """Integrate ``y' = f(t, y)``; returns the ``(steps + 1, n)`` array of samples.

    ``step_field(k)``, when given, supplies the field used for step ``k`` (from
    sample ``k - 1`` to ``k``) instead of ``f``.
    """
    if not dt > 0:
        raise ValidationError(f"dt must be positive, got {dt!r}")
    if int(steps) < 1:
        raise ValidationError(f"steps must be at least 1, got {steps!r}")
    try:
        step = METHODS[method]
    except KeyError:
        raise ValidationError(f"unknown integration method '{method}'") from None
    y = np.array(y0, dtype=float)
    out = np.empty((int(steps) + 1, y.size))
    out[0] = y
    for k in range(1, int(steps) + 1):
        fk = f if step_field is None else step_field(k)
        y = step(fk, t0 + (k - 1) * dt, y, dt)
        if not np.all(np.isfinite(y)):
            raise NonFiniteState(k)
        out[k] = y
    return out


@dataclass(frozen=True, eq=False)
class ControlTable:
    """Piecewise-constant input: ``values[k]`` holds on ``[times[k], times[k+1])``.

    Before the first knot the input is zero.
    """

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        times = np.array(self.times, dtype=float).reshape(-1)
        values = np.array(self.values, dtype=float)
        if values.ndim == 1:
            values = values.reshape(len(times), -1)
        if len(times) == 0 or values.shape[0] != len(times):
            raise ValidationError("control table needs one row of values per knot time")
        if np.any(np.diff(times) <= 0):
            raise ValidationError("control knot times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @property
    def width(self):
        return self.values.shape[1]

    def __call__(self, t):
        k = int(np.searchsorted(self.times, t, side="right")) - 1
        if k < 0:
            return np.zeros(self.width)
        return self.values[k]


def _controls_fn(controls, width, system):
    if controls is None:
        zero = np.zeros(width)
        return lambda t: zero
    if isinstance(controls, ControlTable):
        if controls.width != width:
            raise ValidationError(f"{system} takes {width} control inputs, table has {controls.width}")
        return controls
    if callable(controls):
        return controls
    const = np.array(controls, dtype=float).reshape(-1)
    if const.size != width:
        raise ValidationError(f"{system} takes {width} control inputs, got {const.size}")
    return lambda t: const


@dataclass(frozen=True)
class _System:
    name: str
    n_controls: int

    def pack(self, params, state):
        raise NotImplementedError

    def field(self, params):
        """Return ``g(t, y, u)``."""
        raise NotImplementedError

    def unpack(self, params, y):
        """Return the body-frame ``(v, w, gamma)`` series from packed samples."""
        raise NotImplementedError

    def wrench(self, params, y, u):
        raise NotImplementedError


class _FreeEuler(_System):
    def pack(self, params, state):
        return np.array(state.w)

    def field(self, params):
        i = params.i
        return lambda t, y, u: euler_rhs(i, y, u)

    def unpack(self, params, y):
        return np.zeros_like(y), y, None

    def wrench(self, params, y, u):
        return np.zeros(3), u


class _Satellite(_FreeEuler):
    def field(self, params):
        i = params.i
        return lambda t, y, u: satellite_rhs(i, y, u)


class _HeavyTop(_System):
    def pack(self, params, state):
        if state.gamma is None:
            raise MissingGamma("heavy top needs the gravity direction gamma in the initial state")
        if params.chi is None:
            raise MissingGamma("heavy top needs chi in the parameters")
        return np.concatenate([params.i * state.w, state.gamma])

    def field(self, params):
        i, mgl, chi = params.i, params.mgl, params.chi

        def f(t, y, u):
            pdot, gdot = heavy_top_field(i, mgl, chi, y[:3], y[3:])
            return np.concatenate([pdot, gdot])
        return f

    def unpack(self, params, y):
        return np.zeros((len(y), 3)), y[:, :3] / params.i, y[:, 3:]

    def wrench(self, params, y, u):
        return np.zeros(3), params.mgl * cross(y[3:], params.chi)


class _NewtonEuler(_System):
    rhs = staticmethod(lambda p, s, u: newton_euler_rhs(p, s, Wrench(u[:3], u[3:])))

    def pack(self, params, state):
        return np.concatenate([state.v, state.w])

    def field(self, params):
        rhs = self.rhs

        def f(t, y, u):
            vdot, wdot = rhs(params, _Velocities(y[:3], y[3:]), u)
            return np.concatenate([vdot, wdot])
        return f

    def unpack(self, params, y):
        return y[:, :3], y[:, 3:], None

    def wrench(self, params, y, u):
        return u[:3], u[3:]


class _Submarine(_NewtonEuler):
    rhs = staticmethod(lambda p, s, u: kirchhoff_submarine_rhs(p, s, (u[:3], u[3:])))


class _Hovercraft(_System):
    def pack(self, params, state):
        return np.array([state.v[0], state.v[1], state.w[2]])

    def field(self, params):
        m, i, h = params.m[0], params.i[2], params.h
        return lambda t, y, u: hovercraft_rhs(m, i, y, u, h)

    def unpack(self, params, y):
        z = np.zeros(len(y))
        return (np.column_stack([y[:, 0], y[:, 1], z]), np.column_stack([z, z, y[:, 2]]), None)

    def wrench(self, params, y, u):
        return np.array([u[0], u[1], 0.0]), np.array([0.0, 0.0, -params.h * u[1]])


@dataclass(frozen=True)
class _Velocities:
    """Lightweight stand-in for BodyState inside the integration loop (no validation)."""

    v: np.ndarray
    w: np.ndarray


SYSTEMS = {
    "free_euler": _FreeEuler("free_euler", 3),
    "satellite": _Satellite("satellite", 3),
    "heavy_top": _HeavyTop("heavy_top", 0),
    "newton_euler": _NewtonEuler("newton_euler", 6),
    "submarine": _Submarine("submarine", 6),
    "hovercraft": _Hovercraft("hovercraft", 2),
}


def reconstruct_pose(v, w, pose0, dt):
    """Integrate ``p' = R v, R' = R hat(w)`` from body velocity samples.

    Each step uses the midpoint velocities; the rotation advances by the group
    exponential and the translation uses the rotation at the half step.
    Returns ``(rots, positions)`` with shapes ``(N, 3, 3)`` and ``(N, 3)``.
    """
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    n = len(w)
    rots = np.empty((n, 3, 3))
    pos = np.empty((n, 3))
    rot = np.array(pose0.rot)
    p = np.array(pose0.p)
    rots[0], pos[0] = rot, p
    for k in range(n - 1):
        w_mid = 0.5 * (w[k] + w[k + 1])
        v_mid = 0.5 * (v[k] + v[k + 1])
        half = rot @ exp_so3(0.5 * dt * w_mid)
        p = p + dt * (half @ v_mid)
        rot = rot @ exp_so3(dt * w_mid)
        rots[k + 1], pos[k + 1] = rot, p
    return rots, pos


CSV_HEADER = "t,vx,vy,vz,wx,wy,wz,qw,qx,qy,qz,px,py,pz"


def fmt(x):
    """Shortest round-trip decimal for a float (at most 17 significant digits)."""
    x = float(x)
    if x == 0.0:
        return "0.0"
    return repr(x)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Columnar samples of a run; ``t[k] = k * dt``."""

    dt: float
    t: np.ndarray
    v: np.ndarray
    w: np.ndarray
    rot: np.ndarray
    p: np.ndarray
    force: np.ndarray = None
    torque: np.ndarray = None
    gamma: np.ndarray = None
    system: str = ""
    # quaternions as read from a CSV, so re-export reproduces the input bytes
    quat: np.ndarray = None

    def __len__(self):
        return len(self.t)

    def state(self, k):
        g = None if self.gamma is None else self.gamma[k]
        return BodyState(self.v[k], self.w[k], Pose3(self.rot[k], self.p[k]), g)

    def wrench(self, k):
        return Wrench(self.force[k], self.torque[k])

    def quaternions(self):
        if self.quat is not None:
            return self.quat
        return np.array([quaternion_from_rotation(r).as_array() for r in self.rot])

    def to_csv(self):
        q = self.quaternions()
        rows = [CSV_HEADER]
        for k in range(len(self.t)):
            vals = [self.t[k], *self.v[k], *self.w[k], *q[k], *self.p[k]]
            rows.append(",".join(fmt(x) for x in vals))
        return "\n".join(rows) + "\n"

    def write_csv(self, path):
        with open(path, "w", newline="\n") as fh:
            fh.write(self.to_csv())

    @classmethod
    def from_csv(cls, text, source="<csv>", rtol=1e-9):
        """Read the trajectory CSV (or an external capture with the same header)."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip().replace(" ", "") != CSV_HEADER:
            raise ParseError(f"{source}: expected header '{CSV_HEADER}'", 1, 1)
        try:
            data = np.loadtxt(io.StringIO("\n".join(lines[1:])), delimiter=",", ndmin=2)
        except ValueError as exc:
            raise ParseError(f"{source}: {exc}", 2, 1) from None
        if data.shape[1] != 14:
            raise ParseError(f"{source}: expected 14 columns, got {data.shape[1]}", 2, 1)
        t = data[:, 0]
        if len(t) >= 2:
            steps = np.diff(t)
            dt = float(np.mean(steps))
            if dt <= 0 or np.max(np.abs(steps - dt)) > rtol * max(1.0, abs(t[-1])) + 1e-12:
                raise NonUniformDt(f"{source}: sample times are not uniformly spaced")
        else:
            dt = 0.0
        rots = np.array([Quaternion(q[0], q[1:]).to_rotation() for q in data[:, 7:11]])
        zeros = np.zeros((len(t), 3))
        return cls(dt, t, data[:, 1:4], data[:, 4:7], rots, data[:, 11:14], zeros, zeros.copy(),
                   None, "", data[:, 7:11])


def integrate(system, params, state0, dt, steps, method="rk4", controls=None):
    """Run ``system`` (a name in ``SYSTEMS``) and return a :class:`Trajectory`.

    Controls are ``None``, a constant vector, a callable ``u(t)`` or a
    :class:`ControlTable`. Callables are sampled at the one-step method's stages.
    A table is held constant over each step at its value at the step midpoint, so
    knots on step boundaries switch exactly between steps instead of leaking the
    next segment into the last stage.
    """
    try:
        sysobj = SYSTEMS[system]
    except KeyError:
        raise ValidationError(f"unknown system '{system}'") from None
    u = _controls_fn(controls, sysobj.n_controls, system)
    g = sysobj.field(params)
    if isinstance(controls, ControlTable):
        def step_field(k):
            uk = u((k - 0.5) * dt)
            return lambda t, y: g(t, y, uk)
        y = integrate_ode(None, sysobj.pack(params, state0), dt, steps, method, step_field=step_field)
    else:
        y = integrate_ode(lambda t, y: g(t, y, u(t)), sysobj.pack(params, state0), dt, steps, method)
    t = np.arange(len(y)) * dt
    v, w, gamma = sysobj.unpack(params, y)
    rots, pos = reconstruct_pose(v, w, state0.pose, dt)
    if not (np.all(np.isfinite(rots)) and np.all(np.isfinite(pos))):
        bad = int(np.argmax(~(np.isfinite(rots).all(axis=(1, 2)) & np.isfinite(pos).all(axis=1))))
        raise NonFiniteState(bad, f"pose became non-finite at step {bad}")
    force = np.empty((len(y), 3))
    torque = np.empty((len(y), 3))
    for k in range(len(y)):
        force[k], torque[k] = sysobj.wrench(params, y[k], u(t[k]))
    return Trajectory(float(dt), t, v, w, rots, pos, force, torque, gamma, system)


def conservation_drifts(traj, params):
    """Largest deviation from the initial value of each conserved quantity of the run."""

    def drift(series):
        series = np.asarray(series)
        return float(np.max(np.abs(series - series[0])))

    energy = 0.5 * (np.sum(params.m * traj.v ** 2, axis=1) + np.sum(params.i * traj.w ** 2, axis=1))
    out = {}
    if traj.system == "heavy_top":
        pis = params.i * traj.w
        out["gamma_norm"] = drift(np.linalg.norm(traj.gamma, axis=1))
        out["total_energy"] = drift([heavy_top_energy(params.i, params.mgl, params.chi, pi, g)
                                     for pi, g in zip(pis, traj.gamma)])
    else:
        out["kinetic_energy"] = drift(energy)
    if traj.system in ("free_euler", "satellite"):
        out["angular_momentum_norm2"] = drift(np.sum((params.i * traj.w) ** 2, axis=1))
    if traj.system in ("newton_euler", "submarine"):
        out["linear_momentum_norm2"] = drift(np.sum((params.m * traj.v) ** 2, axis=1))
    return out


__all__ = ["ControlTable", "CSV_HEADER", "METHODS", "SYSTEMS", "Trajectory", "conservation_drifts",
           "euler_step", "fmt", "integrate", "integrate_ode", "kinetic_energy", "reconstruct_pose",
           "rk4_step"]
