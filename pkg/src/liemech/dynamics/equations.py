"""Right-hand sides of the rigid-body systems, all in body-frame coordinates.

The conventions are fixed by the cross-product form ``Iw' = T + Iw x w``, which
in components reads ``I1 w1' = T1 + (I2 - I3) w2 w3`` and cyclic.
"""

import numpy as np

from liemech.dynamics.body import levi_civita
from liemech.errors import MissingGamma


def cross(a, b):
    """Cross product of two 3-vectors (cheaper than ``np.cross`` for single vectors)."""
    return np.array([a[1] * b[2] - a[2] * b[1],
                     a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0]])


def euler_rhs(i, w, t=None):
    """Angular acceleration of a (forced) free rigid body."""
    i = np.asarray(i, dtype=float)
    w = np.asarray(w, dtype=float)
    i1, i2, i3 = i
    w1, w2, w3 = w
    out = np.array([(i2 - i3) * w2 * w3 / i1,
                    (i3 - i1) * w3 * w1 / i2,
                    (i1 - i2) * w1 * w2 / i3])
    if t is not None:
        out = out + np.asarray(t, dtype=float) / i
    return out


def heavy_top_field(i, mgl, chi, pi, gamma):
    """``(p', gamma')`` for angular momentum ``pi`` and gravity direction ``gamma``."""
    i1, i2, i3 = i
    p1, p2, p3 = pi
    g1, g2, g3 = gamma
    c1, c2, c3 = chi
    pdot = np.array([
        (i2 - i3) / (i2 * i3) * p2 * p3 + mgl * (g2 * c3 - g3 * c2),
        (i3 - i1) / (i3 * i1) * p3 * p1 + mgl * (g3 * c1 - g1 * c3),
        (i1 - i2) / (i1 * i2) * p1 * p2 + mgl * (g1 * c2 - g2 * c1),
    ])
    omega = np.asarray(pi, dtype=float) / i
    return pdot, cross(gamma, omega)


def heavy_top_rhs(s, p):
    """Heavy-top equations at a :class:`BodyState` (``pi = I w``)."""
    if s.gamma is None:
        raise MissingGamma("heavy top needs the gravity direction gamma in the state")
    if p.chi is None:
        raise MissingGamma("heavy top needs the centre-of-mass direction chi in the parameters")
    return heavy_top_field(p.i, p.mgl, p.chi, p.i * s.w, s.gamma)


def heavy_top_energy(i, mgl, chi, pi, gamma):
    """Total energy ``1/2 pi.Omega + Mgl gamma.chi`` conserved by the heavy top."""
    pi = np.asarray(pi, dtype=float)
    return 0.5 * float(pi @ (pi / i)) + mgl * float(np.asarray(gamma) @ chi)


def newton_euler_rhs(p, s, wr=None):
    """Coupled Newton-Euler equations, evaluated component by component.

    ``m1 v1' = F1 - m3 v3 w2 + m2 v2 w3`` and
    ``I1 w1' = T1 + (m2 - m3) v2 v3 + (I2 - I3) w2 w3``, with the others cyclic.
    """
    m1, m2, m3 = p.m
    i1, i2, i3 = p.i
    v1, v2, v3 = s.v
    w1, w2, w3 = s.w
    f = np.zeros(3) if wr is None else wr.f
    t = np.zeros(3) if wr is None else wr.t
    vdot = np.array([
        (f[0] - m3 * v3 * w2 + m2 * v2 * w3) / m1,
        (f[1] - m1 * v1 * w3 + m3 * v3 * w1) / m2,
        (f[2] - m2 * v2 * w1 + m1 * v1 * w2) / m3,
    ])
    wdot = np.array([
        (t[0] + (m2 - m3) * v2 * v3 + (i2 - i3) * w2 * w3) / i1,
        (t[1] + (m3 - m1) * v3 * v1 + (i3 - i1) * w3 * w1) / i2,
        (t[2] + (m1 - m2) * v1 * v2 + (i1 - i2) * w1 * w2) / i3,
    ])
    return vdot, wdot


_EPS = levi_civita()


def kirchhoff_lagrangian_rhs(p, s, wr=None):
    """Same dynamics from ``d/dt dE/dv = dE/dv x w + F`` and
    ``d/dt dE/dw = dE/dw x w + dE/dv x v + T`` with the mass matrices and the
    permutation symbol written out in full.
    """
    M = np.diag(p.m)
    I = np.diag(p.i)
    dv = M @ s.v
    dw = I @ s.w
    f = np.zeros(3) if wr is None else wr.f
    t = np.zeros(3) if wr is None else wr.t
    pdot = np.einsum("kab,a,b->k", _EPS, dv, s.w) + f
    pidot = np.einsum("kab,a,b->k", _EPS, dw, s.w) + np.einsum("kab,a,b->k", _EPS, dv, s.v) + t
    return np.linalg.solve(M, pdot), np.linalg.solve(I, pidot)


def kirchhoff_submarine_rhs(p, s, controls=None):
    """Kirchhoff equations for a body in ideal fluid.

    ``controls`` is the pair ``(f_i u^i, tau_i u^i)`` of generalized force and
    torque; ``None`` gives the unforced motion.
    """
    mv = p.m * s.v
    iw = p.i * s.w
    fu, tu = (np.zeros(3), np.zeros(3)) if controls is None else controls
    vdot = (cross(mv, s.w) + np.asarray(fu, dtype=float)) / p.m
    wdot = (cross(iw, s.w) + cross(mv, s.v) + np.asarray(tu, dtype=float)) / p.i
    return vdot, wdot


def hovercraft_rhs(m, i, s, u, h):
    """Planar hovercraft with state ``(vx, vy, w)`` and thrusts ``u = (u1, u2)``.

    The lateral thrust ``u2`` acts at distance ``h`` behind the centre of mass,
    giving the torque ``-h u2``.
    """
    vx, vy, w = s
    u1, u2 = u
    return np.array([w * vy + u1 / m, -w * vx + u2 / m, -h * u2 / i])


def satellite_rhs(i, w, controls=None):
    """Attitude dynamics ``I w' = I w x w + tau_i u^i``."""
    i = np.asarray(i, dtype=float)
    w = np.asarray(w, dtype=float)
    tu = np.zeros(3) if controls is None else np.asarray(controls, dtype=float)
    return (cross(i * w, w) + tu) / i
