"""Rotations in 3D: hat/vee, Rodrigues exponential, logarithm, brackets, BCH.

Angular vectors are plain length-3 numpy arrays; :class:`Rotation3` is a thin
validated wrapper used where group semantics matter (composition, inverse).
"""

from dataclasses import dataclass

import numpy as np

from liemech.errors import InvariantViolation, NearAngleLimit, NotSkew, OutOfTrustRegion

SMALL_ANGLE = 1e-4
ORTHO_TOL = 1e-12


def hat3(w):
    """Skew matrix ``W`` with ``W @ x == cross(w, x)``."""
    wx, wy, wz = np.asarray(w, dtype=float)
    return np.array([[0.0, -wz, wy],
                     [wz, 0.0, -wx],
                     [-wy, wx, 0.0]])


def vee3(m, tol=1e-9):
    """Inverse of :func:`hat3`. Raises ``NotSkew`` if ``m`` is not skew-symmetric."""
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise NotSkew(f"expected a 3x3 matrix, got shape {m.shape}")
    defect = np.linalg.norm(m + m.T)
    if defect > tol:
        raise NotSkew(f"matrix is not skew-symmetric (|m + m^T| = {defect:.3g})")
    return np.array([m[2, 1], m[0, 2], m[1, 0]])


def rodrigues_coefficients(theta):
    """Return ``(sin t / t, (1 - cos t) / t**2)`` with a Taylor branch near zero."""
    if theta < SMALL_ANGLE:
        t2 = theta * theta
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0, 0.5 - t2 / 24.0 + t2 * t2 / 720.0
    half = 0.5 * theta
    s = np.sin(half) / half
    return np.sin(theta) / theta, 0.5 * s * s


def exp_so3(w):
    """Rodrigues exponential of an angular vector; returns a 3x3 rotation matrix."""
    w = np.asarray(w, dtype=float)
    theta = float(np.linalg.norm(w))
    a, b = rodrigues_coefficients(theta)
    W = hat3(w)
    return np.eye(3) + a * W + b * (W @ W)


def rotation_angle(r):
    r = np.asarray(r, dtype=float)
    c = 0.5 * (np.trace(r) - 1.0)
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def log_so3(r):
    """Principal logarithm of a rotation matrix, as an angular vector.

    Rotations whose trace is within 1e-6 of -1 (angle close to pi) raise
    ``NearAngleLimit``: the axis is not unique there.
    """
    r = _as_matrix(r)
    tr = np.trace(r)
    if tr <= -1.0 + 1e-6:
        raise NearAngleLimit(f"rotation angle too close to pi (trace = {tr:.12g})")
    theta = rotation_angle(r)
    skew = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    if theta < SMALL_ANGLE:
        t2 = theta * theta
        # theta / (2 sin theta) expanded
        return (0.5 + t2 / 12.0 + 7.0 * t2 * t2 / 720.0) * skew
    if theta < 3.0:
        return theta / (2.0 * np.sin(theta)) * skew
    # near pi: read the axis off the symmetric part, take the sign from the skew part
    B = 0.5 * (r + r.T) - np.cos(theta) * np.eye(3)
    k = int(np.argmax(np.diag(B)))
    axis = B[:, k] / np.sqrt(B[k, k] * (1.0 - np.cos(theta)))
    axis /= np.linalg.norm(axis)
    if axis @ skew < 0:
        axis = -axis
    return theta * axis


def ad_so3(u, v):
    """Lie bracket on so(3) in vector coordinates: the cross product."""
    return np.cross(np.asarray(u, dtype=float), np.asarray(v, dtype=float))


def adjoint_conjugation_check(g, xi):
    """Frobenius residual of ``exp(Ad_g xi) - g exp(xi) g^-1`` for SO(3).

    On vector coordinates ``Ad_g`` is multiplication by the matrix ``g``.
    """
    g = _as_matrix(g)
    xi = np.asarray(xi, dtype=float)
    lhs = exp_so3(g @ xi) - np.eye(3)
    # g (I + X) g^-1 = I + g X g^-1; the identity part cancels exactly
    rhs = g @ (exp_so3(xi) - np.eye(3)) @ g.T
    return float(np.linalg.norm(lhs - rhs))


def bch3(u, v, radius=0.5):
    """Third-order Baker-Campbell-Hausdorff combination of two so(3) vectors."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu > radius or nv > radius:
        raise OutOfTrustRegion(
            f"BCH series needs |u|, |v| <= {radius}; got {nu:.6g}, {nv:.6g}")
    uv = ad_so3(u, v)
    return u + v + 0.5 * uv + (ad_so3(uv, v) - ad_so3(uv, u)) / 12.0


def rot_x(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def rot_y(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def rot_z(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def euler_angles_to_rotation(phi, psi, theta):
    """Joint rotation ``R_x(phi) @ R_y(psi) @ R_z(theta)``, multiplied numerically."""
    return rot_x(phi) @ rot_y(psi) @ rot_z(theta)


def is_rotation(m, tol=ORTHO_TOL):
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3) or not np.all(np.isfinite(m)):
        return False
    return (np.linalg.norm(m.T @ m - np.eye(3)) <= tol
            and abs(np.linalg.det(m) - 1.0) <= tol)


@dataclass(frozen=True, eq=False)
class Rotation3:
    """Element of SO(3) stored as a full matrix, checked on construction."""

    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=float)
        if not is_rotation(m):
            raise InvariantViolation("matrix is not orthogonal with determinant +1")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @classmethod
    def identity(cls):
        return cls(np.eye(3))

    @classmethod
    def exp(cls, w):
        return cls(exp_so3(w))

    def log(self):
        return log_so3(self.m)

    def compose(self, other):
        return Rotation3(self.m @ other.m)

    def inverse(self):
        return Rotation3(self.m.T)

    def act(self, x):
        return self.m @ np.asarray(x, dtype=float)

    __matmul__ = compose

    def __repr__(self):
        return f"Rotation3({self.m.tolist()!r})"


def _as_matrix(r):
    if isinstance(r, Rotation3):
        return r.m
    return np.asarray(r, dtype=float)
