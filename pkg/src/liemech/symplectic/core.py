"""Phase space ``z = (q, p)`` with the canonical form ``J = [[0, I], [-I, 0]]``."""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from liemech.dynamics.integrate import integrate_ode
from liemech.errors import OddDimension, ValidationError


def symplectic_form(n):
    """The ``2n x 2n`` matrix ``J`` for ``n`` degrees of freedom."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


@dataclass(frozen=True, eq=False)
class SymplecticForm:
    n: int

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValidationError(f"degrees of freedom must be positive, got {self.n}")

    @property
    def j(self):
        return symplectic_form(self.n)


@dataclass(frozen=True, eq=False)
class PhasePoint:
    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        q = np.array(self.q, dtype=float).reshape(-1)
        p = np.array(self.p, dtype=float).reshape(-1)
        if q.shape != p.shape:
            raise ValidationError("q and p must have the same length")
        if not (np.all(np.isfinite(q)) and np.all(np.isfinite(p))):
            raise ValidationError("phase point has non-finite entries")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)

    def as_vector(self):
        return np.concatenate([self.q, self.p])

    @classmethod
    def from_vector(cls, z):
        z = np.asarray(z, dtype=float)
        n = _half(len(z))
        return cls(z[:n], z[n:])


def _half(size):
    if size % 2:
        raise OddDimension(f"phase space dimension must be even, got {size}")
    return size // 2


def _square_even(a):
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise OddDimension(f"expected a square matrix, got shape {a.shape}")
    _half(a.shape[0])
    return a


def is_symplectic(a, tol=1e-10):
    """``(passes, |a^T J a - J|_F)``."""
    a = _square_even(a)
    j = symplectic_form(a.shape[0] // 2)
    residual = float(np.linalg.norm(a.T @ j @ a - j))
    return residual <= tol, residual


def sp_algebra_residual(a):
    """``|a^T J + J a|_F``; zero exactly on the symplectic Lie algebra."""
    a = _square_even(a)
    j = symplectic_form(a.shape[0] // 2)
    return float(np.linalg.norm(a.T @ j + j @ a))


def _as_vector(z):
    return z.as_vector() if isinstance(z, PhasePoint) else np.asarray(z, dtype=float)


def hamiltonian_rhs(grad_h, z):
    """Canonical vector field ``z' = J grad H(z)``; ``grad_h`` receives the flat ``(q, p)`` vector."""
    g = np.asarray(grad_h(_as_vector(z)), dtype=float)
    n = _half(len(g))
    # J g without forming J: (dH/dp, -dH/dq)
    return np.concatenate([g[n:], -g[:n]])


def harmonic_potential(k=1.0):
    """``V = k/2 |q|^2`` and its gradient."""
    return (lambda q: 0.5 * k * float(np.dot(q, q)), lambda q: k * np.asarray(q, dtype=float))


def central_potential(u, du):
    """``V = u(|q|)`` with gradient ``u'(r) q / r`` (zero at the origin)."""

    def grad(q):
        q = np.asarray(q, dtype=float)
        r = float(np.linalg.norm(q))
        return np.zeros_like(q) if r == 0.0 else du(r) / r * q

    return (lambda q: u(float(np.linalg.norm(q))), grad)


@dataclass(frozen=True, eq=False)
class ParticleHamiltonian:
    """``H = |p|^2 / 2m + V(q)`` with an analytic gradient."""

    m: float
    potential: Callable
    potential_grad: Callable

    def __post_init__(self):
        if not self.m > 0:
            raise ValidationError(f"mass must be positive, got {self.m!r}")

    def __call__(self, z):
        zv = _as_vector(z)
        n = _half(len(zv))
        q, p = zv[:n], zv[n:]
        return float(p @ p) / (2.0 * self.m) + float(self.potential(q))

    def grad(self, z):
        zv = _as_vector(z)
        n = _half(len(zv))
        q, p = zv[:n], zv[n:]
        return np.concatenate([np.asarray(self.potential_grad(q), dtype=float), p / self.m])

    def rhs(self, z):
        return hamiltonian_rhs(self.grad, z)


def particle_hamiltonian(m, potential=None, potential_grad=None):
    """Particle Hamiltonian; ``potential=None`` is the free particle."""
    if potential is None:
        potential, potential_grad = (lambda q: 0.0), (lambda q: np.zeros_like(np.asarray(q, dtype=float)))
    elif potential_grad is None:
        raise ValidationError("an analytic potential gradient is required")
    return ParticleHamiltonian(float(m), potential, potential_grad)


def hamiltonian_flow(ham, z0, dt, steps, method="rk4"):
    """Samples of ``z' = J grad H`` with the shared one-step integrator."""
    grad = ham.grad if hasattr(ham, "grad") else ham
    return integrate_ode(lambda t, z: hamiltonian_rhs(grad, z), _as_vector(z0), dt, steps, method)


def numerical_jacobian(f, z, h=1e-6):
    """Central-difference Jacobian with per-component step ``h``."""
    z = _as_vector(z)
    cols = []
    for i in range(z.size):
        e = np.zeros_like(z)
        e[i] = h
        cols.append((np.asarray(f(z + e), dtype=float) - np.asarray(f(z - e), dtype=float)) / (2.0 * h))
    return np.array(cols).T


def canonical_check(f, z, tol=1e-8, h=1e-6):
    """Is the map ``f`` canonical at ``z``? ``(passes, residual)`` of its Jacobian."""
    return is_symplectic(numerical_jacobian(f, z, h), tol)


def monodromy(s, t=1.0, dt=1e-3):
    """Fundamental matrix at time ``t`` of ``z' = J S z`` (``S`` the Hessian of a quadratic H)."""
    s = _square_even(s)
    k = s.shape[0]
    js = symplectic_form(k // 2) @ s
    steps = max(1, int(round(t / dt)))
    h = t / steps
    out = integrate_ode(lambda _, y: (js @ y.reshape(k, k)).ravel(), np.eye(k).ravel(), h, steps)
    return out[-1].reshape(k, k)
