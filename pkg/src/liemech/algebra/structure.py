"""Lie algebras given by structure constants; Killing form and semisimplicity."""

from dataclasses import dataclass

import numpy as np

from liemech.errors import InvariantViolation


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    """Finite-dimensional algebra with ``[e_i, e_j] = sum_k c[i, j, k] e_k``."""

    c: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=float)
        d = c.shape[0]
        if c.shape != (d, d, d) or d < 1:
            raise InvariantViolation(f"structure constants must have shape (d, d, d), got {c.shape}")
        if np.max(np.abs(c + c.transpose(1, 0, 2)), initial=0.0) > 1e-12:
            raise InvariantViolation("structure constants are not antisymmetric in (i, j)")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @property
    def dim(self):
        return self.c.shape[0]

    def bracket(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.c)

    def ad(self, x):
        """Matrix of ``y -> [x, y]``."""
        return np.einsum("i,ijk->kj", x, self.c)

    @classmethod
    def from_bracket(cls, bracket, dim):
        """Tabulate structure constants of a bilinear bracket on R^dim."""
        basis = np.eye(dim)
        c = np.array([[bracket(basis[i], basis[j]) for j in range(dim)] for i in range(dim)])
        return cls(c)


def jacobi_defect(alg):
    """Largest norm of ``[a,[b,c]] + [c,[a,b]] + [b,[c,a]]`` over basis triples.

    Accepts a :class:`StructureAlgebra` or a raw ``(d, d, d)`` array; the raw form
    skips the antisymmetry check so arbitrary perturbations can be measured.
    """
    c = alg.c if isinstance(alg, StructureAlgebra) else np.asarray(alg, dtype=float)
    # inner[i, j, m] = [e_i, e_j]_m ; outer bracket [e_a, w]_n = w_m c[a, m, n]
    t1 = np.einsum("jkm,imn->ijkn", c, c)  # [e_i, [e_j, e_k]]
    t2 = np.einsum("ijm,kmn->ijkn", c, c)  # [e_k, [e_i, e_j]]
    t3 = np.einsum("kim,jmn->ijkn", c, c)  # [e_j, [e_k, e_i]]
    return float(np.max(np.linalg.norm(t1 + t2 + t3, axis=-1), initial=0.0))


def killing_form(alg, x, y):
    """``B(x, y) = Tr(ad x ad y)``."""
    return float(np.trace(alg.ad(np.asarray(x, dtype=float)) @ alg.ad(np.asarray(y, dtype=float))))


def killing_matrix(alg):
    """Gram matrix of the Killing form on the basis."""
    return np.einsum("aik,bki->ab", alg.c, alg.c)


def is_semisimple(alg, tol=1e-9):
    """Killing-form nondegeneracy test: ``|det B| > tol``."""
    return bool(abs(np.linalg.det(killing_matrix(alg))) > tol)


def so3_algebra():
    c = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k] = 1.0
        c[j, i, k] = -1.0
    return StructureAlgebra(c)


def abelian_algebra(dim):
    return StructureAlgebra(np.zeros((dim, dim, dim)))


def se2_algebra():
    """Coordinates ``(xi, v1, v2)``."""
    from liemech.groups.se2 import se2_bracket

    def br(x, y):
        xi, v = se2_bracket((x[0], x[1:]), (y[0], y[1:]))
        return np.array([xi, *v])

    return StructureAlgebra.from_bracket(br, 3)


def se3_algebra():
    """Coordinates ``(w, v)``."""
    from liemech.groups.se3 import Twist, se3_bracket

    def br(x, y):
        return se3_bracket(Twist(x[:3], x[3:]), Twist(y[:3], y[3:])).as_vector()

    return StructureAlgebra.from_bracket(br, 6)


def sl2_algebra():
    """Basis ``(h, e, f)`` with ``[h,e] = 2e, [h,f] = -2f, [e,f] = h``."""
    c = np.zeros((3, 3, 3))
    c[0, 1, 1], c[1, 0, 1] = 2.0, -2.0
    c[0, 2, 2], c[2, 0, 2] = -2.0, 2.0
    c[1, 2, 0], c[2, 1, 0] = 1.0, -1.0
    return StructureAlgebra(c)
