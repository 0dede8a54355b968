"""Root systems: explicit constructions of the A-G families and axiom checks.

Coordinates of every constructed root are half-integers, so roots are stored
exactly as integer vectors scaled by 2 (``RootSystem.doubled``). Inner products
of doubled vectors are 4x the true ones, which keeps the integrality and
reflection axioms exact.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from liemech.errors import InvalidRank, InvariantViolation

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

ALLOWED_ANGLES = (0.0, 30.0, 45.0, 60.0, 90.0, 120.0, 135.0, 150.0, 180.0)


@dataclass(frozen=True, eq=False)
class RootSystem:
    doubled: np.ndarray
    family_label: tuple = None

    def __post_init__(self):
        d = np.array(self.doubled, dtype=np.int64)
        if d.ndim != 2 or d.shape[0] == 0:
            raise InvariantViolation("a root system needs a non-empty (N, n) array of roots")
        # canonical lexicographic order, duplicates removed
        d = np.unique(d, axis=0)
        d.setflags(write=False)
        object.__setattr__(self, "doubled", d)

    @classmethod
    def from_vectors(cls, vectors, family_label=None, tol=1e-9):
        v = 2.0 * np.asarray(vectors, dtype=float)
        r = np.rint(v)
        if np.max(np.abs(v - r), initial=0.0) > tol:
            raise InvariantViolation("root coordinates must be half-integers")
        return cls(r.astype(np.int64), family_label)

    @property
    def vectors(self):
        return self.doubled / 2.0

    @property
    def ambient_dim(self):
        return self.doubled.shape[1]

    @property
    def rank(self):
        return int(np.linalg.matrix_rank(self.doubled.astype(float)))

    def __len__(self):
        return self.doubled.shape[0]

    def as_set(self):
        return {tuple(r) for r in self.doubled.tolist()}


def _signed_pairs(n):
    """Doubled coordinates of all ``+-e_i +- e_j`` (i < j) in R^n."""
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            r = [0] * n
            r[i], r[j] = si, sj
            out.append(r)
    return out


def _signed_units(n, scale):
    out = []
    for i in range(n):
        for s in (scale, -scale):
            r = [0] * n
            r[i] = s
            out.append(r)
    return out


def _e8():
    roots = _signed_pairs(8)
    # half-integer roots need an even coordinate sum (even number of minus signs)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(list(signs))
    return np.array(roots, dtype=np.int64)


def _orthogonal_to(roots, fixed):
    return roots[roots @ fixed == 0]


def e8_fixed_roots():
    """The two roots whose hyperplanes cut E7 and E6 out of E8.

    The first is the lexicographically smallest root; the second is the
    lexicographically smallest root that is neither orthogonal nor parallel to it.
    """
    e8 = np.unique(_e8(), axis=0)
    alpha = e8[0]
    for beta in e8[1:]:
        if beta @ alpha != 0 and abs(beta @ alpha) != alpha @ alpha:
            return alpha, beta
    raise AssertionError("E8 has non-orthogonal root pairs")


def build_root_system(family, rank):
    """Explicit coordinate construction of the irreducible root system ``family`` of ``rank``."""
    family = str(family).upper()
    if family not in VALID_RANKS:
        raise InvalidRank(f"unknown root system family '{family}'")
    n = int(rank)
    if not VALID_RANKS[family](n):
        raise InvalidRank(f"rank {n} is not valid for family {family}")

    if family == "A":
        roots = []
        for i, j in itertools.permutations(range(n + 1), 2):
            r = [0] * (n + 1)
            r[i], r[j] = 2, -2
            roots.append(r)
    elif family == "B":
        roots = _signed_pairs(n) + _signed_units(n, 2)
    elif family == "C":
        roots = _signed_pairs(n) + _signed_units(n, 4)
    elif family == "D":
        roots = _signed_pairs(n)
    elif family == "E":
        roots = _e8()
        if n < 8:
            alpha, beta = e8_fixed_roots()
            roots = _orthogonal_to(roots, alpha)
            if n == 6:
                roots = _orthogonal_to(roots, beta)
    elif family == "F":
        roots = _signed_pairs(4) + _signed_units(4, 2)
        roots += [list(s) for s in itertools.product((1, -1), repeat=4)]
    else:  # G2: hexagram in the plane x + y + z = 0
        roots = []
        for i, j in itertools.permutations(range(3), 2):
            short = [0, 0, 0]
            short[i], short[j] = 2, -2
            roots.append(short)
        for i in range(3):
            for s in (1, -1):
                long_ = [-2 * s] * 3
                long_[i] = 4 * s
                roots.append(long_)
    return RootSystem(np.array(roots, dtype=np.int64), (family, n))


def expected_root_count(family, n):
    return {
        "A": n * n + n,
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n),
        "F": 48,
        "G": 12,
    }[family]


@dataclass(frozen=True)
class AxiomReport:
    multiples: bool
    reflection: bool
    integrality: bool
    worst_violation: float

    @property
    def ok(self):
        return self.multiples and self.reflection and self.integrality


def verify_root_system(rs, tol=1e-9):
    """Check the scalar-multiple, reflection-closure and integrality axioms."""
    d = rs.doubled
    g = d @ d.T  # 4 <a_i, a_j>
    norms = np.diag(g)
    worst = 0.0

    multiples = bool(np.all(norms > 0))
    if not multiples:
        worst = max(worst, 1.0)
    parallel = (g * g == np.outer(norms, norms))
    np.fill_diagonal(parallel, False)
    bad = parallel & ~((g == -norms[:, None]) & (norms[:, None] == norms[None, :]))
    if bad.any():
        multiples = False
        i, j = np.argwhere(bad)[0]
        worst = max(worst, abs(g[i, j] / norms[i]) - 1.0)

    safe = np.where(norms > 0, norms, 1)
    k = 2.0 * g / safe[None, :]  # k[i, j] = 2 <b_i, a_j> / <a_j, a_j>
    deviation = np.abs(k - np.rint(k))
    integrality = bool(deviation.max(initial=0.0) <= tol)
    worst = max(worst, float(deviation.max(initial=0.0)))

    images = d[:, None, :] - k[:, :, None] * d[None, :, :]
    rounded = np.rint(images)
    integral = np.max(np.abs(images - rounded), axis=2) <= tol
    found = np.isin(_row_keys(rounded.astype(np.int64).reshape(-1, d.shape[1])), _row_keys(d))
    found = found.reshape(integral.shape) & integral
    reflection = bool(found.all())
    if not reflection:
        for i, j in np.argwhere(~found):
            miss = np.min(np.linalg.norm(d - images[i, j][None, :], axis=1)) / 2.0
            worst = max(worst, float(miss))
    return AxiomReport(multiples, reflection, integrality, worst)


def _row_keys(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()


def reflect(alpha, beta):
    """Weyl reflection of ``beta`` in the hyperplane orthogonal to ``alpha``."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    return beta - 2.0 * (beta @ alpha) / (alpha @ alpha) * alpha


def root_angles(rs, merge=1e-6):
    """Sorted distinct pairwise angles (degrees) between roots, including 0 and 180.

    The Gram matrix is exact in integers, so the sine is formed as
    ``sqrt(|a|^2 |b|^2 - <a,b>^2)`` and the angle via ``atan2``, which stays
    accurate at 0 and 180 degrees where ``arccos`` loses half the digits.
    """
    d = rs.doubled
    g = d @ d.T
    n2 = np.diag(g)
    sin_scaled = np.sqrt((np.outer(n2, n2) - g * g).astype(float))
    angles = np.sort(np.degrees(np.arctan2(sin_scaled, g.astype(float))).ravel())
    distinct = [angles[0]]
    for a in angles[1:]:
        if a - distinct[-1] > merge:
            distinct.append(a)
    return [float(a) for a in distinct]
