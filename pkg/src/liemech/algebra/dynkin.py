"""Bases of root systems, Cartan matrices and Dynkin diagrams.

Node indices are 0-based in Python objects and 1-based in the text export,
matching the usual ``A_12`` notation for Cartan entries.
"""

import re
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from liemech.errors import (
    Inadmissible,
    InvariantViolation,
    NonIntegerEntry,
    NotIrreducible,
    ParseError,
    Unclassifiable,
)


def _height_functional(n):
    """Generic functional ``f(x) = sum pi**i x_i``; irrational weights avoid ties."""
    return np.pi ** np.arange(n)


def _keys(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()


def _components(adj):
    k = len(adj)
    seen = [False] * k
    comps = []
    for s in range(k):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _bfs_order(adj, coords):
    """Breadth-first from the lowest-degree node, ties broken lexicographically."""
    k = len(adj)
    rank_key = {i: tuple(coords[i]) for i in range(k)}
    order, placed = [], [False] * k
    while len(order) < k:
        start = min((i for i in range(k) if not placed[i]),
                    key=lambda i: (len(adj[i]), rank_key[i]))
        queue = deque([start])
        placed[start] = True
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in sorted(adj[u], key=lambda i: rank_key[i]):
                if not placed[v]:
                    placed[v] = True
                    queue.append(v)
    return order


def simple_roots(rs, require_irreducible=True, tol=1e-9):
    """Ordered base of ``rs`` (as float vectors, one per row)."""
    d = rs.doubled
    heights = d @ _height_functional(d.shape[1])
    pos = d[heights > 0]
    sums = (pos[:, None, :] + pos[None, :, :]).reshape(-1, d.shape[1])
    decomposable = np.isin(_keys(pos), _keys(sums))
    base = pos[~decomposable]

    g = base @ base.T
    adj = [[j for j in range(len(base)) if j != i and g[i, j] != 0] for i in range(len(base))]
    if require_irreducible and len(_components(adj)) > 1:
        raise NotIrreducible("the root system splits into orthogonal components")
    base = base[_bfs_order(adj, base.tolist())]

    vecs = base / 2.0
    if len(vecs) != rs.rank:
        raise InvariantViolation(f"base has {len(vecs)} roots but the rank is {rs.rank}")
    coeffs, *_ = np.linalg.lstsq(vecs.T, rs.vectors.T, rcond=None)
    coeffs = coeffs.T
    if np.max(np.abs(coeffs @ vecs - rs.vectors), initial=0.0) > tol:
        raise InvariantViolation("base does not span the roots")
    mixed = (coeffs.max(axis=1) > tol) & (coeffs.min(axis=1) < -tol)
    if mixed.any():
        raise InvariantViolation("a root has coefficients of both signs in the base")
    return vecs


@dataclass(frozen=True, eq=False)
class CartanMatrix:
    """Integer matrix ``a[i, j] = 2 <d_i, d_j> / |d_i|^2`` over an ordered base."""

    a: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=np.int64)
        k = a.shape[0]
        if a.shape != (k, k) or k == 0:
            raise InvariantViolation(f"Cartan matrix must be square, got shape {a.shape}")
        if not np.all(np.diag(a) == 2):
            raise InvariantViolation("Cartan matrix diagonal must be all 2")
        off = a[~np.eye(k, dtype=bool)]
        if not np.all(np.isin(off, (0, -1, -2, -3))):
            raise InvariantViolation("off-diagonal Cartan entries must lie in {0, -1, -2, -3}")
        if not np.array_equal(a == 0, a.T == 0):
            raise InvariantViolation("a[i, j] = 0 must imply a[j, i] = 0")
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def size(self):
        return self.a.shape[0]


def cartan_matrix(delta, tol=1e-9):
    delta = np.asarray(delta, dtype=float)
    g = delta @ delta.T
    raw = 2.0 * g / np.diag(g)[:, None]
    a = np.rint(raw)
    residual = float(np.max(np.abs(raw - a), initial=0.0))
    if residual >= tol:
        raise NonIntegerEntry(f"Cartan entry is not an integer (residual {residual:.3g})")
    return CartanMatrix(a.astype(np.int64))


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    multiplicity: int
    # (from, to) pointing from the longer root to the shorter one, multi-edges only
    arrow: tuple = None


@dataclass(frozen=True, eq=False)
class DynkinDiagram:
    nodes: int
    edges: tuple
    coords: tuple = field(default=None)

    def neighbours(self):
        adj = [[] for _ in range(self.nodes)]
        for e in self.edges:
            adj[e.i].append(e.j)
            adj[e.j].append(e.i)
        return adj

    def lines(self):
        """Total number of lines at each node."""
        out = [0] * self.nodes
        for e in self.edges:
            out[e.i] += e.multiplicity
            out[e.j] += e.multiplicity
        return out

    def remove_node(self, r):
        keep = [i for i in range(self.nodes) if i != r]
        new = {old: n for n, old in enumerate(keep)}
        edges = []
        for e in self.edges:
            if r in (e.i, e.j):
                continue
            arrow = None if e.arrow is None else (new[e.arrow[0]], new[e.arrow[1]])
            edges.append(Edge(new[e.i], new[e.j], e.multiplicity, arrow))
        coords = None if self.coords is None else tuple(self.coords[i] for i in keep)
        return DynkinDiagram(len(keep), tuple(edges), coords)


def check_admissible(d):
    """Raise ``Inadmissible`` naming the first violated rule (2 to 5)."""
    adj = d.neighbours()
    for comp in _components(adj):
        members = set(comp)
        n_edges = sum(1 for e in d.edges if e.i in members)
        if n_edges >= len(comp):
            raise Inadmissible(2, f"nodes {comp} contain a loop")
    # checked before rule 3, which any such component also breaks
    for e in d.edges:
        if e.multiplicity == 3:
            comp = next(c for c in _components(adj) if e.i in c)
            if len(comp) != 2:
                raise Inadmissible(5, f"triple line in a component of {len(comp)} nodes")
    lines = d.lines()
    for i, n in enumerate(lines):
        if n > 3:
            raise Inadmissible(3, f"node {i} has {n} lines")

    # rule 4: collapse any chain joined by single lines; the merged node keeps <= 3 lines
    single = [[] for _ in range(d.nodes)]
    for e in d.edges:
        if e.multiplicity == 1:
            single[e.i].append(e.j)
            single[e.j].append(e.i)
    for start in range(d.nodes):
        parent = {start: None}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            path = []
            w = u
            while w is not None:
                path.append(w)
                w = parent[w]
            inside = set(path)
            outside = sum(e.multiplicity for e in d.edges if (e.i in inside) != (e.j in inside))
            if len(path) > 1 and outside > 3:
                raise Inadmissible(4, f"collapsing chain {sorted(path)} leaves {outside} lines")
            for v in single[u]:
                if v not in parent:
                    parent[v] = u
                    queue.append(v)



def dynkin_diagram(cm, delta=None, tol=1e-9):
    """Diagram of a Cartan matrix; ``delta`` (the base) adds a 4cos^2 cross-check."""
    a = cm.a
    k = cm.size
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            n = int(a[i, j] * a[j, i])
            if n == 0:
                continue
            arrow = None
            if n > 1:
                # |a[i, j]| = 2|<.,.>| / |d_i|^2 is the smaller one for the longer root
                arrow = (i, j) if abs(a[i, j]) < abs(a[j, i]) else (j, i)
            edges.append(Edge(i, j, n, arrow))
    coords = None
    if delta is not None:
        delta = np.asarray(delta, dtype=float)
        g = delta @ delta.T
        nrm = np.diag(g)
        four_cos2 = 4.0 * g * g / np.outer(nrm, nrm)
        mult = np.zeros((k, k))
        for e in edges:
            mult[e.i, e.j] = mult[e.j, e.i] = e.multiplicity
        np.fill_diagonal(mult, 4.0)
        if np.max(np.abs(four_cos2 - mult)) >= tol:
            raise InvariantViolation("edge multiplicities disagree with 4 cos^2 of root angles")
        coords = tuple(tuple(float(x) for x in row) for row in delta)
    d = DynkinDiagram(k, tuple(edges), coords)
    check_admissible(d)
    return d


def _classify_component(d, comp):
    members = set(comp)
    edges = [e for e in d.edges if e.i in members]
    k = len(comp)
    if k == 1:
        return ("A", 1)
    adj = {i: [] for i in comp}
    for e in edges:
        adj[e.i].append(e.j)
        adj[e.j].append(e.i)
    degree = {i: len(adj[i]) for i in comp}
    multi = [e for e in edges if e.multiplicity > 1]

    if any(e.multiplicity == 3 for e in multi):
        if k == 2:
            return ("G", 2)
        raise Unclassifiable("triple line outside G2")
    if len(multi) > 1:
        raise Unclassifiable("more than one multiple edge")
    if multi:
        if max(degree.values()) > 2:
            raise Unclassifiable("branch node together with a double edge")
        e = multi[0]
        if k == 2:
            return ("B", 2)
        ends = [i for i in (e.i, e.j) if degree[i] == 1]
        if ends:
            end = ends[0]
            # B_k has its single short root at the end of the chain
            return ("B", k) if e.arrow[1] == end else ("C", k)
        if k == 4:
            return ("F", 4)
        raise Unclassifiable(f"double edge inside a chain of {k} nodes")

    branches = [i for i in comp if degree[i] == 3]
    if not branches:
        return ("A", k)
    if len(branches) > 1:
        raise Unclassifiable("more than one branch node")
    b = branches[0]
    arms = []
    for first in adj[b]:
        length, prev, cur = 1, b, first
        while degree[cur] == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms[:2] == (1, 1):
        return ("D", arms[2] + 3)
    named = {(1, 2, 2): ("E", 6), (1, 2, 3): ("E", 7), (1, 2, 4): ("E", 8)}
    if arms in named:
        return named[arms]
    raise Unclassifiable(f"branch arms {arms} are not in the A-G list")


def classify_diagram(d):
    """``(family, rank)`` for each connected component, ordered by lowest node index."""
    check_admissible(d)
    return [_classify_component(d, comp) for comp in _components(d.neighbours())]


def classify_root_system(rs):
    base = simple_roots(rs)
    return classify_diagram(dynkin_diagram(cartan_matrix(base), base))[0]


def _fmt(x):
    return repr(float(x))


def diagram_to_text(d):
    lines = []
    for i in range(d.nodes):
        if d.coords is None:
            lines.append(f"node {i + 1}")
        else:
            lines.append(f"node {i + 1}: " + " ".join(_fmt(x) for x in d.coords[i]))
    for e in d.edges:
        s = f"{e.i + 1} - {e.j + 1} x{e.multiplicity}"
        if e.arrow is not None:
            s += f" arrow {e.arrow[0] + 1}>{e.arrow[1] + 1}"
        lines.append(s)
    return "\n".join(lines) + "\n"


_NODE = re.compile(r"^node (\d+)(?::\s*(.*))?$")
_EDGE = re.compile(r"^(\d+) - (\d+) x([123])(?: arrow (\d+)>(\d+))?$")


def diagram_from_text(text):
    """Inverse of :func:`diagram_to_text`; checks admissibility."""
    nodes, coords, edges = 0, [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        m = _NODE.match(line)
        if m:
            if int(m.group(1)) != nodes + 1:
                raise ParseError("nodes must be numbered 1, 2, ... in order", lineno, 1)
            nodes += 1
            if m.group(2) is not None:
                coords.append(tuple(float(x) for x in m.group(2).split()))
            continue
        m = _EDGE.match(line)
        if not m:
            raise ParseError(f"unrecognised diagram line '{line}'", lineno, 1)
        i, j, n = int(m.group(1)) - 1, int(m.group(2)) - 1, int(m.group(3))
        if not (0 <= i < nodes and 0 <= j < nodes) or i == j:
            raise ParseError("edge refers to an unknown node", lineno, 1)
        arrow = None
        if m.group(4) is not None:
            arrow = (int(m.group(4)) - 1, int(m.group(5)) - 1)
            if set(arrow) != {i, j}:
                raise ParseError("arrow endpoints must match the edge", lineno, 1)
        if (n > 1) != (arrow is not None):
            raise ParseError("multi-edges carry an arrow and single edges do not", lineno, 1)
        edges.append(Edge(i, j, n, arrow))
    d = DynkinDiagram(nodes, tuple(edges), tuple(coords) if coords else None)
    check_admissible(d)
    return d
