"""Simple graphs, bicolored graphs and the ADE classification of small graphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .linalg import PreconditionError, as_rect_matrix, associated_symmetric, is_positive_definite_exact


class Graph:
    """Undirected graph without loops or multiple edges, stored as a 0/1 adjacency matrix."""

    __slots__ = ("adjacency",)

    def __init__(self, adjacency):
        A = np.array(adjacency, dtype=np.int64, copy=True)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {A.shape}")
        if not np.array_equal(A, A.T):
            raise ValueError("adjacency must be symmetric")
        if A.size and np.diag(A).any():
            raise ValueError(f"loop at vertex {int(np.flatnonzero(np.diag(A))[0])}")
        if ((A != 0) & (A != 1)).any():
            raise ValueError("adjacency entries must be 0 or 1")
        A.setflags(write=False)
        self.adjacency = A

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        A = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if A[u, v]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            A[u, v] = A[v, u] = 1
        return cls(A)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u), int(v)) for u, v in zip(iu, ju)]

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = list(vertices)
        return Graph(self.adjacency[np.ix_(idx, idx)])

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- standard families -----------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """Center 0 joined to ``leaves`` leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def tripod(p: int, q: int, r: int) -> Graph:
    """T(p, q, r): center vertex 0 and three legs of p, q and r vertices."""
    if min(p, q, r) < 1:
        raise ValueError("tripod legs need at least one vertex")
    edges = []
    nxt = 1
    for length in (p, q, r):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def affine_d(n: int) -> Graph:
    """The two-branch tree on n + 1 vertices (n >= 5); n = 4 gives the 4-leaf star."""
    if n == 4:
        return star(4)
    if n < 5:
        raise ValueError("two-branch graph needs n >= 4")
    inner = n - 3
    edges = [(i, i + 1) for i in range(inner - 1)]
    edges += [(0, inner), (0, inner + 1), (inner - 1, inner + 2), (inner - 1, inner + 3)]
    return Graph.from_edges(n + 1, edges)


def dynkin(family: str, rank: int) -> Graph:
    """Path for A, T(1, 1, rank-3) for D, T(1, 2, rank-4) for E."""
    if family == "A" and rank >= 1:
        return path(rank)
    if family == "D" and rank >= 4:
        return tripod(1, 1, rank - 3)
    if family == "E" and rank in (6, 7, 8):
        return tripod(1, 2, rank - 4)
    raise ValueError(f"no Dynkin graph {family}{rank}")


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    A = np.zeros((n, n), dtype=np.int64)
    k = 0
    for g in graphs:
        A[k:k + g.n, k:k + g.n] = g.adjacency
        k += g.n
    return Graph(A)


# -- bicolored graphs ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BicoloredGraph:
    """Bipartite graph given by a 0/1 matrix: rows are red vertices, columns blue."""

    matrix: np.ndarray

    def __post_init__(self):
        B = as_rect_matrix(self.matrix)
        if (B > 1).any():
            raise ValueError("a bicolored graph needs 0/1 entries")
        object.__setattr__(self, "matrix", B)

    @property
    def red_count(self) -> int:
        return self.matrix.shape[0]

    @property
    def blue_count(self) -> int:
        return self.matrix.shape[1]


def graph_from_bipartite(B) -> Graph:
    """Underlying graph of a bicolored graph; the first m vertices are red."""
    if not isinstance(B, BicoloredGraph):
        B = BicoloredGraph(B)
    return Graph(associated_symmetric(B.matrix))


def connected_components(G: Graph) -> list[tuple[Graph, list[int]]]:
    """Induced components with their vertex maps, ordered by smallest vertex."""
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in G.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        out.append((G.induced(comp), comp))
    return out


# -- classification --------------------------------------------------------

@dataclass(frozen=True, order=True)
class ADELabel:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"invalid ADE label {self.family}{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


WITNESS_KINDS = ("Cycle", "Degree4Vertex", "TwoBranchVertices", "BadTripod")


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: str
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class NotSmall:
    """Negative classification verdict; ``witness`` is None only for EntryTooLarge."""

    reason: str
    witness: ForbiddenWitness | None = None

    def __bool__(self):
        return False


@dataclass(frozen=True, order=True)
class Component:
    label: ADELabel
    vertices: tuple[int, ...]
    red: tuple[int, ...] = field(default=(), compare=False)
    blue: tuple[int, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        d = {"family": self.label.family, "rank": self.label.rank, "vertices": list(self.vertices)}
        if self.red or self.blue:
            d["red"] = list(self.red)
            d["blue"] = list(self.blue)
        return d


def _find_cycle(G: Graph) -> list[int] | None:
    """A cycle through the lowest possible start vertex, via iterative DFS."""
    parent = [-1] * G.n
    depth = [-1] * G.n
    for root in range(G.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [(root, iter(G.neighbors(root)))]
        while stack:
            u, it = stack[-1]
            for v in it:
                if v == parent[u]:
                    continue
                if depth[v] >= 0:
                    if depth[v] < depth[u]:
                        cyc = [u]
                        while cyc[-1] != v:
                            cyc.append(parent[cyc[-1]])
                        return cyc[::-1]
                    continue
                parent[v] = u
                depth[v] = depth[u] + 1
                stack.append((v, iter(G.neighbors(v))))
                break
            else:
                stack.pop()
    return None


def _tree_path(G: Graph, a: int, b: int) -> list[int]:
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v in G.neighbors(u):
            if v not in prev:
                prev[v] = u
                queue.append(v)
    out = [b]
    while out[-1] != a:
        out.append(prev[out[-1]])
    return out[::-1]


def _leg(G: Graph, center: int, first: int) -> list[int]:
    leg = [first]
    prev, cur = center, first
    while True:
        nxt = [v for v in G.neighbors(cur) if v != prev]
        if not nxt:
            return leg
        prev, cur = cur, nxt[0]
        leg.append(cur)


def classify_connected(G: Graph) -> ADELabel | NotSmall:
    if G.n < 1:
        raise PreconditionError("empty graph")
    if len(connected_components(G)) != 1:
        raise PreconditionError("graph is not connected")

    cyc = _find_cycle(G)
    if cyc is not None:
        return NotSmall("Cycle", ForbiddenWitness("Cycle", tuple(cyc)))

    deg = G.degrees()
    for v in range(G.n):
        if deg[v] >= 4:
            return NotSmall("Degree4Vertex", ForbiddenWitness("Degree4Vertex", (v, *G.neighbors(v)[:4])))

    branch = [v for v in range(G.n) if deg[v] == 3]
    if len(branch) >= 2:
        a, b = branch[0], branch[1]
        p = _tree_path(G, a, b)
        extra_a = [v for v in G.neighbors(a) if v != p[1]]
        extra_b = [v for v in G.neighbors(b) if v != p[-2]]
        verts = tuple(sorted(p + extra_a + extra_b))
        return NotSmall("TwoBranchVertices", ForbiddenWitness("TwoBranchVertices", verts))

    if not branch:
        return ADELabel("A", G.n)

    center = branch[0]
    legs = sorted((_leg(G, center, v) for v in G.neighbors(center)), key=lambda l: (len(l), l[0]))
    p, q, r = (len(l) for l in legs)
    if p == 1 and q == 1:
        return ADELabel("D", G.n)
    if p == 1 and q == 2 and r <= 4:
        return ADELabel("E", G.n)
    if p >= 2:
        keep = (2, 2, 2)
    elif q >= 3:
        keep = (1, 3, 3)
    else:
        keep = (1, 2, 5)
    verts = [center]
    for leg, k in zip(legs, keep):
        verts += leg[:k]
    return NotSmall("BadTripod", ForbiddenWitness("BadTripod", tuple(sorted(verts))))


def classify(G: Graph) -> list[Component] | NotSmall:
    """Per-component ADE labels in canonical order, or the first NotSmall verdict."""
    comps = []
    for sub, verts in connected_components(G):
        res = classify_connected(sub)
        if isinstance(res, NotSmall):
            w = res.witness
            return NotSmall(res.reason, ForbiddenWitness(w.kind, tuple(verts[i] for i in w.vertices)))
        comps.append(Component(res, tuple(verts)))
    return sorted(comps)


def classify_operator(B) -> list[Component] | NotSmall:
    """Classify the bicolored graph of a non-negative integer matrix."""
    B = as_rect_matrix(B)
    if (B >= 2).any():
        return NotSmall("EntryTooLarge")
    m = B.shape[0]
    res = classify(graph_from_bipartite(B))
    if isinstance(res, NotSmall):
        return res
    return [
        Component(c.label, c.vertices, tuple(v for v in c.vertices if v < m), tuple(v for v in c.vertices if v >= m))
        for c in res
    ]


def gram_matrix(G: Graph) -> np.ndarray:
    return 2 * np.eye(G.n, dtype=np.int64) - G.adjacency


def is_small_exact(G: Graph) -> bool:
    """Spectral radius < 2, decided by exact minors of 2I - A."""
    if G.n == 0:
        return True
    return is_positive_definite_exact(gram_matrix(G))


def integer_kernel(M) -> list[list[int]]:
    """Basis of the rational kernel of an integer matrix, as primitive integer vectors."""
    a = [[Fraction(int(x)) for x in row] for row in np.asarray(M).tolist()]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        basis.append([x // g for x in ints])
    return basis


def radius_two_witness(G: Graph) -> np.ndarray | None:
    """Strictly positive integer v with A v = 2 v, or None if there is none."""
    if G.n < 1 or len(connected_components(G)) != 1:
        raise PreconditionError("radius-two witness needs a connected graph")
    ker = integer_kernel(gram_matrix(G))
    if len(ker) != 1:
        return None
    v = ker[0]
    if v[0] < 0:
        v = [-x for x in v]
    if min(v) <= 0:
        return None
    return np.array(v, dtype=np.int64)
