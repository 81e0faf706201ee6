"""Quadratic forms, reflection groups and root systems attached to a graph.

Every graph X carries the even lattice Z^n with Gram matrix ``C = 2I - A``,
reflections ``s_x(v) = v - (v|x) x`` and the root set ``{v : q(v) = 1}``.
Finiteness is decided exactly by :func:`is_positive_definite`; the
enumeration routines stop at a cap, and hitting the cap is reported as a
value, not as a proof of infiniteness.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, gram_matrix
from .linalg import PreconditionError, leading_principal_minors

DEFAULT_ROOT_CAP = 10_000
DEFAULT_GROUP_CAP = 1_000_000

# BFS keeps coordinates in int64; finite root systems never get close.
_COORD_LIMIT = 2**40


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    gram: np.ndarray

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    def bilinear(self, v, w) -> int:
        v = _as_lattice_vector(v, self.dim)
        w = _as_lattice_vector(w, self.dim)
        return int(sum(int(a) * int(b) for a, b in zip(v, self.gram @ w)))


@dataclass(frozen=True)
class RootSet:
    roots: tuple[tuple[int, ...], ...]
    closed: bool = True

    def __len__(self):
        return len(self.roots)

    def __contains__(self, v):
        return tuple(int(x) for x in v) in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {r: i for i, r in enumerate(self.roots)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def as_array(self) -> np.ndarray:
        return np.array(self.roots, dtype=np.int64).reshape(len(self.roots), -1)


@dataclass(frozen=True)
class Finite:
    order: int


@dataclass(frozen=True)
class CapExceeded:
    cap: int

    def __bool__(self):
        return False


def _as_lattice_vector(v, dim: int) -> np.ndarray:
    arr = np.asarray(v)
    if arr.shape != (dim,):
        raise ValueError(f"vector of shape {arr.shape} does not match dimension {dim}")
    if arr.dtype.kind not in "iub":
        if not np.all(arr == np.round(arr)):
            raise ValueError("lattice vectors need integer coordinates")
    return arr.astype(np.int64)


def gram_of_graph(G: Graph) -> QuadraticForm:
    C = gram_matrix(G)
    C.setflags(write=False)
    return QuadraticForm(C)


def q_eval(f: QuadraticForm, v) -> int:
    """q(v) = (v|v) / 2, exact."""
    return f.bilinear(v, v) // 2


def is_positive_definite(f: QuadraticForm) -> bool:
    if f.dim == 0:
        return True
    return all(d > 0 for d in leading_principal_minors(f.gram))


def reflection(G: Graph, x: int) -> np.ndarray:
    """Matrix of s_x on column coordinate vectors: ``I - e_x (row x of C)``."""
    if not 0 <= x < G.n:
        raise ValueError(f"vertex {x} out of range for {G.n} vertices")
    C = gram_matrix(G)
    S = np.eye(G.n, dtype=np.int64)
    S[x] -= C[x]
    return S


def reflections(G: Graph) -> list[np.ndarray]:
    return [reflection(G, x) for x in range(G.n)]


def _matrix_order(P: np.ndarray, limit: int = 12) -> int | None:
    I = np.eye(P.shape[0], dtype=np.int64)
    Q = P.copy()
    for k in range(1, limit + 1):
        if np.array_equal(Q, I):
            return k
        Q = Q @ P
    return None


def check_coxeter_relations(G: Graph) -> bool:
    """Involutions, order 3 for s_y s_x on edges and order 2 off edges."""
    S = reflections(G)
    I = np.eye(G.n, dtype=np.int64)
    if not all(np.array_equal(s @ s, I) for s in S):
        return False
    for x in range(G.n):
        for y in range(x + 1, G.n):
            want = 3 if G.adjacency[x, y] else 2
            if _matrix_order(S[y] @ S[x]) != want:
                return False
    return True


# -- orbit enumeration ---------------------------------------------------------

def _row_keys(*arrays: np.ndarray) -> list[np.ndarray]:
    """Comparable 1-D keys for the rows of each array, on a shared encoding.

    Rows pack into one int64 by mixed radix when the coordinate spread
    allows; otherwise they fall back to opaque byte strings.
    """
    stacked = np.vstack(arrays)
    if stacked.size:
        lo = stacked.min(axis=0)
        span = stacked.max(axis=0) - lo + 1
        if float(np.prod(span.astype(np.float64))) < 2.0**62:
            radix = np.cumprod(np.concatenate([[1], span[:0:-1]]))[::-1]
            return [(a - lo) @ radix for a in arrays]
    out = []
    for a in arrays:
        a = np.ascontiguousarray(a)
        out.append(a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel())
    return out


def _unique_rows(a: np.ndarray) -> np.ndarray:
    (keys,) = _row_keys(a)
    _, idx = np.unique(keys, return_index=True)
    return a[np.sort(idx)]


def orbit_bfs(start, generators, cap: int) -> np.ndarray | None:
    """Orbit of the rows of ``start`` under integer involutions, or None past ``cap``.

    Vectors are rows; generator ``S`` maps ``v`` to ``S @ v``.  Since each
    generator is an involution, a vector first reached at depth d has all
    its images at depth d - 1, d or d + 1, so new candidates only need to be
    checked against the previous two layers.
    """
    gens_t = [np.ascontiguousarray(np.asarray(S, dtype=np.int64).T) for S in generators]
    cur = _unique_rows(np.atleast_2d(np.asarray(start, dtype=np.int64)))
    if len(cur) > cap:
        return None
    layers = [cur]
    total = len(cur)
    prev = cur[:0]
    while len(cur):
        cand = _unique_rows(np.vstack([cur @ St for St in gens_t]))
        if np.abs(cand).max(initial=0) > _COORD_LIMIT:
            raise OverflowError("orbit coordinates left the int64-safe range")
        known, ckeys = _row_keys(np.vstack([prev, cur]), cand)
        new = cand[~np.isin(ckeys, known)]
        total += len(new)
        if total > cap:
            return None
        prev, cur = cur, new
        layers.append(new)
    return np.vstack(layers)


def _sorted_rootset(arr: np.ndarray) -> RootSet:
    return RootSet(tuple(sorted(tuple(int(x) for x in row) for row in arr)))


def roots_by_closure(G: Graph, cap: int = DEFAULT_ROOT_CAP) -> RootSet | CapExceeded:
    """Close the simple roots and their negatives under all reflections."""
    if cap < G.n:
        raise ValueError("cap must be at least the number of vertices")
    if G.n == 0:
        return RootSet(())
    I = np.eye(G.n, dtype=np.int64)
    orbit = orbit_bfs(np.vstack([I, -I]), reflections(G), cap)
    if orbit is None:
        return CapExceeded(cap)
    return _sorted_rootset(orbit)


def _fincke_pohst_coefficients(gram) -> list[list[Fraction]]:
    """Exact ``Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2`` decomposition."""
    n = len(gram)
    q = [[Fraction(int(x)) for x in row] for row in np.asarray(gram).tolist()]
    for i in range(n):
        if q[i][i] <= 0:
            raise PreconditionError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _integer_window(center: Fraction, bound: Fraction) -> range:
    """Integers t with (t + center)^2 <= bound, bound >= 0."""
    s = math.sqrt(float(bound))
    lo = math.floor(-center - s) - 1
    hi = math.ceil(-center + s) + 1
    while (lo + center) ** 2 > bound and lo <= hi:
        lo += 1
    while (hi + center) ** 2 > bound and hi >= lo:
        hi -= 1
    return range(lo, hi + 1)


def short_vectors(gram, bound: int) -> list[tuple[int, ...]]:
    """All nonzero integer v with v^T gram v <= bound, for a positive definite gram."""
    q = _fincke_pohst_coefficients(gram)
    n = len(q)
    out = []
    x = [0] * n

    def descend(i: int, remaining: Fraction):
        center = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for t in _integer_window(center, remaining / q[i][i]):
            x[i] = t
            rest = remaining - q[i][i] * (t + center) ** 2
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                descend(i - 1, rest)
        x[i] = 0

    descend(n - 1, Fraction(bound))
    return out


def roots_by_sphere(G: Graph) -> RootSet:
    """All v with q(v) = 1, by exact bounded search over a positive definite form."""
    f = gram_of_graph(G)
    if not is_positive_definite(f):
        raise PreconditionError("root set is infinite: form is not positive definite")
    if G.n == 0:
        return RootSet(())
    C = f.gram
    roots = [v for v in short_vectors(C, 2) if int(np.array(v) @ C @ np.array(v)) == 2]
    return RootSet(tuple(sorted(roots)))


# -- group orders --------------------------------------------------------------

def _coset_order(C: np.ndarray, cap: int) -> int | None:
    """|W| = |orbit of a fundamental weight| * |parabolic stabilizer|, recursively.

    Valid only when W is already known to be finite.  Weights use
    fundamental-weight coordinates, where s_j acts by ``I - C[:, j] e_j^T``.
    """
    order = 1
    while C.shape[0]:
        n = C.shape[0]
        deg = (C != 0).sum(axis=1) - 1
        s = int(np.argmin(deg))
        gens = []
        for j in range(n):
            W = np.eye(n, dtype=np.int64)
            W[:, j] -= C[:, j]
            gens.append(W)
        orbit = orbit_bfs(np.eye(n, dtype=np.int64)[s], gens, cap)
        if orbit is None:
            return None
        order *= len(orbit)
        keep = [i for i in range(n) if i != s]
        C = C[np.ix_(keep, keep)]
    return order


def weyl_order(G: Graph, cap: int = DEFAULT_GROUP_CAP, root_cap: int = DEFAULT_ROOT_CAP) -> Finite | CapExceeded:
    """Order of the reflection group, or CapExceeded.

    The root closure must terminate within ``root_cap`` first; a finite root
    set spanning the lattice makes the group finite, after which the order
    is the product of fundamental-weight orbit sizes along a chain of
    parabolic subgroups, each orbit enumerated within ``cap`` vectors.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if G.n == 0:
        return Finite(1)
    roots = roots_by_closure(G, max(root_cap, G.n))
    if isinstance(roots, CapExceeded):
        return CapExceeded(cap)
    order = _coset_order(gram_matrix(G), cap)
    if order is None:
        return CapExceeded(cap)
    return Finite(order)


def root_permutations(roots: RootSet, generators) -> list[np.ndarray]:
    """Each generator as a permutation of ``roots.roots`` (index i -> perm[i])."""
    arr = roots.as_array()
    idx = roots._index
    perms = []
    for S in generators:
        img = arr @ np.asarray(S).T
        perms.append(np.array([idx[tuple(int(x) for x in row)] for row in img], dtype=np.int32))
    return perms


def _cayley_bfs(identity: np.ndarray, generators, compose, cap: int) -> int | None:
    seen = {identity.tobytes()}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = compose(g, s)
            key = h.tobytes()
            if key not in seen:
                seen.add(key)
                if len(seen) > cap:
                    return None
                queue.append(h)
    return len(seen)


def permutation_group_order(G: Graph, cap: int = DEFAULT_GROUP_CAP, root_cap: int = DEFAULT_ROOT_CAP) -> Finite | CapExceeded:
    """Plain BFS over the group generated by the reflections as root permutations."""
    roots = roots_by_closure(G, max(root_cap, G.n))
    if isinstance(roots, CapExceeded):
        return CapExceeded(cap)
    perms = root_permutations(roots, reflections(G))
    e = np.arange(len(roots), dtype=np.int32)
    k = _cayley_bfs(e, perms, lambda g, s: g[s], cap)
    return CapExceeded(cap) if k is None else Finite(k)


def matrix_group_order(G: Graph, cap: int = 100_000) -> Finite | CapExceeded:
    """Plain BFS over products of reflection matrices; a small-case oracle."""
    e = np.eye(G.n, dtype=np.int64)
    k = _cayley_bfs(e, reflections(G), lambda g, s: g @ s, cap)
    return CapExceeded(cap) if k is None else Finite(k)
