"""Exhaustive generation of graphs up to isomorphism by brute force."""
from __future__ import annotations

from itertools import permutations, product

import numpy as np

from adekit.graphs import Graph, connected_components


def canonical_key(A: np.ndarray) -> tuple:
    """Least upper-triangle bit string over relabelings that sort vertices by degree profile."""
    n = A.shape[0]
    deg = A.sum(axis=1)
    profile = [(int(deg[v]), tuple(sorted(int(deg[u]) for u in np.flatnonzero(A[v])))) for v in range(n)]
    classes: dict = {}
    for v in range(n):
        classes.setdefault(profile[v], []).append(v)
    blocks = [classes[k] for k in sorted(classes)]
    iu = np.triu_indices(n, 1)
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        key = A[np.ix_(order, order)][iu].tobytes()
        if best is None or key < best:
            best = key
    return (n, best)


def all_graphs(n: int) -> list[np.ndarray]:
    """One adjacency matrix per isomorphism class on n vertices.

    Every graph on n vertices is a graph on n - 1 vertices plus one vertex
    joined by some neighbour mask, so extending each class by every mask
    and deduplicating is exhaustive.
    """
    if n == 0:
        return [np.zeros((0, 0), dtype=np.int64)]
    seen = {}
    for B in all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            A = np.zeros((n, n), dtype=np.int64)
            A[: n - 1, : n - 1] = B
            row = [(mask >> i) & 1 for i in range(n - 1)]
            A[n - 1, : n - 1] = row
            A[: n - 1, n - 1] = row
            seen.setdefault(canonical_key(A), A)
    return list(seen.values())


def connected_graphs(max_n: int) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        for A in all_graphs(n):
            G = Graph(A)
            if len(connected_components(G)) == 1:
                out.append(G)
    return out


def _bit_tables(n: int, perm) -> list[np.ndarray]:
    """Lookup tables sending 8-bit chunks of an edge mask to the relabeled mask."""
    pairs = list(zip(*np.triu_indices(n, 1)))
    pos = {p: k for k, p in enumerate(pairs)}
    target = [pos[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
    tables = []
    for lo in range(0, len(pairs), 8):
        width = min(8, len(pairs) - lo)
        t = np.zeros(1 << width, dtype=np.int64)
        for b in range(width):
            t[(np.arange(1 << width) >> b) & 1 == 1] |= 1 << target[lo + b]
        tables.append(t)
    return tables


def canonical_masks(n: int) -> np.ndarray:
    """Edge masks on n vertices that are least in their relabeling orbit.

    Bit k is the k-th upper-triangle pair in row-major order.  Every mask
    is tested against every vertex permutation; masks beaten by some
    relabeling are dropped as soon as that happens.
    """
    e = n * (n - 1) // 2
    alive = np.arange(1 << e, dtype=np.int64)
    for perm in permutations(range(n)):
        img = np.zeros_like(alive)
        for c, t in enumerate(_bit_tables(n, perm)):
            img |= t[(alive >> (8 * c)) & 0xFF]
        alive = alive[alive <= img]
    return alive


def connected_graphs_by_masks(max_n: int) -> list[Graph]:
    """Connected graphs up to isomorphism from the full adjacency-mask space."""
    out = []
    for n in range(1, max_n + 1):
        iu = np.triu_indices(n, 1)
        for mask in canonical_masks(n).tolist():
            A = np.zeros((n, n), dtype=np.int64)
            A[iu] = [(mask >> k) & 1 for k in range(len(iu[0]))]
            G = Graph(A + A.T)
            if len(connected_components(G)) == 1:
                out.append(G)
    return out
