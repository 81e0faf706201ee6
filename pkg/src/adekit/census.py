"""Exhaustive smallness census of 0/1 matrices up to row and column permutation."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .graphs import graph_from_bipartite, is_small_exact
from .linalg import as_rect_matrix

CANONICAL_MAX_ENTRIES = 30
CANONICAL_MAX_COLS = 8
CENSUS_MAX_ENTRIES = 20

Key = tuple[tuple[int, ...], ...]


def canonical_form(B) -> np.ndarray:
    """Lexicographically least row-major bit string over all row/column permutations.

    For each column permutation the rows are sorted ascending, which is the
    best row order for that choice of columns.
    """
    return np.array(_canonical_key(B), dtype=np.int64)


def _canonical_key(B) -> Key:
    B = as_rect_matrix(B)
    if (B > 1).any():
        raise ValueError("canonical form needs 0/1 entries")
    m, n = B.shape
    if m * n > CANONICAL_MAX_ENTRIES or n > CANONICAL_MAX_COLS:
        raise ValueError(f"{m} x {n} is too large for exhaustive canonicalization")
    rows = B.tolist()
    best = None
    for perm in permutations(range(n)):
        cand = tuple(sorted(tuple(r[j] for j in perm) for r in rows))
        if best is None or cand < best:
            best = cand
    return best


def is_small_operator(B) -> bool:
    """Non-negative integer entries and operator norm < 2, decided exactly."""
    B = as_rect_matrix(B)
    if (B >= 2).any():
        return False
    return is_small_exact(graph_from_bipartite(B))


def mask_to_matrix(mask: int, m: int, n: int) -> np.ndarray:
    """Row-major bit mask, most significant bit first, as an m x n 0/1 matrix."""
    bits = [(mask >> (m * n - 1 - k)) & 1 for k in range(m * n)]
    return np.array(bits, dtype=np.int64).reshape(m, n)


@dataclass
class CensusReport:
    m: int
    n: int
    total: int = 0
    small_count: int = 0
    # canonical key -> (orbit size seen, small?)
    classes: dict = field(default_factory=dict)

    @property
    def non_small_classes(self) -> list[tuple[np.ndarray, int]]:
        return [(np.array(k, dtype=np.int64), size) for k, (size, small) in sorted(self.classes.items()) if not small]

    @property
    def small_classes(self) -> list[tuple[np.ndarray, int]]:
        return [(np.array(k, dtype=np.int64), size) for k, (size, small) in sorted(self.classes.items()) if small]

    def merge(self, other: "CensusReport") -> "CensusReport":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("cannot merge census reports of different shapes")
        classes = dict(self.classes)
        for k, (size, small) in other.classes.items():
            if k in classes:
                classes[k] = (classes[k][0] + size, small)
            else:
                classes[k] = (size, small)
        return CensusReport(self.m, self.n, self.total + other.total, self.small_count + other.small_count, classes)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "total": self.total,
            "small": self.small_count,
            "non_small_classes": [{"matrix": mat.tolist(), "orbit_size": size} for mat, size in self.non_small_classes],
        }


def census_chunk(m: int, n: int, start: int, stop: int) -> CensusReport:
    """Census over masks in ``range(start, stop)``."""
    report = CensusReport(m, n)
    counts: Counter = Counter()
    verdict: dict = {}
    for mask in range(start, stop):
        key = _canonical_key(mask_to_matrix(mask, m, n))
        if key not in verdict:
            verdict[key] = is_small_operator(np.array(key, dtype=np.int64))
        counts[key] += 1
        report.total += 1
        report.small_count += verdict[key]
    report.classes = {k: (c, verdict[k]) for k, c in counts.items()}
    return report


def enumerate_census(m: int, n: int, max_entries: int = CENSUS_MAX_ENTRIES, workers: int = 1) -> CensusReport:
    """Count small matrices among all 2^(m n) 0/1 matrices and group the rest by class.

    Smallness is class-invariant, so each canonical class is decided once.
    With ``workers > 1`` the mask range is split into chunks merged additively.
    """
    if m < 1 or n < 1:
        raise ValueError("shape must be at least 1 x 1")
    if m * n > max_entries:
        raise ValueError(f"{m} x {n} census exceeds the guard of {max_entries} entries")
    total = 1 << (m * n)
    if workers <= 1:
        return census_chunk(m, n, 0, total)
    bounds = np.linspace(0, total, workers + 1, dtype=np.int64).tolist()
    report = CensusReport(m, n)
    with ProcessPoolExecutor(workers) as pool:
        futures = [pool.submit(census_chunk, m, n, a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
        for fut in futures:
            report = report.merge(fut.result())
    return report
