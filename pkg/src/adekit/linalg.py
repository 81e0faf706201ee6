"""Operator norms, symmetric spectra and exact minors.

Floating-point routines here are for reporting and property checks only.
Decisions on the boundary ``norm == 2`` go through the exact integer path
(:func:`leading_principal_minors`).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

EIGEN_TOL = 1e-9
JACOBI_TOL = 1e-12
PERRON_MIN = 1e-8


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray


def as_rect_matrix(B) -> np.ndarray:
    """Validate and return ``B`` as a 2-d array of non-negative integers."""
    arr = np.asarray(B)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-d matrix, got shape {arr.shape}")
    if arr.dtype.kind == "f":
        if not np.all(arr == np.round(arr)):
            raise ValueError("matrix entries must be integers")
    elif arr.dtype.kind not in "iub":
        raise ValueError(f"matrix entries must be integers, got dtype {arr.dtype}")
    arr = arr.astype(np.int64)
    if (arr < 0).any():
        raise ValueError("matrix entries must be non-negative")
    return arr


def as_sym_matrix(A) -> np.ndarray:
    arr = np.asarray(A)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix is not symmetric")
    return arr


def basic_matrix(m: int, n: int, i: int, j: int) -> np.ndarray:
    """The m x n matrix with a single 1 at (i, j), 1-based."""
    if m < 1 or n < 1:
        raise ValueError("shape must be at least 1 x 1")
    if not (1 <= i <= m and 1 <= j <= n):
        raise ValueError(f"position ({i}, {j}) out of range for {m} x {n}")
    E = np.zeros((m, n), dtype=np.int64)
    E[i - 1, j - 1] = 1
    return E


def associated_symmetric(B) -> np.ndarray:
    """Block matrix ``[[0, B], [B.T, 0]]``."""
    B = as_rect_matrix(B)
    m, n = B.shape
    A = np.zeros((m + n, m + n), dtype=np.int64)
    A[:m, m:] = B
    A[m:, :m] = B.T
    return A


def jacobi_eigh(A, tol: float = JACOBI_TOL, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps the strict upper triangle in row-major order until the
    off-diagonal Frobenius norm is at most ``tol``.  Returns ``(values,
    vectors)`` with eigenvalues ascending and eigenvectors as columns.
    """
    a = np.array(as_sym_matrix(A), dtype=float)
    n = a.shape[0]
    V = np.eye(n)
    mask = ~np.eye(n, dtype=bool)

    def off(x):
        return float(np.sqrt(np.sum(x[mask] ** 2)))

    for _ in range(max_sweeps):
        if off(a) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    # theta^2 would overflow; the rotation is ~ 1 / (2 theta)
                    t = 0.5 / theta
                else:
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) rotation
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :]
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = V[:, p].copy()
                V[:, p] = c * vp - s * V[:, q]
                V[:, q] = s * vp + c * V[:, q]
    else:
        if off(a) > max(tol, 1e-9 * max(1.0, np.abs(a).max())):
            raise ArithmeticError("Jacobi iteration did not converge")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def spectral_radius(A) -> float:
    w, _ = jacobi_eigh(A)
    return float(np.max(np.abs(w)))


def operator_norm(B) -> float:
    """Operator 2-norm of ``B``, via the spectrum of its associated symmetric matrix."""
    return spectral_radius(associated_symmetric(B))


def rayleigh_quotient(A, x) -> float:
    A = as_sym_matrix(A)
    x = np.asarray(x, dtype=float)
    if x.shape != (A.shape[0],):
        raise ValueError(f"vector of length {x.shape} does not match dimension {A.shape[0]}")
    denom = float(x @ x)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector is undefined")
    return float(x @ (A @ x)) / denom


def max_eigenpair(A) -> EigenPair:
    """Largest (signed) eigenvalue with a unit eigenvector."""
    w, V = jacobi_eigh(A)
    v = V[:, -1]
    # fix the sign so results are reproducible
    k = int(np.argmax(np.abs(v)))
    if v[k] < 0:
        v = -v
    return EigenPair(float(w[-1]), v / np.linalg.norm(v))


def is_connected(A) -> bool:
    """Connectivity of the undirected graph with edges where ``A[i, j] != 0``."""
    A = np.asarray(A)
    n = A.shape[0]
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in np.flatnonzero(A[u]):
            v = int(v)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == n


def perron_vector(A) -> np.ndarray:
    """Strictly positive unit eigenvector for the spectral radius.

    Requires a non-negative, non-zero, irreducible (connected) symmetric matrix.
    """
    A = as_sym_matrix(A)
    if (A < 0).any():
        raise PreconditionError("Perron vector needs a non-negative matrix")
    if A.shape[0] > 1 and not A.any():
        raise PreconditionError("Perron vector needs a non-zero matrix")
    if not is_connected(A):
        raise PreconditionError("Perron vector needs an irreducible (connected) matrix")
    y = np.abs(max_eigenpair(A).vector)
    if y.min() <= PERRON_MIN:
        raise ArithmeticError(f"Perron vector not strictly positive (min entry {y.min():.3g})")
    return y / np.linalg.norm(y)


def leading_principal_minors(M) -> list[int]:
    """Exact determinants of the top-left k x k blocks, k = 1..dim.

    Fraction-free (Bareiss) elimination on Python integers.  Zero pivots are
    not skipped by pivoting, since the minors themselves are wanted; when a
    pivot vanishes the remaining minors fall back to direct Bareiss
    determinants of each block.
    """
    rows = [[int(x) for x in row] for row in np.asarray(M).tolist()]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    a = [r[:] for r in rows]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend(integer_determinant([r[:j] for r in rows[:j]]) for j in range(k + 2, n + 1))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def integer_determinant(M) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    a = [[int(x) for x in row] for row in np.asarray(M).tolist()]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_positive_definite_exact(M) -> bool:
    """Sylvester's criterion on exact integer minors."""
    return all(d > 0 for d in leading_principal_minors(M))
