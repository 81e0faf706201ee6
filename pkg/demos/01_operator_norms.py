# Operator norms of small integer matrices
#
# The operator norm of a rectangular matrix equals the spectral radius of the
# symmetric block matrix [[0, B], [B^T, 0]].  Here we compute a few norms and
# compare the exact smallness verdict with the floating-point one.

import numpy as np

from adekit import associated_symmetric, basic_matrix, operator_norm, spectral_radius
from adekit.census import is_small_operator

# every basic operator E_ij has norm 1
E = basic_matrix(3, 2, 2, 1)
print(E)
print("|E_21| =", operator_norm(E))

# the associated symmetric matrix and its spectrum
B = np.array([[1, 1], [1, 1], [1, 0]])
A = associated_symmetric(B)
print(A)
print("|B| =", operator_norm(B), " rho(A) =", spectral_radius(A))

# |B| = |B^T|, and both are sqrt of the top eigenvalue of B^T B
print("|B^T| =", operator_norm(B.T), " sqrt(max eig B^T B) =", np.sqrt(np.linalg.eigvalsh(B.T @ B).max()))

# at norm exactly 2 the float answer is ambiguous; the exact minors decide
boundary = np.array([[1, 1], [1, 1], [0, 0]])
print("norm", operator_norm(boundary), "-> small?", is_small_operator(boundary))
