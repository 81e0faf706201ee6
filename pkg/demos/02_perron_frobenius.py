# Rayleigh quotients and Perron vectors
#
# For a symmetric matrix the Rayleigh quotient never exceeds the largest
# eigenvalue; for a connected graph the top eigenvector can be chosen strictly
# positive, and removing any edge strictly lowers the spectral radius.

import numpy as np

from adekit import graphs, max_eigenpair, perron_vector, rayleigh_quotient, spectral_radius

G = graphs.tripod(1, 2, 4)          # the E8 graph
A = G.adjacency
top = max_eigenpair(A)
print("largest eigenvalue", top.value)

rng = np.random.default_rng(0)
samples = [rayleigh_quotient(A, rng.normal(size=G.n)) for _ in range(1000)]
print("max sampled Rayleigh quotient", max(samples), "<=", top.value)

y = perron_vector(A)
print("Perron vector", np.round(y, 4), "min entry", y.min())

for u, v in G.edges():
    B = A.copy()
    B[u, v] = B[v, u] = 0
    print(f"drop edge {u}-{v}: radius {spectral_radius(A):.6f} -> {spectral_radius(B):.6f}")
