"""Quick property self-test behind ``adekit check``."""
from __future__ import annotations

import numpy as np

from . import census, forms, graphs, linalg


def _forbidden_graphs():
    yield from (graphs.cycle(n) for n in range(3, 13))
    yield from (graphs.affine_d(n) for n in range(4, 11))
    yield from (graphs.tripod(*t) for t in [(2, 2, 2), (1, 3, 3), (1, 2, 5)])


def _ade_graphs():
    yield from (graphs.dynkin("A", n) for n in range(1, 13))
    yield from (graphs.dynkin("D", n) for n in range(4, 13))
    yield from (graphs.dynkin("E", n) for n in (6, 7, 8))


def check_census():
    r = census.enumerate_census(3, 2)
    return r.total == 64 and r.small_count == 54 and len(r.non_small_classes) == 3


def check_basic_norms():
    return all(
        abs(linalg.operator_norm(linalg.basic_matrix(m, n, i, j)) - 1.0) <= 1e-12
        for m in range(1, 5) for n in range(1, 5)
        for i in range(1, m + 1) for j in range(1, n + 1)
    )


def check_forbidden():
    for G in _forbidden_graphs():
        v = graphs.radius_two_witness(G)
        if v is None or not np.array_equal(G.adjacency @ v, 2 * v):
            return False
        if graphs.is_small_exact(G) or isinstance(graphs.classify_connected(G), graphs.ADELabel):
            return False
        if abs(linalg.spectral_radius(G.adjacency) - 2) > 1e-9:
            return False
    return True


def check_ade():
    for G in _ade_graphs():
        if not graphs.is_small_exact(G) or isinstance(graphs.classify_connected(G), graphs.NotSmall):
            return False
        if linalg.spectral_radius(G.adjacency) >= 2 - 1e-9:
            return False
    return True


def check_norm_transfer(trials=100, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        m, n = rng.integers(1, 7, size=2)
        B = rng.integers(0, 3, size=(m, n))
        a = linalg.operator_norm(B)
        if abs(a - linalg.operator_norm(B.T)) > 1e-9:
            return False
        if abs(a - np.sqrt(max(np.linalg.eigvalsh(B.T @ B).max(), 0))) > 1e-9:
            return False
    return True


def check_coxeter():
    return all(forms.check_coxeter_relations(G) for G in _ade_graphs())


def check_root_oracles():
    for fam, rank in [("A", 2), ("A", 5), ("D", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8)]:
        G = graphs.dynkin(fam, rank)
        if forms.roots_by_closure(G) != forms.roots_by_sphere(G):
            return False
    return True


def check_group_orders():
    want = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("D", 4): 192}
    for (fam, rank), order in want.items():
        G = graphs.dynkin(fam, rank)
        if forms.weyl_order(G) != forms.Finite(order) or forms.permutation_group_order(G) != forms.Finite(order):
            return False
    return isinstance(forms.weyl_order(graphs.cycle(3), 10_000), forms.CapExceeded)


CHECKS = [
    ("census 3x2 reproduces 64 / 54 / 3 classes", check_census),
    ("basic operators have norm 1", check_basic_norms),
    ("forbidden graphs have radius exactly 2", check_forbidden),
    ("ADE graphs are small", check_ade),
    ("norm transfer |B| = |B^T| = sqrt(rho(B^T B))", check_norm_transfer),
    ("Coxeter relations on ADE graphs", check_coxeter),
    ("closure and sphere root sets agree", check_root_oracles),
    ("Weyl group orders", check_group_orders),
]


def run_checks():
    """Yield ``(name, passed)`` for every self-test."""
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        yield name, ok
