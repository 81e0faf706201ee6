# Quadratic forms, reflection groups and root systems
#
# The Gram matrix 2I - A is positive definite exactly for small graphs.  Then
# the roots {v : q(v) = 1} form a finite set, found two ways: by closing the
# simple roots under reflections, and by exact short-vector enumeration.

from adekit import graphs
from adekit.forms import (
    check_coxeter_relations,
    gram_of_graph,
    is_positive_definite,
    roots_by_closure,
    roots_by_sphere,
    weyl_order,
)

for fam, rank in [("A", 2), ("A", 5), ("D", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8)]:
    G = graphs.dynkin(fam, rank)
    closure = roots_by_closure(G)
    sphere = roots_by_sphere(G)
    print(f"{fam}{rank}: {len(sphere)} roots (methods agree: {closure == sphere}), "
          f"group order {weyl_order(G).order}, Coxeter relations hold: {check_coxeter_relations(G)}")

# a non-small graph: the form is not definite and the closure runs past any cap
T = graphs.cycle(3)
print("triangle definite?", is_positive_definite(gram_of_graph(T)))
print("triangle closure:", roots_by_closure(T, 10_000))
print("triangle group:", weyl_order(T, 10_000))
