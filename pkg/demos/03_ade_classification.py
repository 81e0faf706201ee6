# Classifying small graphs
#
# A connected graph with spectral radius below 2 is a path (A_n), a tripod
# T(1,1,n-3) (D_n), or one of T(1,2,2), T(1,2,3), T(1,2,4) (E_6, E_7, E_8).
# Anything else contains a forbidden subgraph of radius exactly 2.

import json

from adekit import graphs
from adekit.graphs import classify, classify_operator, is_small_exact, radius_two_witness
from adekit.io import classification_to_dict

G = graphs.disjoint_union(graphs.dynkin("E", 7), graphs.path(3), graphs.dynkin("D", 5))
print(json.dumps(classification_to_dict(classify(G))))

for H in [graphs.cycle(6), graphs.star(5), graphs.affine_d(7), graphs.tripod(1, 3, 4)]:
    res = classify(H)
    print(res.reason, "witness vertices", res.witness.vertices)

# the forbidden graphs carry an integer labelling with 2 v(x) = sum of neighbours
for H in [graphs.star(4), graphs.tripod(2, 2, 2), graphs.tripod(1, 2, 5)]:
    print(radius_two_witness(H), "small?", is_small_exact(H))

# a matrix is classified through its bicolored graph
print(classify_operator([[1, 1, 0], [0, 1, 1]]))
