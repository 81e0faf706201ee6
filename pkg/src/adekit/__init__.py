"""Small non-negative integer operators, their ADE classification, and the
quadratic forms, reflection groups and root systems attached to graphs."""
from .linalg import (
    EigenPair,
    PreconditionError,
    associated_symmetric,
    basic_matrix,
    jacobi_eigh,
    leading_principal_minors,
    max_eigenpair,
    operator_norm,
    perron_vector,
    rayleigh_quotient,
    spectral_radius,
)
from .graphs import (
    ADELabel,
    BicoloredGraph,
    Component,
    ForbiddenWitness,
    Graph,
    NotSmall,
    classify,
    classify_connected,
    classify_operator,
    connected_components,
    dynkin,
    graph_from_bipartite,
    is_small_exact,
    radius_two_witness,
)
from .forms import (
    CapExceeded,
    Finite,
    QuadraticForm,
    RootSet,
    check_coxeter_relations,
    gram_of_graph,
    is_positive_definite,
    q_eval,
    reflection,
    roots_by_closure,
    roots_by_sphere,
    weyl_order,
)
from .census import CensusReport, canonical_form, enumerate_census, is_small_operator

__version__ = "0.1.0"
