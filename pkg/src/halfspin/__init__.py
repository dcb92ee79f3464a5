"""Exact models of the two half-spin representations of so(2n).

Two constructions of the same pair of 2**(n-1)-dimensional modules:

- the shape model (`diagram`, `quiver`, `spinrep`): basis states are
  strict partitions with a sign, operators move boxes and rows;
- the wedge model (`clifford`): an exterior algebra on n generators with
  creation/annihilation operators and the full Clifford algebra.

`oracle` proves, by exact rational linear algebra at small rank, that the
two models agree operator by operator; `cli` exposes everything on the
command line.  All arithmetic is exact (integers and fractions.Fraction);
there is not a single floating-point tolerance in the package.
"""

from .diagram import (
    Sign,
    enumerate_diagrams,
    enumerate_diagrams_by_boxes,
    conjugate,
    endpoints,
    endpoint_count_below,
    fock_index,
    fock_index_inverse,
    add_row_with_endpoint,
    remove_row_with_endpoint,
)
from .quiver import (
    RankContext,
    StringInterval,
    string_dim_vector,
    a_sets,
    dim_vector,
    weight_u,
    state_u,
    y_vector,
    z_vector,
    star_involution,
    validate_orbit_function,
)
from .spinrep import (
    SpinVector,
    highest_weight_vector,
    apply_E,
    apply_F,
    apply_H,
    kappa,
    geometric_a,
    geometric_b,
    weight_eps,
)
from .clifford import (
    FockVector,
    CliffordElement,
    create,
    annihilate,
    clifford_multiply,
    act,
    embed_generator,
    fock_weight,
    phi,
    phi_inverse,
)
from .oracle import (
    ExactMatrix,
    IndexedBasis,
    spin_basis,
    fock_basis,
    operator_matrix,
    run_suites,
    all_pass,
    SUITES,
    SUITE_NAMES,
    check_dinfty,
)

__version__ = "0.1.0"

__all__ = [
    "Sign",
    "enumerate_diagrams",
    "enumerate_diagrams_by_boxes",
    "conjugate",
    "endpoints",
    "endpoint_count_below",
    "fock_index",
    "fock_index_inverse",
    "add_row_with_endpoint",
    "remove_row_with_endpoint",
    "RankContext",
    "StringInterval",
    "string_dim_vector",
    "a_sets",
    "dim_vector",
    "weight_u",
    "state_u",
    "y_vector",
    "z_vector",
    "star_involution",
    "validate_orbit_function",
    "SpinVector",
    "highest_weight_vector",
    "apply_E",
    "apply_F",
    "apply_H",
    "kappa",
    "geometric_a",
    "geometric_b",
    "weight_eps",
    "FockVector",
    "CliffordElement",
    "create",
    "annihilate",
    "clifford_multiply",
    "act",
    "embed_generator",
    "fock_weight",
    "phi",
    "phi_inverse",
    "ExactMatrix",
    "IndexedBasis",
    "spin_basis",
    "fock_basis",
    "operator_matrix",
    "run_suites",
    "all_pass",
    "SUITES",
    "SUITE_NAMES",
    "check_dinfty",
    "__version__",
]
