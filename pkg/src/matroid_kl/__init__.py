"""Kazhdan-Lusztig polynomials, Z-polynomials and tau invariants of matroids
computed exactly from the lattice of flats, with the deletion formula, the
zeta basis of H(M), and closed forms for graph families."""

from .errors import (
    AxiomError,
    ColoopError,
    FormulaRangeError,
    InvalidElementError,
    MatroidError,
    NotAFlatError,
    SizeCapError,
)
from .graphs import (
    Graph,
    build_family,
    graph_contract,
    graph_delete,
    graphic_matroid,
    parallel_connection,
    parse_family,
)
from .hecke import (
    HElement,
    bar_involution,
    decompose_perverse,
    delta_map,
    is_perverse,
    phi_map,
    zeta,
)
from .kl import (
    char_polynomial,
    deletion_rhs_P,
    deletion_rhs_Z,
    kl_polynomial,
    kl_table,
    linear_coefficient,
    s_set,
    tau,
    verify_deletion,
    z_polynomial,
)
from .matroid import (
    Matroid,
    boolean_matroid,
    closure,
    contract,
    delete,
    direct_sum,
    from_flats,
    is_coloop,
    localize,
    minor,
    simplify,
    uniform_matroid,
)
from .polynomial import IntPoly, is_palindromic, palindromic_completion, poly_add, poly_mul, substitute_power

__version__ = "0.1.0"
