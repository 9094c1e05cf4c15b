"""Zeon algebra, zeon matrices and the walk censuses of graph Laplacians."""

from .core import (
    ZeonElement,
    blade,
    blade_indices,
    conjugate,
    decompose,
    elem_inner,
    exp_elem,
    grade_part,
    inv_sqrt,
    inverse,
    linear_combine,
    mul,
    nilpotency_index,
    random_element,
    zeta,
)
from .errors import *  # noqa: F401,F403
from .errors import TheoremViolation, ZeonError
from .graph import Graph, Labeling, WalkCensus, parse_graph, parse_labeling, read_graph
from .matrix import (
    ZeonMatrix,
    ZeonVector,
    adjoint,
    char_poly,
    determinant,
    eigenpair,
    mat_exp,
    mat_inverse,
    mat_mul,
    mat_vec,
    normalize,
    orthogonalize,
    rref,
    seminorm,
    spectral_decomposition,
    vec_inner,
)
from .oracle import (
    oracle_all_cycles,
    oracle_all_paths,
    oracle_cycles,
    oracle_paths,
    oracle_paths_and_pwics,
    oracle_pwics,
)
from .pauli import RepMatrix, pauli_identities, represent, unrepresent
from .poly import ZeonPolynomial, complex_simple_roots, spectral_split, zeon_root
from .spectra import (
    cycle_census_from_exp,
    kappa_factor,
    laplacian,
    nilpotent_adjacency,
    q_expectation,
    q_laplacian,
    row_sum,
    symmetric_eigenpair,
    symmetric_laplacian,
    symmetric_walk_census,
    vertex_eigenvalue,
    vertex_eigenvector,
    walk_census_from_powers,
)

__version__ = "0.1.0"
