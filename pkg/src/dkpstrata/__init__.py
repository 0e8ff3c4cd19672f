"""Exact stratum dimensions, kernel lattices and q-arithmetic for the algebras U^w_-."""
from .rootdata import RootSystem, pair, positive_roots, reflection_matrix, root_system
from .strata import (
    StratumRecord,
    commutation_exponent,
    double_bruhat_stratum_dim,
    eigenspace_dim,
    kernel_lattice_basis,
    normal_element_weight,
    stratification_report,
    stratum_dimension,
)
from .weyl import (
    WeylElement,
    beta_sequence,
    bruhat_interval,
    bruhat_leq,
    canonical_reduced_word,
    element_from_word,
    length,
    longest_element,
)

__version__ = "0.1.0"
