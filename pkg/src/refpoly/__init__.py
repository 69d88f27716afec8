"""Exact lattice computations for reflexive polytopes and their skeletons."""

__version__ = "0.1.0"

from .linalg import (
    AbelianInvariants,
    Sublattice,
    hnf,
    lattice_from_generators,
    lattice_index,
    lattice_membership,
    primitive,
    quotient_invariants,
    snf,
)
from .polytope import (
    LatticePolytope,
    build_polytope,
    dual,
    face_lattice,
    facets,
    is_reflexive,
    lattice_points,
    product,
    unimodular_equivalent,
)
from .skeleton import (
    exterior_square_quotient,
    is_orthogonal_pair,
    k_skeleton_points,
    lambda_k,
    mirror_torsion_check,
    quotient_M_mod_lambda,
    roots,
    torsion_dual,
)
from .lemmas import classify_pair, p_of, verify_lemma_suite
from .polygons import enumerate_reflexive_polygons, figure1_polygons
from .verify import root_certificate, standard_corpus, verify_theorem

__all__ = [
    "AbelianInvariants", "Sublattice", "hnf", "snf", "lattice_from_generators", "lattice_index",
    "lattice_membership", "primitive", "quotient_invariants",
    "LatticePolytope", "build_polytope", "dual", "face_lattice", "facets", "is_reflexive",
    "lattice_points", "product", "unimodular_equivalent",
    "exterior_square_quotient", "is_orthogonal_pair", "k_skeleton_points", "lambda_k",
    "mirror_torsion_check", "quotient_M_mod_lambda", "roots", "torsion_dual",
    "classify_pair", "p_of", "verify_lemma_suite",
    "enumerate_reflexive_polygons", "figure1_polygons",
    "root_certificate", "standard_corpus", "verify_theorem",
]
