"""Computational services."""

from .canonical_service import canonical_form, is_isomorphic
from .case_table import case_table
from .checkpoint_service import CheckpointStore
from .dissociation_service import diss_exact, diss_tree_dp, generated_hypergraph, skeleton
from .enumeration_service import enumerate_free_trees, enumerate_labeled_connected
from .graph_builders import build_family, theorem1_extremal
from .graph_codec import decode_graph6, encode_graph6, to_dot
from .reduced_model_service import case_winner, solve_rho_reduced, verify_case_poly
from .root_isolation import compare_largest_roots, sturm_root_count
from .search_service import FreeTreeSource, GraphListSource, LabeledConnectedSource
from .spectral_service import char_poly_exact, spectral_radius

__all__ = [
    "canonical_form",
    "is_isomorphic",
    "case_table",
    "CheckpointStore",
    "diss_exact",
    "diss_tree_dp",
    "generated_hypergraph",
    "skeleton",
    "enumerate_free_trees",
    "enumerate_labeled_connected",
    "build_family",
    "theorem1_extremal",
    "decode_graph6",
    "encode_graph6",
    "to_dot",
    "case_winner",
    "solve_rho_reduced",
    "verify_case_poly",
    "compare_largest_roots",
    "sturm_root_count",
    "FreeTreeSource",
    "GraphListSource",
    "LabeledConnectedSource",
    "char_poly_exact",
    "spectral_radius",
]
