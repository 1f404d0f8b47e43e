"""Local antimagic edge and total labelings: constructions, verifier, exact search."""

from .construct_la import CitedOnly, ConstructionError, label_firecracker
from .construct_lat import (
    join_transfer, total_label_f2k, total_label_firecracker, total_label_fn1,
)
from .graphs import (
    FamilySpec, Graph, GraphError, VertexRef, disjoint_copies_k2, edge_corona,
    join_with_single_vertex, make_complete_two, make_double_star, make_empty,
    make_firecracker, make_path, make_star, vref,
)
from .labeling import EdgeLabeling, LabelingError, TotalLabeling
from .matrixlab import LabelingMatrix, assemble
from .oracle import SearchBudget, exact_chi_la, exact_chi_lat, exists_with_colors
from .verify import VerificationReport, check, clique_lower_bound, leaf_lower_bound

__all__ = [
    "CitedOnly", "ConstructionError", "EdgeLabeling", "FamilySpec", "Graph", "GraphError",
    "LabelingError", "LabelingMatrix", "SearchBudget", "TotalLabeling", "VerificationReport",
    "VertexRef", "assemble", "check", "clique_lower_bound", "disjoint_copies_k2",
    "edge_corona", "exact_chi_la", "exact_chi_lat", "exists_with_colors", "join_transfer",
    "join_with_single_vertex", "label_firecracker", "leaf_lower_bound", "make_complete_two",
    "make_double_star", "make_empty", "make_firecracker", "make_path", "make_star",
    "total_label_f2k", "total_label_firecracker", "total_label_fn1", "vref",
]
