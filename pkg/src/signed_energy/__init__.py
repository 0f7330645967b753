"""Characteristic polynomials, spectra and energy of signed graphs, with
exhaustive checks of extremal energy among unicyclic signed graphs."""
from .charpoly import (
    IntPolynomial,
    QuasiOrderResult,
    Relation,
    b_sequence,
    charpoly,
    charpoly_exact_traces,
    charpoly_recurrence,
    charpoly_sachs,
    has_pairing_property,
    quasi_compare,
)
from .core import (
    CycleData,
    GraphError,
    SignedGraph,
    adjacency_matrix,
    all_cycles,
    from_edge_list,
    is_balanced,
    negate,
    switch,
    switching_equivalent,
)
from .families import FamilySpec, build, cycle, lollipop, parse_family, path
from .matchings import matching_numbers, verify_path_union_chain
from .spectral import compare_energy, eigenvalues, energy, energy_coulson, energy_pairing

__version__ = "0.1.0"

__all__ = [
    "adjacency_matrix",
    "all_cycles",
    "b_sequence",
    "build",
    "charpoly",
    "charpoly_exact_traces",
    "charpoly_recurrence",
    "charpoly_sachs",
    "compare_energy",
    "cycle",
    "CycleData",
    "eigenvalues",
    "energy",
    "energy_coulson",
    "energy_pairing",
    "FamilySpec",
    "from_edge_list",
    "GraphError",
    "has_pairing_property",
    "IntPolynomial",
    "is_balanced",
    "lollipop",
    "matching_numbers",
    "negate",
    "parse_family",
    "path",
    "quasi_compare",
    "QuasiOrderResult",
    "Relation",
    "SignedGraph",
    "switch",
    "switching_equivalent",
    "verify_path_union_chain",
]
