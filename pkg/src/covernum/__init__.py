"""Exact edge covers of graphs by structured subgraph classes.

Covers, formulas, constructions, recognizers with checkable witnesses,
and a brute-force oracle that certifies the closed forms at small scale.
"""

from .covers import (
    CoverCertificate,
    bipartite_cover,
    certificate_to_json,
    check_certificate,
    chi_le_k_cover,
    chibound_cover,
    formula_biparticity,
    formula_chibound,
    hypercube_direction_cover,
    hypercube_lower_bound,
    product_coloring,
    unipolar_subgraph_bound,
)
from .formats import (
    ParseError,
    detect_format,
    emit_dimacs,
    emit_edge_list,
    emit_graph6,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    parse_graph6,
)
from .generators import (
    all_graphs,
    complete,
    complete_multipartite,
    cycle,
    far_graph,
    hypercube,
    kKl,
    mycielski_step,
    parse_family_spec,
    random_graphs,
    triangle_free_chromatic,
)
from .graphs import (
    MAX_VERTICES,
    CapacityError,
    EdgeSet,
    Graph,
    complement,
    disjoint_union,
    edge_set_of,
    empty_edge_set,
    full_edge_set,
    make_graph,
    spanning_subgraph,
)
from .invariants import (
    CliqueWitness,
    Coloring,
    ceil_log,
    check_clique,
    check_coloring,
    chromatic_number,
    clique_number,
    is_k_colorable,
)
from .recognizers import (
    ClassSpec,
    FSpec,
    check_witness,
    identity_f,
    in_class,
    is_bipartite,
    is_chi_eq_omega,
    is_cluster,
    is_co_unipolar,
    is_gsp,
    is_perfect,
    is_unipolar,
    parse_class_spec,
    parse_f_spec,
)
from .solver import (
    BudgetError,
    SolveBudget,
    SolveResult,
    decide_cover,
    exact_cover_number,
    max_class_subgraph_size,
    maximal_class_subgraphs,
)
from .verify import DEFAULT_SEED, SUITES, corpus_graphs, run_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CapacityError",
    "ClassSpec",
    "CliqueWitness",
    "Coloring",
    "CoverCertificate",
    "DEFAULT_SEED",
    "EdgeSet",
    "FSpec",
    "Graph",
    "MAX_VERTICES",
    "ParseError",
    "SUITES",
    "SolveBudget",
    "SolveResult",
    "all_graphs",
    "bipartite_cover",
    "ceil_log",
    "certificate_to_json",
    "check_certificate",
    "check_clique",
    "check_coloring",
    "check_witness",
    "chi_le_k_cover",
    "chibound_cover",
    "chromatic_number",
    "clique_number",
    "complement",
    "complete",
    "complete_multipartite",
    "corpus_graphs",
    "cycle",
    "decide_cover",
    "detect_format",
    "disjoint_union",
    "edge_set_of",
    "emit_dimacs",
    "emit_edge_list",
    "emit_graph6",
    "empty_edge_set",
    "exact_cover_number",
    "far_graph",
    "formula_biparticity",
    "formula_chibound",
    "full_edge_set",
    "hypercube",
    "hypercube_direction_cover",
    "hypercube_lower_bound",
    "identity_f",
    "in_class",
    "is_bipartite",
    "is_chi_eq_omega",
    "is_cluster",
    "is_co_unipolar",
    "is_gsp",
    "is_k_colorable",
    "is_perfect",
    "is_unipolar",
    "kKl",
    "make_graph",
    "max_class_subgraph_size",
    "maximal_class_subgraphs",
    "mycielski_step",
    "parse_class_spec",
    "parse_dimacs",
    "parse_edge_list",
    "parse_f_spec",
    "parse_family_spec",
    "parse_graph",
    "parse_graph6",
    "product_coloring",
    "random_graphs",
    "run_suite",
    "spanning_subgraph",
    "triangle_free_chromatic",
    "unipolar_subgraph_bound",
    "__version__",
]
