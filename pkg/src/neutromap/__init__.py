"""Neutrosophic numbers, graphs, relations and cognitive maps.

The package is organized by layer: exact a+bI arithmetic in `core`,
classical desk-scale graph theory in `graphs`, its neutrosophic extension
in `ngraph`, fuzzy/neutrosophic relations in `relations`, cognitive and
relational map engines in `engines`, and the textual model format plus the
command-line front end in `cli`.
"""

from .core import (
    I,
    NeutroMatrix,
    NeutroNumber,
    NotFoundError,
    ONE,
    ParseError,
    ShapeError,
    SizeLimitError,
    SplitPair,
    ZERO,
    neutro_dimension,
    nm_mul,
    nm_rank,
    nm_transpose,
    nn_add,
    nn_mul,
    parse_matrix,
    parse_number,
    render_matrix,
    split,
    unsplit,
)
from .graphs import (
    ColoringReport,
    ConnectivityReport,
    DegreeReport,
    Graph,
    MetricsReport,
    Polynomial,
    chromatic_polynomial,
    coloring,
    combine,
    complement,
    connectivity,
    degree_report,
    edit,
    eulerian,
    generate,
    hamiltonian,
    is_bipartite,
    line_graph,
    metrics,
    spanning_tree_count,
    tutte,
)
from .ngraph import (
    NeutroColoringReport,
    NeutroDegreeReport,
    NeutroGraph,
    NeutroTreeReport,
    adjacency,
    classify,
    classify_walk,
    from_adjacency,
    is_oriented,
    neutro_coloring,
    neutro_components,
    neutro_degree_report,
    neutro_eulerian,
    neutro_isomorphic,
    neutro_petersen,
    neutro_tree,
    strip_indeterminates,
)
from .relations import (
    DomRanHeight,
    FI,
    FONE,
    FZERO,
    FuzzyNeutroRelation,
    FuzzyNeutroValue,
    INDETERMINATE,
    PropertyReport,
    check_homomorphism,
    dom_ran_height,
    inverse,
    lattice_max,
    lattice_min,
    maxmin_compose,
    properties,
    relational_join,
    transitive_closure,
    tri_all,
)
from .engines import (
    ConceptModel,
    HiddenPattern,
    RelationalModel,
    RmResult,
    balance,
    basis_state,
    cm_run,
    degrade,
    frm_convertible,
    link,
    parse_state,
    render_state,
    rm_run,
    threshold,
)
from .cli import ModelFile, export_dot, model_for, parse_model, serialize_model

__version__ = "0.1.0"

__all__ = [
    "I",
    "NeutroMatrix",
    "NeutroNumber",
    "NotFoundError",
    "ONE",
    "ParseError",
    "ShapeError",
    "SizeLimitError",
    "SplitPair",
    "ZERO",
    "neutro_dimension",
    "nm_mul",
    "nm_rank",
    "nm_transpose",
    "nn_add",
    "nn_mul",
    "parse_matrix",
    "parse_number",
    "render_matrix",
    "split",
    "unsplit",
    "ColoringReport",
    "ConnectivityReport",
    "DegreeReport",
    "Graph",
    "MetricsReport",
    "Polynomial",
    "chromatic_polynomial",
    "coloring",
    "combine",
    "complement",
    "connectivity",
    "degree_report",
    "edit",
    "eulerian",
    "generate",
    "hamiltonian",
    "is_bipartite",
    "line_graph",
    "metrics",
    "spanning_tree_count",
    "tutte",
    "NeutroColoringReport",
    "NeutroDegreeReport",
    "NeutroGraph",
    "NeutroTreeReport",
    "adjacency",
    "classify",
    "classify_walk",
    "from_adjacency",
    "is_oriented",
    "neutro_coloring",
    "neutro_components",
    "neutro_degree_report",
    "neutro_eulerian",
    "neutro_isomorphic",
    "neutro_petersen",
    "neutro_tree",
    "strip_indeterminates",
    "DomRanHeight",
    "FI",
    "FONE",
    "FZERO",
    "FuzzyNeutroRelation",
    "FuzzyNeutroValue",
    "INDETERMINATE",
    "PropertyReport",
    "check_homomorphism",
    "dom_ran_height",
    "inverse",
    "lattice_max",
    "lattice_min",
    "maxmin_compose",
    "properties",
    "relational_join",
    "transitive_closure",
    "tri_all",
    "ConceptModel",
    "HiddenPattern",
    "RelationalModel",
    "RmResult",
    "balance",
    "basis_state",
    "cm_run",
    "degrade",
    "frm_convertible",
    "link",
    "parse_state",
    "render_state",
    "rm_run",
    "threshold",
    "ModelFile",
    "export_dot",
    "model_for",
    "parse_model",
    "serialize_model",
]
