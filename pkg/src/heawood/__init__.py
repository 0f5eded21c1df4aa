"""Spin systems over GF(3) for counting Tait colorings of planar cubic graphs.

The package turns the faces of an embedded cubic graph into linear
equations over the three-element field, enumerates the everywhere-nonzero
solutions (Heawood vectors), converts them to and from explicit proper
3-edge-colorings, analyzes which vertex sets determine a solution, and
cross-checks every count against an independent brute-force oracle.
"""

from .colorings import TaitColoring
from .defining import (
    FreeVariableSet,
    VertexSet,
    ZebraWitness,
    combination_support,
    free_variable_defining_set,
    is_heawood_defining,
    is_linear_defining,
    minimal_defining_sets,
    zebra_witness,
)
from .errors import (
    ContractionError,
    EnumerationLimitError,
    FaceTraversalError,
    GraphFormatError,
    HeawoodError,
    ImproperColoringError,
    InvalidGraphError,
    NotAHeawoodVectorError,
    NotBipartiteError,
    SubsetSearchLimitError,
)
from .families import (
    catalog,
    circular_ladder,
    cln_formula,
    count_zero_sum_sequences,
    k4,
    mobius_formula,
    mobius_ladder,
    petersen,
)
from .graphs import (
    Bipartition,
    CubicGraph,
    EmbeddedCubicGraph,
    Face,
    ValidationReport,
    as_cubic,
    edges,
    format_graph,
    incident_edges_ccw,
    is_bipartite,
    load_cubic,
    load_graph,
    parse_cubic,
    parse_graph,
    relabel,
    trace_faces,
    validate,
)
from .oracle import (
    bipartite_tait_construct,
    count_tait_oracle,
    enumerate_tait_oracle,
    is_proper_coloring,
)
from .spins import (
    HeawoodSystem,
    HeawoodVector,
    bipartite_heawood_vector,
    build_main_sle,
    contract_triangle,
    count_tait_colorings_heawood,
    enumerate_heawood_vectors,
    heawood_to_tait,
    sle_rank,
    tait_to_heawood,
)

__version__ = "0.1.0"

__all__ = [
    "TaitColoring",
    "FreeVariableSet",
    "VertexSet",
    "ZebraWitness",
    "combination_support",
    "free_variable_defining_set",
    "is_heawood_defining",
    "is_linear_defining",
    "minimal_defining_sets",
    "zebra_witness",
    "ContractionError",
    "EnumerationLimitError",
    "FaceTraversalError",
    "GraphFormatError",
    "HeawoodError",
    "ImproperColoringError",
    "InvalidGraphError",
    "NotAHeawoodVectorError",
    "NotBipartiteError",
    "SubsetSearchLimitError",
    "catalog",
    "circular_ladder",
    "cln_formula",
    "count_zero_sum_sequences",
    "k4",
    "mobius_formula",
    "mobius_ladder",
    "petersen",
    "Bipartition",
    "CubicGraph",
    "EmbeddedCubicGraph",
    "Face",
    "ValidationReport",
    "as_cubic",
    "edges",
    "format_graph",
    "incident_edges_ccw",
    "is_bipartite",
    "load_cubic",
    "load_graph",
    "parse_cubic",
    "parse_graph",
    "relabel",
    "trace_faces",
    "validate",
    "bipartite_tait_construct",
    "count_tait_oracle",
    "enumerate_tait_oracle",
    "is_proper_coloring",
    "HeawoodSystem",
    "HeawoodVector",
    "bipartite_heawood_vector",
    "build_main_sle",
    "contract_triangle",
    "count_tait_colorings_heawood",
    "enumerate_heawood_vectors",
    "heawood_to_tait",
    "sle_rank",
    "tait_to_heawood",
]
