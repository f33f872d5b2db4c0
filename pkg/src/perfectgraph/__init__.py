"""Perfect graph workbench: exact oracles, basic classes, decompositions
and executable checks of the structural theorems, at desk scale."""

from .basic import (
    BasicClass,
    LineRoot,
    color_basic,
    konig_edge_coloring,
    konig_vertex_cover,
    line_graph_root,
    maximum_bipartite_matching,
    recognize_basic,
    validate_basic,
)
from .berge import (
    DecompositionReport,
    TheoremReport,
    WonderfulInstance,
    WonderfulOutcome,
    decomposition_report,
    is_berge,
    odd_hole_free_report,
    square_free_report,
    wonderful_check,
    wonderful_instances,
)
from .coloring import Coloring, EdgeColoring
from .config import DEFAULT_LIMITS, Limits
from .decompose import (
    Block,
    BlockColoring,
    BlockPair,
    DecompositionNode,
    PerfectColoring,
    block_coloring,
    combine_colorings,
    perfect_color,
    replicate,
    replicate_minus_edge,
    six_join_blocks,
    two_join_blocks,
)
from .errors import InternalInconsistencyError, InvalidInputError, ParseError, PerfectGraphError, ResourceLimitError
from .generators import GeneratorRecipe, generate, glue_two_join
from .graph import (
    Graph,
    complement,
    connected_components,
    cycle_graph,
    find_hole,
    induced_subgraph,
    is_bipartite,
    iter_holes,
    line_graph,
    shortest_path_between_sets,
)
from .io import GraphDocument, emit, parse_graph
from .oracle import (
    GasparyanCertificate,
    chromatic_number,
    clique_number,
    gasparyan_certificate,
    is_minimally_imperfect,
    is_perfect,
    lovasz_bound_holds,
    maximum_clique,
    maximum_stable_set,
    stability_number,
)
from .structures import (
    HomogeneousPair,
    SixJoin,
    SkewPartition,
    TwoJoin,
    classify_cutset,
    find_double_star_cutset,
    find_homogeneous_pair,
    find_six_join,
    find_skew_partition,
    find_star_cutset,
    find_t_cutset,
    find_two_join,
    find_u_cutset,
)
from .wheels import Stretcher, Wheel, classify_wheel, find_stretcher, find_wheels

__version__ = "0.1.0"
