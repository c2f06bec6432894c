"""Grundy (First-Fit) chromatic number toolkit.

Exact engines for block graphs and for graphs of girth at least
2*delta2+1, certified upper bounds and a ratio-guaranteed approximation
for general graphs, plus a brute-force oracle for desk-scale verification.
"""

from .blockgraph import (
    ListAssignment,
    LevelPartition,
    assign_list,
    bound_block_cutpoint,
    gamma_block_graph,
    generate_clique_family,
    grundy_block,
    level_partition,
    upper_bound_via_blowup,
    witness_coloring_block,
    witness_for_block_gamma,
)
from .exceptions import (
    DisconnectedInput,
    GirthTooSmall,
    GraphParseError,
    GrundyError,
    KTooLargeForGirth,
    NoCutVertex,
    NotAPermutation,
    NotATree,
    NotBlockGraph,
    NotCutVertex,
    TooLarge,
)
from .graph import Graph
from .largegirth import (
    ApproxReport,
    LocalTree,
    MODE_EXACT,
    MODE_LOWER_BOUND,
    approx_gamma,
    decide_gamma_at_least,
    exact_gamma_large_girth,
    gamma_local,
    grundy_tree,
    local_tree,
    witness_coloring_tree,
)
from .oracle import (
    ColorSpectrum,
    GrundyColoring,
    brute_force_gamma,
    brute_force_gamma_at,
    brute_force_gamma_witness,
    color_spectrum,
    extend_partial_coloring,
    first_fit,
    is_grundy_coloring,
)
from .structure import (
    BlockCutTree,
    DegreeProfile,
    INFINITE,
    bfs_ball,
    block_cut_tree,
    clique_blowup,
    degree_profile,
    girth,
    is_block_graph,
)

__version__ = "0.1.0"
