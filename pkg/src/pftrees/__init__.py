"""Vector and graphical parking functions, DFS burning bijections and q-enumerators."""

from .burning import (
    BurnResult,
    VectorBurnResult,
    build_gx,
    mg_dfs_burn,
    mg_dfs_unburn,
    vec_dfs_burn,
    vec_dfs_unburn,
)
from .classify import Classification, classify, is_sn_invariant
from .config import CapExceededError, Config, DisconnectedGraphError
from .core import QPoly, q_number
from .enumerators import (
    corollary_count,
    exceptional_count_check,
    inversion_enum_labeled_trees,
    pitman_stanley_count,
    rsum_enum_graphical_brute,
    rsum_enum_increasing,
    rsum_enum_kungyan,
    rsum_enum_main,
    rsum_enum_tree_side,
    rsum_enum_vector_brute,
    specialization_report,
)
from .parking import (
    enumerate_graphical_pf,
    enumerate_increasing_vector_pf,
    enumerate_vector_pf,
    is_graphical_pf,
    is_vector_pf,
    maximal_graphical_pf,
    maximal_vector_pf,
    rsum_graphical,
    rsum_vector,
)
from .trees import (
    Multigraph,
    RootedPlaneTree,
    RootedTree,
    VertexOrder,
    enumerate_avo,
    enumerate_gamma,
    enumerate_rpt,
    kappa,
    spanning_trees,
)

__version__ = "0.1.0"
