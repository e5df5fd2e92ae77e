"""Hom complexes of graphs into square-free targets: enumeration, homology and classification."""

from .classify import Prediction, Report, classify_pair, hom_tree_check, predict, verify
from .graph import (
    Graph,
    categorical_product,
    distance,
    is_bipartite,
    is_connected,
    is_square_free,
    make_standard,
    parse_edge_list,
)
from .homs import (
    ResourceLimitError,
    enumerate_homs,
    find_xhomotopy_path,
    fold_reduce,
    reconfig_components,
    xhomotopy_adjacent,
)

__version__ = "0.1.0"
