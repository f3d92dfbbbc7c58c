"""Even-cycle detection and listing in sparse graphs, with exact verification tools."""

from .decomposition import LayerDecomposition, check_chain, dyadic_index, layer_decompose
from .errors import BudgetExceeded, EvenCycleError, GraphInputError, InvariantViolation
from .graph import DegreeOrder, Graph, degree_order, load_edge_list, save_edge_list
from .listing import ListingConfig, ListingResult, detect, detect_c2k, list_c2k, list_c6, run_listing
from .oracle import Cycle, count_capped_k_walks, enumerate_cycles

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Cycle", "DegreeOrder", "EvenCycleError", "Graph", "GraphInputError",
    "InvariantViolation", "LayerDecomposition", "ListingConfig", "ListingResult", "check_chain",
    "count_capped_k_walks", "degree_order", "detect", "detect_c2k", "dyadic_index", "enumerate_cycles",
    "layer_decompose", "list_c2k", "list_c6", "load_edge_list", "run_listing", "save_edge_list",
]
