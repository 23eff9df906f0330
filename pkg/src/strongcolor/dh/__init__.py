"""Distance-hereditary graphs and cographs."""

from .cograph import Cotree, NotCographError, cograph_strong_index, cotree_graph, recognize_cograph
from .decomposition import TwinsetDecomposition, build_decomposition, check_twinsets
from .index import clique_values, dh_clique_number, dh_coloring, dh_strong_index
from .recognition import NotDHError, recognize_dh
from .sequence import FALSE_TWIN, PENDANT, TRUE_TWIN, PruningSequence, PruningStep, replay_sequence

__all__ = [
    "Cotree", "FALSE_TWIN", "NotCographError", "NotDHError", "PENDANT", "PruningSequence",
    "PruningStep", "TRUE_TWIN", "TwinsetDecomposition", "build_decomposition", "check_twinsets",
    "clique_values", "cograph_strong_index", "cotree_graph", "dh_clique_number", "dh_coloring",
    "dh_strong_index", "recognize_cograph", "recognize_dh", "replay_sequence",
]
