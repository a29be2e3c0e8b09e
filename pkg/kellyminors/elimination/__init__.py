from ._kelly_width import KELLY_WIDTH_MAX_N, KellyWidth, exact_kelly_width
from ._ordering import (
    EliminationOrdering,
    eliminate_vertex,
    ordering_width,
    support_mask,
    support_set,
)
from ._recognition import Recognition, ResidualCore, peel, recognize_partial_k

__all__ = [
    "KELLY_WIDTH_MAX_N",
    "EliminationOrdering",
    "KellyWidth",
    "Recognition",
    "ResidualCore",
    "eliminate_vertex",
    "exact_kelly_width",
    "ordering_width",
    "peel",
    "recognize_partial_k",
    "support_mask",
    "support_set",
]
