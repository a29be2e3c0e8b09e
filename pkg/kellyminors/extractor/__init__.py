from ._context import ExtractionContext, find_blocker, normalize
from ._extractor import STRATEGIES, extract, find_k2, find_obstruction

__all__ = [
    "STRATEGIES",
    "ExtractionContext",
    "extract",
    "find_blocker",
    "find_k2",
    "find_obstruction",
    "normalize",
]
