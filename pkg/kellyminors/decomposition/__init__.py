from typing import Optional

from kellyminors.digraph import Digraph
from kellyminors.elimination import exact_kelly_width

from ._builder import build_decomposition
from ._decomposition import (
    KellyDecomposition,
    ValidationReport,
    Violation,
    guards,
    validate_decomposition,
)


def optimal_decomposition(g: Digraph, max_n: Optional[int] = None) -> KellyDecomposition:
    """
    Builds a Kelly-decomposition of minimum width from an optimal
    elimination ordering.

    Parameters:
        g: The digraph to decompose.
        max_n: Size bound for the exact width computation.

    Returns:
        A validated decomposition whose width is the Kelly-width of `g`.
    """

    result = exact_kelly_width(g, max_n)
    return build_decomposition(g, result.ordering)


__all__ = [
    "KellyDecomposition",
    "ValidationReport",
    "Violation",
    "build_decomposition",
    "guards",
    "optimal_decomposition",
    "validate_decomposition",
]
