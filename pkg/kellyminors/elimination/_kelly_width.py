import logging
from dataclasses import dataclass
from typing import Optional

from kellyminors.digraph import Digraph
from kellyminors.exceptions import InternalInvariantError
from kellyminors.utils import check_capacity

from ._ordering import EliminationOrdering, ordering_width, support_mask

logger = logging.getLogger(__name__)

KELLY_WIDTH_MAX_N = 18


@dataclass(frozen=True)
class KellyWidth:
    """
    Attributes:
        width: The Kelly-width (best elimination width + 1; 0 for the null
            digraph).
        ordering: An elimination ordering realizing it.
    """

    width: int
    ordering: EliminationOrdering


def exact_kelly_width(g: Digraph, max_n: Optional[int] = None) -> KellyWidth:
    """
    Computes the exact Kelly-width by dynamic programming over vertex
    subsets.

    ``Q(S)`` is the best width achievable when exactly the vertices of `S`
    are eliminated first; the last vertex `v` of `S` is eliminated at
    out-degree ``supp(v, S - {v})``. The result is ``Q(V) + 1`` together with
    an ordering reconstructed from the recorded choices.

    Raises:
        CapacityError: Past `max_n` vertices (default 18).
    """

    check_capacity("exact_kelly_width", g.order, KELLY_WIDTH_MAX_N, max_n)
    n = g.order
    if n == 0:
        return KellyWidth(width=0, ordering=EliminationOrdering(order=(), supports=()))

    out_masks = g.out_masks
    size = 1 << n
    best = [0] * size
    choice = [-1] * size
    for subset in range(1, size):
        value_best = n + 1
        chosen = -1
        rest_bits = subset
        while rest_bits:
            low = rest_bits & -rest_bits
            rest_bits ^= low
            value = best[subset ^ low]
            if value >= value_best:
                continue
            i = low.bit_length() - 1
            degree = bin(support_mask(out_masks, i, subset ^ low)).count("1")
            if degree > value:
                value = degree
            if value < value_best:
                value_best = value
                chosen = i
        best[subset] = value_best
        choice[subset] = chosen

    reverse = []
    subset = size - 1
    while subset:
        i = choice[subset]
        reverse.append(g.vertices[i])
        subset ^= 1 << i
    ordering = ordering_width(g, reverse[::-1])
    if ordering.width != best[size - 1]:
        raise InternalInvariantError(
            "Reconstructed ordering disagrees with the subset DP",
            f"{ordering.width} != {best[size - 1]}",
        )
    logger.debug("exact_kelly_width n=%d width=%d", n, best[size - 1] + 1)
    return KellyWidth(width=best[size - 1] + 1, ordering=ordering)
