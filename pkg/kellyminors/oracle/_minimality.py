import logging
from typing import Optional

from kellyminors.digraph import Digraph
from kellyminors.elimination import exact_kelly_width, recognize_partial_k
from kellyminors.minor import successors
from kellyminors.utils import check_capacity

logger = logging.getLogger(__name__)

MINIMALITY_MAX_N = 6


def is_partial_k_dag(g: Digraph, k: int) -> bool:
    if k in (0, 1):
        return recognize_partial_k(g, k).accepted
    return exact_kelly_width(g).width <= k + 1


def is_minimal_obstruction(h: Digraph, k: int, max_n: Optional[int] = None) -> bool:
    """
    Whether `h` is not a partial k-DAG while every digraph one minor
    operation away from it is.

    Raises:
        CapacityError: `h` has more vertices than the bound (6 by default).
    """

    check_capacity("is_minimal_obstruction", h.order, MINIMALITY_MAX_N, max_n)
    if is_partial_k_dag(h, k):
        return False
    for op, child in successors(h):
        if not is_partial_k_dag(child, k):
            logger.debug("is_minimal_obstruction: %s keeps width above %d", op, k + 1)
            return False
    return True
