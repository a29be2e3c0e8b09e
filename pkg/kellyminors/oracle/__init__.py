from typing import Optional

from kellyminors.digraph import Digraph

from ._catalog import (
    CATALOG,
    K2,
    K3,
    M5,
    N4,
    PARTIAL_1DAG_OBSTRUCTIONS,
    ObstructionCatalog,
    get_target,
)
from ._minimality import MINIMALITY_MAX_N, is_minimal_obstruction, is_partial_k_dag
from ._oracle import MINOR_MAX_N, MinorOracle, MinorVerdict


def configure(max_n: Optional[int] = None):
    """
    Installs a fresh oracle with an empty memo.

    Parameters:
        max_n: Host size bound; ``KELLY_MAX_N`` or 8 when omitted.
    """
    MinorOracle.configure(max_n)


def contains_minor(g: Digraph, h: Digraph, target: str = "pattern") -> MinorVerdict:
    """
    Decides whether `h` is a directed minor of `g`.

    Parameters:
        g: The host digraph.
        h: The pattern digraph.
        target: Name recorded in the witness script.

    Returns:
        A `MinorVerdict`; on a hit its script replays `g` onto `h`.
    """

    oracle = MinorOracle.get_instance()
    return oracle.contains_minor(g, h, target)


def contains_any_obstruction(g: Digraph) -> MinorVerdict:
    """
    Decides whether `g` has K3, N4 or M5 as a directed minor. The targets
    are tried in that order and the verdict names the first one found.
    """

    oracle = MinorOracle.get_instance()
    return oracle.contains_any_obstruction(g)


__all__ = [
    "CATALOG",
    "K2",
    "K3",
    "M5",
    "MINIMALITY_MAX_N",
    "MINOR_MAX_N",
    "N4",
    "PARTIAL_1DAG_OBSTRUCTIONS",
    "MinorOracle",
    "MinorVerdict",
    "ObstructionCatalog",
    "configure",
    "contains_any_obstruction",
    "contains_minor",
    "get_target",
    "is_minimal_obstruction",
    "is_partial_k_dag",
]
