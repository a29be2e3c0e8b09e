import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from kellyminors.digraph import Digraph
from kellyminors.exceptions import UnsupportedError
from kellyminors.minor import MinorOperation

from ._ordering import EliminationOrdering, ordering_width

logger = logging.getLogger(__name__)


@dataclass
class ResidualCore:
    """
    What is left after peeling every vertex of small out-degree.

    Attributes:
        core: The remaining digraph; every vertex has out-degree above the
            peel bound. Null when everything peeled.
        peeled: ``(vertex, operation)`` in peel order. Replaying the
            operations on the input yields `core`.
    """

    core: Digraph
    peeled: List[Tuple[int, MinorOperation]] = field(default_factory=list)

    @property
    def operations(self) -> List[MinorOperation]:
        return [op for _, op in self.peeled]

    @property
    def is_null(self) -> bool:
        return self.core.order == 0


@dataclass
class Recognition:
    """
    Verdict of `recognize_partial_k`.

    Attributes:
        accepted: Whether the digraph is a partial k-DAG.
        k: The tested parameter.
        ordering: An elimination ordering of width at most `k` when accepted.
        residual: The peel record; its core is null exactly when accepted.
    """

    accepted: bool
    k: int
    residual: ResidualCore
    ordering: Optional[EliminationOrdering] = None


def _peel_operation(g: Digraph, v: int) -> MinorOperation:
    # Eliminating a sink is deleting it; eliminating a vertex of out-degree
    # one is out-contracting its only arc.
    outs = g.out_neighbors(v)
    if not outs:
        return MinorOperation.delete_vertex(v)
    (w,) = outs
    return MinorOperation.out_contract(v, w)


def peel(g: Digraph, k: int = 1) -> ResidualCore:
    """
    Repeatedly eliminates the smallest vertex of out-degree at most `k`,
    recording each elimination as the minor operation it coincides with.
    """

    if k not in (0, 1):
        raise UnsupportedError("Greedy peeling is only exact for k in {0, 1}", str(k))

    current = g
    peeled = []
    while True:
        candidate = next((v for v in current.vertices if current.out_degree(v) <= k), None)
        if candidate is None:
            break
        op = _peel_operation(current, candidate)
        peeled.append((candidate, op))
        current = op.apply(current)
    logger.debug("peel k=%d removed %d of %d vertices", k, len(peeled), g.order)
    return ResidualCore(core=current, peeled=peeled)


def recognize_partial_k(g: Digraph, k: int) -> Recognition:
    """
    Decides whether `g` is a partial k-DAG for k in {0, 1} by greedy
    elimination.

    Raises:
        UnsupportedError: `k` is not 0 or 1.
    """

    residual = peel(g, k)
    if not residual.is_null:
        return Recognition(accepted=False, k=k, residual=residual)
    ordering = ordering_width(g, [v for v, _ in residual.peeled])
    return Recognition(accepted=True, k=k, residual=residual, ordering=ordering)
