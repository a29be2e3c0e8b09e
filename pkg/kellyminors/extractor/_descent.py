import logging

from kellyminors.digraph import find_embedding, is_isomorphic
from kellyminors.elimination import peel
from kellyminors.exceptions import InternalInvariantError
from kellyminors.minor import WitnessScript, successors
from kellyminors.oracle import PARTIAL_1DAG_OBSTRUCTIONS, get_target

from ._workspace import Workspace

logger = logging.getLogger(__name__)


def _matching_target(ws: Workspace):
    for name in PARTIAL_1DAG_OBSTRUCTIONS:
        target = get_target(name)
        if (ws.graph.order, ws.graph.size) == (target.order, target.size) and is_isomorphic(
            ws.graph, target
        ):
            return name
    return None


def descend(ws: Workspace) -> WitnessScript:
    """
    Walks down the minor order while a non-null residual core survives.

    The live graph must have minimum out-degree 2. Each round applies the
    first single operation whose result still peels to a non-null core and
    then the peel itself, so the graph stays a residual core and shrinks.
    A residual core none of whose minors keep one is K3, N4 or M5.
    """

    rounds = 0
    while True:
        name = _matching_target(ws)
        if name is not None:
            mapping = find_embedding(get_target(name), ws.graph)
            logger.debug("descend reached %s after %d rounds", name, rounds)
            return WitnessScript(
                steps=list(ws.steps),
                claimed_result=get_target(name),
                vertex_map=mapping,
                target=name,
            )

        for op, child in successors(ws.graph):
            residual = peel(child, 1)
            if not residual.is_null:
                ws.apply(op)
                ws.extend(residual.operations, residual.core)
                break
        else:
            raise InternalInvariantError(
                "minor-minimal residual core is not an obstruction", repr(ws.graph)
            )
        rounds += 1
