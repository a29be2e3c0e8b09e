import logging
from typing import List, Optional

from kellyminors.digraph import Digraph, is_acyclic, shortest_path
from kellyminors.elimination import peel
from kellyminors.exceptions import DomainError, InternalInvariantError
from kellyminors.minor import MinorOperation, WitnessScript, replay

from ._cases import dispatch, strict
from ._context import (
    common_in_neighbors,
    common_out_neighbors,
    find_blocker,
    normalize,
    require_min_out_degree,
)
from ._descent import descend
from ._workspace import Workspace

logger = logging.getLogger(__name__)

STRATEGIES = ("cases", "descent")


def _bidirected_cycle(ws: Workspace) -> WitnessScript:
    # Every arc is bidirected and every out-degree is 2: a bidirected cycle.
    while ws.graph.order > 3:
        u, v = ws.graph.bidirected_pairs()[0]
        ws.contract_cycle((u, v))
    logger.debug("bidirected cycle contracted to a triangle")
    return strict("bidirected cycle", lambda: ws.certify(ws.graph.vertices, "k3"))


def _reduce_or_dispatch(ws: Workspace) -> WitnessScript:
    while True:
        ctx = normalize(ws.graph)
        ws.extend(ctx.pending_ops, ctx.current)
        g = ws.graph

        if ctx.directed_count == 0:
            return _bidirected_cycle(ws)

        free = next((arc for arc in g.directed_arcs() if find_blocker(g, arc) is None), None)
        if free is not None:
            logger.debug("out-contracting unblocked arc %s on n=%d", free, g.order)
            ws.out_contract(*free)
            continue

        loose = next(
            (
                (u, v)
                for u, v in g.bidirected_pairs()
                if not common_in_neighbors(g, u, v) and not common_out_neighbors(g, u, v)
            ),
            None,
        )
        if loose is not None:
            logger.debug("contracting bidirected edge %s without common neighbours", loose)
            ws.contract_cycle(loose)
            continue

        return dispatch(ws)


def _verified(g: Digraph, script: WitnessScript) -> WitnessScript:
    result = replay(g, script)
    if not result.ok:
        raise InternalInvariantError(
            f"{script.target} witness does not replay", repr(result.graph)
        )
    return script


def extract(g: Digraph, strategy: str = "cases") -> WitnessScript:
    """
    Finds K3, N4 or M5 as a directed minor of a digraph whose vertices
    all have out-degree at least 2.

    Parameters:
        g: The input digraph.
        strategy: ``cases`` follows the constructive case analysis;
            ``descent`` walks down the minor order instead.

    Returns:
        A replay-checked witness script.

    Raises:
        DomainError: Some out-degree is below 2, `g` is null, or the
            strategy is unknown.
        InternalInvariantError: The construction broke an invariant.
    """

    if strategy not in STRATEGIES:
        raise DomainError("Unknown extraction strategy", strategy)
    require_min_out_degree(g)
    if g.order == 0:
        raise DomainError("The null digraph has no obstruction")

    ws = Workspace(g)
    script = descend(ws) if strategy == "descent" else _reduce_or_dispatch(ws)
    logger.debug("extract n=%d -> %s in %d steps", g.order, script.target, len(script))
    return _verified(g, script)


def find_obstruction(g: Digraph, strategy: str = "cases") -> Optional[WitnessScript]:
    """
    Returns None when `g` is a partial 1-DAG, and otherwise a witness
    script for K3, N4 or M5 that starts with the peeling steps.
    """

    residual = peel(g, 1)
    if residual.is_null:
        return None
    script = extract(residual.core, strategy).prepend(residual.operations)
    return _verified(g, script)


def _shortest_cycle(g: Digraph) -> Optional[List[int]]:
    best = None
    for w, v in g.sorted_arcs:
        path = shortest_path(g, v, {w})
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def find_k2(g: Digraph) -> Optional[WitnessScript]:
    """
    Returns None for an acyclic digraph; otherwise contracts a shortest
    directed cycle down to a bidirected pair.
    """

    if is_acyclic(g):
        return None
    cycle = _shortest_cycle(g)
    if cycle is None:
        raise InternalInvariantError("cyclic digraph without a directed cycle")

    ws = Workspace(g)
    on_cycle = set(cycle)
    ws.extend(MinorOperation.delete_vertex(v) for v in g.vertices if v not in on_cycle)
    ws.shorten(cycle)
    script = strict("cycle", lambda: ws.certify({cycle[0], cycle[-1]}, "k2"))
    return _verified(g, script)
