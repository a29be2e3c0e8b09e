import logging
from typing import Dict, FrozenSet

import networkx as nx

from kellyminors.digraph import Digraph, reach_mask
from kellyminors.elimination import EliminationOrdering, ordering_width
from kellyminors.exceptions import ConstructionError, DomainError

from ._decomposition import KellyDecomposition, validate_decomposition

logger = logging.getLogger(__name__)


def _closures(g: Digraph, order) -> Dict[int, FrozenSet[int]]:
    # closure(v): v plus everything eliminated before v that v reaches
    # through vertices eliminated before v.
    earlier = 0
    result = {}
    for v in order:
        i = g.index[v]
        inside = reach_mask(g.out_masks, g.out_masks[i] & earlier, earlier)
        result[v] = g.vertices_of(inside) | {v}
        earlier |= 1 << i
    return result


def build_decomposition(g: Digraph, e: EliminationOrdering) -> KellyDecomposition:
    """
    Builds a Kelly-decomposition of width ``e.width + 1`` from an
    elimination ordering.

    Node `v` holds the vertex `v` and is guarded by its support. The nodes
    below `v` are exactly the vertices eliminated before `v` that `v`
    reaches through earlier vertices; the decomposition graph is the
    transitive reduction of that relation. Children are enumerated latest
    eliminated first. When several nodes have no parent they hang under an
    extra root with empty bags whose id is one past the largest vertex, so
    the result has one node per vertex plus that root. A single root leaves
    the ordering clause on later roots nothing to check.

    Raises:
        DomainError: `e` is not an elimination ordering of `g`.
        ConstructionError: The result fails validation.
    """

    if g.order == 0:
        return KellyDecomposition()

    replayed = ordering_width(g, e.order)
    if replayed.supports != tuple(e.supports):
        raise DomainError("Ordering supports do not match the digraph", str(e.order))

    position = {v: i for i, v in enumerate(e.order)}
    closures = _closures(g, e.order)

    relation = nx.DiGraph()
    relation.add_nodes_from(e.order)
    relation.add_edges_from((v, y) for v, below in closures.items() for y in below if y != v)
    tree = nx.transitive_reduction(relation)

    def latest_first(nodes):
        return sorted(nodes, key=lambda v: -position[v])

    decomposition = KellyDecomposition(
        nodes=list(e.order),
        edges=sorted(tree.edges()),
        bags={v: frozenset((v,)) for v in e.order},
        guards={v: support for v, support in zip(e.order, e.supports)},
        child_order={v: latest_first(tree.successors(v)) for v in e.order},
    )

    roots = latest_first(v for v in e.order if tree.in_degree(v) == 0)
    if len(roots) == 1:
        decomposition.root_order = roots
    else:
        top = max(g.vertices) + 1
        decomposition.nodes.append(top)
        decomposition.edges.extend((top, r) for r in roots)
        decomposition.bags[top] = frozenset()
        decomposition.guards[top] = frozenset()
        decomposition.child_order[top] = roots
        decomposition.root_order = [top]

    report = validate_decomposition(g, decomposition)
    if not report.valid:
        raise ConstructionError("Built decomposition is invalid", str(report.violation))
    if report.width != e.width + 1:
        raise ConstructionError(
            "Built decomposition has the wrong width", f"{report.width} != {e.width + 1}"
        )
    logger.debug("build_decomposition n=%d nodes=%d width=%d", g.order, len(decomposition.nodes), report.width)
    return decomposition
