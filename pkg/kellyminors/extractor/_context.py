import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

from kellyminors.digraph import Arc, Digraph, terminal_components
from kellyminors.exceptions import DomainError, InternalInvariantError
from kellyminors.minor import MinorOperation, run_steps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtractionContext:
    """
    A normalized working graph: every out-degree is exactly 2 and the graph
    is strongly connected.

    Attributes:
        current: The working graph.
        pending_ops: Operations that turned the input into `current`.
        directed_count: Arcs whose reverse is absent.
        bidirected_count: Vertex pairs joined in both directions.
    """

    current: Digraph
    pending_ops: List[MinorOperation] = field(default_factory=list)
    directed_count: int = 0
    bidirected_count: int = 0

    def find_blocker(self, arc: Arc) -> Optional[int]:
        return find_blocker(self.current, arc)


def common_in_neighbors(g: Digraph, u: int, v: int) -> FrozenSet[int]:
    return g.in_neighbors(u) & g.in_neighbors(v)


def common_out_neighbors(g: Digraph, u: int, v: int) -> FrozenSet[int]:
    return g.out_neighbors(u) & g.out_neighbors(v)


def require_min_out_degree(g: Digraph, bound: int = 2):
    short = [v for v in g.vertices if g.out_degree(v) < bound]
    if short:
        raise DomainError(f"Every vertex needs out-degree at least {bound}", f"vertices {short}")


def find_blocker(g: Digraph, arc: Arc) -> Optional[int]:
    """
    The smallest vertex with arcs to both ends of the directed arc
    (u, v), or None.

    Raises:
        DomainError: The arc is missing or its reverse is present.
    """

    u, v = arc
    if not g.has_arc(u, v):
        raise DomainError("Arc is not in the graph", f"({u}, {v})")
    if g.has_arc(v, u):
        raise DomainError("Arc is bidirected", f"({u}, {v})")
    return min(common_in_neighbors(g, u, v), default=None)


def _normalization_ops(g: Digraph) -> List[MinorOperation]:
    ops = []
    for v in g.vertices:
        for w in sorted(g.out_neighbors(v))[2:]:
            ops.append(MinorOperation.delete_edge(v, w))
    trimmed = run_steps(g, ops)
    keep = min(terminal_components(trimmed), key=min)
    ops.extend(MinorOperation.delete_vertex(v) for v in trimmed.vertices if v not in keep)
    return ops


def normalize(g: Digraph) -> ExtractionContext:
    """
    Keeps the two smallest out-arcs of every vertex, then restricts to the
    terminal strong component with the smallest vertex.

    Raises:
        DomainError: Some vertex has out-degree below 2.
        InternalInvariantError: The arc counts of the result disagree with
            an out-degree of exactly 2.
    """

    require_min_out_degree(g)
    if g.order == 0:
        raise DomainError("The null digraph cannot be normalized")

    ops = _normalization_ops(g)
    current = run_steps(g, ops)
    directed = len(current.directed_arcs())
    bidirected = len(current.bidirected_pairs())
    if directed + 2 * bidirected != 2 * current.order:
        raise InternalInvariantError(
            "Normalized graph breaks the arc count identity",
            f"{directed} + 2*{bidirected} != 2*{current.order}",
        )
    logger.debug(
        "normalize n=%d -> n=%d directed=%d bidirected=%d",
        g.order, current.order, directed, bidirected,
    )
    return ExtractionContext(
        current=current,
        pending_ops=ops,
        directed_count=directed,
        bidirected_count=bidirected,
    )
