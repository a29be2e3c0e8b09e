from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from kellyminors.digraph import Arc, Digraph
from kellyminors.exceptions import DomainError, FormatError
from kellyminors.utils import JSON


class OperationKind(str, Enum):
    DELETE_VERTEX = "delete_vertex"
    DELETE_EDGE = "delete_edge"
    OUT_CONTRACT = "out_contract"
    IN_CONTRACT = "in_contract"
    CONTRACT_CYCLE = "contract_cycle"


_ARITY = {
    OperationKind.DELETE_VERTEX: 1,
    OperationKind.DELETE_EDGE: 2,
    OperationKind.OUT_CONTRACT: 2,
    OperationKind.IN_CONTRACT: 2,
}


@dataclass(frozen=True)
class MinorOperation:
    """
    One directed-minor step, addressed by the vertex ids live in the graph
    it is applied to.

    Attributes:
        kind: Which of the five operations.
        args: A vertex for ``delete_vertex``; a (tail, head) arc for edge
            deletion and out/in-contraction; the cycle's vertex sequence for
            ``contract_cycle``.
    """

    kind: OperationKind
    args: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", OperationKind(self.kind))
        object.__setattr__(self, "args", tuple(int(a) for a in self.args))
        arity = _ARITY.get(self.kind)
        if arity is not None and len(self.args) != arity:
            raise DomainError(f"{self.kind.value} takes {arity} argument(s)", str(self.args))
        if self.kind is OperationKind.CONTRACT_CYCLE and len(self.args) < 2:
            raise DomainError("contract_cycle needs at least two vertices", str(self.args))

    @classmethod
    def delete_vertex(cls, v: int) -> "MinorOperation":
        return cls(OperationKind.DELETE_VERTEX, (v,))

    @classmethod
    def delete_edge(cls, u: int, v: int) -> "MinorOperation":
        return cls(OperationKind.DELETE_EDGE, (u, v))

    @classmethod
    def out_contract(cls, u: int, v: int) -> "MinorOperation":
        return cls(OperationKind.OUT_CONTRACT, (u, v))

    @classmethod
    def in_contract(cls, u: int, v: int) -> "MinorOperation":
        return cls(OperationKind.IN_CONTRACT, (u, v))

    @classmethod
    def contract_cycle(cls, cycle: Sequence[int]) -> "MinorOperation":
        return cls(OperationKind.CONTRACT_CYCLE, tuple(cycle))

    def apply(self, g: Digraph) -> Digraph:
        return apply_operation(g, self)

    def to_json(self) -> Dict[str, JSON]:
        return {"kind": self.kind.value, "args": list(self.args)}

    @classmethod
    def from_json(cls, data: JSON) -> "MinorOperation":
        try:
            return cls(OperationKind(data["kind"]), tuple(data["args"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError("Malformed operation", exc) from exc

    def __str__(self):
        return f"{self.kind.value}({', '.join(map(str, self.args))})"


def _require_arc(g: Digraph, arc: Arc) -> Arc:
    u, v = arc
    if not g.has_arc(u, v):
        raise DomainError("Arc is not in the graph", f"({u}, {v})")
    return u, v


def delete_vertex(g: Digraph, v: int) -> Digraph:
    g.require_vertex(v)
    return g.without_vertices((v,))


def delete_edge(g: Digraph, arc: Arc) -> Digraph:
    u, v = _require_arc(g, arc)
    return Digraph(g.vertices, g.arcs - {(u, v)})


def out_contract(g: Digraph, arc: Arc) -> Digraph:
    """
    Out-contracts (u, v): drops every out-arc of the tail `u`, then merges
    `u` into the head `v`, which survives.
    """

    u, v = _require_arc(g, arc)
    arcs = {(x, y) for x, y in g.arcs if u not in (x, y)}
    arcs.update((x, v) for x in g.in_neighbors(u) if x != v)
    return Digraph(tuple(x for x in g.vertices if x != u), frozenset(arcs))


def in_contract(g: Digraph, arc: Arc) -> Digraph:
    """
    In-contracts (u, v): drops every in-arc of the head `v`, then merges `v`
    into the tail `u`, which survives.
    """

    u, v = _require_arc(g, arc)
    arcs = {(x, y) for x, y in g.arcs if v not in (x, y)}
    arcs.update((u, y) for y in g.out_neighbors(v) if y != u)
    return Digraph(tuple(x for x in g.vertices if x != v), frozenset(arcs))


def _require_cycle(g: Digraph, cycle: Sequence[int]) -> Tuple[int, ...]:
    cycle = tuple(cycle)
    if len(cycle) < 2 or len(set(cycle)) != len(cycle):
        raise DomainError("Not a directed cycle of distinct vertices", str(cycle))
    g.require_vertices(cycle)
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not g.has_arc(u, v):
            raise DomainError("Not a directed cycle", f"missing arc ({u}, {v})")
    return cycle


def fresh_vertex(g: Digraph) -> int:
    return max(g.vertices) + 1 if g.vertices else 0


def contract_cycle(g: Digraph, cycle: Sequence[int]) -> Digraph:
    """
    Replaces the vertices of a directed cycle by one fresh vertex (largest
    id + 1) that inherits every arc to and from the outside.
    """

    members = set(_require_cycle(g, cycle))
    w = fresh_vertex(g)
    arcs = set()
    for x, y in g.arcs:
        if x in members and y in members:
            continue
        arcs.add((w if x in members else x, w if y in members else y))
    vertices = tuple(x for x in g.vertices if x not in members) + (w,)
    return Digraph(vertices, frozenset(arcs))


def apply_operation(g: Digraph, op: MinorOperation) -> Digraph:
    if op.kind is OperationKind.DELETE_VERTEX:
        return delete_vertex(g, op.args[0])
    if op.kind is OperationKind.DELETE_EDGE:
        return delete_edge(g, op.args)
    if op.kind is OperationKind.OUT_CONTRACT:
        return out_contract(g, op.args)
    if op.kind is OperationKind.IN_CONTRACT:
        return in_contract(g, op.args)
    return contract_cycle(g, op.args)


def cycle_representatives(g: Digraph) -> List[Tuple[int, ...]]:
    """
    One simple directed cycle per cycle vertex set, ascending by the cycle
    sequence; each cycle starts at its smallest vertex.

    Contracting a cycle only depends on its vertex set.
    """

    best: Dict[frozenset, Tuple[int, ...]] = {}
    for cycle in nx.simple_cycles(g.to_networkx()):
        start = cycle.index(min(cycle))
        rotated = tuple(cycle[start:] + cycle[:start])
        key = frozenset(rotated)
        if key not in best or rotated < best[key]:
            best[key] = rotated
    return sorted(best.values())


def successors(
    g: Digraph, include_edge_deletions: bool = True
) -> Iterator[Tuple[MinorOperation, Digraph]]:
    """
    Yields every single minor operation applicable to `g` with its result.

    Order: vertex deletions, edge deletions, out-contractions,
    in-contractions, cycle contractions; each group ascending by arguments.
    """

    for v in g.vertices:
        op = MinorOperation.delete_vertex(v)
        yield op, delete_vertex(g, v)
    if include_edge_deletions:
        for arc in g.sorted_arcs:
            yield MinorOperation.delete_edge(*arc), delete_edge(g, arc)
    for arc in g.sorted_arcs:
        yield MinorOperation.out_contract(*arc), out_contract(g, arc)
    for arc in g.sorted_arcs:
        yield MinorOperation.in_contract(*arc), in_contract(g, arc)
    for cycle in cycle_representatives(g):
        yield MinorOperation.contract_cycle(cycle), contract_cycle(g, cycle)
