from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from kellyminors.exceptions import DomainError

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """
    Finite simple digraph over opaque integer vertex ids.

    Values are immutable: every operation in the library returns a new
    `Digraph`. Vertices are kept sorted and arcs are a frozen set, so two
    digraphs compare equal exactly when they have the same labelled vertex
    and arc sets.

    Attributes:
        vertices: The vertex ids in ascending order.
        arcs: The arcs as (tail, head) pairs. Both (u, v) and (v, u) may be
            present; together they form a bidirected edge.
    """

    vertices: Tuple[int, ...] = ()
    arcs: FrozenSet[Arc] = frozenset()

    def __post_init__(self):
        vertices = tuple(sorted(set(self.vertices)))
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        present = set(vertices)
        for u, v in arcs:
            if u == v:
                raise DomainError("Self-loops are not allowed", f"({u}, {v})")
            if u not in present or v not in present:
                raise DomainError("Arc endpoint is not a vertex", f"({u}, {v})")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], vertices: Iterable[int] = ()) -> "Digraph":
        """Builds a digraph from arcs; endpoints are added as vertices."""
        arcs = list(arcs)
        ids = set(vertices)
        for u, v in arcs:
            ids.update((u, v))
        return cls(tuple(ids), frozenset(arcs))

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        return cls(
            tuple(range(n)),
            frozenset((u, v) for u in range(n) for v in range(n) if u != v),
        )

    @classmethod
    def directed_path(cls, n: int) -> "Digraph":
        return cls(tuple(range(n)), frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def directed_cycle(cls, n: int) -> "Digraph":
        return cls(tuple(range(n)), frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def bidirected_path(cls, n: int) -> "Digraph":
        arcs = set()
        for i in range(n - 1):
            arcs.update({(i, i + 1), (i + 1, i)})
        return cls(tuple(range(n)), frozenset(arcs))

    @classmethod
    def bidirected_cycle(cls, n: int) -> "Digraph":
        arcs = set()
        for i in range(n):
            j = (i + 1) % n
            arcs.update({(i, j), (j, i)})
        return cls(tuple(range(n)), frozenset(arcs))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.arcs)

    @cached_property
    def sorted_arcs(self) -> Tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    @cached_property
    def _out(self) -> Dict[int, FrozenSet[int]]:
        out: Dict[int, set] = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            out[u].add(v)
        return {v: frozenset(heads) for v, heads in out.items()}

    @cached_property
    def _in(self) -> Dict[int, FrozenSet[int]]:
        inn: Dict[int, set] = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            inn[v].add(u)
        return {v: frozenset(tails) for v, tails in inn.items()}

    @cached_property
    def index(self) -> Dict[int, int]:
        """Bit position of each vertex in the mask encodings."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        index = self.index
        return tuple(
            sum(1 << index[w] for w in self._out[v]) for v in self.vertices
        )

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        index = self.index
        return tuple(
            sum(1 << index[w] for w in self._in[v]) for v in self.vertices
        )

    def has_vertex(self, v: int) -> bool:
        return v in self._out

    def require_vertex(self, v: int) -> None:
        if v not in self._out:
            raise DomainError("Unknown vertex", str(v))

    def require_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            self.require_vertex(v)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> FrozenSet[int]:
        self.require_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> FrozenSet[int]:
        self.require_vertex(v)
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def is_bidirected(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs and (v, u) in self.arcs

    def bidirected_pairs(self) -> List[Arc]:
        """Bidirected edges as (smaller, larger) pairs, ascending."""
        return [(u, v) for u, v in self.sorted_arcs if u < v and (v, u) in self.arcs]

    def directed_arcs(self) -> List[Arc]:
        """Arcs whose reverse is absent, ascending."""
        return [(u, v) for u, v in self.sorted_arcs if (v, u) not in self.arcs]

    def induced_subgraph(self, vertices: Iterable[int]) -> "Digraph":
        keep = set(vertices)
        self.require_vertices(keep)
        return Digraph(
            tuple(keep),
            frozenset((u, v) for u, v in self.arcs if u in keep and v in keep),
        )

    def without_vertices(self, vertices: Iterable[int]) -> "Digraph":
        drop = set(vertices)
        return self.induced_subgraph(v for v in self.vertices if v not in drop)

    def relabel(self, mapping: Mapping[int, int]) -> "Digraph":
        """Renames vertices; `mapping` must be injective on the vertex set."""
        self.require_vertices(mapping)
        if len(set(mapping[v] for v in self.vertices)) != self.order:
            raise DomainError("Relabelling is not injective")
        return Digraph(
            tuple(mapping[v] for v in self.vertices),
            frozenset((mapping[u], mapping[v]) for u, v in self.arcs),
        )

    def compact(self) -> "Digraph":
        """Relabels vertices to 0..n-1 preserving their order."""
        return self.relabel(self.index)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.sorted_arcs)
        return graph

    def mask_of(self, vertices: Iterable[int]) -> int:
        index = self.index
        mask = 0
        for v in vertices:
            self.require_vertex(v)
            mask |= 1 << index[v]
        return mask

    def vertices_of(self, mask: int) -> FrozenSet[int]:
        return frozenset(v for i, v in enumerate(self.vertices) if mask >> i & 1)

    def __repr__(self):
        return f"Digraph(n={self.order}, arcs={list(self.sorted_arcs)})"


def reachable_set(g: Digraph, sources: Iterable[int]) -> FrozenSet[int]:
    """
    Returns every vertex with a directed path from some source.

    Sources are included (the empty path). Raises `DomainError` on an
    unknown source.
    """

    sources = list(sources)
    g.require_vertices(sources)
    graph = g.to_networkx()
    reached = set()
    for source in sources:
        if source not in reached:
            reached.add(source)
            reached |= nx.descendants(graph, source)
    return frozenset(reached)


def reach_mask(out_masks: Tuple[int, ...], start: int, allowed: int) -> int:
    """Vertices reachable from `start` (a mask) moving only inside `allowed`."""
    reached = start & allowed
    frontier = reached
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        step = out_masks[low.bit_length() - 1] & allowed & ~reached
        reached |= step
        frontier |= step
    return reached


def strongly_connected_components(g: Digraph) -> List[FrozenSet[int]]:
    """
    Strong components in a topological order of the condensation.

    Condensation arcs only run from earlier-listed to later-listed
    components. Ties are broken by the smallest vertex id of a component.
    """

    condensed = nx.condensation(g.to_networkx())
    members = nx.get_node_attributes(condensed, "members")
    order = nx.lexicographical_topological_sort(
        condensed, key=lambda node: min(members[node])
    )
    return [frozenset(members[node]) for node in order]


def terminal_components(g: Digraph) -> List[FrozenSet[int]]:
    """Strong components with no arc leaving them."""
    terminal = []
    for component in strongly_connected_components(g):
        if all(w in component for v in component for w in g.out_neighbors(v)):
            terminal.append(component)
    return terminal


def is_acyclic(g: Digraph) -> bool:
    return nx.is_directed_acyclic_graph(g.to_networkx())


def is_strongly_connected(g: Digraph) -> bool:
    return g.order > 0 and len(strongly_connected_components(g)) == 1


def shortest_path(
    g: Digraph,
    source: int,
    targets: Iterable[int],
    forbidden: Iterable[int] = (),
) -> Optional[List[int]]:
    """
    BFS path from `source` to the first reachable target.

    Internal vertices avoid `forbidden` and every target; neighbours are
    scanned in ascending id order so the result is deterministic.
    """

    targets = set(targets)
    g.require_vertex(source)
    blocked = set(forbidden) | targets
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in sorted(g.out_neighbors(v)):
            if w in parent:
                continue
            parent[w] = v
            if w in targets:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            if w not in blocked:
                queue.append(w)
    return None
