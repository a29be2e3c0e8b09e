from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple

from kellyminors.digraph import Digraph, reach_mask
from kellyminors.exceptions import DomainError


@dataclass(frozen=True)
class EliminationOrdering:
    """
    A directed elimination ordering with its per-step supports.

    Attributes:
        order: Vertices in elimination order.
        supports: ``supports[i]`` is the out-neighbourhood of ``order[i]`` in
            the elimination graph at the moment it is eliminated.
    """

    order: Tuple[int, ...]
    supports: Tuple[FrozenSet[int], ...]

    @property
    def width(self) -> int:
        return max((len(s) for s in self.supports), default=0)

    def support_of(self, v: int) -> FrozenSet[int]:
        return self.supports[self.order.index(v)]


def eliminate_vertex(g: Digraph, v: int) -> Digraph:
    """
    Deletes `v` and adds a shortcut (u, w) for every in-neighbour u and
    out-neighbour w of `v` with u != w.
    """

    g.require_vertex(v)
    arcs = {(x, y) for x, y in g.arcs if v not in (x, y)}
    arcs.update(
        (u, w)
        for u in g.in_neighbors(v)
        for w in g.out_neighbors(v)
        if u != w
    )
    return Digraph(tuple(x for x in g.vertices if x != v), frozenset(arcs))


def ordering_width(g: Digraph, order: Sequence[int]) -> EliminationOrdering:
    """Eliminates `order` step by step, recording each vertex's support."""
    order = tuple(order)
    if sorted(order) != list(g.vertices):
        raise DomainError("Ordering is not a permutation of the vertices", str(order))

    supports = []
    current = g
    for v in order:
        supports.append(current.out_neighbors(v))
        current = eliminate_vertex(current, v)
    return EliminationOrdering(order=order, supports=tuple(supports))


def support_mask(out_masks: Tuple[int, ...], i: int, inside: int) -> int:
    """
    Mask form of supp: vertices outside `inside` and other than `i` that `i`
    reaches by a path whose internal vertices all lie in `inside`.
    """

    vbit = 1 << i
    inside &= ~vbit
    first = out_masks[i] & ~vbit
    through = reach_mask(out_masks, first & inside, inside)
    hit = first
    while through:
        low = through & -through
        through ^= low
        hit |= out_masks[low.bit_length() - 1]
    return hit & ~inside & ~vbit


def support_set(g: Digraph, v: int, eliminated: Iterable[int]) -> FrozenSet[int]:
    """
    Out-neighbourhood of `v` after eliminating `eliminated` in any order:
    the vertices outside ``eliminated`` reachable from `v` through it.
    """

    eliminated = set(eliminated)
    if v in eliminated:
        raise DomainError("Vertex is already eliminated", str(v))
    inside = g.mask_of(eliminated)
    g.require_vertex(v)
    return g.vertices_of(support_mask(g.out_masks, g.index[v], inside))
