import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from networkx.algorithms.isomorphism import DiGraphMatcher

from kellyminors.utils import check_capacity

from ._digraph import Digraph

logger = logging.getLogger(__name__)

CANONICAL_MAX_N = 10


@dataclass(frozen=True)
class CanonicalForm:
    """
    Isomorphism-invariant key of a digraph.

    Attributes:
        canonical_bytes: Equal for two digraphs exactly when they are
            isomorphic.
        size_hint: (vertex count, arc count).
    """

    canonical_bytes: bytes
    size_hint: Tuple[int, int]


def _refine(g: Digraph, colors: Dict[int, int]) -> Dict[int, int]:
    # Colour refinement on (colour, out-colours, in-colours); ranks come from
    # sorted signatures so the result does not depend on vertex labels.
    classes = len(set(colors.values()))
    while True:
        signatures = {
            v: (
                colors[v],
                tuple(sorted(colors[w] for w in g.out_neighbors(v))),
                tuple(sorted(colors[w] for w in g.in_neighbors(v))),
            )
            for v in g.vertices
        }
        ranks = {sig: rank for rank, sig in enumerate(sorted(set(signatures.values())))}
        colors = {v: ranks[signatures[v]] for v in g.vertices}
        refined = len(ranks)
        if refined == classes:
            return colors
        classes = refined


def _initial_colors(g: Digraph) -> Dict[int, int]:
    signatures = {
        v: (
            g.out_degree(v),
            g.in_degree(v),
            sum(1 for w in g.out_neighbors(v) if g.has_arc(w, v)),
        )
        for v in g.vertices
    }
    ranks = {sig: rank for rank, sig in enumerate(sorted(set(signatures.values())))}
    return {v: ranks[signatures[v]] for v in g.vertices}


def _adjacency_code(g: Digraph, order: List[int]) -> int:
    code = 0
    for u in order:
        out = g.out_neighbors(u)
        for v in order:
            code = (code << 1) | (v in out)
    return code


def _best_code(g: Digraph, colors: Dict[int, int]) -> int:
    colors = _refine(g, colors)
    cells: Dict[int, List[int]] = {}
    for v in g.vertices:
        cells.setdefault(colors[v], []).append(v)
    target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
    if target is None:
        return _adjacency_code(g, sorted(g.vertices, key=colors.__getitem__))

    best = None
    doubled = {v: 2 * c for v, c in colors.items()}
    for v in cells[target]:
        individualized = dict(doubled)
        individualized[v] = 2 * target - 1
        code = _best_code(g, individualized)
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: Digraph, max_n: Optional[int] = None) -> CanonicalForm:
    """
    Computes the canonical form of `g`.

    Vertex orderings are restricted to those compatible with a
    degree-seeded colour refinement, branching on the first non-singleton
    cell; the smallest row-major adjacency code over all leaves is the key.
    Raises `CapacityError` past `max_n` vertices (default 10).
    """

    check_capacity("canonical_form", g.order, CANONICAL_MAX_N, max_n)
    n = g.order
    code = _best_code(g, _initial_colors(g)) if n else 0
    width = (n * n + 7) // 8
    canonical_bytes = n.to_bytes(2, "big") + code.to_bytes(width, "big")
    return CanonicalForm(canonical_bytes=canonical_bytes, size_hint=(n, g.size))


def is_isomorphic(g: Digraph, h: Digraph, max_n: Optional[int] = None) -> bool:
    if (g.order, g.size) != (h.order, h.size):
        return False
    return canonical_form(g, max_n) == canonical_form(h, max_n)


def find_embedding(pattern: Digraph, host: Digraph) -> Optional[Dict[int, int]]:
    """
    Finds a bijection from pattern vertices onto host vertices that maps
    every pattern arc onto a host arc, or None.

    The host may carry extra arcs; deleting them yields a graph isomorphic
    to `pattern` through the returned map.
    """

    if pattern.order != host.order or pattern.size > host.size:
        return None
    if not pattern.order:
        return {}

    matcher = DiGraphMatcher(host.to_networkx(), pattern.to_networkx())
    found = next(matcher.subgraph_monomorphisms_iter(), None)
    if found is None:
        return None
    return {p: h for h, p in found.items()}
