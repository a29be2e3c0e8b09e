import logging
from typing import List, Set

import numpy as np

from kellyminors.digraph import Arc, Digraph
from kellyminors.exceptions import DomainError

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 stream for `seed`; identical seeds give identical graphs."""
    if seed < 0:
        raise DomainError("Seed must be non-negative", str(seed))
    return np.random.Generator(np.random.PCG64(seed))


def _check_probability(edge_prob: float):
    if not 0.0 <= edge_prob <= 1.0:
        raise DomainError("edge_prob must lie in [0, 1]", str(edge_prob))


def _kdag_arcs(n: int, k: int, rng: np.random.Generator) -> Set[Arc]:
    if k < 0 or n < k:
        raise DomainError("A k-DAG needs 0 <= k <= n", f"n={n} k={k}")

    arcs = {(u, v) for u in range(k) for v in range(k) if u != v}
    for v in range(k, n):
        size = int(rng.integers(0, k + 1))
        targets = sorted(int(x) for x in rng.choice(v, size=size, replace=False)) if size else []
        arcs.update((v, x) for x in targets)
        # With no targets the condition holds for every earlier vertex.
        arcs.update(
            (u, v)
            for u in range(v)
            if all((u, x) in arcs for x in targets if x != u)
        )
    return arcs


def generate_kdag(n: int, k: int, seed: int) -> Digraph:
    """
    Grows a k-DAG from the complete digraph on `k` vertices.

    Each new vertex `v` draws a size uniformly from 0..k and that many
    distinct earlier vertices as its out-neighbours X. Every earlier vertex
    `u` with an arc to each member of X other than itself gets the arc
    (u, v).

    Raises:
        DomainError: ``n < k`` or ``k < 0``.
    """

    arcs = _kdag_arcs(n, k, make_rng(seed))
    return Digraph(tuple(range(n)), frozenset(arcs))


def generate_partial_kdag(n: int, k: int, seed: int, edge_prob: float = 0.5) -> Digraph:
    """
    A random subgraph of `generate_kdag(n, k, seed)`: each arc is kept with
    probability `edge_prob`.
    """

    _check_probability(edge_prob)
    rng = make_rng(seed)
    arcs = sorted(_kdag_arcs(n, k, rng))
    keep = rng.random(len(arcs)) < edge_prob
    return Digraph(tuple(range(n)), frozenset(arc for arc, kept in zip(arcs, keep) if kept))


def _random_arcs(n: int, edge_prob: float, rng: np.random.Generator) -> List[Arc]:
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    draws = rng.random(len(pairs))
    return [pair for pair, draw in zip(pairs, draws) if draw < edge_prob]


def random_digraph(n: int, edge_prob: float, seed: int) -> Digraph:
    """Each ordered pair of distinct vertices is an arc with probability `edge_prob`."""
    _check_probability(edge_prob)
    if n < 0:
        raise DomainError("Vertex count must be non-negative", str(n))
    return Digraph(tuple(range(n)), frozenset(_random_arcs(n, edge_prob, make_rng(seed))))


def random_min_out_degree_2(n: int, seed: int, edge_prob: float = 0.3) -> Digraph:
    """
    A random digraph repaired to minimum out-degree 2 by adding random
    out-arcs; arcs are only ever added.

    Raises:
        DomainError: ``n < 3``.
    """

    if n < 3:
        raise DomainError("Minimum out-degree 2 needs at least 3 vertices", str(n))
    _check_probability(edge_prob)

    rng = make_rng(seed)
    arcs = set(_random_arcs(n, edge_prob, rng))
    for v in range(n):
        outs = {w for u, w in arcs if u == v}
        free = [w for w in range(n) if w != v and w not in outs]
        missing = 2 - len(outs)
        if missing > 0:
            picked = rng.choice(len(free), size=missing, replace=False)
            arcs.update((v, free[int(i)]) for i in picked)
    return Digraph(tuple(range(n)), frozenset(arcs))
