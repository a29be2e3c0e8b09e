from itertools import permutations
from math import factorial
from typing import Iterator, Optional

from kellyminors.digraph import Digraph, canonical_form
from kellyminors.utils import check_capacity

ENUMERATION_MAX_N = 4
BURNSIDE_MAX_N = 7


def enumerate_all(n: int, max_n: Optional[int] = None) -> Iterator[Digraph]:
    """
    Streams one digraph per isomorphism class on `n` vertices, in order of
    the first labelled representative met.

    Raises:
        CapacityError: ``n`` exceeds the bound (4 by default).
    """

    check_capacity("enumerate_all", n, ENUMERATION_MAX_N, max_n)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    vertices = tuple(range(n))
    seen = set()
    for mask in range(1 << len(pairs)):
        arcs = frozenset(pair for i, pair in enumerate(pairs) if mask >> i & 1)
        g = Digraph(vertices, arcs)
        key = canonical_form(g, max(n, 1)).canonical_bytes
        if key in seen:
            continue
        seen.add(key)
        yield g


def count_isomorphism_classes_burnside(n: int, max_n: Optional[int] = None) -> int:
    """
    Counts digraphs on `n` vertices up to isomorphism by averaging, over
    all vertex permutations, the number of arc sets each one fixes.
    """

    check_capacity("count_isomorphism_classes_burnside", n, BURNSIDE_MAX_N, max_n)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    total = 0
    for perm in permutations(range(n)):
        seen = set()
        orbits = 0
        for pair in pairs:
            if pair in seen:
                continue
            orbits += 1
            current = pair
            while current not in seen:
                seen.add(current)
                current = (perm[current[0]], perm[current[1]])
        total += 1 << orbits
    return total // factorial(n)
