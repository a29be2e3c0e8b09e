from dataclasses import dataclass, fields
from typing import Dict, Tuple

from kellyminors.digraph import Digraph
from kellyminors.exceptions import DomainError


def _bidirected(*pairs: Tuple[int, int]):
    for u, v in pairs:
        yield u, v
        yield v, u


@dataclass(frozen=True)
class ObstructionCatalog:
    """
    The forbidden directed minors of partial 0-DAGs (`k2`) and partial
    1-DAGs (`k3`, `n4`, `m5`).

    `n4` is a bidirected path 0-1-2-3 with the chords (0, 2) and (3, 1);
    `m5` is a bidirected path 0-1-2-3-4 with both chords pointing at the
    middle vertex. Every vertex of `k3`, `n4` and `m5` has out-degree 2.
    """

    k2: Digraph
    k3: Digraph
    n4: Digraph
    m5: Digraph

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(self))

    def as_dict(self) -> Dict[str, Digraph]:
        return {name: getattr(self, name) for name in self.names}


CATALOG = ObstructionCatalog(
    k2=Digraph.complete(2),
    k3=Digraph.complete(3),
    n4=Digraph.from_arcs([*_bidirected((0, 1), (1, 2), (2, 3)), (0, 2), (3, 1)]),
    m5=Digraph.from_arcs([*_bidirected((0, 1), (1, 2), (2, 3), (3, 4)), (0, 2), (4, 2)]),
)

K2 = CATALOG.k2
K3 = CATALOG.k3
N4 = CATALOG.n4
M5 = CATALOG.m5

PARTIAL_1DAG_OBSTRUCTIONS = ("k3", "n4", "m5")


def get_target(name: str) -> Digraph:
    key = name.strip().lower()
    if key not in CATALOG.names:
        raise DomainError("Unknown obstruction", name)
    return getattr(CATALOG, key)
