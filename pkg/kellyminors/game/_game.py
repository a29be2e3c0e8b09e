import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from kellyminors.digraph import Digraph, reachable_set
from kellyminors.exceptions import DomainError
from kellyminors.utils import check_capacity

logger = logging.getLogger(__name__)

GAME_MAX_N = 8


@dataclass(frozen=True)
class GameState:
    """
    A position of the cops-and-inert-robber game.

    Attributes:
        cops: Vertices currently occupied by cops.
        contaminated: Vertices the invisible robber may occupy; disjoint
            from `cops`.
    """

    cops: FrozenSet[int]
    contaminated: FrozenSet[int]

    @classmethod
    def initial(cls, g: Digraph) -> "GameState":
        return cls(cops=frozenset(), contaminated=frozenset(g.vertices))

    @property
    def cleared(self) -> bool:
        return not self.contaminated


def resolve_move(
    g: Digraph, s: GameState, new_cops: Iterable[int], k: Optional[int] = None
) -> GameState:
    """
    Moves the cops from ``s.cops`` to `new_cops` in one step.

    A robber is only disturbed when a cop lands on a vertex it may occupy.
    It then flees along a directed path that avoids the cops staying in
    place, and may end anywhere not about to be occupied.

    Raises:
        DomainError: More than `k` cops, or an unknown vertex.
    """

    new_cops = frozenset(new_cops)
    g.require_vertices(new_cops)
    if k is not None and len(new_cops) > k:
        raise DomainError(f"At most {k} cops are available", str(sorted(new_cops)))

    staying = s.cops & new_cops
    threatened = s.contaminated & new_cops
    fled = reachable_set(g.without_vertices(staying), threatened) if threatened else frozenset()
    contaminated = (s.contaminated | fled) - new_cops
    return GameState(cops=new_cops, contaminated=frozenset(contaminated))


def _placements(g: Digraph, k: int) -> List[FrozenSet[int]]:
    return [
        frozenset(c)
        for size in range(1, min(k, g.order) + 1)
        for c in combinations(g.vertices, size)
    ]


def _search(g: Digraph, k: int) -> Tuple[Optional[List[FrozenSet[int]]], int]:
    start = GameState.initial(g)
    if start.cleared:
        return [], 1
    moves = _placements(g, k)
    parent: Dict[GameState, Tuple[Optional[GameState], FrozenSet[int]]] = {start: (None, frozenset())}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for placement in moves:
            nxt = resolve_move(g, state, placement)
            if nxt in parent:
                continue
            parent[nxt] = (state, placement)
            if nxt.cleared:
                strategy = []
                cursor: Optional[GameState] = nxt
                while parent[cursor][0] is not None:
                    previous, move = parent[cursor]
                    strategy.append(move)
                    cursor = previous
                return strategy[::-1], len(parent)
            queue.append(nxt)
    return None, len(parent)


def winning_strategy(
    g: Digraph, k: int, max_n: Optional[int] = None
) -> Optional[List[FrozenSet[int]]]:
    """
    Returns a shortest sequence of cop placements with which `k` cops
    clear `g`, or None when `k` cops cannot win.

    Positions are explored breadth first with moves in lexicographic
    order; a position seen before is never expanded again.
    """

    check_capacity("winning_strategy", g.order, GAME_MAX_N, max_n)
    strategy, explored = _search(g, k)
    logger.debug("winning_strategy n=%d k=%d states=%d win=%s", g.order, k, explored, strategy is not None)
    return strategy


def has_winning_strategy(g: Digraph, k: int, max_n: Optional[int] = None) -> bool:
    return winning_strategy(g, k, max_n) is not None


def min_cops(g: Digraph, max_n: Optional[int] = None) -> int:
    """
    The least number of cops that can capture an invisible inert robber
    on `g`; 0 for the null digraph.

    Raises:
        CapacityError: `g` has more vertices than the bound (8 by default).
    """

    check_capacity("min_cops", g.order, GAME_MAX_N, max_n)
    for k in _budgets(g):
        if has_winning_strategy(g, k, max_n):
            return k
    return g.order


def _budgets(g: Digraph) -> Iterator[int]:
    if g.order == 0:
        yield 0
    yield from range(1, g.order + 1)
