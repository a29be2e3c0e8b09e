import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from kellyminors.digraph import (
    Digraph,
    canonical_form,
    find_embedding,
    is_strongly_connected,
    strongly_connected_components,
)
from kellyminors.minor import (
    MinorOperation,
    WitnessScript,
    contract_cycle,
    cycle_representatives,
    delete_vertex,
    in_contract,
    out_contract,
)
from kellyminors.utils import check_capacity

from ._catalog import PARTIAL_1DAG_OBSTRUCTIONS, get_target

logger = logging.getLogger(__name__)

MINOR_MAX_N = 8

_Found = Tuple[List[MinorOperation], Dict[int, int]]


@dataclass(frozen=True)
class MinorVerdict:
    """
    Attributes:
        contained: Whether the pattern is a directed minor of the host.
        target: Name of the pattern that was found.
        script: A replayable witness when `contained`.
    """

    contained: bool
    target: Optional[str] = None
    script: Optional[WitnessScript] = None

    def __bool__(self):
        return self.contained


def _vertex_reducing(g: Digraph) -> Iterator[Tuple[MinorOperation, Digraph]]:
    for v in g.vertices:
        yield MinorOperation.delete_vertex(v), delete_vertex(g, v)
    for arc in g.sorted_arcs:
        yield MinorOperation.out_contract(*arc), out_contract(g, arc)
    for arc in g.sorted_arcs:
        yield MinorOperation.in_contract(*arc), in_contract(g, arc)
    for cycle in cycle_representatives(g):
        yield MinorOperation.contract_cycle(cycle), contract_cycle(g, cycle)


class MinorOracle:
    """
    `MinorOracle` decides directed-minor containment by exhaustive search
    over operation sequences on small digraphs.

    Edge deletions commute to the end of any operation sequence, so the
    search only walks vertex-reducing operations and, once the host is down
    to the pattern's order, looks for a spanning embedding of the pattern;
    the arcs it leaves unused become trailing edge deletions. States that
    cannot contain the pattern are memoized per pattern by canonical form.

    Example usage:

    .. code-block:: python

        from kellyminors import oracle
        from kellyminors.digraph import Digraph

        oracle.configure(max_n=8)
        verdict = oracle.contains_minor(Digraph.directed_cycle(3), oracle.K2)
        if verdict:
            print(verdict.script.dumps())
    """

    _instance = None

    def __init__(self, max_n: Optional[int] = None):
        self.max_n = max_n
        self._memo: Dict[bytes, Dict[bytes, bool]] = {}
        self.states_explored = 0

    @classmethod
    def configure(cls, max_n: Optional[int] = None):
        cls._instance = cls(max_n)

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            cls.configure()
        return cls._instance

    def clear(self):
        self._memo.clear()

    def contains_minor(self, g: Digraph, h: Digraph, target: str = "pattern") -> MinorVerdict:
        """
        Searches for a sequence of minor operations turning `g` into `h`.

        Returns:
            A verdict carrying a witness script when `h` is a minor of `g`.

        Raises:
            CapacityError: `g` has more vertices than the configured bound
                (8 by default).
        """

        bound = check_capacity("contains_minor", g.order, MINOR_MAX_N, self.max_n)
        if h.order > g.order or h.size > g.size:
            return MinorVerdict(contained=False)

        key = canonical_form(h, bound).canonical_bytes
        memo = self._memo.setdefault(key, {})
        strong = h.order > 0 and is_strongly_connected(h)
        explored = self.states_explored
        found = self._search(g, h, memo, bound, strong)
        logger.debug(
            "contains_minor target=%s n=%d m=%d explored=%d verdict=%s",
            target, g.order, g.size, self.states_explored - explored, found is not None,
        )
        if found is None:
            return MinorVerdict(contained=False)

        steps, vertex_map = found
        script = WitnessScript(
            steps=steps, claimed_result=h, vertex_map=vertex_map, target=target
        )
        return MinorVerdict(contained=True, target=target, script=script)

    def _pruned(self, g: Digraph, h: Digraph, strong: bool) -> bool:
        if g.order < h.order or g.size < h.size:
            return True
        if strong:
            largest = max((len(c) for c in strongly_connected_components(g)), default=0)
            return largest < h.order
        return False

    def _search(
        self, g: Digraph, h: Digraph, memo: Dict[bytes, bool], bound: int, strong: bool
    ) -> Optional[_Found]:
        if self._pruned(g, h, strong):
            return None
        key = canonical_form(g, bound).canonical_bytes
        if key in memo:
            return None
        self.states_explored += 1

        if g.order == h.order:
            mapping = find_embedding(h, g)
            if mapping is not None:
                used = {(mapping[u], mapping[v]) for u, v in h.arcs}
                deletions = [
                    MinorOperation.delete_edge(*arc)
                    for arc in g.sorted_arcs
                    if arc not in used
                ]
                return deletions, mapping
        else:
            for op, child in _vertex_reducing(g):
                found = self._search(child, h, memo, bound, strong)
                if found is not None:
                    steps, mapping = found
                    return [op] + steps, mapping

        memo[key] = False
        return None

    def contains_any_obstruction(self, g: Digraph) -> MinorVerdict:
        """Tries K3, N4 and M5 in that order; the first hit wins."""
        for name in PARTIAL_1DAG_OBSTRUCTIONS:
            verdict = self.contains_minor(g, get_target(name), target=name)
            if verdict:
                return verdict
        return MinorVerdict(contained=False)
