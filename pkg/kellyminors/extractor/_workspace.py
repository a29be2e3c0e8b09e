from typing import Iterable, List, Optional, Sequence, Tuple

from kellyminors.digraph import Digraph, find_embedding, shortest_path
from kellyminors.exceptions import DomainError
from kellyminors.minor import MinorOperation, WitnessScript
from kellyminors.oracle import get_target


class CaseFailed(Exception):
    """A contraction plan did not apply to the live graph."""


class Workspace:
    """
    The live graph of an extraction together with every operation applied
    to it so far. Operations are addressed by the ids live at the time.
    """

    def __init__(self, g: Digraph):
        self.graph = g
        self.steps: List[MinorOperation] = []

    def apply(self, op: MinorOperation):
        self.graph = op.apply(self.graph)
        self.steps.append(op)

    def extend(self, ops: Iterable[MinorOperation], result: Optional[Digraph] = None):
        ops = list(ops)
        if result is None:
            for op in ops:
                self.apply(op)
            return
        self.steps.extend(ops)
        self.graph = result

    def snapshot(self) -> Tuple[Digraph, int]:
        return self.graph, len(self.steps)

    def restore(self, snapshot: Tuple[Digraph, int]):
        self.graph, size = snapshot
        del self.steps[size:]

    def out_contract(self, u: int, v: int):
        self.apply(MinorOperation.out_contract(u, v))

    def contract_cycle(self, cycle: Sequence[int]) -> int:
        self.apply(MinorOperation.contract_cycle(cycle))
        return max(self.graph.vertices)

    def path(self, source: int, targets: Iterable[int], forbidden: Iterable[int] = ()) -> List[int]:
        found = shortest_path(self.graph, source, targets, forbidden)
        if found is None:
            raise CaseFailed(f"no path from {source} to {sorted(set(targets))}")
        return found

    def shorten(self, path: Sequence[int]):
        """Out-contracts the path backwards until only the arc (first, last) is left."""
        last = path[-1]
        for p in reversed(path[1:-1]):
            self.out_contract(p, last)

    def collapse(self, path: Sequence[int]):
        """Identifies the whole path into its last vertex."""
        if len(path) < 2:
            return
        self.shorten(path)
        self.out_contract(path[0], path[-1])

    def collapse_forward(self, path: Sequence[int]):
        for u, v in zip(path, path[1:]):
            self.out_contract(u, v)

    def fork(self, main: Sequence[int], other: Sequence[int]) -> int:
        """
        Merges two paths leaving the same vertex.

        With `x` the last vertex of `other` that lies on `main`, the part of
        `main` up to `x` is contracted forwards into `x`, and both remaining
        tails are shortened to single arcs leaving `x`.
        """

        on_main = set(main)
        j = max(i for i, p in enumerate(other) if p in on_main)
        x = other[j]
        i = main.index(x)
        self.collapse_forward(main[: i + 1])
        self.shorten(other[j:])
        self.shorten(main[i:])
        return x

    def certify(self, keep: Iterable[int], target: str) -> WitnessScript:
        """
        Deletes everything outside `keep` and the arcs the target does not
        use, and returns the resulting witness.

        Raises:
            CaseFailed: The kept vertices do not carry the target.
        """

        keep = set(keep)
        pattern = get_target(target)
        try:
            self.graph.require_vertices(keep)
        except DomainError as exc:
            raise CaseFailed(str(exc)) from exc
        if len(keep) != pattern.order:
            raise CaseFailed(f"{target} needs {pattern.order} vertices, got {sorted(keep)}")

        for v in [v for v in self.graph.vertices if v not in keep]:
            self.apply(MinorOperation.delete_vertex(v))
        mapping = find_embedding(pattern, self.graph)
        if mapping is None:
            raise CaseFailed(f"{sorted(keep)} does not carry {target}")
        used = {(mapping[u], mapping[v]) for u, v in pattern.arcs}
        for arc in [arc for arc in self.graph.sorted_arcs if arc not in used]:
            self.apply(MinorOperation.delete_edge(*arc))
        return WitnessScript(
            steps=list(self.steps),
            claimed_result=pattern,
            vertex_map=mapping,
            target=target,
        )
