import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from kellyminors.digraph import Digraph, canonical_form
from kellyminors.exceptions import DomainError, FormatError, ReplayError
from kellyminors.utils import JSON

from ._operations import MinorOperation, apply_operation


@dataclass
class WitnessScript:
    """
    Replayable certificate that `claimed_result` is a directed minor of the
    graph the steps are replayed on.

    Attributes:
        steps: Operations in application order, each addressed by live ids.
        claimed_result: The minor the replay should produce, up to isomorphism.
        vertex_map: Claimed-result vertex -> surviving vertex id. May be empty
            when only the isomorphism class is certified.
        target: A short name for `claimed_result` (``k2``, ``k3``, ``n4``,
            ``m5`` or ``pattern``).
    """

    steps: List[MinorOperation]
    claimed_result: Digraph
    vertex_map: Dict[int, int] = field(default_factory=dict)
    target: str = "pattern"

    def __len__(self):
        return len(self.steps)

    def prepend(self, steps: List[MinorOperation]) -> "WitnessScript":
        return WitnessScript(
            steps=list(steps) + list(self.steps),
            claimed_result=self.claimed_result,
            vertex_map=dict(self.vertex_map),
            target=self.target,
        )

    def to_json(self) -> Dict[str, JSON]:
        return {
            "target": self.target,
            "steps": [step.to_json() for step in self.steps],
            "vertex_map": {str(k): v for k, v in sorted(self.vertex_map.items())},
            "claimed_result": {
                "vertices": list(self.claimed_result.vertices),
                "arcs": [list(arc) for arc in self.claimed_result.sorted_arcs],
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: JSON) -> "WitnessScript":
        """
        Loads a script. Without a ``claimed_result`` object the target name
        is resolved against the obstruction catalog.
        """

        try:
            target = data.get("target", "pattern")
            steps = [MinorOperation.from_json(step) for step in data["steps"]]
            vertex_map = {int(k): int(v) for k, v in data.get("vertex_map", {}).items()}
            raw = data.get("claimed_result")
            if raw is not None:
                claimed = Digraph.from_arcs(
                    (tuple(arc) for arc in raw["arcs"]), raw.get("vertices", ())
                )
            else:
                from kellyminors.oracle import get_target

                claimed = get_target(target)
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError("Malformed witness script", exc) from exc
        return cls(steps=steps, claimed_result=claimed, vertex_map=vertex_map, target=target)

    @classmethod
    def loads(cls, text: str) -> "WitnessScript":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError("Witness script is not valid JSON", exc, line=exc.lineno) from exc
        return cls.from_json(data)


@dataclass(frozen=True)
class ReplayResult:
    """
    Outcome of replaying a script.

    Attributes:
        graph: The digraph after the last step.
        isomorphic: Whether `graph` is isomorphic to the claimed result.
        vertex_map_valid: Whether the script's vertex map is an exact
            isomorphism onto `graph` (None when the script has no map).
    """

    graph: Digraph
    isomorphic: bool
    vertex_map_valid: Optional[bool]

    @property
    def ok(self) -> bool:
        return self.isomorphic and self.vertex_map_valid is not False


def run_steps(g: Digraph, steps: List[MinorOperation]) -> Digraph:
    """Applies `steps` in order; a failing step raises `ReplayError` with its index."""
    current = g
    for index, step in enumerate(steps):
        try:
            current = apply_operation(current, step)
        except DomainError as exc:
            raise ReplayError(f"cannot apply {step}", exc, step_index=index) from exc
    return current


def _vertex_map_valid(graph: Digraph, script: WitnessScript) -> Optional[bool]:
    if not script.vertex_map:
        return None
    claimed = script.claimed_result
    if set(script.vertex_map) != set(claimed.vertices):
        return False
    if sorted(script.vertex_map.values()) != list(graph.vertices):
        return False
    mapped = {(script.vertex_map[u], script.vertex_map[v]) for u, v in claimed.arcs}
    return mapped == set(graph.arcs)


def replay(g: Digraph, script: WitnessScript) -> ReplayResult:
    """
    Replays `script` on `g` and compares the result with the claimed minor
    through canonical forms.
    """

    final = run_steps(g, script.steps)
    isomorphic = (final.order, final.size) == (
        script.claimed_result.order,
        script.claimed_result.size,
    ) and canonical_form(final) == canonical_form(script.claimed_result)
    return ReplayResult(
        graph=final,
        isomorphic=isomorphic,
        vertex_map_valid=_vertex_map_valid(final, script),
    )
