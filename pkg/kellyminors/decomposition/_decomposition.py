import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from kellyminors.digraph import Digraph
from kellyminors.exceptions import FormatError, StructuralError
from kellyminors.utils import JSON


@dataclass
class KellyDecomposition:
    """
    A Kelly-decomposition: a DAG of nodes, each carrying a node bag and a
    guard bag, with a fixed enumeration of every node's children and of
    the roots.

    Attributes:
        nodes: Node ids.
        edges: Parent -> child arcs of the decomposition DAG.
        bags: Node -> vertices it holds. The bags partition the vertex set;
            empty bags are allowed.
        guards: Node -> guard vertices.
        child_order: Node -> its children in enumeration order.
        root_order: The roots in enumeration order.
    """

    nodes: List[int] = field(default_factory=list)
    edges: List[Tuple[int, int]] = field(default_factory=list)
    bags: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    guards: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    child_order: Dict[int, List[int]] = field(default_factory=dict)
    root_order: List[int] = field(default_factory=list)

    def bag(self, node: int) -> FrozenSet[int]:
        return self.bags.get(node, frozenset())

    def guard(self, node: int) -> FrozenSet[int]:
        return self.guards.get(node, frozenset())

    @property
    def width(self) -> int:
        return max((len(self.bag(i) | self.guard(i)) for i in self.nodes), default=0)

    def to_networkx(self) -> nx.DiGraph:
        """
        Raises:
            StructuralError: An edge names an unknown node, or the arcs
                close a cycle.
        """

        dag = nx.DiGraph()
        dag.add_nodes_from(self.nodes)
        for parent, child in self.edges:
            if parent not in dag or child not in dag:
                raise StructuralError("Decomposition edge names an unknown node", f"({parent}, {child})")
            dag.add_edge(parent, child)
        if not nx.is_directed_acyclic_graph(dag):
            cycle = nx.find_cycle(dag)
            raise StructuralError("Decomposition graph has a cycle", str(cycle))
        return dag

    def children(self, node: int) -> List[int]:
        return sorted(child for parent, child in self.edges if parent == node)

    def roots(self) -> List[int]:
        has_parent = {child for _, child in self.edges}
        return [i for i in sorted(self.nodes) if i not in has_parent]

    def subtree_bag(self, node: int, dag: Optional[nx.DiGraph] = None) -> FrozenSet[int]:
        """The union of the bags of `node` and of every node below it."""
        dag = dag if dag is not None else self.to_networkx()
        members = {node} | nx.descendants(dag, node)
        return frozenset().union(*(self.bag(i) for i in members))

    def relabel_nodes(self, mapping: Dict[int, int]) -> "KellyDecomposition":
        return KellyDecomposition(
            nodes=[mapping[i] for i in self.nodes],
            edges=[(mapping[a], mapping[b]) for a, b in self.edges],
            bags={mapping[i]: bag for i, bag in self.bags.items()},
            guards={mapping[i]: guard for i, guard in self.guards.items()},
            child_order={mapping[i]: [mapping[c] for c in cs] for i, cs in self.child_order.items()},
            root_order=[mapping[r] for r in self.root_order],
        )

    def to_json(self) -> Dict[str, JSON]:
        def sets(data: Dict[int, FrozenSet[int]]) -> Dict[str, JSON]:
            return {str(i): sorted(data.get(i, ())) for i in self.nodes}

        return {
            "nodes": list(self.nodes),
            "edges": [list(e) for e in self.edges],
            "W": sets(self.bags),
            "X": sets(self.guards),
            "child_order": {str(i): list(self.child_order.get(i, [])) for i in self.nodes},
            "root_order": list(self.root_order),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: JSON) -> "KellyDecomposition":
        def sets(raw: Dict[str, JSON]) -> Dict[int, FrozenSet[int]]:
            return {int(i): frozenset(int(v) for v in vs) for i, vs in raw.items()}

        try:
            return cls(
                nodes=[int(i) for i in data["nodes"]],
                edges=[(int(a), int(b)) for a, b in data.get("edges", [])],
                bags=sets(data.get("W", {})),
                guards=sets(data.get("X", {})),
                child_order={
                    int(i): [int(c) for c in cs] for i, cs in data.get("child_order", {}).items()
                },
                root_order=[int(r) for r in data.get("root_order", [])],
            )
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError("Malformed decomposition", exc) from exc

    @classmethod
    def loads(cls, text: str) -> "KellyDecomposition":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError("Decomposition is not valid JSON", exc, line=exc.lineno) from exc
        return cls.from_json(data)


@dataclass(frozen=True)
class Violation:
    """
    Attributes:
        clause: ``partition``, ``guarding`` or ``ordering``.
        node: The offending decomposition node, if any.
        detail: Human-readable explanation.
    """

    clause: str
    node: Optional[int]
    detail: str

    def __str__(self):
        where = "" if self.node is None else f" at node {self.node}"
        return f"{self.clause}{where}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    width: Optional[int] = None
    violation: Optional[Violation] = None

    def __bool__(self):
        return self.valid


def guards(g: Digraph, x: Iterable[int], w: Iterable[int]) -> bool:
    """
    Whether `x` guards `w`: the two are disjoint and every arc leaving `w`
    ends in `x`.
    """

    x, w = frozenset(x), frozenset(w)
    g.require_vertices(x | w)
    if x & w:
        return False
    return all(g.out_neighbors(u) <= w | x for u in w)


def _check_bags(g: Digraph, d: KellyDecomposition):
    known = set(d.nodes)
    for what, data in (("node bag", d.bags), ("guard bag", d.guards)):
        for node, bag in data.items():
            if node not in known:
                raise StructuralError(f"{what} for unknown node", str(node))
            stray = sorted(v for v in bag if not g.has_vertex(v))
            if stray:
                raise StructuralError(f"{what} of node {node} names unknown vertices", str(stray))


def _partition_violation(g: Digraph, d: KellyDecomposition) -> Optional[Violation]:
    seen: Dict[int, int] = {}
    for node in sorted(d.nodes):
        for v in sorted(d.bag(node)):
            if v in seen:
                return Violation("partition", node, f"vertex {v} also lies in node {seen[v]}")
            seen[v] = node
    missing = sorted(set(g.vertices) - set(seen))
    if missing:
        return Violation("partition", None, f"vertices {missing} lie in no node bag")
    return None


def _order_violation(d: KellyDecomposition) -> Optional[Violation]:
    if sorted(d.root_order) != d.roots():
        detail = f"root order {d.root_order} does not enumerate the roots {d.roots()}"
        return Violation("ordering", None, detail)
    for node in sorted(d.nodes):
        listed = d.child_order.get(node, [])
        if sorted(listed) != d.children(node):
            detail = f"child order {listed} does not enumerate the children {d.children(node)}"
            return Violation("ordering", node, detail)
    return None


def validate_decomposition(g: Digraph, d: KellyDecomposition) -> ValidationReport:
    """
    Checks that `d` is a Kelly-decomposition of `g` and reports the first
    violated condition.

    The bags must partition the vertices; every guard bag must guard the
    union of the bags at and below its node; each node's children (and the
    roots) must be enumerated so that every guard bag is covered by what
    comes before it. For roots the printed condition
    ``bag(r_q) <= union of subtree bags of r_p, p < q`` cannot hold for the
    first root, so the first root is left unconstrained and the condition is
    enforced literally for the others.

    Raises:
        StructuralError: The decomposition graph has a cycle, or a bag
            names an unknown node or vertex.
    """

    dag = d.to_networkx()
    _check_bags(g, d)

    violation = _partition_violation(g, d) or _order_violation(d)
    if violation is not None:
        return ValidationReport(valid=False, violation=violation)

    below = {node: d.subtree_bag(node, dag) for node in d.nodes}
    for node in sorted(d.nodes):
        if not guards(g, d.guard(node), below[node]):
            return ValidationReport(
                valid=False,
                violation=Violation("guarding", node, f"{sorted(d.guard(node))} does not guard {sorted(below[node])}"),
            )

    for node in sorted(d.nodes):
        covered = set(d.bag(node) | d.guard(node))
        for child in d.child_order.get(node, []):
            if not d.guard(child) <= covered:
                stray = sorted(d.guard(child) - covered)
                return ValidationReport(
                    valid=False,
                    violation=Violation(
                        "ordering", child, f"guards {stray} are not covered by the parent or earlier siblings"
                    ),
                )
            covered |= below[child]

    covered = set()
    for q, root in enumerate(d.root_order):
        if q > 0 and not d.bag(root) <= covered:
            stray = sorted(d.bag(root) - covered)
            return ValidationReport(
                valid=False,
                violation=Violation("ordering", root, f"bag vertices {stray} are not covered by earlier roots"),
            )
        covered |= below[root]

    return ValidationReport(valid=True, width=d.width)
