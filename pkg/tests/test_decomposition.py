import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kellyminors.decomposition import (
    KellyDecomposition,
    build_decomposition,
    guards,
    optimal_decomposition,
    validate_decomposition,
)
from kellyminors.digraph import Digraph
from kellyminors.elimination import exact_kelly_width, ordering_width
from kellyminors.exceptions import DomainError, FormatError, StructuralError
from kellyminors.oracle import K3, M5
from strategies import digraphs


def _single_node(g: Digraph) -> KellyDecomposition:
    return KellyDecomposition(
        nodes=[0],
        bags={0: frozenset(g.vertices)},
        child_order={0: []},
        root_order=[0],
    )


class TestGuards:
    def test_arc_lands_in_the_guard(self, path_abc):
        assert guards(path_abc, {1}, {0})

    def test_arc_leaves(self):
        assert not guards(Digraph.from_arcs([(0, 1)]), set(), {0})

    def test_overlap(self, path_abc):
        assert not guards(path_abc, {0, 1}, {0})

    def test_unknown_vertex(self, path_abc):
        with pytest.raises(DomainError):
            guards(path_abc, {7}, {0})


class TestValidate:
    def test_single_node_holding_everything(self, path_abc):
        report = validate_decomposition(path_abc, _single_node(path_abc))
        assert report.valid
        assert report.width == 3

    def test_empty_decomposition_of_the_null_digraph(self):
        assert validate_decomposition(Digraph(), KellyDecomposition()).width == 0

    def test_dropped_guard_vertex(self):
        d = build_decomposition(K3, ordering_width(K3, (0, 1, 2)))
        d.guards[0] = frozenset({1})
        report = validate_decomposition(K3, d)
        assert not report.valid
        assert report.violation.clause == "guarding"
        assert report.violation.node == 0

    def test_vertex_in_two_bags(self, path_abc):
        d = KellyDecomposition(
            nodes=[0, 1],
            edges=[(0, 1)],
            bags={0: frozenset({0, 1, 2}), 1: frozenset({2})},
            child_order={0: [1]},
            root_order=[0],
        )
        report = validate_decomposition(path_abc, d)
        assert report.violation.clause == "partition"
        assert report.violation.node == 1

    def test_vertex_in_no_bag(self, path_abc):
        d = _single_node(path_abc)
        d.bags[0] = frozenset({0, 1})
        assert validate_decomposition(path_abc, d).violation.clause == "partition"

    def test_child_order_must_list_the_children(self, path_abc):
        d = build_decomposition(path_abc, ordering_width(path_abc, (0, 1, 2)))
        d.child_order[3] = [2, 1]
        report = validate_decomposition(path_abc, d)
        assert report.violation.clause == "ordering"
        assert report.violation.node == 3

    def test_children_in_the_wrong_order(self, path_abc):
        d = build_decomposition(path_abc, ordering_width(path_abc, (0, 1, 2)))
        d.child_order[3] = [0, 1, 2]
        report = validate_decomposition(path_abc, d)
        assert report.violation.clause == "ordering"
        assert report.violation.node == 0

    def test_later_root_needs_earlier_roots(self):
        g = Digraph((0, 1))
        d = KellyDecomposition(
            nodes=[0, 1],
            bags={0: frozenset({0}), 1: frozenset({1})},
            child_order={0: [], 1: []},
            root_order=[0, 1],
        )
        report = validate_decomposition(g, d)
        assert report.violation.clause == "ordering"
        assert report.violation.node == 1

    def test_cycle(self, path_abc):
        d = _single_node(path_abc)
        d.nodes.append(1)
        d.edges.extend([(0, 1), (1, 0)])
        with pytest.raises(StructuralError):
            validate_decomposition(path_abc, d)

    def test_edge_to_an_unknown_node(self, path_abc):
        d = _single_node(path_abc)
        d.edges.append((0, 5))
        with pytest.raises(StructuralError):
            validate_decomposition(path_abc, d)

    def test_bag_with_an_unknown_vertex(self, path_abc):
        d = _single_node(path_abc)
        d.guards[0] = frozenset({9})
        with pytest.raises(StructuralError):
            validate_decomposition(path_abc, d)


class TestBuild:
    def test_single_vertex(self):
        g = Digraph((4,))
        d = build_decomposition(g, ordering_width(g, (4,)))
        assert d.nodes == [4]
        assert d.bag(4) == {4}
        assert d.guard(4) == frozenset()
        assert d.width == 1

    def test_k3(self):
        d = build_decomposition(K3, ordering_width(K3, (2, 0, 1)))
        assert validate_decomposition(K3, d).width == 3
        assert d.root_order == [1]

    def test_path_guards_are_the_supports(self, path_abc):
        d = build_decomposition(path_abc, ordering_width(path_abc, (0, 1, 2)))
        assert d.guard(0) == {1}
        assert d.guard(1) == {2}
        assert d.width == 2
        assert d.root_order == [3]
        assert d.child_order[3] == [2, 1, 0]

    def test_null_digraph(self):
        assert build_decomposition(Digraph(), ordering_width(Digraph(), ())).nodes == []

    def test_ordering_of_another_digraph(self, path_abc):
        with pytest.raises(DomainError):
            build_decomposition(path_abc, ordering_width(K3, (0, 1, 2)))

    def test_optimal(self):
        d = optimal_decomposition(M5)
        assert validate_decomposition(M5, d).width == 3

    def test_json(self):
        d = optimal_decomposition(Digraph.bidirected_cycle(5))
        assert KellyDecomposition.loads(d.dumps()) == d
        assert set(d.to_json()) == {"nodes", "edges", "W", "X", "child_order", "root_order"}

    @pytest.mark.parametrize("text", ["[", '{"W": {}}', '{"nodes": [0], "W": {"0": 3}}'])
    def test_malformed_json(self, text):
        with pytest.raises(FormatError):
            KellyDecomposition.loads(text)

    @pytest.mark.property_based
    @settings(max_examples=60, deadline=None)
    @given(digraphs(max_n=6))
    def test_optimal_width_is_the_kelly_width(self, g):
        d = optimal_decomposition(g)
        report = validate_decomposition(g, d)
        assert report.valid, report.violation
        assert report.width == exact_kelly_width(g).width

    @pytest.mark.property_based
    @settings(max_examples=60, deadline=None)
    @given(digraphs(min_n=1, max_n=6).flatmap(lambda g: st.tuples(st.just(g), st.permutations(g.vertices))))
    def test_any_ordering_builds_a_valid_decomposition(self, case):
        g, order = case
        e = ordering_width(g, order)
        report = validate_decomposition(g, build_decomposition(g, e))
        assert report.valid, report.violation
        assert report.width == e.width + 1

    @pytest.mark.property_based
    @settings(max_examples=60, deadline=None)
    @given(
        digraphs(min_n=1, max_n=5).flatmap(
            lambda g: st.tuples(st.just(g), st.permutations(range(g.order + 1)), st.booleans())
        )
    )
    def test_verdict_does_not_depend_on_node_ids(self, case):
        g, image, scramble = case
        d = optimal_decomposition(g)
        if scramble:
            d.child_order = {i: children[::-1] for i, children in d.child_order.items()}
        before = validate_decomposition(g, d)
        after = validate_decomposition(g, d.relabel_nodes(dict(enumerate(image))))
        assert (after.valid, after.width) == (before.valid, before.width)
