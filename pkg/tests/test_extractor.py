import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kellyminors import oracle
from kellyminors.digraph import Digraph
from kellyminors.exceptions import DomainError, InternalInvariantError
from kellyminors.extractor import (
    ExtractionContext,
    extract,
    find_blocker,
    find_k2,
    find_obstruction,
    normalize,
)
from kellyminors.extractor._cases import (
    back_arc_case,
    candidates,
    common_in_case,
    common_out_case,
    dispatch,
)
from kellyminors.extractor._workspace import CaseFailed, Workspace
from kellyminors.genlab import random_min_out_degree_2
from kellyminors.minor import OperationKind, replay
from kellyminors.oracle import K3, M5, N4


class TestNormalize:
    def test_identity_on_n4(self):
        ctx = normalize(N4)
        assert ctx.current == N4
        assert ctx.pending_ops == []
        assert (ctx.directed_count, ctx.bidirected_count) == (2, 3)

    def test_extra_out_arc_is_deleted(self):
        ctx = normalize(Digraph.from_arcs([*N4.arcs, (0, 3)]))
        assert ctx.current == N4
        assert [str(op) for op in ctx.pending_ops] == ["delete_edge(0, 3)"]

    def test_restricts_to_a_terminal_component(self):
        upstream = [(u + 3, v + 3) for u, v in K3.arcs]
        ctx = normalize(Digraph.from_arcs([*K3.arcs, *upstream, (3, 0)]))
        assert ctx.current == K3
        assert ctx.directed_count + 2 * ctx.bidirected_count == 2 * ctx.current.order

    def test_out_degree_below_two(self, cycle3):
        with pytest.raises(DomainError):
            normalize(cycle3)


class TestFindBlocker:
    def test_m5(self):
        assert find_blocker(M5, (0, 2)) == 1

    def test_n4(self):
        assert find_blocker(N4, (3, 1)) == 2
        assert ExtractionContext(current=N4).find_blocker((0, 2)) == 1

    def test_unblocked(self, cycle3):
        assert find_blocker(cycle3, (0, 1)) is None

    def test_bidirected_arc(self):
        with pytest.raises(DomainError):
            find_blocker(N4, (0, 1))

    def test_missing_arc(self):
        with pytest.raises(DomainError):
            find_blocker(N4, (2, 0))


class TestExtract:
    @pytest.mark.parametrize("strategy", ["cases", "descent"])
    @pytest.mark.parametrize("name", ["k3", "n4", "m5"])
    def test_obstructions_find_themselves(self, name, strategy):
        g = oracle.get_target(name)
        script = extract(g, strategy)
        assert script.target == name
        assert replay(g, script).ok

    def test_bidirected_cycle(self):
        g = Digraph.bidirected_cycle(5)
        script = extract(g)
        assert script.target == "k3"
        contractions = [s for s in script.steps if s.kind is OperationKind.CONTRACT_CYCLE]
        assert len(contractions) == 2

    @pytest.mark.parametrize("perm", itertools.permutations(range(4)))
    def test_every_labelling_of_n4(self, perm):
        g = N4.relabel(dict(enumerate(perm)))
        script = extract(g)
        assert script.target == "n4"
        assert replay(g, script).ok

    @pytest.mark.property_based
    @settings(max_examples=40, deadline=None)
    @given(st.permutations(range(5)))
    def test_every_labelling_of_m5(self, perm):
        g = M5.relabel(dict(enumerate(perm)))
        script = extract(g)
        assert script.target == "m5"
        assert replay(g, script).ok

    def test_out_degree_below_two(self, path_abc):
        with pytest.raises(DomainError):
            extract(path_abc)

    def test_null_digraph(self):
        with pytest.raises(DomainError):
            extract(Digraph())

    def test_unknown_strategy(self):
        with pytest.raises(DomainError):
            extract(K3, "guess")

    @pytest.mark.property_based
    @settings(max_examples=60, deadline=None)
    @given(st.integers(3, 12), st.integers(0, 2**32))
    def test_random_inputs_replay(self, n, seed):
        g = random_min_out_degree_2(n, seed)
        script = extract(g)
        assert script.target in ("k3", "n4", "m5")
        assert replay(g, script).ok

    @pytest.mark.property_based
    @settings(max_examples=20, deadline=None)
    @given(st.integers(3, 6), st.integers(0, 2**32))
    def test_oracle_confirms_the_target(self, n, seed):
        g = random_min_out_degree_2(n, seed)
        for strategy in ("cases", "descent"):
            script = extract(g, strategy)
            assert oracle.contains_minor(g, oracle.get_target(script.target))


class TestFindObstruction:
    def test_dag(self):
        assert find_obstruction(Digraph.from_arcs([(0, 1), (1, 2), (0, 2)])) is None

    def test_directed_cycle_is_a_partial_1dag(self, cycle3):
        assert find_obstruction(cycle3) is None

    def test_peeling_steps_come_first(self):
        g = Digraph.from_arcs([*K3.arcs, (3, 0), (0, 4), (4, 5)])
        script = find_obstruction(g)
        assert script.target == "k3"
        assert [str(s) for s in script.steps[:3]] == [
            "out_contract(3, 0)",
            "out_contract(4, 5)",
            "delete_vertex(5)",
        ]
        assert replay(g, script).ok


class TestFindK2:
    def test_dag(self, path_abc):
        assert find_k2(path_abc) is None

    def test_shortest_cycle_is_contracted(self):
        g = Digraph.from_arcs([(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 2)])
        script = find_k2(g)
        assert script.target == "k2"
        assert replay(g, script).ok

    def test_long_cycle(self):
        g = Digraph.directed_cycle(6)
        assert replay(g, find_k2(g)).ok


def _witness(g, script, target):
    assert script.target == target
    assert replay(g, script).ok


# Labels: w = 0, u = 1, v = 2, a = 3, b = 4, c = 5, d = 6, helpers from 7.
_BACK_ARC = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 1), (2, 3)]


class TestBackArcCase:
    def test_path_to_w_gives_k3(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 7), (7, 0)])
        _witness(g, back_arc_case(Workspace(g), 0, 1, 2), "k3")

    def test_path_to_u_with_bidirected_a_gives_n4(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 1), (3, 2)])
        script = back_arc_case(Workspace(g), 0, 1, 2)
        _witness(g, script, "n4")
        assert script.steps == []

    def test_path_to_u_forks_towards_the_blocker(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 7), (7, 1), (7, 4), (4, 2), (4, 3)])
        script = back_arc_case(Workspace(g), 0, 1, 2)
        _witness(g, script, "n4")
        assert [str(s) for s in script.steps] == ["out_contract(3, 7)", "out_contract(4, 2)"]
        assert sorted(script.vertex_map.values()) == [0, 1, 2, 7]

    def test_path_to_v_with_a_common_in_neighbour_gives_m5(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 2), (3, 7), (7, 4), (4, 2), (4, 3)])
        script = back_arc_case(Workspace(g), 0, 1, 2)
        _witness(g, script, "m5")
        assert [str(s) for s in script.steps] == ["out_contract(7, 4)"]

    def test_path_to_v_with_a_common_out_neighbour_gives_n4(self):
        # u = 2, v = 1, so the search from a meets v first.
        g = Digraph.from_arcs([(0, 2), (0, 1), (2, 0), (1, 2), (2, 1), (1, 3), (3, 1), (3, 2)])
        _witness(g, back_arc_case(Workspace(g), 0, 2, 1), "n4")

    def test_blocked_chain_with_a_to_b_gives_m5(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 4), (3, 5), (4, 2), (4, 3), (5, 4), (5, 2)])
        script = back_arc_case(Workspace(g), 0, 1, 2)
        _witness(g, script, "m5")
        assert [str(s) for s in script.steps] == ["out_contract(5, 2)"]

    def test_blocked_chain_through_b_gives_m5_on_b_and_c(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 4), (4, 2), (4, 3), (4, 7), (7, 5), (5, 4), (5, 2)])
        script = back_arc_case(Workspace(g), 0, 1, 2)
        _witness(g, script, "m5")
        assert sorted(script.vertex_map.values()) == [0, 1, 2, 4, 5]

    def test_two_blockers_fork_into_m5(self):
        g = Digraph.from_arcs(
            [*_BACK_ARC, (3, 7), (7, 5), (7, 6), (4, 2), (4, 3), (5, 4), (5, 2), (6, 4), (6, 3)]
        )
        script = back_arc_case(Workspace(g), 0, 1, 2)
        _witness(g, script, "m5")
        assert sorted(script.vertex_map.values()) == [0, 1, 2, 4, 7]

    def test_wrong_orientation_is_rejected(self):
        g = Digraph.from_arcs([*_BACK_ARC, (3, 7), (7, 0)])
        with pytest.raises(CaseFailed):
            back_arc_case(Workspace(g), 0, 2, 1)


_COMMON_IN = [(0, 1), (0, 2), (1, 2), (2, 1), (2, 3), (1, 4)]


class TestCommonInCase:
    @pytest.mark.parametrize("u, v", [(1, 2), (2, 1)])
    def test_shared_out_neighbour_gives_k3(self, u, v):
        g = Digraph.from_arcs([(0, 1), (0, 2), (1, 2), (2, 1), (2, 3), (1, 3), (3, 0)])
        _witness(g, common_in_case(Workspace(g), 0, u, v), "k3")

    @pytest.mark.parametrize("u, v", [(1, 2), (2, 1)])
    def test_two_free_paths_give_k3(self, u, v):
        g = Digraph.from_arcs([*_COMMON_IN, (3, 5), (4, 5), (5, 0)])
        _witness(g, common_in_case(Workspace(g), 0, u, v), "k3")

    @pytest.mark.parametrize("u, v", [(1, 2), (2, 1)])
    def test_one_free_path_and_a_path_to_v_gives_n4(self, u, v):
        g = Digraph.from_arcs([*_COMMON_IN, (3, 0), (4, 2), (4, 1)])
        script = common_in_case(Workspace(g), 0, u, v)
        _witness(g, script, "n4")
        assert str(script.steps[-1]) == "out_contract(3, 0)"

    @pytest.mark.parametrize("u, v", [(1, 2), (2, 1)])
    def test_one_free_path_and_a_path_to_u_only_gives_m5(self, u, v):
        g = Digraph.from_arcs([*_COMMON_IN, (3, 0), (4, 1), (4, 5), (5, 4), (5, 1)])
        script = common_in_case(Workspace(g), 0, u, v)
        _witness(g, script, "m5")
        assert sorted(script.vertex_map.values()) == [0, 1, 2, 4, 5]

    def test_no_free_path_is_an_invariant_violation(self):
        g = Digraph.from_arcs([*_COMMON_IN, (3, 1), (4, 2)])
        with pytest.raises(InternalInvariantError):
            common_in_case(Workspace(g), 0, 1, 2)


class TestCommonOutCase:
    @pytest.mark.parametrize("end", [1, 2])
    def test_path_from_the_blocked_head_gives_n4(self, end):
        g = Digraph.from_arcs([(1, 2), (2, 1), (1, 0), (2, 0), (0, 3), (3, 0), (0, 4), (3, 4), (4, end)])
        _witness(g, common_out_case(Workspace(g), 0, 1, 2), "n4")

    def test_one_way_out_neighbour_is_an_invariant_violation(self):
        g = Digraph.from_arcs([(1, 2), (2, 1), (1, 0), (2, 0), (0, 3), (0, 4), (3, 4), (4, 2)])
        with pytest.raises(InternalInvariantError):
            common_out_case(Workspace(g), 0, 1, 2)


class TestDispatch:
    def test_triangle(self):
        script = dispatch(Workspace(K3))
        _witness(K3, script, "k3")
        assert script.steps == []

    def test_back_arc_from_the_larger_endpoint_swaps_u_and_v(self):
        g = Digraph.from_arcs([(0, 1), (0, 2), (2, 0), (1, 2), (2, 1), (1, 3), (3, 7), (7, 0)])
        assert candidates(Workspace(g)) == [(2, 1, 2, 0), (4, 0, 2, 1)]
        _witness(g, dispatch(Workspace(g)), "k3")

    def test_no_candidate(self):
        with pytest.raises(InternalInvariantError):
            dispatch(Workspace(Digraph.directed_cycle(4)))
