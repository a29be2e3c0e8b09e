import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kellyminors.digraph import Digraph
from kellyminors.elimination import exact_kelly_width
from kellyminors.exceptions import CapacityError, DomainError
from kellyminors.game import GameState, min_cops, resolve_move, winning_strategy
from kellyminors.oracle import K3
from strategies import digraphs


class TestResolveMove:
    def test_capture_on_a_single_vertex(self):
        g = Digraph((0,))
        assert resolve_move(g, GameState.initial(g), {0}).cleared

    def test_undisturbed_robber_stays_put(self, path_abc):
        s = GameState(cops=frozenset(), contaminated=frozenset({0, 1}))
        after = resolve_move(path_abc, s, {2})
        assert after.contaminated == {0, 1}
        assert after.cops == {2}

    def test_one_cop_chases_the_robber_around_k2(self, bidirected_k2):
        s = resolve_move(bidirected_k2, GameState.initial(bidirected_k2), {0}, k=1)
        assert s.contaminated == {1}
        s = resolve_move(bidirected_k2, s, {1}, k=1)
        assert s.contaminated == {0}

    def test_staying_cops_block_the_escape(self, path_abc):
        s = GameState(cops=frozenset({1}), contaminated=frozenset({0}))
        after = resolve_move(path_abc, s, {0, 1})
        assert after.cleared

    def test_vacated_vertices_are_open(self, path_abc):
        s = GameState(cops=frozenset({1}), contaminated=frozenset({0}))
        after = resolve_move(path_abc, s, {0})
        assert after.contaminated == {1, 2}

    def test_budget(self, path_abc):
        with pytest.raises(DomainError):
            resolve_move(path_abc, GameState.initial(path_abc), {0, 1}, k=1)

    def test_unknown_vertex(self, path_abc):
        with pytest.raises(DomainError):
            resolve_move(path_abc, GameState.initial(path_abc), {5})

    @pytest.mark.property_based
    @settings(max_examples=80, deadline=None)
    @given(digraphs(min_n=1, max_n=6), st.data())
    def test_monotone_in_contamination(self, g, data):
        vertices = st.sets(st.sampled_from(g.vertices))
        cops = frozenset(data.draw(vertices))
        small = frozenset(data.draw(vertices)) - cops
        large = small | (frozenset(data.draw(vertices)) - cops)
        new_cops = data.draw(vertices)
        after_small = resolve_move(g, GameState(cops, small), new_cops)
        after_large = resolve_move(g, GameState(cops, large), new_cops)
        assert after_small.contaminated <= after_large.contaminated


class TestMinCops:
    @pytest.mark.parametrize(
        "g, cops",
        [
            (Digraph.from_arcs([(0, 1), (1, 2), (0, 2), (3, 2)]), 1),
            (K3, 3),
            (Digraph.directed_cycle(3), 2),
            (Digraph.complete(2), 2),
            (Digraph(), 0),
            (Digraph((0, 1, 2)), 1),
        ],
    )
    def test_known_values(self, g, cops):
        assert min_cops(g) == cops

    def test_capacity(self):
        with pytest.raises(CapacityError):
            min_cops(Digraph.directed_path(9))

    def test_strategy_clears_the_graph(self, cycle3):
        strategy = winning_strategy(cycle3, 2)
        s = GameState.initial(cycle3)
        for placement in strategy:
            s = resolve_move(cycle3, s, placement, k=2)
        assert s.cleared

    def test_too_few_cops(self, cycle3):
        assert winning_strategy(cycle3, 1) is None

    @pytest.mark.property_based
    @settings(max_examples=40, deadline=None)
    @given(digraphs(max_n=5))
    def test_matches_the_kelly_width(self, g):
        assert min_cops(g) == exact_kelly_width(g).width
