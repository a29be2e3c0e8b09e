import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kellyminors.digraph import Digraph, format_edge_list, is_acyclic, read_edge_list
from kellyminors.elimination import exact_kelly_width
from kellyminors.exceptions import CapacityError, DomainError, FormatError
from kellyminors.genlab import (
    MANIFEST,
    GenSpec,
    count_isomorphism_classes_burnside,
    enumerate_all,
    generate,
    generate_kdag,
    generate_partial_kdag,
    instances,
    random_digraph,
    random_min_out_degree_2,
    read_manifest,
    write_corpus,
)


class TestKdag:
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_base_case_is_complete(self, k):
        assert generate_kdag(k, k, seed=7) == Digraph.complete(k)

    def test_k0_points_everything_at_newer_vertices(self):
        g = generate_kdag(5, 0, seed=1)
        assert g.arcs == {(u, v) for u in range(5) for v in range(5) if u < v}
        assert is_acyclic(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_width_bound_for_k1(self, seed):
        assert exact_kelly_width(generate_kdag(6, 1, seed)).width <= 2

    def test_too_few_vertices(self):
        with pytest.raises(DomainError):
            generate_kdag(2, 3, seed=0)

    def test_same_seed_same_graph(self):
        assert format_edge_list(generate_kdag(9, 2, 42)) == format_edge_list(generate_kdag(9, 2, 42))


class TestPartialKdag:
    def test_keeping_every_arc_is_the_kdag(self):
        assert generate_partial_kdag(8, 2, 5, edge_prob=1.0) == generate_kdag(8, 2, 5)

    def test_dropping_every_arc(self):
        g = generate_partial_kdag(8, 2, 5, edge_prob=0.0)
        assert g.size == 0
        assert exact_kelly_width(g).width == 1

    def test_probability_range(self):
        with pytest.raises(DomainError):
            generate_partial_kdag(4, 1, 0, edge_prob=1.5)

    @pytest.mark.property_based
    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2), st.integers(0, 8), st.integers(0, 2**32))
    def test_width_bound(self, k, extra, seed):
        g = generate_partial_kdag(k + extra, k, seed)
        assert exact_kelly_width(g).width <= k + 1


class TestMinOutDegree2:
    @pytest.mark.parametrize("seed", range(50))
    def test_degree_invariant(self, seed):
        g = random_min_out_degree_2(3 + seed % 8, seed)
        assert all(g.out_degree(v) >= 2 for v in g.vertices)

    def test_only_adds_arcs(self):
        for seed in range(20):
            assert random_digraph(7, 0.3, seed).arcs <= random_min_out_degree_2(7, seed).arcs

    def test_three_vertices_is_k3(self):
        assert random_min_out_degree_2(3, 11) == Digraph.complete(3)

    def test_too_small(self):
        with pytest.raises(DomainError):
            random_min_out_degree_2(2, 0)


class TestEnumeration:
    @pytest.mark.parametrize("n, classes", [(0, 1), (1, 1), (2, 3), (3, 16), (4, 218)])
    def test_class_counts(self, n, classes):
        assert sum(1 for _ in enumerate_all(n)) == classes

    @pytest.mark.parametrize("n, classes", [(3, 16), (4, 218), (5, 9608)])
    def test_burnside(self, n, classes):
        assert count_isomorphism_classes_burnside(n) == classes

    def test_capacity(self):
        with pytest.raises(CapacityError):
            next(enumerate_all(5))


class TestCorpus:
    def test_genspec_validation(self):
        with pytest.raises(DomainError):
            GenSpec(kind="tournament", n=3)
        with pytest.raises(DomainError):
            GenSpec(kind="kdag", n=-1)
        with pytest.raises(DomainError):
            GenSpec(kind="random_digraph", n=3, edge_prob=-0.1)
        with pytest.raises(DomainError):
            GenSpec(kind="kdag", n=3, seed=-1)

    def test_unknown_keys_are_ignored(self):
        spec = GenSpec(kind="kdag", n=5, k=1, seed=3, count=9)
        assert spec.filename == "kdag_n5_s3.dg"

    def test_generate_dispatches_on_kind(self):
        assert generate(GenSpec(kind="kdag", n=6, k=2, seed=4)) == generate_kdag(6, 2, 4)
        assert generate(GenSpec(kind="random_digraph", n=5, seed=4, edge_prob=0.4)) == (
            random_digraph(5, 0.4, 4)
        )

    def test_exhaustive_index_out_of_range(self):
        with pytest.raises(DomainError):
            generate(GenSpec(kind="exhaustive", n=2, seed=3))

    def test_consecutive_seeds(self):
        seeds = [item.seed for item, _ in instances(GenSpec(kind="kdag", n=4, k=1, seed=10), 3)]
        assert seeds == [10, 11, 12]

    def test_written_graphs_read_back(self, tmp_path):
        spec = GenSpec(kind="partial_kdag", n=7, k=2, seed=100)
        paths = write_corpus(spec, 4, tmp_path / "corpus")
        assert paths[-1].name == MANIFEST
        for item, path in zip(read_manifest(tmp_path / "corpus"), paths):
            assert path.name == item.filename
            assert read_edge_list(path) == generate(item)

    def test_exhaustive_corpus(self, tmp_path):
        paths = write_corpus(GenSpec(kind="exhaustive", n=2), 1, tmp_path)
        assert len(paths) == 4
        entries = json.loads((tmp_path / MANIFEST).read_text())
        assert [entry["seed"] for entry in entries] == [0, 1, 2]

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(FormatError):
            read_manifest(tmp_path)

    def test_unwritable_manifest(self, tmp_path):
        (tmp_path / MANIFEST).mkdir()
        with pytest.raises(FormatError):
            write_corpus(GenSpec(kind="kdag", n=3, k=1), 1, tmp_path)


def test_negative_seed():
    with pytest.raises(DomainError):
        random_digraph(4, 0.5, seed=-3)
