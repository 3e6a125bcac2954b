#!/usr/bin/env python3
"""
Tests for networks, random-graph generators, noise and edge-list files
"""

import os

import networkx as nx
import numpy as np
import pytest

from conftest import complete, cycle, path
from core.classes.ndl_errors import ConsistencyError, ParameterError, ParseError, StructureError
from core.classes.network import Network
from core.classes.run_specs import ModelSpec, NoiseKind, NoiseSpec
from core.functions.graph_utils import (
    FALSE_EDGE, TRUE_EDGE, bipartite_coloring, corrupt, generate, is_connected,
    load_edge_list, pairs_within_distance, save_edge_list, structural_stats,
    uniform_spanning_tree)


class TestNetwork:

    def test_from_edges_is_symmetric(self):
        G = Network.from_edges(3, [(0, 1, 2.0), (1, 2)])
        assert G.weight(0, 1) == 2.0
        assert G.weight(1, 0) == 2.0
        assert G.weight(0, 2) == 0.0
        assert G.num_edges == 2
        assert list(G.degrees) == [2.0, 3.0, 1.0]

    def test_self_edge_counted_once(self):
        G = Network.from_edges(2, [(0, 0), (0, 1)])
        assert G.has_self_edges
        assert G.num_edges == 2
        assert G.weight(0, 0) == 1.0

    def test_conflicting_duplicate_rejected(self):
        with pytest.raises(ConsistencyError):
            Network.from_edges(2, [(0, 1, 1.0), (1, 0, 2.0)])

    def test_repeated_pair_with_same_weight_is_fine(self):
        G = Network.from_edges(2, [(0, 1), (1, 0)])
        assert G.num_edges == 1

    def test_bad_edges_rejected(self):
        with pytest.raises(ParameterError):
            Network.from_edges(2, [(0, 2)])
        with pytest.raises(ParameterError):
            Network.from_edges(2, [(0, 1, -1.0)])

    def test_sample_neighbor_follows_weights(self, rng):
        G = Network.from_edges(3, [(0, 1, 1.0), (0, 2, 3.0)])
        draws = [G.sample_neighbor(0, rng) for _ in range(8000)]
        assert abs(draws.count(2) / len(draws) - 0.75) < 0.03

    def test_sample_neighbor_of_isolated_node(self, rng):
        G = Network.from_edges(3, [(0, 1)])
        with pytest.raises(StructureError):
            G.sample_neighbor(2, rng)

    def test_edges_sorted_with_u_le_v(self):
        G = Network.from_edges(4, [(3, 2), (1, 0), (2, 0)])
        assert [(u, v) for u, v, _ in G.edges()] == [(0, 1), (0, 2), (2, 3)]

    def test_binary_view(self):
        G = Network.from_edges(3, [(0, 1, 0.5), (1, 2, 2.0)])
        assert not G.is_binary()
        assert set(G.binary().data) == {1.0}


class TestGenerators:

    def test_erdos_renyi_edge_count(self):
        G = generate(ModelSpec.er(200, 0.1), seed=3)
        expected = 0.1 * 200 * 199 / 2
        assert abs(G.num_edges - expected) < 200
        assert not G.has_self_edges

    def test_large_erdos_renyi_edge_count(self):
        G = generate(ModelSpec.er(5000, 0.01), seed=4)
        pairs = 5000 * 4999 // 2
        assert abs(G.num_edges - 124975) <= 4 * np.sqrt(pairs * 0.01 * 0.99)

    def test_block_model_edge_count(self):
        G = generate(ModelSpec.sbm_uniform([100, 100, 100], 0.5, 0.01), seed=6)
        within, between = 3 * 4950, 3 * 100 * 100
        mean = 0.5 * within + 0.01 * between
        std = np.sqrt(0.25 * within + 0.01 * 0.99 * between)
        assert mean == 7725
        assert abs(G.num_edges - mean) <= 4 * std

    def test_same_seed_same_network(self):
        spec = ModelSpec.er(60, 0.2)
        assert generate(spec, seed=11) == generate(spec, seed=11)
        assert generate(spec, seed=11) != generate(spec, seed=12)

    def test_ring_lattice_without_rewiring(self):
        G = generate(ModelSpec.ws(10, 4, 0.0), seed=1)
        assert G.num_edges == 20
        assert set(G.degrees) == {4.0}
        assert G.has_edge(0, 9) and G.has_edge(0, 8)

    def test_rewiring_keeps_edge_count(self):
        G = generate(ModelSpec.ws(30, 4, 0.3), seed=2)
        assert G.num_edges == 60
        assert not G.has_self_edges

    def test_barabasi_albert_edge_count(self):
        G = generate(ModelSpec.ba(50, 3), seed=4)
        assert G.num_edges == (50 - 3) * 3
        assert np.all(G.degrees[3:] >= 3)

    def test_block_model_with_disjoint_blocks(self):
        G = generate(ModelSpec.sbm_uniform([5, 5], 1.0, 0.0), seed=5)
        assert G.num_edges == 20
        assert not G.has_edge(0, 5)
        assert not is_connected(G)

    def test_invalid_specs(self):
        with pytest.raises(ParameterError):
            generate(ModelSpec.er(10, 1.5))
        with pytest.raises(ParameterError):
            generate(ModelSpec("lattice", n=10))
        with pytest.raises(ParameterError):
            generate(ModelSpec.sbm([3, 3], [[0.5, 0.1], [0.2, 0.5]]))


class TestStructure:

    def test_bipartite_coloring(self):
        colors = bipartite_coloring(cycle(6))
        assert colors is not None
        assert all(colors[i] != colors[(i + 1) % 6] for i in range(6))
        assert bipartite_coloring(cycle(5)) is None

    def test_structural_stats_match_networkx(self):
        G = generate(ModelSpec.er(40, 0.2), seed=8)
        stats = structural_stats(G)
        graph = G.to_networkx()
        assert stats["mean_clustering"] == pytest.approx(nx.average_clustering(graph))
        assert sum(stats["degree_histogram"].values()) == 40
        if nx.is_connected(graph):
            assert stats["diameter"] == nx.diameter(graph)

    def test_structural_stats_of_small_networks(self):
        stats = structural_stats(complete(4))
        assert stats["diameter"] == 1
        assert stats["mean_clustering"] == 1.0
        assert stats["degree_histogram"] == {3: 4}
        stats = structural_stats(path(4))
        assert stats["diameter"] == 3
        assert stats["mean_clustering"] == 0.0
        assert stats["degree_histogram"] == {1: 2, 2: 2}
        stats = structural_stats(cycle(6))
        assert stats["diameter"] == 3
        assert stats["mean_clustering"] == 0.0
        assert stats["connected"]

    def test_pairs_within_distance(self):
        G = path(4)
        assert pairs_within_distance(G, 2) == [(0, 2), (1, 3)]
        assert pairs_within_distance(G, None) == [(0, 2), (0, 3), (1, 3)]

    def test_spanning_tree_is_uniform_on_square(self, rng):
        G = cycle(4)
        counts = {}
        draws = 100000
        for _ in range(draws):
            missing = tuple(sorted(G.edge_set() - set(uniform_spanning_tree(G, rng))))
            counts[missing] = counts.get(missing, 0) + 1
        assert len(counts) == 4
        for count in counts.values():
            assert abs(count / draws - 0.25) < 0.02

    def test_spanning_tree_requires_connected(self, rng):
        with pytest.raises(StructureError):
            uniform_spanning_tree(Network.from_edges(4, [(0, 1), (2, 3)]), rng)


class TestCorruption:

    def test_subtractive_noise_keeps_connectivity(self):
        G = complete(5)
        corrupted, changed, labels = corrupt(G, NoiseSpec(NoiseKind.SUBTRACTIVE_ER, 0.5), seed=1)
        # 10 edges, 4 in the spanning tree, half of the other 6 removed
        assert len(changed) == 3
        assert corrupted.num_edges == 7
        assert is_connected(corrupted)
        for pair in changed:
            assert labels[pair] == TRUE_EDGE
            assert not corrupted.has_edge(*pair)

    def test_subtractive_noise_on_tree_changes_nothing(self):
        corrupted, changed, _ = corrupt(path(6), NoiseSpec(NoiseKind.SUBTRACTIVE_ER, 0.5), seed=1)
        assert changed == []
        assert corrupted == path(6)

    def test_additive_noise(self):
        G = cycle(10)
        corrupted, changed, labels = corrupt(G, NoiseSpec(NoiseKind.ADDITIVE_ER, 0.5), seed=2)
        assert len(changed) == 5
        assert corrupted.num_edges == 15
        for pair in changed:
            assert labels[pair] == FALSE_EDGE
            assert corrupted.has_edge(*pair) and not G.has_edge(*pair)

    def test_additive_small_world_noise(self):
        G = cycle(30)
        spec = NoiseSpec(NoiseKind.ADDITIVE_WS, 0.5, ws_n0=10, ws_k=4, ws_p=0.2)
        corrupted, changed, labels = corrupt(G, spec, seed=3)
        assert changed
        assert corrupted.num_edges == G.num_edges + len(changed)
        assert all(labels[pair] == FALSE_EDGE for pair in changed)

    def test_small_world_noise_on_complete_network_adds_nothing(self):
        G = complete(5)
        spec = NoiseSpec(NoiseKind.ADDITIVE_WS, 0.5, ws_n0=4, ws_k=2, ws_p=0.0)
        corrupted, changed, labels = corrupt(G, spec, seed=4)
        assert changed == []
        assert labels == {}
        assert corrupted == G

    def test_noise_aliases(self):
        assert NoiseKind.parse("subtractive-er") is NoiseKind.SUBTRACTIVE_ER
        assert NoiseKind.parse("+WS") is NoiseKind.ADDITIVE_WS
        with pytest.raises(ParameterError):
            NoiseKind.parse("er")


class TestEdgeListFiles:

    def test_save_and_load_keep_isolated_nodes(self, tmp_path):
        G = Network.from_edges(4, [(0, 1), (1, 2, 0.25)], ["a", "b", "c", "d"])
        target = os.path.join(tmp_path, "g.edges")
        save_edge_list(G, target)
        assert load_edge_list(target) == G

    def test_labels_interned_in_first_seen_order(self, tmp_path):
        target = os.path.join(tmp_path, "g.edges")
        with open(target, "w") as f:
            f.write("# comment\nx y\ny z 2.5\n\n")
        G = load_edge_list(target)
        assert G.labels == ["x", "y", "z"]
        assert G.weight(1, 2) == 2.5

    def test_preseeded_labels_align_networks(self, tmp_path):
        target = os.path.join(tmp_path, "g.edges")
        with open(target, "w") as f:
            f.write("c b\n")
        G = load_edge_list(target, labels=["a", "b", "c"])
        assert G.n == 3
        assert G.has_edge(1, 2)

    def test_malformed_line_reports_line_number(self, tmp_path):
        target = os.path.join(tmp_path, "bad.edges")
        with open(target, "w") as f:
            f.write("a b\na b c d\n")
        with pytest.raises(ParseError) as info:
            load_edge_list(target)
        assert info.value.line_number == 2

    def test_non_numeric_weight(self, tmp_path):
        target = os.path.join(tmp_path, "bad.edges")
        with open(target, "w") as f:
            f.write("a b heavy\n")
        with pytest.raises(ParseError):
            load_edge_list(target)

    def test_conflicting_weights_in_file(self, tmp_path):
        target = os.path.join(tmp_path, "bad.edges")
        with open(target, "w") as f:
            f.write("a b 1\nb a 2\n")
        with pytest.raises(ConsistencyError):
            load_edge_list(target)
