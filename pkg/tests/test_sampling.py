#!/usr/bin/env python3
"""
Tests for the motif samplers and their exhaustive oracles
"""

from collections import Counter

import numpy as np
import pytest

from conftest import bowtie, complete, cycle, path, star
from core.classes.motif_chain import MotifChain
from core.classes.ndl_errors import CapacityError, DeadEndError, MixingError, StructureError
from core.classes.network import Network
from core.classes.run_specs import McmcMode, SamplerConfig
from core.functions.sampling_utils import (
    PI, PI_HAT, PI_HAT_INJ, PI_INJ, count_walks, enumerate_homomorphisms, glauber_update,
    is_homomorphism, is_injective, pivot_acceptance, pivot_update, rejection_init,
    target_distribution, target_for, total_variation, walk_profile)


class TestOracles:

    def test_count_walks(self):
        assert count_walks(complete(3), 3) == 12
        assert count_walks(cycle(5), 2) == 10

    def test_enumeration_matches_count(self):
        G = bowtie()
        walks = enumerate_homomorphisms(G, 3)
        assert len(walks) == count_walks(G, 3)
        assert len(set(walks)) == len(walks)
        assert all(is_homomorphism(G, w) for w in walks)

    def test_injective_enumeration(self):
        walks = enumerate_homomorphisms(complete(3), 3, injective=True)
        assert len(walks) == 6
        assert all(is_injective(w) for w in walks)

    def test_injective_walks_cover_cycle(self):
        walks = enumerate_homomorphisms(cycle(10), 3, injective=True)
        assert len(walks) == 20
        assert {node for w in walks for node in w} == set(range(10))

    def test_enumeration_limit(self):
        with pytest.raises(CapacityError):
            enumerate_homomorphisms(complete(6), 6, limit=100)

    def test_pi_hat_on_star(self):
        # center 0 has degree 3, leaves degree 1
        pi_hat = target_distribution(star(3), 2, PI_HAT)
        assert pi_hat[(0, 1)] == pytest.approx(1 / 12)
        assert pi_hat[(1, 0)] == pytest.approx(1 / 4)

    def test_pi_is_uniform_on_binary_networks(self):
        pi = target_distribution(bowtie(), 3, PI)
        values = np.array(list(pi.values()))
        assert np.allclose(values, 1.0 / len(values))

    def test_weighted_pi(self):
        G = Network.from_edges(3, [(0, 1, 1.0), (1, 2, 3.0)])
        pi = target_distribution(G, 2, PI)
        assert pi[(1, 2)] == pytest.approx(3 / 8)
        assert pi[(0, 1)] == pytest.approx(1 / 8)

    def test_target_for(self):
        assert target_for("pivot", False) == PI
        assert target_for(McmcMode.GLAUBER, True) == PI_INJ
        assert target_for("pivotapprox", True) == PI_HAT_INJ

    def test_total_variation(self):
        assert total_variation({(0,): 1.0}, {(1,): 1.0}) == pytest.approx(1.0)
        assert total_variation({(0,): 0.5, (1,): 0.5}, {(0,): 0.5, (1,): 0.5}) == 0.0


class TestPivotKernel:

    def test_walk_profile_rows(self):
        profile = walk_profile(star(3), 3)
        assert list(profile[0]) == [1, 1, 1, 1]
        assert list(profile[1]) == [3, 1, 1, 1]
        assert list(profile[2]) == [3, 3, 3, 3]

    def test_acceptance_on_star(self):
        G = star(5)
        assert pivot_acceptance(G, 1, 0) == pytest.approx(1 / 5)
        assert pivot_acceptance(G, 0, 1) == 1.0
        # for k = 2 the walk counts are the degrees and cancel the proposal
        row_sums = walk_profile(G, 2)[1]
        assert pivot_acceptance(G, 1, 0, row_sums) == 1.0
        assert pivot_acceptance(G, 0, 1, row_sums) == 1.0

    def test_isolated_pivot(self, rng):
        G = Network.from_edges(3, [(0, 1)])
        with pytest.raises(DeadEndError):
            pivot_update(G, 2, np.array([2, 2]), rng, walk_profile(G, 2))

    def test_update_returns_walk(self, rng):
        G = bowtie()
        profile = walk_profile(G, 4)
        x = np.array([1, 0, 3, 4])
        for _ in range(50):
            x = pivot_update(G, 4, x, rng, profile, exact=True)
            assert is_homomorphism(G, x)


class TestGlauberKernel:

    def test_triangle_resampling(self, rng):
        counts = Counter(tuple(glauber_update(complete(3), 2, np.array([0, 1]), rng).tolist())
                         for _ in range(20000))
        assert set(counts) == {(0, 1), (0, 2), (2, 1)}
        assert counts[(0, 1)] / 20000 == pytest.approx(0.5, abs=0.02)
        assert counts[(0, 2)] / 20000 == pytest.approx(0.25, abs=0.02)
        assert counts[(2, 1)] / 20000 == pytest.approx(0.25, abs=0.02)

    def test_path_middle_is_forced(self, rng):
        x = np.array([0, 1, 2])
        for _ in range(200):
            assert glauber_update(path(3), 3, x, rng)[1] == 1

    def test_one_coordinate_per_update(self, rng):
        G = bowtie()
        x = np.array([1, 0, 3, 4])
        for _ in range(500):
            y = glauber_update(G, 4, x, rng)
            assert np.count_nonzero(y != x) <= 1
            assert is_homomorphism(G, y)
            x = y

    def test_detailed_balance_on_weighted_triangle(self, rng):
        G = Network.from_edges(3, [(0, 1, 1.0), (1, 2, 3.0), (0, 2, 1.0)])
        pi = target_distribution(G, 2, PI)
        x, y = (1, 0), (1, 2)
        draws = 40000
        forward = sum(tuple(glauber_update(G, 2, np.array(x), rng).tolist()) == y
                      for _ in range(draws)) / draws
        backward = sum(tuple(glauber_update(G, 2, np.array(y), rng).tolist()) == x
                       for _ in range(draws)) / draws
        assert pi[x] == pytest.approx(0.1)
        assert pi[y] == pytest.approx(0.3)
        assert forward == pytest.approx(3 / 8, abs=0.015)
        assert backward == pytest.approx(1 / 8, abs=0.015)
        assert pi[x] * forward == pytest.approx(pi[y] * backward, abs=0.003)


class TestChains:

    @pytest.mark.parametrize("network", [complete(4), cycle(5), bowtie()], ids=["K4", "C5", "bowtie"])
    @pytest.mark.parametrize("k", [2, 3])
    @pytest.mark.parametrize("mode", ["pivot", "pivotapprox", "glauber"])
    @pytest.mark.parametrize("injective", [False, True])
    def test_occupation_matches_target(self, network, k, mode, injective):
        config = SamplerConfig(McmcMode.parse(mode), injective)
        chain = MotifChain(network, k, config, np.random.Generator(np.random.Philox(7)))
        chain.sample(2000)
        empirical = chain.occupation(300000)
        exact = target_distribution(network, k, target_for(mode, injective))
        assert total_variation(empirical, exact) <= 0.02

    @pytest.mark.parametrize("G", [complete(4), cycle(5)])
    def test_regular_networks_uniform(self, G):
        chain = MotifChain(G, 2, SamplerConfig(McmcMode.PIVOT_APPROX, False),
                           np.random.Generator(np.random.Philox(3)))
        empirical = chain.occupation(30000)
        exact = target_distribution(G, 2, PI)
        assert total_variation(empirical, exact) < 0.05

    def test_injective_states_only(self):
        chain = MotifChain(bowtie(), 3, SamplerConfig(McmcMode.GLAUBER, True),
                           np.random.Generator(np.random.Philox(5)))
        for x in chain.sample(200):
            assert is_injective(x.tolist())
        assert chain.steps == 200

    def test_no_k_path_raises_mixing_error(self, rng):
        G = complete(2)
        chain = MotifChain(G, 3, SamplerConfig(McmcMode.PIVOT_APPROX, True, max_rejections=50), rng)
        with pytest.raises(MixingError) as info:
            chain.step()
        assert info.value.rejections == 51

    def test_rejection_init_needs_edges(self, rng):
        with pytest.raises(StructureError):
            rejection_init(Network.from_edges(3, []), 2, rng)

    def test_rejection_init_returns_walk(self, rng):
        G = cycle(50)
        for _ in range(5):
            assert is_homomorphism(G, rejection_init(G, 6, rng))

    def test_same_stream_same_samples(self):
        def run():
            chain = MotifChain(bowtie(), 3, SamplerConfig(),
                               np.random.Generator(np.random.Philox(99)))
            return [tuple(x.tolist()) for x in chain.sample(100)]
        assert run() == run()
