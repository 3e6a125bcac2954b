#!/usr/bin/env python3
"""
Network Reconstructor for the Network Dictionary Toolkit
Rebuilds a weighted network by approximating sampled patches with a fixed dictionary
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Tuple

import numpy as np

from core.classes.motif_chain import MotifChain
from core.classes.ndl_errors import ParameterError, StructureError
from core.classes.network import Network
from core.classes.network_dictionary import Dictionary
from core.classes.reconstruction_accumulator import ReconstructionAccumulator
from core.classes.run_specs import NdrParams
from core.functions.factorization import sparse_code
from core.functions.graph_utils import bipartite_coloring
from core.functions.patch_utils import (
    extract_patch, off_chain_project, on_chain_mask, reshape, thin_on_chain, vectorize)
from core.functions.sampling_utils import walk_from
from core.functions.utils import STREAM_RECONSTRUCT, log_info, log_warning, make_rng


class NetworkReconstructor:
    """Reconstruction of one network from one dictionary"""

    def __init__(self, network: Network, dictionary: Dictionary, params: NdrParams):
        self.network = network
        self.dictionary = dictionary
        self.params = params.validate()
        k = params.k
        if dictionary.k != k:
            raise ParameterError(f"dictionary was learned with k={dictionary.k}, reconstruction uses k={k}")

        if params.denoising:
            self.W = off_chain_project(dictionary.W, params.literal_offchain, k)
            self.allowed = ~on_chain_mask(k, params.literal_offchain)
        else:
            if params.xi < 1.0:
                self.W = thin_on_chain(dictionary.W, params.xi, params.literal_offchain, k)
            else:
                self.W = dictionary.W
            self.allowed = np.ones((k, k), dtype=bool)

    def masked_patch(self, x: np.ndarray) -> np.ndarray:
        """Patch at x with the same on-chain treatment as the dictionary"""
        patch = extract_patch(self.network, x)
        if self.params.denoising:
            return off_chain_project(patch, self.params.literal_offchain, self.params.k)
        if self.params.xi < 1.0:
            return thin_on_chain(patch, self.params.xi, self.params.literal_offchain, self.params.k)
        return patch

    def approximate(self, x: np.ndarray) -> np.ndarray:
        """k x k approximation W~ H of the (masked) patch at x"""
        k = self.params.k
        X = vectorize(self.masked_patch(x))[:, None]
        H = sparse_code(X, self.W, self.params.lam,
                        self.params.code_iterations, self.params.code_tolerance)
        return reshape((self.W @ H)[:, 0], k, k)

    def contributions(self, x: np.ndarray) -> Iterator[Tuple[int, int, int, int, float]]:
        """(a, b, x(a), x(b), value) for every patch position that updates the accumulator"""
        approx = self.approximate(x)
        for a, b in zip(*np.nonzero(self.allowed)):
            yield int(a), int(b), int(x[a]), int(x[b]), float(approx[a, b])

    def _run_chain(self, steps: int, pass_index: int, chain_index: int,
                   start: Optional[np.ndarray]) -> ReconstructionAccumulator:
        rng = make_rng(self.params.seed, STREAM_RECONSTRUCT, pass_index, chain_index)
        if start is not None:
            start = start(rng)
        chain = MotifChain(self.network, self.params.k, self.params.sampler_config(), rng, start)
        accumulator = ReconstructionAccumulator()
        for _ in range(steps):
            x = chain.step()
            for _, _, u, v, value in self.contributions(x):
                accumulator.add(u, v, value)
        return accumulator

    def _run_pass(self, steps: int, pass_index: int, start=None) -> ReconstructionAccumulator:
        """All chains of one pass, merged in chain order"""
        p = self.params
        if p.chains == 1:
            return self._run_chain(steps, pass_index, 0, start)
        with ThreadPoolExecutor(max_workers=p.threads) as pool:
            futures = [pool.submit(self._run_chain, steps, pass_index, c, start)
                       for c in range(p.chains)]
            parts = [future.result() for future in futures]
        merged = parts[0]
        for part in parts[1:]:
            merged = merged.merge(part)
        return merged

    def _colored_start(self, coloring: np.ndarray, color: int):
        nodes = np.flatnonzero((coloring == color) & (self.network.degrees > 0))
        if nodes.size == 0:
            raise StructureError(f"bipartite class {color} has no node with an edge")

        def start(rng: np.random.Generator) -> np.ndarray:
            return walk_from(self.network, self.params.k, int(rng.choice(nodes)), rng)
        return start

    def accumulate(self) -> ReconstructionAccumulator:
        """Run every pass and return the combined accumulator"""
        p = self.params
        steps = p.iterations_for(self.network.n)
        coloring = bipartite_coloring(self.network) if p.k % 2 == 1 else None
        if coloring is None:
            return self._run_pass(steps, 0)
        log_warning("Bipartite network with odd k: averaging two passes started on opposite sides")
        passes = [self._run_pass(steps, color, self._colored_start(coloring, color))
                  for color in (0, 1)]
        return ReconstructionAccumulator.average(passes)

    def reconstruct(self) -> Tuple[Network, ReconstructionAccumulator]:
        p = self.params
        log_info(f"Reconstructing: n={self.network.n}, k={p.k}, T={p.iterations_for(self.network.n)}, "
                 f"lambda={p.lam}, denoising={p.denoising}, xi={p.xi}, chains={p.chains}")
        started = time.perf_counter()
        accumulator = self.accumulate()
        reconstructed = accumulator.to_network(self.network.n, self.network.labels)
        log_info(f"Reconstruction visited {len(accumulator)} node pairs in "
                 f"{time.perf_counter() - started:.2f}s")
        return reconstructed, accumulator


def reconstruct(network: Network, dictionary: Dictionary,
                params: NdrParams) -> Tuple[Network, ReconstructionAccumulator]:
    return NetworkReconstructor(network, dictionary, params).reconstruct()


def threshold(reconstructed: Network, theta: float) -> Network:
    """Binary network of pairs whose reconstructed weight exceeds theta"""
    if not 0.0 <= theta <= 1.0:
        raise ParameterError(f"theta must lie in [0, 1], got {theta}")
    kept: List[Tuple[int, int]] = [(u, v) for u, v, w in reconstructed.edges() if w > theta]
    return Network.from_edges(reconstructed.n, kept, reconstructed.labels)
