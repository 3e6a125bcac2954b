#!/usr/bin/env python3
"""
Dictionary Learner for the Network Dictionary Toolkit
Learns latent motifs from a network by injective motif sampling and online NMF
"""

import time
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from core.classes.motif_chain import MotifChain
from core.classes.ndl_errors import MixingError, StructureError
from core.classes.network import Network
from core.classes.network_dictionary import AggregateState, Dictionary, dominance_scores
from core.classes.run_specs import NdlParams, SamplerConfig
from core.functions.factorization import onmf_step
from core.functions.patch_utils import patch_matrix
from core.functions.utils import (
    STREAM_LEARN_CHAIN, STREAM_LEARN_INIT, atomic_write, log_info, make_rng)


class DictionaryLearner:
    """Runs the learning loop for one network and one parameter set"""

    def __init__(self, network: Network, params: NdlParams):
        self.network = network
        self.params = params.validate()
        self.diagnostics: List[Dict[str, Any]] = []

    def _check_k_path_exists(self, chain: MotifChain) -> None:
        """One injective sample under a generous rejection budget"""
        strict = SamplerConfig(chain.config.mcmc_mode, True,
                               self.params.existence_check_budget).validate()
        saved = chain.config
        chain.config = strict
        try:
            chain.step()
        except MixingError:
            raise StructureError(
                f"no {self.params.k}-path found after {self.params.existence_check_budget} "
                f"rejections; the network may have no injective {self.params.k}-chain") from None
        finally:
            chain.config = saved

    def learn(self) -> Tuple[Dictionary, AggregateState, List[Dict[str, Any]]]:
        """Learn W_T; returns the dictionary, final aggregates and per-iteration diagnostics"""
        p = self.params
        log_info(f"Learning dictionary: n={self.network.n}, k={p.k}, r={p.r}, T={p.T}, "
                 f"N={p.N}, lambda={p.lam}, mcmc={p.mcmc_mode.value}, seed={p.seed}")
        chain = MotifChain(self.network, p.k, p.sampler_config(),
                           make_rng(p.seed, STREAM_LEARN_CHAIN))
        self._check_k_path_exists(chain)

        dictionary = Dictionary.initial(p.k, p.r, make_rng(p.seed, STREAM_LEARN_INIT))
        W = dictionary.W
        state = AggregateState.empty(p.r, p.k * p.k)
        self.diagnostics = []
        started = time.perf_counter()

        for t in range(1, p.T + 1):
            rejections_before = chain.total_rejections
            try:
                walks = chain.sample(p.N)
            except MixingError as exc:
                raise MixingError(exc.rejections, iteration=t) from None
            X = patch_matrix(self.network, walks)
            W_prev = W
            state, W, H = onmf_step(state, W_prev, X, p.lam, p.code_iterations,
                                    p.dictionary_sweeps, p.code_tolerance)
            norm = np.linalg.norm(X)
            fit = float(np.linalg.norm(X - W_prev @ H) / norm) if norm > 0 else 0.0
            self.diagnostics.append({
                "iteration": t,
                "fit_error": fit,
                "rejections": chain.total_rejections - rejections_before,
                "elapsed": time.perf_counter() - started,
                "dominance": dominance_scores(state)[0].tolist(),
            })
            if t % max(1, p.T // 10) == 0:
                log_info(f"NDL iteration {t}/{p.T}: fit error {fit:.4g}")

        log_info(f"Learned dictionary in {time.perf_counter() - started:.2f}s")
        return Dictionary(W, p.k), state, self.diagnostics

    def write_trace(self, path: str) -> None:
        """Per-iteration diagnostics as TSV"""
        import pandas as pd
        rows = []
        for entry in self.diagnostics:
            row = {key: value for key, value in entry.items() if key != "dominance"}
            row["dominance"] = ",".join(f"{s:.6g}" for s in entry["dominance"])
            rows.append(row)
        frame = pd.DataFrame(rows, columns=["iteration", "fit_error", "rejections", "elapsed", "dominance"])
        with atomic_write(path) as handle:
            frame.to_csv(handle, sep="\t", index=False)


def learn_dictionary(network: Network, params: NdlParams,
                     trace_path: Optional[str] = None):
    """Functional wrapper around DictionaryLearner"""
    learner = DictionaryLearner(network, params)
    result = learner.learn()
    if trace_path:
        learner.write_trace(trace_path)
    return result
