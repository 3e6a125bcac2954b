#!/usr/bin/env python3
"""
Denoise Pipeline for the Network Dictionary Toolkit
Learns a dictionary from a corrupted network, scores candidate pairs by
reconstruction and compares the scores with link-prediction baselines
"""

from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.classes.config_loader import get_config
from core.classes.dictionary_learner import learn_dictionary
from core.classes.motif_chain import MotifChain
from core.classes.ndl_errors import MethodUnavailableError, MetricError, StructureError
from core.classes.network import Network
from core.classes.network_dictionary import Dictionary
from core.classes.network_reconstructor import NetworkReconstructor
from core.classes.reconstruction_accumulator import ReconstructionAccumulator
from core.classes.run_specs import NdlParams, NdrParams, NoiseKind, ScoredPairs
from core.functions.baselines import BASELINES, baseline_scores
from core.functions.classification_metrics import classify_with_split, roc_auc
from core.functions.graph_utils import FALSE_EDGE, TRUE_EDGE, pairs_within_distance
from core.functions.utils import (
    STREAM_RANDOM_DICT, STREAM_RECONSTRUCT, log_info, log_warning, make_rng)

Pair = Tuple[int, int]

NDR_METHOD = "NDR"
CHAIN_DISTANCE_METHOD = "ChainDistance"
REPORT_COLUMNS = ["method", "auc", "accuracy", "precision", "recall", "theta"]
DEFAULT_RECON_T = 200_000

# pass index of the along-walk distance chain, after the two reconstruction passes
_CHAIN_DISTANCE_PASS = 2


def build_candidates(G: Network, labels: Dict[Pair, str], kind: NoiseKind,
                     max_distance: Optional[int] = None) -> ScoredPairs:
    """Candidate pairs with ground truth.

    Additive noise: every edge of G (positive unless labeled false_edge).
    Subtractive noise: non-edges within `max_distance` hops (None: all
    non-edges), positive when labeled true_edge.
    """
    if kind.additive:
        pairs = [(u, v) for u, v, _ in G.edges() if u != v]
        truth = [labels.get(pair) != FALSE_EDGE for pair in pairs]
        corrupted = truth.count(False)
    else:
        pairs = pairs_within_distance(G, max_distance)
        truth = [labels.get(pair) == TRUE_EDGE for pair in pairs]
        corrupted = truth.count(True)
    if corrupted == 0:
        raise StructureError(f"no corrupted pairs among the {len(pairs)} candidates for "
                             f"{kind.value} noise; nothing to denoise")
    u = np.array([p[0] for p in pairs], dtype=np.int64)
    v = np.array([p[1] for p in pairs], dtype=np.int64)
    return ScoredPairs(u, v, np.zeros(len(pairs)), np.array(truth, dtype=bool))


def chain_distance_scores(G: Network, candidates: ScoredPairs, params: NdrParams) -> ScoredPairs:
    """Mean smallest along-walk distance of each pair over the walks that connect it"""
    rng = make_rng(params.seed, STREAM_RECONSTRUCT, _CHAIN_DISTANCE_PASS)
    chain = MotifChain(G, params.k, params.sampler_config(), rng)
    accumulator = ReconstructionAccumulator()
    for _ in range(params.iterations_for(G.n)):
        x = chain.step().tolist()
        shortest: Dict[Pair, int] = {}
        for a in range(len(x)):
            for b in range(a + 1, len(x)):
                if x[a] == x[b]:
                    continue
                pair = (x[a], x[b]) if x[a] < x[b] else (x[b], x[a])
                if b - a < shortest.get(pair, len(x)):
                    shortest[pair] = b - a
        for (u, v), distance in shortest.items():
            accumulator.add(u, v, distance)
    scores = np.array([accumulator.mean(u, v) for u, v in zip(candidates.u, candidates.v)])
    return candidates.with_scores(scores, CHAIN_DISTANCE_METHOD)


class DenoisePipeline:
    """Learn on the observed network, reconstruct it, score candidate pairs"""

    def __init__(self, network: Network, labels: Dict[Pair, str], kind: NoiseKind,
                 ndl_params: NdlParams, ndr_params: NdrParams,
                 all_nonedges: bool = False, random_motifs: bool = False):
        self.network = network
        self.labels = labels
        self.kind = NoiseKind.parse(kind)
        self.ndl_params = ndl_params.validate()
        preset = get_config().get("denoising.recon_T", DEFAULT_RECON_T)
        if ndr_params.T is None and preset != "auto":
            ndr_params = replace(ndr_params, T=int(preset))
        self.ndr_params = ndr_params.validate()
        self.all_nonedges = all_nonedges
        self.random_motifs = random_motifs
        self.dictionary: Optional[Dictionary] = None
        self.candidates: Optional[ScoredPairs] = None

    def learn(self) -> Dictionary:
        p = self.ndl_params
        if self.random_motifs:
            log_info(f"Using {p.r} random latent motifs of size k={p.k}")
            self.dictionary = Dictionary.random(p.k, p.r, make_rng(p.seed, STREAM_RANDOM_DICT))
        else:
            self.dictionary, _, _ = learn_dictionary(self.network, p)
        return self.dictionary

    def run(self) -> ScoredPairs:
        """Reconstruction-weight scores for every candidate pair"""
        max_distance = None if self.all_nonedges else self.ndr_params.k
        self.candidates = build_candidates(self.network, self.labels, self.kind, max_distance)
        log_info(f"Denoising {self.kind.value}: {len(self.candidates)} candidates, "
                 f"{int(self.candidates.label.sum())} positive")
        if self.dictionary is None:
            self.learn()
        _, accumulator = NetworkReconstructor(self.network, self.dictionary, self.ndr_params).reconstruct()
        scores = np.array([accumulator.mean(u, v)
                           for u, v in zip(self.candidates.u, self.candidates.v)])
        return self.candidates.with_scores(scores, NDR_METHOD)

    def baselines(self, methods: Sequence[str] = BASELINES) -> List[ScoredPairs]:
        results = []
        for method in methods:
            try:
                results.append(baseline_scores(self.network, self.candidates, method))
            except MethodUnavailableError as exc:
                log_warning(f"Skipping baseline {method}: {exc.message}")
        return results

    def chain_distance(self) -> ScoredPairs:
        return chain_distance_scores(self.network, self.candidates, self.ndr_params)


def denoise_pipeline(network: Network, labels: Dict[Pair, str], kind: NoiseKind,
                     ndl_params: NdlParams, ndr_params: NdrParams, **options) -> ScoredPairs:
    return DenoisePipeline(network, labels, kind, ndl_params, ndr_params, **options).run()


def evaluation_report(results: Sequence[ScoredPairs], split_seed: Optional[int] = None,
                      train_frac: float = 0.25, val_frac: float = 0.25):
    """One report row per scoring method"""
    import pandas as pd
    rows = []
    for scored in results:
        row = {"method": scored.method}
        try:
            row["auc"] = roc_auc(scored)["auc"]
            row.update(classify_with_split(scored, split_seed, train_frac, val_frac))
        except MetricError as exc:
            log_warning(f"Metrics unavailable for {scored.method}: {exc.message}")
            row.update({"auc": float("nan"), "accuracy": float("nan"), "precision": float("nan"),
                        "recall": float("nan"), "theta": float("nan")})
        rows.append(row)
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)
