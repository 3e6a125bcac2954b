#!/usr/bin/env python3
"""
Link-prediction baselines for the Network Dictionary Toolkit
Neighborhood-based confidence scores for candidate node pairs
"""

import numpy as np

from core.classes.ndl_errors import MethodUnavailableError, ParameterError
from core.classes.network import Network
from core.classes.run_specs import ScoredPairs

JACCARD_INDEX = "JaccardIndex"
PREFERENTIAL_ATTACHMENT = "PreferentialAttachment"
ADAMIC_ADAR = "AdamicAdar"
BASELINES = (JACCARD_INDEX, PREFERENTIAL_ATTACHMENT, ADAMIC_ADAR)


def _common_neighbor_counts(B, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.asarray(B[u].multiply(B[v]).sum(axis=1)).ravel()


def jaccard_index_scores(G: Network, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """|N(u) & N(v)| / |N(u) | N(v)|, 0 when both neighborhoods are empty"""
    B = G.binary()
    counts = np.asarray(B.sum(axis=1)).ravel()
    common = _common_neighbor_counts(B, u, v)
    union = counts[u] + counts[v] - common
    return np.divide(common, union, out=np.zeros_like(common, dtype=np.float64), where=union > 0)


def preferential_attachment_scores(G: Network, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    counts = np.asarray(G.binary().sum(axis=1)).ravel()
    return (counts[u] * counts[v]).astype(np.float64)


def adamic_adar_scores(G: Network, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Sum over common neighbors z of 1 / ln |N(z)|"""
    if G.has_self_edges:
        raise MethodUnavailableError(f"{ADAMIC_ADAR} is not defined for networks with self-edges")
    B = G.binary()
    counts = np.asarray(B.sum(axis=1)).ravel()
    # a common neighbor of two distinct nodes has at least two neighbors
    inverse_log = np.zeros(G.n)
    usable = counts >= 2
    inverse_log[usable] = 1.0 / np.log(counts[usable])
    return np.asarray(B[u].multiply(B[v]).multiply(inverse_log[None, :]).sum(axis=1)).ravel()


def baseline_scores(G: Network, candidates: ScoredPairs, method: str) -> ScoredPairs:
    """Score every candidate pair with one baseline method"""
    scorers = {
        JACCARD_INDEX: jaccard_index_scores,
        PREFERENTIAL_ATTACHMENT: preferential_attachment_scores,
        ADAMIC_ADAR: adamic_adar_scores,
    }
    if method not in scorers:
        raise ParameterError(f"unknown baseline '{method}' (choose from {', '.join(BASELINES)})")
    if len(candidates) == 0:
        return candidates.with_scores(np.zeros(0), method)
    return candidates.with_scores(scorers[method](G, candidates.u, candidates.v), method)
