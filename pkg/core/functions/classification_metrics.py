#!/usr/bin/env python3
"""
Binary classification metrics for the Network Dictionary Toolkit
ROC/AUC of confidence scores and threshold selection on a random split
"""

from typing import Any, Dict, Optional

import numpy as np
from sklearn.metrics import accuracy_score, auc, precision_score, recall_score, roc_curve

from core.classes.ndl_errors import MetricError, ParameterError
from core.classes.run_specs import ScoredPairs
from core.functions.utils import STREAM_SPLIT, make_rng


def roc_auc(scored: ScoredPairs) -> Dict[str, Any]:
    """Area under the ROC curve; ties between classes count half"""
    positives = int(scored.label.sum())
    if positives == 0 or positives == len(scored):
        raise MetricError("ROC/AUC needs both positive and negative pairs")
    fpr, tpr, thresholds = roc_curve(scored.label, scored.score, drop_intermediate=False)
    return {"auc": float(auc(fpr, tpr)), "fpr": fpr, "tpr": tpr, "thresholds": thresholds}


def _choose_threshold(scores: np.ndarray, labels: np.ndarray) -> float:
    """Validation threshold maximizing accuracy of 'score > theta'; ties keep the smaller theta"""
    candidates = np.concatenate(([scores.min() - 1.0], np.unique(scores)))
    best_theta, best_accuracy = candidates[0], -1.0
    for theta in candidates:
        accuracy = float(np.mean((scores > theta) == labels))
        if accuracy > best_accuracy:
            best_theta, best_accuracy = float(theta), accuracy
    return best_theta


def classify_with_split(scored: ScoredPairs, split_seed: Optional[int] = None,
                        train_frac: float = 0.25, val_frac: float = 0.25) -> Dict[str, float]:
    """Pick theta on the validation part, report accuracy/precision/recall on the test part.

    The training part is set aside; score-threshold classifiers have
    nothing to fit on it.
    """
    if not (0.0 < train_frac < 1.0 and 0.0 < val_frac < 1.0 and train_frac + val_frac < 1.0):
        raise ParameterError(f"invalid split fractions train={train_frac}, val={val_frac}")
    n = len(scored)
    order = make_rng(split_seed, STREAM_SPLIT).permutation(n)
    n_train = int(np.floor(train_frac * n))
    n_val = int(np.floor(val_frac * n))
    val_idx = order[n_train:n_train + n_val]
    test_idx = order[n_train + n_val:]
    if val_idx.size == 0 or test_idx.size == 0:
        raise MetricError(f"split of {n} pairs leaves an empty validation or test part")

    theta = _choose_threshold(scored.score[val_idx], scored.label[val_idx])
    truth = scored.label[test_idx]
    predicted = scored.score[test_idx] > theta
    return {
        "accuracy": float(accuracy_score(truth, predicted)),
        "precision": float(precision_score(truth, predicted, zero_division=0)),
        "recall": float(recall_score(truth, predicted, zero_division=0)),
        "theta": theta,
    }
