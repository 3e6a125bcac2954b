#!/usr/bin/env python3
"""
Online nonnegative matrix factorization for the Network Dictionary Toolkit
Sparse coding, dictionary-matrix update and the single online step
"""

from typing import Tuple

import numpy as np

from core.classes.ndl_errors import NumericError, ShapeError
from core.classes.network_dictionary import AggregateState, project_columns


def coding_objective(X: np.ndarray, W: np.ndarray, H: np.ndarray, lam: float) -> float:
    """||X - WH||_F^2 + lam * ||H||_1"""
    residual = X - W @ H
    return float(np.sum(residual * residual) + lam * np.abs(H).sum())


def sparse_code(X: np.ndarray, W: np.ndarray, lam: float = 0.0,
                iters: int = 100, tol: float = 1e-8) -> np.ndarray:
    """Nonnegative lasso codes H (r x N) by projected gradient descent.

    Step size is 1/tr(W^T W); stops after `iters` steps or when no entry
    of H moves by `tol` or more.
    """
    X = np.asarray(X, dtype=np.float64)
    W = np.asarray(W, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]
    if W.shape[0] != X.shape[0]:
        raise ShapeError(f"dictionary has {W.shape[0]} rows, data has {X.shape[0]}")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(W))):
        raise NumericError("sparse coding received non-finite input")

    r, N = W.shape[1], X.shape[1]
    H = np.zeros((r, N))
    gram = W.T @ W
    step = np.trace(gram)
    if step <= 0:
        return H
    correlation = W.T @ X - lam / 2.0
    for _ in range(max(1, iters)):
        updated = np.maximum(H - (gram @ H - correlation) / step, 0.0)
        moved = np.max(np.abs(updated - H)) if H.size else 0.0
        H = updated
        if moved < tol:
            break
    return H


def surrogate(W: np.ndarray, P: np.ndarray, Q: np.ndarray) -> float:
    """tr(W P W^T) - 2 tr(W Q)"""
    return float(np.trace(W @ P @ W.T) - 2.0 * np.trace(W @ Q))


def dictionary_update(W: np.ndarray, P: np.ndarray, Q: np.ndarray, iters: int = 5) -> np.ndarray:
    """Block-coordinate projected gradient over dictionary columns"""
    W = np.array(W, dtype=np.float64)
    if P.shape != (W.shape[1], W.shape[1]) or Q.shape != (W.shape[1], W.shape[0]):
        raise ShapeError(f"aggregates {P.shape}/{Q.shape} do not match dictionary {W.shape}")
    for _ in range(iters):
        for j in range(W.shape[1]):
            column = W[:, j] - (W @ P[:, j] - Q[j, :]) / (P[j, j] + 1.0)
            W[:, j] = project_columns(column[:, None])[:, 0]
    return W


def onmf_step(state: AggregateState, W: np.ndarray, X: np.ndarray, lam: float,
              code_iters: int = 100, dict_iters: int = 5, tol: float = 1e-8
              ) -> Tuple[AggregateState, np.ndarray, np.ndarray]:
    """One online step: code X_t, refresh P_t and Q_t, update W"""
    H = sparse_code(X, W, lam, code_iters, tol)
    t = state.t + 1
    weight = 1.0 / t
    P = (1.0 - weight) * state.P + weight * (H @ H.T)
    Q = (1.0 - weight) * state.Q + weight * (H @ X.T)
    W_next = dictionary_update(W, P, Q, dict_iters)
    return AggregateState(t, P, Q), W_next, H
