#!/usr/bin/env python3
"""
Mesoscale patch utilities for the Network Dictionary Toolkit
Patch extraction, vectorization and on-chain masking
"""

from typing import Optional, Sequence

import numpy as np

from core.classes.ndl_errors import ParameterError, ShapeError
from core.classes.network import Network


def extract_patch(G: Network, x: Sequence[int]) -> np.ndarray:
    """k x k matrix with entry (a, b) = A(x(a), x(b))"""
    x = np.asarray(x, dtype=np.int64)
    return G.adjacency[x][:, x].toarray()


def patch_matrix(G: Network, walks: Sequence[Sequence[int]]) -> np.ndarray:
    """k^2 x N data matrix whose columns are vectorized patches"""
    return np.column_stack([vectorize(extract_patch(G, x)) for x in walks])


def vectorize(M: np.ndarray) -> np.ndarray:
    """Column-wise stacking of a k1 x k2 matrix"""
    M = np.asarray(M)
    if M.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {M.shape}")
    return M.reshape(-1, order='F')


def reshape(v: np.ndarray, k1: int, k2: int) -> np.ndarray:
    """Inverse of vectorize"""
    v = np.asarray(v)
    if v.size != k1 * k2:
        raise ShapeError(f"cannot reshape length {v.size} into {k1}x{k2}")
    return v.reshape((k1, k2), order='F')


def on_chain_mask(k: int, literal: bool = False) -> np.ndarray:
    """True at chain positions (i, i+1) and, unless literal, (i+1, i)"""
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    mask = np.eye(k, k=1, dtype=bool)
    if not literal:
        mask |= mask.T
    return mask


def _mask_for(M: np.ndarray, literal: bool, k: Optional[int] = None) -> np.ndarray:
    """Mask matching M: k x k patches or k^2 x m column stacks"""
    if k is not None and M.ndim == 2 and M.shape[0] == k * k and M.shape != (k, k):
        return vectorize(on_chain_mask(k, literal))[:, None]
    if M.ndim == 2 and M.shape[0] == M.shape[1] and M.shape[0] >= 2:
        return on_chain_mask(M.shape[0], literal)
    if M.ndim in (1, 2):
        k = int(round(np.sqrt(M.shape[0])))
        if k * k != M.shape[0] or k < 2:
            raise ShapeError(f"leading dimension {M.shape[0]} is not a square k^2")
        flat = vectorize(on_chain_mask(k, literal))
        return flat if M.ndim == 1 else flat[:, None]
    raise ShapeError(f"unsupported shape {M.shape}")


def off_chain_project(M: np.ndarray, literal: bool = False, k: Optional[int] = None) -> np.ndarray:
    """Zero every on-chain entry; accepts a patch or dictionary columns"""
    M = np.asarray(M, dtype=np.float64)
    return np.where(_mask_for(M, literal, k), 0.0, M)


def thin_on_chain(M: np.ndarray, xi: float, literal: bool = False,
                  k: Optional[int] = None) -> np.ndarray:
    """Multiply on-chain entries by xi in [0, 1]"""
    if not 0.0 <= xi <= 1.0:
        raise ParameterError(f"xi must lie in [0, 1], got {xi}")
    M = np.asarray(M, dtype=np.float64)
    return np.where(_mask_for(M, literal, k), xi * M, M)
