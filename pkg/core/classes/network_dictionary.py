#!/usr/bin/env python3
"""
Network Dictionary for the Network Dictionary Toolkit
Latent motifs (k^2 x r nonnegative, unit-ball columns) and the online aggregate state
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from core.classes.ndl_errors import ParameterError, ParseError, ShapeError
from core.functions.utils import atomic_write

DICT_MAGIC = "NDL-DICT"
DICT_VERSION = 1
NORM_TOLERANCE = 1e-9


def project_columns(W: np.ndarray) -> np.ndarray:
    """Clip negatives, then scale each column into the unit ball"""
    W = np.maximum(np.asarray(W, dtype=np.float64), 0.0)
    norms = np.linalg.norm(W, axis=0)
    return W / np.maximum(1.0, norms)


class Dictionary:
    """Network dictionary W; column j is latent motif j in vectorized form"""

    def __init__(self, W: np.ndarray, k: int):
        W = np.asarray(W, dtype=np.float64)
        if W.ndim != 2 or W.shape[0] != k * k:
            raise ShapeError(f"dictionary must be {k * k} x r, got {W.shape}")
        self.k = int(k)
        self.W = W

    @property
    def r(self) -> int:
        return self.W.shape[1]

    @classmethod
    def initial(cls, k: int, r: int, rng: np.random.Generator) -> "Dictionary":
        """i.i.d. uniform [0,1] entries projected into the constraint set"""
        return cls(project_columns(rng.random((k * k, r))), k)

    @classmethod
    def random(cls, k: int, r: int, rng: np.random.Generator) -> "Dictionary":
        """Randomized latent motifs (uniform k x k entries per motif)"""
        return cls.initial(k, r, rng)

    @classmethod
    def chain_motif(cls, k: int) -> "Dictionary":
        """Single motif: the normalized k-chain adjacency pattern"""
        chain = np.eye(k, k=1) + np.eye(k, k=-1)
        column = chain.reshape(-1, order='F')
        return cls((column / np.linalg.norm(column))[:, None], k)

    def motif(self, j: int) -> np.ndarray:
        return self.W[:, j].reshape((self.k, self.k), order='F')

    def motifs(self) -> List[np.ndarray]:
        return [self.motif(j) for j in range(self.r)]

    def is_feasible(self) -> bool:
        return bool(np.all(self.W >= 0) and
                    np.all(np.linalg.norm(self.W, axis=0) <= 1.0 + NORM_TOLERANCE))

    def save(self, path: str) -> None:
        """Header line, then one line of k^2 values per motif"""
        with atomic_write(path) as handle:
            handle.write(f"{DICT_MAGIC} {DICT_VERSION} k={self.k} r={self.r}\n")
            for j in range(self.r):
                handle.write(" ".join(repr(float(v)) for v in self.W[:, j]) + "\n")

    @classmethod
    def load(cls, path: str) -> "Dictionary":
        with open(path, "r", encoding="utf-8") as handle:
            lines = [line.strip() for line in handle if line.strip()]
        if not lines:
            raise ParseError("empty dictionary file", 1, path)
        header = lines[0].split()
        if len(header) != 4 or header[0] != DICT_MAGIC or header[1] != str(DICT_VERSION):
            raise ParseError(f"expected '{DICT_MAGIC} {DICT_VERSION} k=<k> r=<r>'", 1, path)
        try:
            k = int(header[2].split("=", 1)[1])
            r = int(header[3].split("=", 1)[1])
        except (IndexError, ValueError):
            raise ParseError("malformed k/r fields in header", 1, path) from None
        if len(lines) - 1 != r:
            raise ParseError(f"header declares r={r} motifs, found {len(lines) - 1}", len(lines), path)
        W = np.empty((k * k, r))
        for j, line in enumerate(lines[1:]):
            values = line.split()
            if len(values) != k * k:
                raise ParseError(f"motif line needs {k * k} values, got {len(values)}", j + 2, path)
            try:
                W[:, j] = [float(v) for v in values]
            except ValueError:
                raise ParseError("non-numeric motif entry", j + 2, path) from None
        if not np.all(np.isfinite(W)) or np.any(W < 0):
            raise ParameterError(f"{path}: dictionary entries must be finite and nonnegative")
        return cls(W, k)


@dataclass
class AggregateState:
    """Running aggregates P_t (r x r) and Q_t (r x k^2) after t steps"""

    t: int
    P: np.ndarray
    Q: np.ndarray

    @classmethod
    def empty(cls, r: int, d: int) -> "AggregateState":
        return cls(0, np.zeros((r, r)), np.zeros((r, d)))

    def is_valid(self, tolerance: float = 1e-9) -> bool:
        if not np.allclose(self.P, self.P.T, atol=tolerance):
            return False
        return bool(np.linalg.eigvalsh((self.P + self.P.T) / 2).min() >= -tolerance)


def dominance_scores(state: AggregateState):
    """sqrt(diag P) and the motif order by descending score (stable)"""
    scores = np.sqrt(np.maximum(np.diag(state.P), 0.0))
    order = np.argsort(-scores, kind='stable')
    return scores, order


def score_label(score: float) -> str:
    """Compact score text for file names"""
    if not math.isfinite(score):
        return "nan"
    return f"{score:.4f}"
