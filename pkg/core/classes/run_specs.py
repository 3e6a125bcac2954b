#!/usr/bin/env python3
"""
Parameter Records for the Network Dictionary Toolkit
Validated specs for generators, corruption, sampling, learning and reconstruction
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.classes.ndl_errors import ParameterError


class McmcMode(Enum):
    PIVOT = "pivot"
    PIVOT_APPROX = "pivotapprox"
    GLAUBER = "glauber"

    @classmethod
    def parse(cls, value) -> "McmcMode":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "").replace("-", "")
        aliases = {"pivot": cls.PIVOT, "pivotexact": cls.PIVOT, "exact": cls.PIVOT,
                   "pivotapprox": cls.PIVOT_APPROX, "approx": cls.PIVOT_APPROX,
                   "glauber": cls.GLAUBER}
        if key not in aliases:
            raise ParameterError(f"unknown MCMC mode '{value}' (pivot, pivotapprox, glauber)")
        return aliases[key]


class NoiseKind(Enum):
    SUBTRACTIVE_ER = "-er"
    ADDITIVE_ER = "+er"
    ADDITIVE_WS = "+ws"

    @classmethod
    def parse(cls, value) -> "NoiseKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"-er": cls.SUBTRACTIVE_ER, "subtractive-er": cls.SUBTRACTIVE_ER, "ser": cls.SUBTRACTIVE_ER,
                   "+er": cls.ADDITIVE_ER, "additive-er": cls.ADDITIVE_ER, "aer": cls.ADDITIVE_ER,
                   "+ws": cls.ADDITIVE_WS, "additive-ws": cls.ADDITIVE_WS, "aws": cls.ADDITIVE_WS}
        if key not in aliases:
            raise ParameterError(f"unknown noise type '{value}' (-er, +er, +ws)")
        return aliases[key]

    @property
    def additive(self) -> bool:
        return self is not NoiseKind.SUBTRACTIVE_ER


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class ModelSpec:
    """Random-graph model: er(n,p), ws(n,k,p), ba(n,n0) or sbm(sizes,B)"""

    model: str
    n: int = 0
    p: float = 0.0
    k: int = 0
    n0: int = 0
    sizes: Tuple[int, ...] = ()
    block_matrix: Optional[Tuple[Tuple[float, ...], ...]] = None

    @classmethod
    def er(cls, n: int, p: float) -> "ModelSpec":
        return cls("er", n=n, p=p)

    @classmethod
    def ws(cls, n: int, k: int, p: float) -> "ModelSpec":
        return cls("ws", n=n, k=k, p=p)

    @classmethod
    def ba(cls, n: int, n0: int) -> "ModelSpec":
        return cls("ba", n=n, n0=n0)

    @classmethod
    def sbm(cls, sizes: Sequence[int], block_matrix: Sequence[Sequence[float]]) -> "ModelSpec":
        sizes = tuple(int(s) for s in sizes)
        matrix = tuple(tuple(float(x) for x in row) for row in block_matrix)
        return cls("sbm", n=sum(sizes), sizes=sizes, block_matrix=matrix)

    @classmethod
    def sbm_uniform(cls, sizes: Sequence[int], p_in: float, p_out: float) -> "ModelSpec":
        m = len(sizes)
        return cls.sbm(sizes, [[p_in if i == j else p_out for j in range(m)] for i in range(m)])

    def validate(self) -> "ModelSpec":
        if self.model not in ("er", "ws", "ba", "sbm"):
            raise ParameterError(f"unknown model '{self.model}' (er, ws, ba, sbm)")
        if self.n < 1:
            raise ParameterError(f"n must be positive, got {self.n}")
        if self.model in ("er", "ws"):
            _check_probability("p", self.p)
        if self.model == "ws" and not 1 <= self.k < self.n:
            raise ParameterError(f"ws ring degree k must satisfy 1 <= k < n, got {self.k}")
        if self.model == "ba" and not 1 <= self.n0 <= self.n:
            raise ParameterError(f"ba requires 1 <= n0 <= n, got n0={self.n0}")
        if self.model == "sbm":
            if not self.sizes or any(s < 1 for s in self.sizes):
                raise ParameterError("sbm block sizes must be positive")
            B = np.asarray(self.block_matrix, dtype=float)
            if B.shape != (len(self.sizes), len(self.sizes)):
                raise ParameterError(f"block matrix must be {len(self.sizes)}x{len(self.sizes)}")
            if not np.allclose(B, B.T):
                raise ParameterError("block matrix must be symmetric")
            if np.any(B < 0) or np.any(B > 1):
                raise ParameterError("block probabilities must lie in [0, 1]")
        return self


@dataclass(frozen=True)
class NoiseSpec:
    kind: NoiseKind
    fraction: float = 0.5
    ws_n0: int = 100
    ws_k: int = 20
    ws_p: float = 0.3

    def validate(self, n: Optional[int] = None) -> "NoiseSpec":
        if not 0.0 < self.fraction < 1.0:
            raise ParameterError(f"fraction must lie in (0, 1), got {self.fraction}")
        if self.kind is NoiseKind.ADDITIVE_WS:
            if self.ws_n0 < 2 or (n is not None and self.ws_n0 > n):
                raise ParameterError(f"ws n0 must satisfy 2 <= n0 <= n, got {self.ws_n0}")
            if not 1 <= self.ws_k < self.ws_n0:
                raise ParameterError(f"ws k must satisfy 1 <= k < n0, got {self.ws_k}")
            _check_probability("ws p", self.ws_p)
        return self


@dataclass(frozen=True)
class SamplerConfig:
    mcmc_mode: McmcMode = McmcMode.PIVOT_APPROX
    injective: bool = True
    max_rejections: int = 10000
    init_retry_factor: int = 10

    def validate(self) -> "SamplerConfig":
        if self.max_rejections < 1:
            raise ParameterError("max_rejections must be at least 1")
        if self.init_retry_factor < 1:
            raise ParameterError("init_retry_factor must be at least 1")
        return self


@dataclass(frozen=True)
class NdlParams:
    k: int = 21
    r: int = 25
    T: int = 100
    N: int = 100
    lam: float = 1.0
    mcmc_mode: McmcMode = McmcMode.PIVOT_APPROX
    seed: Optional[int] = None
    max_rejections: int = 10000
    code_iterations: int = 100
    code_tolerance: float = 1e-8
    dictionary_sweeps: int = 5
    existence_check_budget: int = 100000

    def validate(self) -> "NdlParams":
        if self.k < 2:
            raise ParameterError(f"k must be at least 2, got {self.k}")
        for name in ("r", "T", "N", "code_iterations", "dictionary_sweeps"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.lam < 0:
            raise ParameterError(f"lambda must be nonnegative, got {self.lam}")
        return self

    def sampler_config(self) -> SamplerConfig:
        return SamplerConfig(self.mcmc_mode, True, self.max_rejections).validate()


@dataclass(frozen=True)
class NdrParams:
    k: int = 21
    T: Optional[int] = None
    lam: float = 0.0
    theta: float = 0.4
    xi: float = 1.0
    denoising: bool = False
    inj_hom: bool = False
    mcmc_mode: McmcMode = McmcMode.PIVOT_APPROX
    seed: Optional[int] = None
    max_rejections: int = 10000
    code_iterations: int = 100
    code_tolerance: float = 1e-8
    literal_offchain: bool = False
    chains: int = 1
    threads: int = 1

    def validate(self) -> "NdrParams":
        if self.k < 2:
            raise ParameterError(f"k must be at least 2, got {self.k}")
        if self.T is not None and self.T < 1:
            raise ParameterError(f"T must be at least 1, got {self.T}")
        if self.lam < 0:
            raise ParameterError(f"lambda must be nonnegative, got {self.lam}")
        _check_probability("theta", self.theta)
        _check_probability("xi", self.xi)
        if self.chains < 1 or self.threads < 1:
            raise ParameterError("chains and threads must be at least 1")
        return self

    def iterations_for(self, n: int) -> int:
        """Explicit T, else floor(n ln n) (at least 1)"""
        if self.T is not None:
            return int(self.T)
        return max(1, int(np.floor(n * np.log(max(n, 1)))))

    def sampler_config(self) -> SamplerConfig:
        return SamplerConfig(self.mcmc_mode, self.inj_hom, self.max_rejections).validate()


@dataclass
class ScoredPairs:
    """Candidate node pairs with confidence scores and ground-truth labels"""

    u: np.ndarray
    v: np.ndarray
    score: np.ndarray
    label: np.ndarray  # True = positive (a true edge)
    method: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=np.int64)
        self.v = np.asarray(self.v, dtype=np.int64)
        self.score = np.asarray(self.score, dtype=np.float64)
        self.label = np.asarray(self.label, dtype=bool)
        if not (len(self.u) == len(self.v) == len(self.score) == len(self.label)):
            raise ParameterError("scored pair arrays must have equal length")

    def __len__(self) -> int:
        return len(self.u)

    def with_scores(self, scores: np.ndarray, method: str) -> "ScoredPairs":
        return ScoredPairs(self.u, self.v, scores, self.label, method)

    def to_frame(self, labels: Optional[List[str]] = None):
        import pandas as pd
        names_u = [labels[i] for i in self.u] if labels else self.u
        names_v = [labels[i] for i in self.v] if labels else self.v
        return pd.DataFrame({"u": names_u, "v": names_v, "score": self.score,
                             "label": np.where(self.label, "positive", "negative")})
