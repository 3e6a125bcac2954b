#!/usr/bin/env python3
"""
Motif Chain for the Network Dictionary Toolkit
Stateful MCMC sampler of k-walks (or k-paths) in a fixed network
"""

from collections import Counter
from typing import Dict, List, Optional

import numpy as np

from core.classes.network import Network
from core.classes.run_specs import McmcMode, SamplerConfig
from core.functions.sampling_utils import (
    Walk, glauber_update, injective_step, pivot_update, rejection_init, walk_profile)


class MotifChain:
    """One chain; owns its state and its random stream"""

    def __init__(self, network: Network, k: int, config: SamplerConfig,
                 rng: np.random.Generator, start: Optional[np.ndarray] = None):
        self.network = network
        self.k = k
        self.config = config.validate()
        self.rng = rng
        self._profile = None if config.mcmc_mode is McmcMode.GLAUBER else walk_profile(network, k)
        if start is None:
            start = rejection_init(network, k, rng, config.init_retry_factor)
        self.state = np.asarray(start, dtype=np.int64)
        self.steps = 0
        self.last_rejections = 0
        self.total_rejections = 0

    def base_update(self, x: np.ndarray) -> np.ndarray:
        if self.config.mcmc_mode is McmcMode.GLAUBER:
            return glauber_update(self.network, self.k, x, self.rng)
        return pivot_update(self.network, self.k, x, self.rng, self._profile,
                            exact=self.config.mcmc_mode is McmcMode.PIVOT)

    def step(self) -> np.ndarray:
        """Advance once; injective chains skip over non-injective states"""
        if self.config.injective:
            self.state, self.last_rejections = injective_step(self.base_update, self.state, self.config)
            self.total_rejections += self.last_rejections
        else:
            self.state = self.base_update(self.state)
        self.steps += 1
        return self.state

    def sample(self, count: int) -> List[np.ndarray]:
        return [self.step() for _ in range(count)]

    def occupation(self, steps: int) -> Dict[Walk, float]:
        """Empirical state frequencies over the next `steps` steps"""
        counts: Counter = Counter()
        for _ in range(steps):
            counts[tuple(self.step().tolist())] += 1
        return {walk: c / steps for walk, c in counts.items()}
