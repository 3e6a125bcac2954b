#!/usr/bin/env python3
"""
Motif sampling utilities for the Network Dictionary Toolkit
Chain updates for k-walks, injective filtering and exhaustive oracles
"""

from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from core.classes.ndl_errors import CapacityError, DeadEndError, MixingError, StructureError
from core.classes.network import Network
from core.classes.run_specs import McmcMode, SamplerConfig

Walk = Tuple[int, ...]

PI = "pi"
PI_INJ = "pi_inj"
PI_HAT = "pi_hat"
PI_HAT_INJ = "pi_hat_inj"
TARGETS = (PI, PI_INJ, PI_HAT, PI_HAT_INJ)


def walk_profile(G: Network, k: int) -> np.ndarray:
    """k x n array; row j holds the weighted count of j-step walks from each node"""
    profile = np.ones((k, G.n), dtype=np.float64)
    for j in range(1, k):
        profile[j] = G.adjacency @ profile[j - 1]
    return profile


def walk_row_sums(G: Network, k: int) -> np.ndarray:
    """Row sums of A^(k-1): weighted count of (k-1)-step walks from each node"""
    return walk_profile(G, k)[k - 1]


def chain_weights(G: Network, x: np.ndarray) -> np.ndarray:
    """A(x(i), x(i+1)) for i = 1..k-1"""
    return np.asarray(G.adjacency[x[:-1], x[1:]]).ravel()


def is_homomorphism(G: Network, x) -> bool:
    x = np.asarray(x, dtype=np.int64)
    return bool(np.all(chain_weights(G, x) > 0))


def is_injective(x) -> bool:
    values = list(x)
    return len(set(values)) == len(values)


def walk_from(G: Network, k: int, start: int, rng: np.random.Generator) -> np.ndarray:
    """k-walk from `start`, each step to a weight-proportional neighbor"""
    x = np.empty(k, dtype=np.int64)
    x[0] = start
    for i in range(1, k):
        x[i] = G.sample_neighbor(int(x[i - 1]), rng)
    return x


def rejection_init(G: Network, k: int, rng: np.random.Generator,
                   retry_factor: int = 10) -> np.ndarray:
    """Draw k i.i.d. uniform nodes until they form a k-walk.

    After retry_factor * n failures the walk is grown from a random edge.
    """
    A = G.adjacency
    if A.nnz == 0:
        raise StructureError("network has no edges, so no homomorphism exists")
    for _ in range(retry_factor * G.n):
        x = rng.integers(G.n, size=k)
        if all(G.has_edge(int(x[i]), int(x[i + 1])) for i in range(k - 1)):
            return x.astype(np.int64)
    entry = int(rng.integers(A.nnz))
    u = int(np.searchsorted(A.indptr, entry, side="right") - 1)
    x = np.empty(k, dtype=np.int64)
    x[0] = u
    x[1:] = walk_from(G, k - 1, int(A.indices[entry]), rng)
    return x


def pivot_acceptance(G: Network, current: int, proposal: int,
                     row_sums: Optional[np.ndarray] = None) -> float:
    """Metropolis acceptance for moving the pivot `current` -> `proposal`.

    Approximate mode (row_sums None) targets a uniform pivot; exact mode
    multiplies by the ratio of (k-1)-step walk counts.
    """
    d = G.degrees
    ratio = d[current] / d[proposal]
    if row_sums is not None:
        ratio *= row_sums[proposal] / row_sums[current]
    return float(min(ratio, 1.0))


def conditional_walk_from(G: Network, start: int, profile: np.ndarray,
                          rng: np.random.Generator) -> np.ndarray:
    """k-walk from `start` drawn with probability proportional to its weight.

    Step i goes to neighbor w with probability proportional to
    A(x(i-1), w) times the weighted count of the walks left to take from w.
    """
    k = profile.shape[0]
    x = np.empty(k, dtype=np.int64)
    x[0] = start
    for i in range(1, k):
        prev = int(x[i - 1])
        nbrs = G.neighbors(prev)
        if nbrs.size == 0:
            raise DeadEndError(f"node {prev} has no neighbors")
        weights = G.neighbor_weights(prev) * profile[k - 1 - i][nbrs]
        cumulative = np.cumsum(weights)
        pos = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side='right'))
        x[i] = nbrs[min(pos, nbrs.size - 1)]
    return x


def pivot_update(G: Network, k: int, x: np.ndarray, rng: np.random.Generator,
                 profile: np.ndarray, exact: bool = False) -> np.ndarray:
    """Pivot chain: random-walk move of x(1), accept, then redraw x(2..k).

    `profile` comes from walk_profile(G, k); exact mode uses its last row
    in the acceptance ratio.
    """
    pivot = int(x[0])
    if G.degrees[pivot] == 0:
        raise DeadEndError(f"pivot {pivot} has no outgoing weight")
    proposal = G.sample_neighbor(pivot, rng)
    alpha = pivot_acceptance(G, pivot, proposal, profile[k - 1] if exact else None)
    if rng.random() > alpha:
        proposal = pivot
    return conditional_walk_from(G, proposal, profile, rng)


def glauber_update(G: Network, k: int, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Resample one uniformly chosen coordinate given its chain neighbors"""
    for _ in range(k):
        v = int(rng.integers(k))
        if v == 0:
            candidates, weights = G.neighbors(int(x[1])), G.neighbor_weights(int(x[1]))
        elif v == k - 1:
            candidates, weights = G.neighbors(int(x[k - 2])), G.neighbor_weights(int(x[k - 2]))
        else:
            left, right = int(x[v - 1]), int(x[v + 1])
            candidates, il, ir = np.intersect1d(G.neighbors(left), G.neighbors(right),
                                                assume_unique=True, return_indices=True)
            weights = G.neighbor_weights(left)[il] * G.neighbor_weights(right)[ir]
        total = weights.sum() if len(weights) else 0.0
        if total <= 0:
            continue
        cumulative = np.cumsum(weights)
        pos = int(np.searchsorted(cumulative, rng.random() * total, side='right'))
        updated = x.copy()
        updated[v] = candidates[min(pos, len(candidates) - 1)]
        return updated
    raise DeadEndError(f"no valid Glauber replacement for walk {tuple(x)}")


def injective_step(update: Callable[[np.ndarray], np.ndarray], x: np.ndarray,
                   config: SamplerConfig) -> Tuple[np.ndarray, int]:
    """Apply `update` until the walk visits k distinct nodes.

    Returns the k-path and the number of rejected intermediate states.
    """
    rejections = 0
    y = update(x)
    while not is_injective(y.tolist()):
        rejections += 1
        if rejections > config.max_rejections:
            raise MixingError(rejections)
        y = update(y)
    return y, rejections


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def count_walks(G: Network, k: int) -> int:
    """Number of k-walks (unweighted)"""
    counts = np.ones(G.n, dtype=np.float64)
    B = G.binary()
    for _ in range(k - 1):
        counts = B @ counts
    return int(round(counts.sum()))


def enumerate_homomorphisms(G: Network, k: int, injective: bool = False,
                            limit: int = 10_000_000) -> List[Walk]:
    """Every k-walk (or k-path) by depth-first extension"""
    total = count_walks(G, k)
    if total > limit:
        raise CapacityError(f"{total} homomorphisms exceed the enumeration limit {limit}")
    neighbors = [G.neighbors(u).tolist() for u in range(G.n)]
    walks: List[Walk] = []
    stack: List[Walk] = [(u,) for u in range(G.n - 1, -1, -1)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == k:
            walks.append(prefix)
            continue
        for w in reversed(neighbors[prefix[-1]]):
            if injective and w in prefix:
                continue
            stack.append(prefix + (w,))
    return walks


def target_distribution(G: Network, k: int, which: str,
                        limit: int = 10_000_000) -> Dict[Walk, float]:
    """Exact pi, pi_inj, pi_hat or pi_hat_inj over enumerated walks"""
    if which not in TARGETS:
        raise ValueError(f"unknown target '{which}'")
    injective = which in (PI_INJ, PI_HAT_INJ)
    walks = enumerate_homomorphisms(G, k, injective, limit)
    if not walks:
        raise StructureError(f"no {'k-path' if injective else 'k-walk'} with k={k} exists")
    row_sums = walk_row_sums(G, k) if which in (PI_HAT, PI_HAT_INJ) else None
    masses = np.empty(len(walks))
    for i, walk in enumerate(walks):
        mass = float(np.prod(chain_weights(G, np.asarray(walk))))
        if row_sums is not None:
            mass /= G.n * row_sums[walk[0]]
        masses[i] = mass
    masses /= masses.sum()
    return dict(zip(walks, masses.tolist()))


def total_variation(p: Dict[Walk, float], q: Dict[Walk, float]) -> float:
    keys = set(p) | set(q)
    return 0.5 * sum(abs(p.get(key, 0.0) - q.get(key, 0.0)) for key in keys)


def target_for(mode, injective: bool) -> str:
    """Stationary target of a chain configuration"""
    if McmcMode.parse(mode) is McmcMode.PIVOT_APPROX:
        return PI_HAT_INJ if injective else PI_HAT
    return PI_INJ if injective else PI
