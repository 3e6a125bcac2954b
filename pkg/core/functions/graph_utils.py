#!/usr/bin/env python3
"""
Graph utilities for the Network Dictionary Toolkit
Random-graph generators, noise operators, structural statistics and edge-list files
"""

import math
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from core.classes.ndl_errors import ConsistencyError, ParseError, StructureError
from core.classes.network import Network
from core.classes.run_specs import ModelSpec, NoiseKind, NoiseSpec
from core.functions.utils import STREAM_CORRUPT, STREAM_GENERATE, atomic_write, log_info, make_rng

TRUE_EDGE = "true_edge"
FALSE_EDGE = "false_edge"

Pair = Tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u <= v else (v, u)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def erdos_renyi_edges(n: int, p: float, rng: np.random.Generator) -> List[Pair]:
    edges = []
    for i in range(n - 1):
        hits = np.nonzero(rng.random(n - i - 1) < p)[0]
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return edges


def sbm_edges(sizes: Sequence[int], block_matrix, rng: np.random.Generator) -> List[Pair]:
    B = np.asarray(block_matrix, dtype=float)
    block_of = np.repeat(np.arange(len(sizes)), sizes)
    n = len(block_of)
    edges = []
    for i in range(n - 1):
        probs = B[block_of[i], block_of[i + 1:]]
        hits = np.nonzero(rng.random(n - i - 1) < probs)[0]
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return edges


def watts_strogatz_edges(n: int, k: int, p: float, rng: np.random.Generator) -> List[Pair]:
    """Ring where each node meets its k nearest neighbours, then rewiring.

    Each ring edge, in canonical order, is rewired with probability p: one
    endpoint (either, with probability 1/2) is kept and the other is replaced
    by a uniform node that is neither the kept node nor already adjacent to it.
    """
    half = k // 2
    adjacency: List[Set[int]] = [set() for _ in range(n)]
    ring = []
    for offset in range(1, half + 1):
        for i in range(n):
            j = (i + offset) % n
            if i != j and j not in adjacency[i]:
                adjacency[i].add(j)
                adjacency[j].add(i)
                ring.append((i, j))

    for u, v in ring:
        if rng.random() >= p:
            continue
        keep, drop = (u, v) if rng.random() < 0.5 else (v, u)
        if drop not in adjacency[keep] or len(adjacency[keep]) >= n - 1:
            continue
        while True:
            w = int(rng.integers(n))
            if w != keep and w not in adjacency[keep]:
                break
        adjacency[keep].discard(drop)
        adjacency[drop].discard(keep)
        adjacency[keep].add(w)
        adjacency[w].add(keep)

    return sorted({_pair(u, v) for u in range(n) for v in adjacency[u]})


def barabasi_albert_edges(n: int, n0: int, rng: np.random.Generator) -> List[Pair]:
    """Start from n0 isolated nodes; each new node brings n0 edges.

    The first new node picks its targets uniformly (all degrees are zero),
    later nodes attach with probability proportional to degree.
    """
    degrees = np.zeros(n, dtype=np.float64)
    edges = []
    for new in range(n0, n):
        total = degrees[:new].sum()
        if total == 0:
            targets = rng.choice(new, size=n0, replace=False)
        else:
            targets = rng.choice(new, size=n0, replace=False, p=degrees[:new] / total)
        for t in targets:
            edges.append(_pair(int(t), new))
            degrees[t] += 1
        degrees[new] += n0
    return edges


def generate(spec: ModelSpec, seed: Optional[int] = None) -> Network:
    """Draw a simple undirected binary network from a random-graph model"""
    spec.validate()
    rng = make_rng(seed, STREAM_GENERATE)
    if spec.model == "er":
        edges = erdos_renyi_edges(spec.n, spec.p, rng)
    elif spec.model == "ws":
        edges = watts_strogatz_edges(spec.n, spec.k, spec.p, rng)
    elif spec.model == "ba":
        edges = barabasi_albert_edges(spec.n, spec.n0, rng)
    else:
        edges = sbm_edges(spec.sizes, spec.block_matrix, rng)
    log_info(f"Generated {spec.model} network: n={spec.n}, edges={len(edges)}")
    return Network.from_edges(spec.n, edges)


# ---------------------------------------------------------------------------
# Connectivity helpers
# ---------------------------------------------------------------------------

def is_connected(G: Network) -> bool:
    if G.n <= 1:
        return True
    count, _ = csgraph.connected_components(G.adjacency, directed=False)
    return count == 1


def bipartite_coloring(G: Network) -> Optional[np.ndarray]:
    """0/1 color per node if G is bipartite, else None"""
    graph = G.to_networkx()
    if not nx.is_bipartite(graph):
        return None
    colors = nx.bipartite.color(graph)
    return np.array([colors[v] for v in range(G.n)], dtype=np.int64)


def uniform_spanning_tree(G: Network, rng: np.random.Generator) -> List[Pair]:
    """Uniform spanning tree by Wilson's loop-erased random walks"""
    n = G.n
    if n == 0:
        return []
    if not is_connected(G):
        raise StructureError("spanning tree requires a connected network")
    neighbors = [G.neighbors(u)[G.neighbors(u) != u] for u in range(n)]
    in_tree = np.zeros(n, dtype=bool)
    successor = np.full(n, -1, dtype=np.int64)
    root = int(rng.integers(n))
    in_tree[root] = True
    for start in rng.permutation(n):
        u = int(start)
        while not in_tree[u]:
            nbrs = neighbors[u]
            successor[u] = nbrs[rng.integers(len(nbrs))]
            u = int(successor[u])
        u = int(start)
        while not in_tree[u]:
            in_tree[u] = True
            u = int(successor[u])
    return sorted(_pair(u, int(successor[u])) for u in range(n) if u != root)


# ---------------------------------------------------------------------------
# Noise
# ---------------------------------------------------------------------------

def _sample_non_edges(G: Network, count: int, rng: np.random.Generator) -> List[Pair]:
    n = G.n
    existing = G.edge_set()
    simple_edges = sum(1 for u, v in existing if u != v)
    available = n * (n - 1) // 2 - simple_edges
    if count > available:
        raise StructureError(f"need {count} non-adjacent pairs, only {available} exist")
    if count == 0:
        return []
    chosen: Set[Pair] = set()
    if 4 * count > available:
        # dense: enumerate every non-edge and draw without replacement
        B = G.binary().toarray() > 0
        iu, ju = np.triu_indices(n, k=1)
        free = np.nonzero(~B[iu, ju])[0]
        picks = rng.choice(len(free), size=count, replace=False)
        return sorted((int(iu[free[i]]), int(ju[free[i]])) for i in picks)
    while len(chosen) < count:
        u, v = (int(x) for x in rng.integers(n, size=2))
        if u == v:
            continue
        pair = _pair(u, v)
        if pair in existing or pair in chosen:
            continue
        chosen.add(pair)
    return sorted(chosen)


def corrupt(G: Network, spec: NoiseSpec, seed: Optional[int] = None
            ) -> Tuple[Network, List[Pair], Dict[Pair, str]]:
    """Apply -ER, +ER or +WS noise; returns (G', changed pairs, labels)"""
    spec.validate(G.n)
    rng = make_rng(seed, STREAM_CORRUPT)
    edges = {(u, v): w for u, v, w in G.edges()}

    if spec.kind is NoiseKind.SUBTRACTIVE_ER:
        if not is_connected(G):
            raise StructureError("-ER noise requires a connected network")
        tree = set(uniform_spanning_tree(G, rng))
        removable = sorted(pair for pair in edges if pair not in tree)
        count = int(math.floor(spec.fraction * len(removable)))
        picks = rng.choice(len(removable), size=count, replace=False) if count else []
        changed = sorted(removable[i] for i in picks)
        for pair in changed:
            del edges[pair]
        labels = {pair: TRUE_EDGE for pair in changed}
    elif spec.kind is NoiseKind.ADDITIVE_ER:
        count = int(math.floor(spec.fraction * len(edges)))
        changed = _sample_non_edges(G, count, rng)
        for pair in changed:
            edges[pair] = 1.0
        labels = {pair: FALSE_EDGE for pair in changed}
    else:
        nodes = rng.choice(G.n, size=spec.ws_n0, replace=False)
        local = watts_strogatz_edges(spec.ws_n0, spec.ws_k, spec.ws_p, rng)
        changed = sorted({_pair(int(nodes[a]), int(nodes[b])) for a, b in local} - set(edges))
        for pair in changed:
            edges[pair] = 1.0
        labels = {pair: FALSE_EDGE for pair in changed}

    corrupted = Network.from_edges(G.n, [(u, v, w) for (u, v), w in edges.items()], G.labels)
    log_info(f"Corrupted network with {spec.kind.value}: {len(changed)} pairs changed")
    return corrupted, changed, labels


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------

def structural_stats(G: Network) -> Dict:
    """Degree histogram, local clustering and BFS diameter"""
    graph = G.to_networkx(self_edges=False)
    degrees = [graph.degree(v) for v in range(G.n)]
    histogram: Dict[int, int] = {}
    for d in degrees:
        histogram[d] = histogram.get(d, 0) + 1
    clustering = nx.clustering(graph)
    local = np.array([clustering[v] for v in range(G.n)], dtype=float)

    components = [graph.subgraph(c) for c in nx.connected_components(graph)]
    diameters = [nx.diameter(c) for c in components if c.number_of_nodes() > 0]
    return {
        "degree_histogram": dict(sorted(histogram.items())),
        "clustering": local,
        "mean_clustering": float(local.mean()) if G.n else 0.0,
        "diameter": max(diameters) if diameters else 0,
        "connected": len(components) <= 1,
        "per_component": len(components) > 1,
    }


def pairs_within_distance(G: Network, max_distance: Optional[int]) -> List[Pair]:
    """Non-adjacent pairs u < v at graph distance <= max_distance (None: all)"""
    n = G.n
    if n < 2:
        return []
    B = G.binary()
    if max_distance is None:
        dense = B.toarray() > 0
        iu, ju = np.triu_indices(n, k=1)
        keep = ~dense[iu, ju]
        return list(zip(iu[keep].tolist(), ju[keep].tolist()))
    dist = csgraph.dijkstra(B, directed=False, unweighted=True, limit=max_distance + 0.5)
    iu, ju = np.triu_indices(n, k=1)
    d = dist[iu, ju]
    keep = (d >= 2) & (d <= max_distance)
    return list(zip(iu[keep].tolist(), ju[keep].tolist()))


# ---------------------------------------------------------------------------
# Edge-list files
# ---------------------------------------------------------------------------

def load_edge_list(path: str, labels: Optional[Sequence[str]] = None) -> Network:
    """Read `u v [w]` lines; labels are interned in first-seen order.

    `labels` pre-seeds the label table so a second file lines up with a
    first one; `#@node <label>` lines declare nodes without edges.
    """
    index: Dict[str, int] = {}
    names: List[str] = []

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(names)
            names.append(label)
        return index[label]

    for label in labels or []:
        intern(label)

    weights: Dict[Pair, float] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#@node"):
                parts = line.split()
                if len(parts) != 2:
                    raise ParseError("node declaration needs exactly one label", line_number, path)
                intern(parts[1])
                continue
            if line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise ParseError(f"expected 'u v [w]', got {len(parts)} fields", line_number, path)
            weight = 1.0
            if len(parts) == 3:
                try:
                    weight = float(parts[2])
                except ValueError:
                    raise ParseError(f"weight '{parts[2]}' is not a number", line_number, path) from None
                if not math.isfinite(weight) or weight <= 0:
                    raise ParseError(f"weight must be positive and finite, got {parts[2]}", line_number, path)
            pair = _pair(intern(parts[0]), intern(parts[1]))
            if pair in weights and weights[pair] != weight:
                raise ConsistencyError(
                    f"{path}:{line_number}: pair ({parts[0]}, {parts[1]}) has conflicting "
                    f"weights {weights[pair]} and {weight}")
            weights[pair] = weight

    return Network.from_edges(len(names), [(u, v, w) for (u, v), w in weights.items()], names)


def save_edge_list(G: Network, path: str) -> None:
    """Write G atomically; weights only when some weight differs from 1"""
    weighted = not G.is_binary()
    with atomic_write(path) as handle:
        handle.write(f"# ndl edge list n={G.n} edges={G.num_edges}\n")
        for label in G.labels:
            handle.write(f"#@node {label}\n")
        for u, v, w in G.edges():
            if weighted:
                handle.write(f"{G.label(u)} {G.label(v)} {repr(w)}\n")
            else:
                handle.write(f"{G.label(u)} {G.label(v)}\n")
