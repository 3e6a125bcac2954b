#!/usr/bin/env python3
"""
Network for the Network Dictionary Toolkit
Immutable node set plus a sparse symmetric nonnegative weight matrix
"""

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from core.classes.ndl_errors import ConsistencyError, ParameterError, StructureError


class Network:
    """Weighted undirected network on nodes 0..n-1 (self-edges allowed)"""

    def __init__(self, n: int, adjacency: sp.spmatrix,
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ParameterError("node count must be nonnegative")
        matrix = sp.csr_matrix(adjacency, dtype=np.float64, shape=(n, n))
        matrix.eliminate_zeros()
        matrix.sum_duplicates()
        matrix.sort_indices()
        self._n = int(n)
        self._adjacency = matrix
        self._labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self._labels) != n:
            raise ParameterError(f"expected {n} labels, got {len(self._labels)}")
        self._degrees = np.asarray(matrix.sum(axis=1)).ravel()
        self._cumulative = None
        self.validate()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple], labels: Optional[Sequence[str]] = None) -> "Network":
        """Build from (u, v) or (u, v, w) tuples; each unordered pair once"""
        rows: List[int] = []
        cols: List[int] = []
        vals: List[float] = []
        seen: Dict[Tuple[int, int], float] = {}
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            w = float(edge[2]) if len(edge) > 2 else 1.0
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) outside node range 0..{n - 1}")
            if not np.isfinite(w) or w <= 0:
                raise ParameterError(f"edge ({u}, {v}) has non-positive weight {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                if seen[key] != w:
                    raise ConsistencyError(f"pair {key} listed with weights {seen[key]} and {w}")
                continue
            seen[key] = w
            rows.append(u)
            cols.append(v)
            vals.append(w)
            if u != v:
                rows.append(v)
                cols.append(u)
                vals.append(w)
        matrix = sp.csr_matrix((vals, (rows, cols)), shape=(n, n), dtype=np.float64)
        return cls(n, matrix, labels)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> sp.csr_matrix:
        return self._adjacency

    @property
    def labels(self) -> List[str]:
        return list(self._labels)

    def label(self, node: int) -> str:
        return self._labels[node]

    @property
    def degrees(self) -> np.ndarray:
        """Weighted degrees (row sums)"""
        return self._degrees

    def neighbors(self, node: int) -> np.ndarray:
        """Sorted neighbor ids of `node`"""
        A = self._adjacency
        return A.indices[A.indptr[node]:A.indptr[node + 1]]

    def neighbor_weights(self, node: int) -> np.ndarray:
        A = self._adjacency
        return A.data[A.indptr[node]:A.indptr[node + 1]]

    def weight(self, u: int, v: int) -> float:
        nbrs = self.neighbors(u)
        pos = np.searchsorted(nbrs, v)
        if pos < len(nbrs) and nbrs[pos] == v:
            return float(self.neighbor_weights(u)[pos])
        return 0.0

    def has_edge(self, u: int, v: int) -> bool:
        return self.weight(u, v) > 0

    def sample_neighbor(self, node: int, rng: np.random.Generator) -> int:
        """Neighbor drawn with probability proportional to edge weight"""
        if self._cumulative is None:
            self._cumulative = np.cumsum(self._adjacency.data)
        A = self._adjacency
        start, end = A.indptr[node], A.indptr[node + 1]
        if start == end:
            raise StructureError(f"node {node} has no neighbors")
        offset = self._cumulative[start - 1] if start > 0 else 0.0
        target = offset + rng.random() * (self._cumulative[end - 1] - offset)
        pos = int(np.searchsorted(self._cumulative[start:end], target, side='right'))
        return int(A.indices[start + min(pos, end - start - 1)])

    def edges(self) -> Iterator[Tuple[int, int, float]]:
        """Unordered edges (u <= v) with weights, sorted"""
        coo = sp.triu(self._adjacency, format='coo')
        order = np.lexsort((coo.col, coo.row))
        for i in order:
            yield int(coo.row[i]), int(coo.col[i]), float(coo.data[i])

    def edge_set(self) -> set:
        return {(u, v) for u, v, _ in self.edges()}

    @property
    def num_edges(self) -> int:
        """Unordered pairs with positive weight, self-edges included"""
        return int(sp.triu(self._adjacency).nnz)

    @property
    def has_self_edges(self) -> bool:
        return bool(np.any(self._adjacency.diagonal() > 0))

    def is_binary(self) -> bool:
        return bool(np.all(self._adjacency.data == 1.0))

    def binary(self) -> sp.csr_matrix:
        B = self._adjacency.copy()
        B.data = np.ones_like(B.data)
        return B

    def validate(self) -> None:
        """Check symmetry, positive weights and sorted neighbor lists"""
        A = self._adjacency
        if A.nnz and (not np.all(np.isfinite(A.data)) or np.any(A.data <= 0)):
            raise ConsistencyError("weights must be finite and strictly positive")
        if (A != A.T).nnz != 0:
            raise ConsistencyError("weight matrix is not symmetric")
        if not A.has_sorted_indices:
            raise ConsistencyError("neighbor lists are not sorted")

    def to_networkx(self, self_edges: bool = True):
        import networkx as nx
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_weighted_edges_from(
            (u, v, w) for u, v, w in self.edges() if self_edges or u != v)
        return graph

    def relabeled(self, labels: Sequence[str]) -> "Network":
        return Network(self._n, self._adjacency, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network) or other.n != self.n:
            return False
        return (self._adjacency != other.adjacency).nnz == 0 and self._labels == other.labels

    def __repr__(self) -> str:
        return f"Network(n={self._n}, edges={self.num_edges})"
