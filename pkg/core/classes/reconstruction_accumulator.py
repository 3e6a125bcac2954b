#!/usr/bin/env python3
"""
Reconstruction Accumulator for the Network Dictionary Toolkit
Per node-pair visit counts and running means of approximated patch entries
"""

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.classes.network import Network

Pair = Tuple[int, int]


class ReconstructionAccumulator:
    """Unordered-pair keyed counts and running means"""

    def __init__(self):
        self._cells: Dict[Pair, List[float]] = {}

    def add(self, u: int, v: int, value: float) -> None:
        key = (u, v) if u <= v else (v, u)
        cell = self._cells.get(key)
        if cell is None:
            self._cells[key] = [1, float(value)]
            return
        cell[0] += 1
        cell[1] += (value - cell[1]) / cell[0]

    def count(self, u: int, v: int) -> int:
        cell = self._cells.get((u, v) if u <= v else (v, u))
        return int(cell[0]) if cell else 0

    def mean(self, u: int, v: int) -> float:
        """Running mean, 0 for pairs never visited"""
        cell = self._cells.get((u, v) if u <= v else (v, u))
        return float(cell[1]) if cell else 0.0

    def items(self) -> Iterator[Tuple[Pair, int, float]]:
        for key in sorted(self._cells):
            count, mean = self._cells[key]
            yield key, int(count), float(mean)

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, pair: Pair) -> bool:
        u, v = pair
        return ((u, v) if u <= v else (v, u)) in self._cells

    def merge(self, other: "ReconstructionAccumulator") -> "ReconstructionAccumulator":
        """Count-weighted merge of two accumulators"""
        merged = ReconstructionAccumulator()
        for key in set(self._cells) | set(other._cells):
            c1, m1 = self._cells.get(key, (0, 0.0))
            c2, m2 = other._cells.get(key, (0, 0.0))
            total = c1 + c2
            merged._cells[key] = [total, (c1 * m1 + c2 * m2) / total]
        return merged

    @staticmethod
    def average(parts: Sequence["ReconstructionAccumulator"]) -> "ReconstructionAccumulator":
        """Plain average of means, pairs missing from a part count as 0"""
        combined = ReconstructionAccumulator()
        keys = set().union(*(part._cells for part in parts))
        for key in keys:
            count = sum(part.count(*key) for part in parts)
            mean = sum(part.mean(*key) for part in parts) / len(parts)
            combined._cells[key] = [count, mean]
        return combined

    def to_network(self, n: int, labels: Optional[Sequence[str]] = None) -> Network:
        """Weighted network of positive means; unvisited and zero pairs are absent"""
        return Network.from_edges(
            n, [(u, v, m) for (u, v), _, m in self.items() if m > 0], labels)
