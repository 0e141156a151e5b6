"""Labeled coset graphs: one bijective successor map per generator label.

Edges are traversed in both directions, so a graph with k labels is a
2k-regular undirected multigraph (self-loops count twice).
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from common.errors import DomainError, PreconditionError
from free_group import Permutation, PermutationPair, is_transitive

logger = logging.getLogger(__name__)


def _readonly_permutation(images: Sequence[int], n: int) -> np.ndarray:
    array = np.array(images, dtype=np.int64)
    if array.shape != (n,) or not np.array_equal(np.sort(array), np.arange(n)):
        raise DomainError("successor map is not a bijection of the vertex set")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SchreierGraph:
    """Vertices 0..n-1; ``successors[j][v]`` is the image of v under label j."""
    successors: Tuple[np.ndarray, ...]
    labels: Tuple[str, ...] = ("a", "b")

    def __post_init__(self):
        if not self.successors:
            raise DomainError("a labeled graph needs at least one label")
        n = len(self.successors[0])
        successors = tuple(_readonly_permutation(s, n) for s in self.successors)
        if len(self.labels) != len(successors):
            raise DomainError(f"{len(self.labels)} label names for {len(successors)} successor maps")
        object.__setattr__(self, "successors", successors)
        predecessors = []
        for succ in successors:
            inverse = np.empty_like(succ)
            inverse[succ] = np.arange(n)
            inverse.setflags(write=False)
            predecessors.append(inverse)
        object.__setattr__(self, "_predecessors", tuple(predecessors))

    @property
    def vertex_count(self) -> int:
        return len(self.successors[0])

    # r in the coset-graph reading
    degree = vertex_count

    @property
    def label_count(self) -> int:
        return len(self.successors)

    @property
    def predecessors(self) -> Tuple[np.ndarray, ...]:
        return self._predecessors

    def neighbor_maps(self) -> np.ndarray:
        """(2k, n) array: every label's successor and predecessor map."""
        maps = []
        for succ, pred in zip(self.successors, self._predecessors):
            maps.extend((succ, pred))
        return np.stack(maps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchreierGraph):
            return NotImplemented
        return self.labels == other.labels and all(
            np.array_equal(x, y) for x, y in zip(self.successors, other.successors)
        ) and len(self.successors) == len(other.successors)

    __hash__ = None


def build_schreier(pair: PermutationPair) -> SchreierGraph:
    """Coset graph of a transitive pair: label a follows sigma1, label b sigma2."""
    if not is_transitive(pair):
        raise PreconditionError("build_schreier needs a transitive pair (graph would be disconnected)")
    return SchreierGraph((pair.sigma1.images, pair.sigma2.images))


def to_pair(graph: SchreierGraph) -> PermutationPair:
    """Read the two successor maps back as a permutation pair."""
    if graph.label_count != 2:
        raise DomainError(f"a pair needs exactly 2 labels, graph has {graph.label_count}")
    return PermutationPair(
        Permutation(tuple(int(x) for x in graph.successors[0])),
        Permutation(tuple(int(x) for x in graph.successors[1])),
    )


def vertex_degrees(graph: SchreierGraph) -> np.ndarray:
    """Undirected degree with multiplicity: one out- and one in-endpoint per label."""
    n = graph.vertex_count
    degrees = np.zeros(n, dtype=np.int64)
    for succ in graph.successors:
        degrees += 1
        degrees += np.bincount(succ, minlength=n)
    return degrees


def distances_from(graph: SchreierGraph, source: int = 0) -> np.ndarray:
    """Breadth-first distances from ``source``; -1 marks unreachable vertices."""
    n = graph.vertex_count
    if not 0 <= source < n:
        raise DomainError(f"source {source} outside 0..{n - 1}")
    maps = graph.neighbor_maps()
    distances = np.full(n, -1, dtype=np.int64)
    distances[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        candidates = np.unique(maps[:, frontier].ravel())
        frontier = candidates[distances[candidates] < 0]
        distances[frontier] = level
    return distances


def is_connected(graph: SchreierGraph) -> bool:
    return bool((distances_from(graph, 0) >= 0).all())
