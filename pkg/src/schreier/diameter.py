"""Diameters of labeled graphs.

Exact diameters run a breadth-first search from every vertex at once,
``chunk`` sources per pass, as boolean frontier matrices. Above
``full_bfs_limit`` vertices only a double sweep with a few refinement
sweeps is run and the result is flagged inexact.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from common.errors import DomainError, PreconditionError
from .graphs import SchreierGraph, distances_from

logger = logging.getLogger(__name__)

DEFAULT_FULL_BFS_LIMIT = 2 ** 13
DEFAULT_BFS_CHUNK = 512
DEFAULT_REFINE_SWEEPS = 16


@dataclass(frozen=True)
class DiameterResult:
    """``value`` is the diameter when ``exact``, otherwise the best lower bound."""
    value: int
    exact: bool
    lower: int
    upper: int
    sources_searched: int


def eccentricities(graph: SchreierGraph, chunk: int = DEFAULT_BFS_CHUNK) -> np.ndarray:
    """Eccentricity of every vertex in the undirected multigraph.

    Raises:
        PreconditionError: the graph is disconnected
    """
    if chunk < 1:
        raise DomainError(f"chunk must be positive, got {chunk}")
    n = graph.vertex_count
    maps = graph.neighbor_maps()
    result = np.zeros(n, dtype=np.int64)

    for start in range(0, n, chunk):
        sources = np.arange(start, min(start + chunk, n))
        rows = np.arange(sources.size)
        reached = np.zeros((sources.size, n), dtype=bool)
        reached[rows, sources] = True
        frontier = reached.copy()
        ecc = np.zeros(sources.size, dtype=np.int64)

        while True:
            new = np.zeros_like(frontier)
            # the map set is closed under inversion, so pulling back is pushing forward
            for point_map in maps:
                new |= frontier[:, point_map]
            new &= ~reached
            grew = new.any(axis=1)
            if not grew.any():
                break
            ecc[grew] += 1
            reached |= new
            frontier = new

        if not reached.all():
            raise PreconditionError("diameter of a disconnected graph is undefined")
        result[sources] = ecc
    return result


def graph_diameter(graph: SchreierGraph, chunk: int = DEFAULT_BFS_CHUNK) -> int:
    """Exact diameter: the largest eccentricity (0 for a single vertex)."""
    return int(eccentricities(graph, chunk).max())


def _farthest(distances: np.ndarray) -> int:
    # smallest index among the farthest vertices, for reproducibility
    return int(np.argmax(distances))


def double_sweep(graph: SchreierGraph, sweeps: int = DEFAULT_REFINE_SWEEPS,
                 source: int = 0) -> DiameterResult:
    """Lower and upper diameter bounds from repeated farthest-vertex sweeps.

    Every sweep gives ecc(v) <= diam <= 2 ecc(v); the sweep restarts from
    the farthest vertex found so far and stops early once bounds meet.
    """
    lower, upper = 0, None
    searched = 0
    current = source
    visited = set()
    for _ in range(max(2, sweeps)):
        if current in visited:
            break
        visited.add(current)
        distances = distances_from(graph, current)
        searched += 1
        if (distances < 0).any():
            raise PreconditionError("diameter of a disconnected graph is undefined")
        ecc = int(distances.max())
        lower = max(lower, ecc)
        upper = 2 * ecc if upper is None else min(upper, 2 * ecc)
        if lower == upper:
            break
        current = _farthest(distances)

    return DiameterResult(value=lower, exact=lower == upper, lower=lower,
                          upper=upper, sources_searched=searched)


def diameter_with_flag(graph: SchreierGraph,
                       full_bfs_limit: int = DEFAULT_FULL_BFS_LIMIT,
                       chunk: int = DEFAULT_BFS_CHUNK,
                       refine_sweeps: int = DEFAULT_REFINE_SWEEPS) -> DiameterResult:
    """Exact all-source diameter up to ``full_bfs_limit`` vertices, sweep bounds above."""
    n = graph.vertex_count
    if n <= full_bfs_limit:
        value = graph_diameter(graph, chunk)
        return DiameterResult(value=value, exact=True, lower=value, upper=value, sources_searched=n)

    result = double_sweep(graph, refine_sweeps)
    if not result.exact:
        logger.debug(
            f"Diameter of {n}-vertex graph bracketed in [{result.lower}, {result.upper}] "
            f"after {result.sources_searched} sweeps"
        )
    return result


def moore_lower_bound(n: int, k: int) -> int:
    """Least D with 1 + sum_{j=1..D} 2k (2k-1)^(j-1) >= n.

    No graph of maximum degree 2k on n vertices has diameter below this.
    For k = 1 the level sizes are all 2, giving 1 + 2D.
    """
    if n < 1 or k < 1:
        raise DomainError(f"Moore bound needs n, k >= 1, got n={n}, k={k}")
    reach, level_size, depth = 1, 2 * k, 0
    while reach < n:
        depth += 1
        reach += level_size
        level_size *= 2 * k - 1
    return depth


def representative_eccentricity_bound(max_word_length: int) -> int:
    """Every vertex is within ``max_word_length`` of 0, so diam <= twice that."""
    if max_word_length < 0:
        raise DomainError(f"word length must be non-negative, got {max_word_length}")
    return 2 * max_word_length


def eccentricity_of(graph: SchreierGraph, vertex: int = 0) -> Optional[int]:
    """Eccentricity of one vertex, None when some vertex is unreachable."""
    distances = distances_from(graph, vertex)
    if (distances < 0).any():
        return None
    return int(distances.max())
