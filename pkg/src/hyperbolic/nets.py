"""Synthetic point clouds, separated nets and their nerve graphs."""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import networkx as nx
import numpy as np

from common.errors import DomainError
from .geometry import (
    DEFAULT_BLOCK, DEFAULT_CLAMP_WARN, HYPERBOLIC, METRICS,
    as_cloud, distance_block, distances_to,
)

logger = logging.getLogger(__name__)


def _directions(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    gaussian = rng.standard_normal((count, dim))
    return gaussian / np.linalg.norm(gaussian, axis=1, keepdims=True)


def _check_sampling(count: int, radius: float, dim: int) -> None:
    if count < 0:
        raise DomainError(f"point count must be non-negative, got {count}")
    if radius < 0:
        raise DomainError(f"radius must be non-negative, got {radius}")
    if dim < 1:
        raise DomainError(f"dimension must be positive, got {dim}")


def sample_hyperbolic_ball(count: int, radius: float, dim: int = 3, seed: int = 0) -> np.ndarray:
    """Volume-uniform points in the radius-``radius`` ball about the origin of H^dim.

    Radii come from rejection sampling against the density sinh^(dim-1)(t),
    in vectorized batches; directions are uniform on the sphere.
    """
    _check_sampling(count, radius, dim)
    rng = np.random.default_rng(seed)
    radii = np.empty(0)
    if radius == 0:
        radii = np.zeros(count)
    top = np.sinh(radius) ** (dim - 1)
    while radii.size < count:
        batch = max(64, 2 * (count - radii.size))
        proposals = rng.uniform(0.0, radius, batch)
        accept = rng.uniform(0.0, top, batch) < np.sinh(proposals) ** (dim - 1)
        radii = np.concatenate([radii, proposals[accept]])
    radii = radii[:count]
    directions = _directions(rng, count, dim)
    return np.column_stack([np.cosh(radii), np.sinh(radii)[:, None] * directions])


def sample_euclidean_ball(count: int, radius: float, dim: int = 3, seed: int = 0) -> np.ndarray:
    """Volume-uniform points in the Euclidean ball of the given radius."""
    _check_sampling(count, radius, dim)
    rng = np.random.default_rng(seed)
    radii = radius * rng.uniform(0.0, 1.0, count) ** (1.0 / dim)
    return radii[:, None] * _directions(rng, count, dim)


def greedy_net(points, sep: float, metric: str = HYPERBOLIC,
               clamp_warn: float = DEFAULT_CLAMP_WARN) -> List[int]:
    """Indices of a maximal ``sep``-separated subset, chosen greedily in input order.

    A point is kept iff it lies at distance >= sep from every point kept
    before it.
    """
    if sep <= 0:
        raise DomainError(f"separation must be positive, got {sep}")
    cloud = as_cloud(points)
    if not len(cloud):
        return []
    covered = np.zeros(len(cloud), dtype=bool)
    kept: List[int] = []
    for i in range(len(cloud)):
        if covered[i]:
            continue
        kept.append(i)
        tail = cloud[i + 1:]
        if len(tail):
            covered[i + 1:] |= distances_to(tail, cloud[i], metric, clamp_warn) < sep
    logger.debug(f"Greedy {sep}-net keeps {len(kept)} of {len(cloud)} points")
    return kept


def _blocked_pairs(cloud: np.ndarray, threshold: float, metric: str, block: int,
                   clamp_warn: float):
    """Yield (i, j, distance) blocks with distance < threshold and i < j."""
    for start in range(0, len(cloud), block):
        stop = min(start + block, len(cloud))
        distances = distance_block(cloud[start:stop], cloud, metric, clamp_warn)
        rows, cols = np.nonzero(distances < threshold)
        rows = rows + start
        keep = cols > rows
        yield rows[keep], cols[keep], distances[rows[keep] - start, cols[keep]]


def min_pairwise_distance(points, metric: str = HYPERBOLIC, block: int = DEFAULT_BLOCK,
                          clamp_warn: float = DEFAULT_CLAMP_WARN) -> float:
    """Smallest distance between distinct points (inf for fewer than two)."""
    cloud = as_cloud(points)
    best = np.inf
    for start in range(0, len(cloud), block):
        stop = min(start + block, len(cloud))
        distances = distance_block(cloud[start:stop], cloud, metric, clamp_warn)
        rows = np.arange(start, stop)
        distances[rows - start, rows] = np.inf
        distances[:, :start] = np.inf
        if distances.size:
            best = min(best, float(distances.min()))
    return float(best)


def is_separated(points, sep: float, metric: str = HYPERBOLIC,
                 block: int = DEFAULT_BLOCK, clamp_warn: float = DEFAULT_CLAMP_WARN) -> bool:
    return min_pairwise_distance(points, metric, block, clamp_warn) >= sep


def covering_radius(points, net_points, metric: str = HYPERBOLIC,
                    block: int = DEFAULT_BLOCK, clamp_warn: float = DEFAULT_CLAMP_WARN) -> float:
    """Largest distance from a cloud point to its nearest net point."""
    cloud = as_cloud(points)
    net = as_cloud(net_points)
    if not len(cloud):
        return 0.0
    if not len(net):
        return float('inf')
    worst = 0.0
    for start in range(0, len(cloud), block):
        nearest = distance_block(cloud[start:start + block], net, metric, clamp_warn).min(axis=1)
        worst = max(worst, float(nearest.max()))
    return worst


def is_maximal(points, net_indices: List[int], sep: float, metric: str = HYPERBOLIC,
               block: int = DEFAULT_BLOCK) -> bool:
    """True iff every cloud point lies within < sep of some net point."""
    cloud = as_cloud(points)
    if not len(cloud):
        return True
    return covering_radius(cloud, cloud[net_indices], metric, block) < sep


def covers_cloud(points, net_points, radius: float, metric: str = HYPERBOLIC,
                 block: int = DEFAULT_BLOCK) -> bool:
    """Whether open balls of radius ``radius``/2 around the net contain every cloud point."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    return covering_radius(points, net_points, metric, block) < radius / 2.0


@dataclass
class NerveComplex:
    """Edge graph and 3-cliques of the balls of radius ``radius``/2 around a net."""
    vertices: np.ndarray
    edges: List[Tuple[int, int]]
    triangles: List[Tuple[int, int, int]]
    radius: float
    metric: str = HYPERBOLIC
    graph: nx.Graph = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def degrees(self) -> np.ndarray:
        counts = np.zeros(self.size, dtype=np.int64)
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return counts

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.size else 0

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    @property
    def triangle_bound(self) -> int:
        """s * (max degree)^2, the clique-count bound with the measured degree."""
        return self.size * self.max_degree ** 2


def _triangles(graph: nx.Graph) -> List[Tuple[int, int, int]]:
    triangles = []
    # cliques come out ordered by size
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) < 3:
            continue
        if len(clique) > 3:
            break
        triangles.append(tuple(sorted(clique)))
    return sorted(triangles)


def build_nerve(net, r: float, metric: str = HYPERBOLIC, block: int = DEFAULT_BLOCK,
                clamp_warn: float = DEFAULT_CLAMP_WARN) -> NerveComplex:
    """Nerve graph of a net: an edge for every pair at distance strictly below r.

    Separation of ``net`` is the caller's responsibility and is not checked.
    """
    if r <= 0:
        raise DomainError(f"nerve radius must be positive, got {r}")
    if metric not in METRICS:
        raise DomainError(f"unknown metric {metric!r}; use one of {METRICS}")
    cloud = as_cloud(net)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cloud)))
    edges: List[Tuple[int, int]] = []
    for rows, cols, _ in _blocked_pairs(cloud, r, metric, block, clamp_warn):
        edges.extend(zip(rows.tolist(), cols.tolist()))
    edges.sort()
    graph.add_edges_from(edges)
    triangles = _triangles(graph)
    logger.debug(f"Nerve on {len(cloud)} vertices: {len(edges)} edges, {len(triangles)} triangles")
    return NerveComplex(vertices=cloud, edges=edges, triangles=triangles,
                        radius=r, metric=metric, graph=graph)
