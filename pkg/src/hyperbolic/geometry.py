"""Points and distances in the hyperboloid model of hyperbolic n-space.

A point is (x0, x1, ..., xn) with x0^2 - x1^2 - ... - xn^2 = 1 and x0 > 0.
Clouds of points are plain (count, n+1) float arrays; ``HyperbolicPoint``
is the validated single-point form.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from common.errors import DomainError

logger = logging.getLogger(__name__)

HYPERBOLOID_TOLERANCE = 1e-9
DEFAULT_CLAMP_WARN = 1e-6
DEFAULT_BLOCK = 512

HYPERBOLIC = "hyperbolic"
EUCLIDEAN = "euclidean"
METRICS = (HYPERBOLIC, EUCLIDEAN)


def minkowski_norm(coordinates: np.ndarray) -> np.ndarray:
    """x0^2 - sum xi^2 along the last axis."""
    coordinates = np.asarray(coordinates, dtype=float)
    return coordinates[..., 0] ** 2 - np.sum(coordinates[..., 1:] ** 2, axis=-1)


@dataclass(frozen=True)
class HyperbolicPoint:
    coordinates: Tuple[float, ...]

    def __post_init__(self):
        coords = tuple(float(x) for x in self.coordinates)
        if len(coords) < 2:
            raise DomainError("a point of H^n needs at least two coordinates")
        norm = float(minkowski_norm(np.array(coords)))
        scale = max(1.0, coords[0] ** 2)
        if coords[0] <= 0 or abs(norm - 1.0) > HYPERBOLOID_TOLERANCE * scale:
            raise DomainError(f"point {coords} is not on the upper sheet of the hyperboloid")
        object.__setattr__(self, "coordinates", coords)

    @classmethod
    def origin(cls, dim: int) -> "HyperbolicPoint":
        return cls((1.0,) + (0.0,) * dim)

    @classmethod
    def from_polar(cls, radius: float, direction: Sequence[float]) -> "HyperbolicPoint":
        """Point at hyperbolic distance ``radius`` from the origin along ``direction``."""
        u = np.asarray(direction, dtype=float)
        length = np.linalg.norm(u)
        if length == 0:
            raise DomainError("direction must be non-zero")
        u = u / length
        return cls((float(np.cosh(radius)),) + tuple(float(x) for x in np.sinh(radius) * u))

    @property
    def dimension(self) -> int:
        return len(self.coordinates) - 1

    def as_array(self) -> np.ndarray:
        return np.array(self.coordinates)


def as_cloud(points: Union[np.ndarray, Iterable[HyperbolicPoint]]) -> np.ndarray:
    """Stack points into a 2-D float array (an empty input gives shape (0, 0))."""
    if isinstance(points, np.ndarray):
        cloud = points.astype(float, copy=False)
    else:
        points = list(points)
        if not points:
            return np.zeros((0, 0))
        cloud = np.array([p.coordinates if isinstance(p, HyperbolicPoint) else p for p in points],
                         dtype=float)
    if cloud.ndim == 1:
        cloud = cloud.reshape(1, -1) if cloud.size else np.zeros((0, 0))
    return cloud


def _pairing(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Negated Minkowski pairing x0 y0 - sum xi yi for every row pair."""
    return np.outer(x[:, 0], y[:, 0]) - x[:, 1:] @ y[:, 1:].T


def _hyperbolic_block(x: np.ndarray, y: np.ndarray, clamp_warn: float) -> np.ndarray:
    pairing = _pairing(x, y)
    worst = float(np.max(1.0 - pairing)) if pairing.size else 0.0
    if worst > clamp_warn:
        logger.warning(f"Minkowski pairing fell {worst:.3g} below 1; clamped to distance 0")
    pairing = np.maximum(pairing, 1.0)

    distances = np.arccosh(pairing)
    # near the diagonal arccosh loses digits, use 2 asinh(|x - y|_M / 2) there
    close = pairing < 2.0
    if close.any():
        rows, cols = np.nonzero(close)
        diff = x[rows] - y[cols]
        chord = np.maximum(np.sum(diff[:, 1:] ** 2, axis=1) - diff[:, 0] ** 2, 0.0)
        distances[rows, cols] = 2.0 * np.arcsinh(np.sqrt(chord) / 2.0)
    return distances


def _euclidean_block(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    squared = (np.sum(x ** 2, axis=1)[:, None] + np.sum(y ** 2, axis=1)[None, :]
               - 2.0 * (x @ y.T))
    return np.sqrt(np.maximum(squared, 0.0))


def distance_block(x: np.ndarray, y: np.ndarray, metric: str = HYPERBOLIC,
                   clamp_warn: float = DEFAULT_CLAMP_WARN) -> np.ndarray:
    if metric == HYPERBOLIC:
        return _hyperbolic_block(x, y, clamp_warn)
    if metric == EUCLIDEAN:
        return _euclidean_block(x, y)
    raise DomainError(f"unknown metric {metric!r}; use one of {METRICS}")


def hyperbolic_distance(p: HyperbolicPoint, q: HyperbolicPoint,
                        clamp_warn: float = DEFAULT_CLAMP_WARN) -> float:
    """arccosh of the negated Minkowski pairing of p and q."""
    if p.dimension != q.dimension:
        raise DomainError(f"dimension mismatch: {p.dimension} vs {q.dimension}")
    block = _hyperbolic_block(p.as_array()[None, :], q.as_array()[None, :], clamp_warn)
    return float(block[0, 0])


def pairwise_distances(points, others=None, metric: str = HYPERBOLIC,
                       block: int = DEFAULT_BLOCK,
                       clamp_warn: float = DEFAULT_CLAMP_WARN) -> np.ndarray:
    """Full distance matrix between two clouds, computed ``block`` rows at a time."""
    if block < 1:
        raise DomainError(f"block size must be positive, got {block}")
    x = as_cloud(points)
    y = x if others is None else as_cloud(others)
    result = np.zeros((len(x), len(y)))
    if not len(x) or not len(y):
        return result
    if x.shape[1] != y.shape[1]:
        raise DomainError(f"dimension mismatch: {x.shape[1]} vs {y.shape[1]} coordinates")
    for start in range(0, len(x), block):
        stop = min(start + block, len(x))
        result[start:stop] = distance_block(x[start:stop], y, metric, clamp_warn)
    if others is None:
        np.fill_diagonal(result, 0.0)
    return result


def distances_to(cloud: np.ndarray, point: np.ndarray, metric: str = HYPERBOLIC,
                 clamp_warn: float = DEFAULT_CLAMP_WARN) -> np.ndarray:
    """Distances from every row of ``cloud`` to one point."""
    return distance_block(cloud, point[None, :], metric, clamp_warn)[:, 0]
