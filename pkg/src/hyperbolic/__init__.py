"""Hyperbolic geometry and the log-space bounds on counts of closed hyperbolic manifolds."""

from .geometry import (
    HYPERBOLIC,
    EUCLIDEAN,
    HyperbolicPoint,
    minkowski_norm,
    as_cloud,
    hyperbolic_distance,
    pairwise_distances,
)
from .volumes import (
    sphere_area,
    ball_volume,
    log_ball_volume,
    euclidean_log_ball_volume,
    injectivity_floor,
    diameter_floor_from_injectivity,
    net_size_bound,
    log_net_size_bound,
    degree_bound_constant,
    log_degree_bound_constant,
    euclidean_degree_bound_constant,
)
from .nets import (
    NerveComplex,
    sample_hyperbolic_ball,
    sample_euclidean_ball,
    greedy_net,
    min_pairwise_distance,
    is_separated,
    is_maximal,
    covering_radius,
    covers_cloud,
    build_nerve,
)
from .bounds import (
    BoundConstants,
    TauBounds,
    VolumeChain,
    UpperBoundChain,
    counting_bounds,
    growth_exponent,
    tau_bounds,
    volume_bound_chain,
    bglm_log_count,
    upper_bound_chain,
)

__all__ = [
    'HYPERBOLIC',
    'EUCLIDEAN',
    'HyperbolicPoint',
    'minkowski_norm',
    'as_cloud',
    'hyperbolic_distance',
    'pairwise_distances',
    'sphere_area',
    'ball_volume',
    'log_ball_volume',
    'euclidean_log_ball_volume',
    'injectivity_floor',
    'diameter_floor_from_injectivity',
    'net_size_bound',
    'log_net_size_bound',
    'degree_bound_constant',
    'log_degree_bound_constant',
    'euclidean_degree_bound_constant',
    'NerveComplex',
    'sample_hyperbolic_ball',
    'sample_euclidean_ball',
    'greedy_net',
    'min_pairwise_distance',
    'is_separated',
    'is_maximal',
    'covering_radius',
    'covers_cloud',
    'build_nerve',
    'BoundConstants',
    'TauBounds',
    'VolumeChain',
    'UpperBoundChain',
    'counting_bounds',
    'growth_exponent',
    'tau_bounds',
    'volume_bound_chain',
    'bglm_log_count',
    'upper_bound_chain',
]
