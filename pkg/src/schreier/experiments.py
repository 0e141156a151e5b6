"""Diameter experiments: the word-length diameter bound, family growth scans and random covers."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from common.errors import DomainError, InvariantViolation
from common.logging_config import log_performance
from common.utils import derive_seed
from cover_family import (
    ConstraintMode, DEFAULT_MODE, FamilySpec, family_members, representative_table, sigma1,
)
from free_group import PermutationPair
from .diameter import (
    DEFAULT_BFS_CHUNK, DEFAULT_FULL_BFS_LIMIT, DEFAULT_REFINE_SWEEPS,
    diameter_with_flag, eccentricity_of, moore_lower_bound, representative_eccentricity_bound,
)
from .graphs import SchreierGraph, build_schreier, is_connected, vertex_degrees

logger = logging.getLogger(__name__)

MIN_EXPANDER_LABELS = 5

SCAN_COLUMNS = [
    'r', 'sample', 'diameter', 'exact', 'ecc_zero', 'max_rep_length',
    'rep_bound', 'log2_r', 'ratio',
]
TRIAL_COLUMNS = ['n', 'trial', 'connected', 'diameter', 'exact', 'moore_bound', 'log2_n', 'ratio']
SUMMARY_COLUMNS = [
    'n', 'k', 'trials', 'connected', 'connected_fraction',
    'diameter_min', 'diameter_q25', 'diameter_median', 'diameter_q75', 'diameter_max',
    'moore_bound', 'median_ratio', 'all_exact',
]


@dataclass(frozen=True)
class LemmaConstants:
    """c1 = 2 diam M, c2 = 2 max loop length, in the base manifold's length units."""
    c1: float
    c2: float

    def __post_init__(self):
        if not self.c1 >= 0:
            raise DomainError(f"c1 must be non-negative, got {self.c1}")
        if not self.c2 > 0:
            raise DomainError(f"c2 must be positive, got {self.c2}")


def lemma_constants(diam_m: float, loop_lengths: Sequence[float]) -> LemmaConstants:
    if not loop_lengths:
        raise DomainError("at least one generator loop length is required")
    return LemmaConstants(c1=2.0 * diam_m, c2=2.0 * max(loop_lengths))


def lemma_diameter_bound(consts: LemmaConstants, max_word_length: float) -> float:
    """diam of the cover <= c1 + c2 * (longest representative word)."""
    if max_word_length < 0:
        raise DomainError(f"word length must be non-negative, got {max_word_length}")
    return consts.c1 + consts.c2 * max_word_length


@dataclass
class DiameterScan:
    table: pd.DataFrame
    fitted_d: float

    def fitted_d_up_to(self, max_r: int) -> float:
        return fitted_growth_constant(self.table, max_r)


def fitted_growth_constant(table: pd.DataFrame, max_r: Optional[int] = None) -> float:
    """Largest diameter / log2(r), optionally restricted to r <= max_r."""
    rows = table if max_r is None else table[table['r'] <= max_r]
    rows = rows[rows['r'] > 1]
    if rows.empty:
        return float('nan')
    return float(rows['ratio'].max())


@log_performance()
def diameter_growth_scan(r_grid: Sequence[int], samples_per_r: int, seed: int,
                         mode: ConstraintMode = DEFAULT_MODE,
                         full_bfs_limit: int = DEFAULT_FULL_BFS_LIMIT,
                         chunk: int = DEFAULT_BFS_CHUNK,
                         progress: bool = False) -> DiameterScan:
    """Sample family members per degree and record their coset-graph diameters.

    Each member's seed is derived from (seed, r), so adding degrees to the
    grid does not change the rows already there.

    Raises:
        InvariantViolation: a diameter exceeds twice the longest representative
    """
    if samples_per_r < 0:
        raise DomainError(f"samples per degree must be non-negative, got {samples_per_r}")
    rows: List[Dict] = []
    for r in tqdm(list(r_grid), desc="diameter scan", disable=not progress):
        spec = FamilySpec(r, mode)
        max_rep_length = max(rep.length for rep in representative_table(r).values())
        rep_bound = representative_eccentricity_bound(max_rep_length)
        a_perm = sigma1(r)
        members = family_members(spec, samples_per_r, seed=derive_seed(seed, r))
        for sample, sigma in enumerate(members):
            graph = build_schreier(PermutationPair(a_perm, sigma))
            result = diameter_with_flag(graph, full_bfs_limit, chunk)
            ecc_zero = eccentricity_of(graph, 0)
            if ecc_zero > max_rep_length or result.value > rep_bound:
                raise InvariantViolation(
                    "representative-diameter-bound",
                    f"r={r} sample={sample}: diameter {result.value}, ecc(0) {ecc_zero}, "
                    f"longest representative {max_rep_length}",
                )
            log2_r = math.log2(r)
            rows.append({
                'r': r,
                'sample': sample,
                'diameter': result.value,
                'exact': result.exact,
                'ecc_zero': ecc_zero,
                'max_rep_length': max_rep_length,
                'rep_bound': rep_bound,
                'log2_r': log2_r,
                'ratio': result.value / log2_r,
            })
        logger.debug(f"Scanned r={r}")

    table = pd.DataFrame(rows, columns=SCAN_COLUMNS)
    fitted = fitted_growth_constant(table)
    logger.info(f"Diameter scan over {len(table)} samples: fitted D = {fitted:.4f}")
    return DiameterScan(table=table, fitted_d=fitted)


def random_regular_graph(n: int, k: int, seed: int) -> SchreierGraph:
    """Random 2k-regular multigraph: k independent uniform permutations of n points."""
    if n < 1 or k < 1:
        raise DomainError(f"random regular graph needs n, k >= 1, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    successors = tuple(rng.permutation(n) for _ in range(k))
    return SchreierGraph(successors, labels=tuple(f"g{j}" for j in range(k)))


def _random_trial(n: int, k: int, seed: int, full_bfs_limit: int, chunk: int,
                  refine_sweeps: int) -> Dict:
    graph = random_regular_graph(n, k, seed)
    degrees = vertex_degrees(graph)
    if not (degrees == 2 * k).all():
        raise InvariantViolation("degree-regularity", f"n={n} k={k}: degrees {np.unique(degrees)}")

    moore = moore_lower_bound(n, k)
    row = {'connected': is_connected(graph), 'diameter': None, 'exact': None, 'moore_bound': moore}
    if row['connected']:
        result = diameter_with_flag(graph, full_bfs_limit, chunk, refine_sweeps)
        # an inexact value is only a lower bound, so test the upper one
        if (result.value if result.exact else result.upper) < moore:
            raise InvariantViolation("moore-bound", f"n={n} k={k}: diameter {result.value} < {moore}")
        row['diameter'] = result.value
        row['exact'] = result.exact
    return row


def _run_trial(job) -> Dict:
    return _random_trial(*job)


def _summarize(trials: pd.DataFrame, n_grid: Sequence[int], k: int, count: int) -> pd.DataFrame:
    if count == 0:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)
    rows = []
    for n in n_grid:
        subset = trials[trials['n'] == n]
        connected = subset[subset['connected']]
        diameters = connected['diameter'].to_numpy(dtype=float)
        if diameters.size:
            q = np.percentile(diameters, [0, 25, 50, 75, 100])
        else:
            q = np.full(5, np.nan)
        log2_n = math.log2(n) if n > 1 else float('nan')
        rows.append({
            'n': n,
            'k': k,
            'trials': len(subset),
            'connected': len(connected),
            'connected_fraction': len(connected) / len(subset),
            'diameter_min': q[0],
            'diameter_q25': q[1],
            'diameter_median': q[2],
            'diameter_q75': q[3],
            'diameter_max': q[4],
            'moore_bound': moore_lower_bound(n, k),
            'median_ratio': q[2] / log2_n,
            'all_exact': bool(connected['exact'].all()) if len(connected) else True,
        })
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


@dataclass
class ExpanderExperiment:
    trials: pd.DataFrame
    summary: pd.DataFrame

    @property
    def median_ratio_spread(self) -> float:
        """max / min of the per-n median ratios (nan when undefined)."""
        ratios = self.summary['median_ratio'].dropna()
        ratios = ratios[ratios > 0]
        if ratios.empty:
            return float('nan')
        return float(ratios.max() / ratios.min())


@log_performance()
def expander_diameter_experiment(n_grid: Sequence[int], k: int, trials: int, seed: int,
                                 workers: int = 1,
                                 full_bfs_limit: int = DEFAULT_FULL_BFS_LIMIT,
                                 chunk: int = DEFAULT_BFS_CHUNK,
                                 refine_sweeps: int = DEFAULT_REFINE_SWEEPS,
                                 progress: bool = False) -> ExpanderExperiment:
    """Diameters of random 2k-regular covers over a grid of vertex counts.

    Disconnected samples are counted in ``connected_fraction`` and left out
    of the diameter statistics. Trial t at size n uses seed
    ``derive_seed(seed, n, t)``; results do not depend on ``workers``.

    Raises:
        DomainError: k < 5 or trials < 0
        InvariantViolation: a vertex degree differs from 2k or a diameter
            falls below the Moore bound
    """
    if k < MIN_EXPANDER_LABELS:
        raise DomainError(f"the expander experiment needs k >= {MIN_EXPANDER_LABELS}, got {k}")
    if trials < 0:
        raise DomainError(f"trials must be non-negative, got {trials}")
    for n in n_grid:
        if n < 1:
            raise DomainError(f"vertex counts must be positive, got {n}")

    keys = [(n, t) for n in n_grid for t in range(trials)]
    jobs = [(n, k, derive_seed(seed, n, t), full_bfs_limit, chunk, refine_sweeps) for n, t in keys]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(tqdm(pool.map(_run_trial, jobs), total=len(jobs),
                                desc="random graphs", disable=not progress))
    else:
        results = [_run_trial(job) for job in tqdm(jobs, desc="random graphs", disable=not progress)]

    rows = []
    for (n, t), result in zip(keys, results):
        log2_n = math.log2(n) if n > 1 else float('nan')
        diameter = result['diameter']
        rows.append({
            'n': n,
            'trial': t,
            'connected': result['connected'],
            'diameter': diameter,
            'exact': result['exact'],
            'moore_bound': result['moore_bound'],
            'log2_n': log2_n,
            'ratio': diameter / log2_n if diameter is not None else None,
        })
    trial_table = pd.DataFrame(rows, columns=TRIAL_COLUMNS)
    if len(trial_table):
        disconnected = int((~trial_table['connected'].astype(bool)).sum())
        if disconnected:
            logger.info(f"{disconnected} of {len(trial_table)} random graphs were disconnected")
    return ExpanderExperiment(trials=trial_table, summary=_summarize(trial_table, n_grid, k, trials))
