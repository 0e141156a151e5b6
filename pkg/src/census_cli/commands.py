"""One function per subcommand: arguments in, ``ExperimentRecord`` out.

Functions raise ``DomainError`` for out-of-range parameters and
``InvariantViolation`` when a checked property fails; ``main`` turns those
into exit codes.
"""

import logging
import math
from argparse import Namespace
from typing import Any, Callable, Dict, List

import pandas as pd

from common.config import CensusConfig
from common.errors import DomainError, EnumerationRefused, InvariantViolation
from cover_family import (
    ConstraintMode, FamilySpec, dominance_table, family_members, family_prefix, family_size,
    length_bound, log_covers_at_diameter, log_family_count, log_family_size, lower_bound_count,
    representative_table, satisfies_constraints, verify_representatives,
)
from free_group import enumerate_transitive_pairs, hall_sequence
from hyperbolic import (
    EUCLIDEAN, HYPERBOLIC, BoundConstants, bglm_log_count, build_nerve, counting_bounds,
    covering_radius, degree_bound_constant, diameter_floor_from_injectivity,
    euclidean_degree_bound_constant, greedy_net, injectivity_floor, log_net_size_bound,
    min_pairwise_distance, sample_euclidean_ball, sample_hyperbolic_ball, tau_bounds,
    upper_bound_chain, volume_bound_chain,
)
from schreier import SCAN_COLUMNS, SUMMARY_COLUMNS, diameter_growth_scan, expander_diameter_experiment
from . import __version__
from .records import ExperimentRecord

logger = logging.getLogger(__name__)

CENSUS_COLUMNS = ['r', 'subgroups', 'classes', 'transitive_pairs', 'pairs_per_class', 'matches']
MEMBER_COLUMNS = ['member', 'sigma2', 'satisfies_constraints']
REPRESENTATIVE_COLUMNS = ['i', 'coset', 'word', 'length', 'length_bound', 'landing_failures']
BOUNDS_COLUMNS = ['quantity', 'scale', 'value', 'holds']
NERVE_COLUMNS = [
    'metric', 'dim', 'points', 'radius', 'sep', 'nerve_radius', 'net_size',
    'min_separation', 'covering_radius', 'edges', 'triangles', 'max_degree',
    'degree_bound', 'triangle_bound', 'ln_graph_count', 'ln_skeleton_count',
]

# documented in --help through the subcommand epilogs
COLUMN_HELP: Dict[str, List[str]] = {
    'census': CENSUS_COLUMNS,
    'family': MEMBER_COLUMNS,
    'family --verify-reps': REPRESENTATIVE_COLUMNS,
    'diameter-scan': SCAN_COLUMNS,
    'random-graph': SUMMARY_COLUMNS,
    'bounds': BOUNDS_COLUMNS,
    'nerve': NERVE_COLUMNS,
}


def _record(args: Namespace, table: pd.DataFrame, summary: Dict[str, Any],
            param_names: List[str]) -> ExperimentRecord:
    params = {name: getattr(args, name) for name in param_names}
    return ExperimentRecord(
        command=args.command,
        params=params,
        seed=getattr(args, 'seed', None),
        version=__version__,
        table=table,
        summary=summary,
    )


def run_census(args: Namespace, config: CensusConfig) -> ExperimentRecord:
    """Hall's recurrence against exhaustive classes for r = 1..max_index."""
    if args.max_index < 1:
        raise DomainError(f"--max-index must be >= 1, got {args.max_index}")
    cutoff = args.cutoff or int(config.get_setting('free_group', 'enumeration_cutoff', 7))
    args.cutoff = cutoff
    if args.max_index > cutoff:
        raise EnumerationRefused(args.max_index, cutoff, "exhaustive pair enumeration")
    hall = hall_sequence(args.max_index)

    rows = []
    for r in range(1, args.max_index + 1):
        result = enumerate_transitive_pairs(r, cutoff=cutoff, workers=args.workers,
                                            progress=args.progress)
        rows.append({
            'r': r,
            'subgroups': hall[r - 1],
            'classes': result.classes,
            'transitive_pairs': result.transitive_pairs,
            'pairs_per_class': result.pairs_per_class,
            'matches': result.classes == hall[r - 1],
        })
    table = pd.DataFrame(rows, columns=CENSUS_COLUMNS)
    mismatched = table.loc[~table['matches'], 'r'].tolist()
    if mismatched:
        raise InvariantViolation("hall-census", f"class counts differ from the recurrence at r={mismatched}")

    summary = {
        'message': f"census matches the recurrence for r = 1..{args.max_index}",
        'subgroups': hall,
    }
    return _record(args, table, summary, ['max_index', 'cutoff'])


def _within_digits(log_value: float, digit_limit: int) -> bool:
    return log_value / math.log(10.0) <= digit_limit


def _count_summary(r: int, k: int, digit_limit: int) -> Dict[str, Any]:
    """Lower-bound count (floor(r/2)+1)!/(rk), always as a log, exactly when it fits."""
    count = lower_bound_count(r, k, exact_digit_limit=digit_limit)
    return {
        'k': k,
        'ln_lower_bound': count.log_value,
        'ln_lower_bound_minus_r': count.log_minus_degree,
        'lower_bound_exact': None if count.exact is None else str(count.exact),
    }


def run_family(args: Namespace, config: CensusConfig) -> ExperimentRecord:
    """List members of S, or verify the representative words against them."""
    mode = ConstraintMode.parse(args.mode or config.get_setting('family', 'default_mode', 'all-below-half'))
    args.mode = mode.value
    budget = args.budget if args.budget is not None else int(config.get_setting('family', 'default_budget', 1000))
    args.budget = budget
    k = args.k if args.k is not None else int(config.get_setting('family', 'k', 100))
    args.k = k
    digit_limit = int(config.get_setting('family', 'exact_digit_limit', 10 ** 6))
    spec = FamilySpec(args.r, mode)
    ln_size = log_family_size(spec)
    size = family_size(spec) if _within_digits(ln_size, digit_limit) else None

    if args.seed is not None or (size is not None and size <= budget):
        members = list(family_members(spec, budget, seed=args.seed))
        selection = 'all' if size is not None and size <= budget else 'sampled'
    else:
        members = list(family_prefix(spec, budget))
        selection = 'prefix'

    summary: Dict[str, Any] = {
        'family_size': size,
        'ln_family_size': ln_size,
        'ln_family_count': log_family_count(args.r),
        'members_listed': len(members),
        'selection': selection,
    }
    summary.update(_count_summary(args.r, k, digit_limit))
    if args.dominance_grid:
        summary['dominance'] = [[r, margin] for r, margin in dominance_table(args.dominance_grid, k)]
    size_text = str(size) if size is not None and size < 10 ** 15 else f"e^{ln_size:.1f}"
    params = ['r', 'mode', 'budget', 'verify_reps', 'k', 'dominance_grid']

    if not args.verify_reps:
        rows = [{
            'member': index,
            'sigma2': ' '.join(str(x) for x in sigma.images),
            'satisfies_constraints': satisfies_constraints(spec, sigma),
        } for index, sigma in enumerate(members)]
        table = pd.DataFrame(rows, columns=MEMBER_COLUMNS)
        if not table['satisfies_constraints'].all():
            raise InvariantViolation("doubling-constraints", f"r={args.r}: a listed member breaks them")
        summary['message'] = f"listed {len(members)} of {size_text} members of S ({selection})"
        return _record(args, table, summary, params)

    report = verify_representatives(spec, members)
    failures_by_coset: Dict[int, int] = {}
    for _, coset in report.landing_failures:
        failures_by_coset[coset] = failures_by_coset.get(coset, 0) + 1

    rows = []
    for coset, rep in representative_table(args.r).items():
        i = coset // 2
        rows.append({
            'i': i,
            'coset': coset,
            'word': str(rep.word) or 'e',
            'length': rep.length,
            'length_bound': length_bound(i) if i >= 1 else 0.0,
            'landing_failures': failures_by_coset.get(coset, 0),
        })
    table = pd.DataFrame(rows, columns=REPRESENTATIVE_COLUMNS)
    summary.update({
        'members_checked': report.members_checked,
        'words_checked': report.words_checked,
        'max_length': report.max_length,
        'max_length_bound': report.max_length_bound,
        'valid': report.valid,
    })
    if not report.valid:
        raise InvariantViolation(
            "coset-representatives",
            f"r={args.r}: {len(report.landing_failures)} landing, "
            f"{len(report.length_failures)} length, {len(report.b_input_failures)} b-input failures",
        )
    i_max = (args.r - 1) // 2
    summary['message'] = (
        f"all representatives valid, max length <= 3(1+log2 {i_max}) = {report.max_length_bound:.4f}"
    )
    return _record(args, table, summary, params)


def run_diameter_scan(args: Namespace, config: CensusConfig) -> ExperimentRecord:
    """Sampled family diameters per degree and the fitted growth constant D."""
    for r in args.r_grid:
        if r < 5:
            raise DomainError(f"every degree in --r-grid must be >= 5, got {r}")
    mode = ConstraintMode.parse(args.mode or config.get_setting('family', 'default_mode', 'all-below-half'))
    args.mode = mode.value
    section = config.get_section('schreier')
    scan = diameter_growth_scan(
        args.r_grid, args.samples, args.seed, mode=mode,
        full_bfs_limit=int(section.get('full_bfs_limit', 2 ** 13)),
        chunk=int(section.get('bfs_chunk', 512)),
        progress=args.progress,
    )
    sub_grid_d = scan.fitted_d_up_to(args.sub_grid_max)
    summary = {
        'fitted_d': scan.fitted_d,
        'fitted_d_sub_grid': sub_grid_d,
        'sub_grid_max': args.sub_grid_max,
        'within_factor_2': bool(sub_grid_d > 0 and scan.fitted_d <= 2 * sub_grid_d
                                and sub_grid_d <= 2 * scan.fitted_d),
        'all_exact': bool(scan.table['exact'].all()) if len(scan.table) else True,
        'message': f"fitted D = {scan.fitted_d:.4f} over {len(scan.table)} samples",
    }
    return _record(args, scan.table, summary, ['r_grid', 'samples', 'mode', 'sub_grid_max'])


def run_random_graph(args: Namespace, config: CensusConfig) -> ExperimentRecord:
    """Connectivity and diameter statistics of random 2k-regular covers."""
    section = config.get_section('schreier')
    experiment = expander_diameter_experiment(
        args.n_grid, args.k, args.trials, args.seed,
        workers=args.workers,
        full_bfs_limit=int(section.get('full_bfs_limit', 2 ** 13)),
        chunk=int(section.get('bfs_chunk', 512)),
        refine_sweeps=int(section.get('refine_sweeps', 16)),
        progress=args.progress,
    )
    summary = {
        'median_ratio_spread': experiment.median_ratio_spread,
        'disconnected': int(len(experiment.trials) - experiment.trials['connected'].astype(bool).sum()),
        'message': f"{len(experiment.trials)} random graphs over {len(args.n_grid)} sizes",
    }
    return _record(args, experiment.summary, summary, ['n_grid', 'k', 'trials'])


def _bound_constants(args: Namespace, config: CensusConfig) -> BoundConstants:
    defaults = config.constants()
    values = {}
    for name in ('a', 'b', 'c', 'c1', 'c2', 'c3', 'c4', 'k'):
        value = getattr(args, name)
        values[name] = defaults[name] if value is None else value
        setattr(args, name, values[name])
    return BoundConstants(n=args.n, d=args.d, **values)


def run_bounds(args: Namespace, config: CensusConfig) -> ExperimentRecord:
    """Every counting bound for (n, d) in log space."""
    consts = _bound_constants(args, config)
    tol = float(config.get_setting('hyperbolic', 'quad_tol', 1e-12))
    tau = tau_bounds(consts)
    eps = injectivity_floor(consts.d, consts.c)
    volumes = volume_bound_chain(consts.n, consts.d, consts.c1, tol)

    rows: List[Dict[str, Any]] = [
        {'quantity': 'lnln_lower', 'scale': 'lnln', 'value': tau.lnln_lower},
        {'quantity': 'ln_upper', 'scale': 'ln', 'value': tau.ln_upper},
        {'quantity': 'lnln_upper', 'scale': 'lnln', 'value': tau.lnln_upper},
        {'quantity': 'ln_injectivity_floor', 'scale': 'ln', 'value': -consts.d / consts.c},
        {'quantity': 'ln_ball_volume', 'scale': 'ln', 'value': volumes.ln_ball_volume},
        {'quantity': 'ln_volume_asymptote', 'scale': 'ln', 'value': volumes.ln_asymptote},
    ]
    if eps > 0:
        rows.append({'quantity': 'thin_part_diameter', 'scale': 'raw',
                     'value': diameter_floor_from_injectivity(eps, consts.c)})
        rows.append({'quantity': 'degree_bound_constant', 'scale': 'raw',
                     'value': degree_bound_constant(eps, consts.n, tol)})
    if volumes.ln_ball_volume < 709 and volumes.ln_ball_volume > 0:
        low, high = bglm_log_count(math.exp(volumes.ln_ball_volume), consts.a, consts.b)
        rows.append({'quantity': 'ln_count_volume_lower', 'scale': 'ln', 'value': low})
        rows.append({'quantity': 'ln_count_volume_upper', 'scale': 'ln', 'value': high})

    summary: Dict[str, Any] = {
        'lnln_lower': tau.lnln_lower,
        'ln_upper': tau.ln_upper,
        'lnln_upper': tau.lnln_upper,
        'upper_exceeds_lower': tau.upper_exceeds_lower,
        'constants_are_conventions': True,
    }
    if consts.n == 3:
        rows.append({'quantity': 'ln_net_size_bound', 'scale': 'ln',
                     'value': log_net_size_bound(consts.d, consts.c, tol)})
        chain = upper_bound_chain(consts, tol)
        for step in chain.table.itertuples(index=False):
            rows.append({'quantity': f"chain_{step.step}", 'scale': step.scale,
                         'value': step.value, 'holds': bool(step.holds)})
        summary['chain_all_hold'] = chain.all_hold
    if args.growth_constant is not None:
        family_k = int(config.get_setting('family', 'k', 100))
        covers = log_covers_at_diameter(consts.d, args.growth_constant, family_k)
        rows.append({'quantity': 'family_degree', 'scale': 'raw', 'value': covers.degree})
        rows.append({'quantity': 'ln_family_covers', 'scale': 'ln', 'value': covers.log_count})
        summary['ln_family_covers'] = covers.log_count

    table = pd.DataFrame(rows, columns=BOUNDS_COLUMNS)
    summary['message'] = f"lnln_lower = {tau.lnln_lower:.6g}, ln_upper = {tau.ln_upper:.6g}"
    return _record(args, table, summary, ['n', 'd', 'a', 'b', 'c', 'c1', 'c2', 'c3', 'c4', 'k', 'growth_constant'])


def run_nerve(args: Namespace, config: CensusConfig) -> ExperimentRecord:
    """Net, nerve and packing checks on a seeded synthetic cloud."""
    section = config.get_section('hyperbolic')
    sep = args.sep if args.sep is not None else float(section.get('default_sep', 0.05))
    args.sep = sep
    if args.points < 0:
        raise DomainError(f"--points must be non-negative, got {args.points}")
    if args.radius <= 0 or sep <= 0:
        raise DomainError("--radius and --sep must be positive")
    if args.dim < 2:
        raise DomainError(f"--dim must be >= 2, got {args.dim}")
    block = int(section.get('nerve_block', 512))
    clamp_warn = float(section.get('clamp_warn', 1e-6))
    tol = float(section.get('quad_tol', 1e-12))
    metric = EUCLIDEAN if args.euclidean else HYPERBOLIC
    nerve_radius = 4.0 * sep

    if metric == HYPERBOLIC:
        cloud = sample_hyperbolic_ball(args.points, args.radius, args.dim, args.seed)
        degree_bound = degree_bound_constant(nerve_radius, args.dim, tol)
    else:
        cloud = sample_euclidean_ball(args.points, args.radius, args.dim, args.seed)
        degree_bound = euclidean_degree_bound_constant(args.dim)

    net_indices = greedy_net(cloud, sep, metric, clamp_warn)
    net = cloud[net_indices]
    separation = min_pairwise_distance(net, metric, block, clamp_warn)
    cover = covering_radius(cloud, net, metric, block, clamp_warn)
    nerve = build_nerve(net, nerve_radius, metric, block, clamp_warn)

    problems = []
    if separation < sep:
        problems.append(f"net points {separation:.6g} apart, below {sep}")
    if len(cloud) and cover >= sep:
        problems.append(f"net is not maximal: a point lies {cover:.6g} from the net")
    if nerve.max_degree > degree_bound:
        problems.append(f"max degree {nerve.max_degree} exceeds packing bound {degree_bound:.6g}")
    if nerve.triangle_count > nerve.triangle_bound:
        problems.append(f"{nerve.triangle_count} triangles exceed s*deg^2 = {nerve.triangle_bound}")
    if problems:
        raise InvariantViolation("net-and-nerve", "; ".join(problems))

    ln_graphs, ln_skeletons = (counting_bounds(nerve.size, max(1, nerve.max_degree))
                               if nerve.size else (0.0, 0.0))
    row = {
        'metric': metric,
        'dim': args.dim,
        'points': args.points,
        'radius': args.radius,
        'sep': sep,
        'nerve_radius': nerve_radius,
        'net_size': nerve.size,
        'min_separation': separation,
        'covering_radius': cover,
        'edges': len(nerve.edges),
        'triangles': nerve.triangle_count,
        'max_degree': nerve.max_degree,
        'degree_bound': degree_bound,
        'triangle_bound': nerve.triangle_bound,
        'ln_graph_count': ln_graphs,
        'ln_skeleton_count': ln_skeletons,
    }
    table = pd.DataFrame([row], columns=NERVE_COLUMNS)
    summary = {
        'net_size': nerve.size,
        'max_degree': nerve.max_degree,
        'triangles': nerve.triangle_count,
        'message': (f"net of {nerve.size} points, max degree {nerve.max_degree} "
                    f"(bound {degree_bound:.1f}), {nerve.triangle_count} triangles"),
    }
    return _record(args, table, summary,
                   ['points', 'radius', 'sep', 'dim', 'euclidean'])


COMMANDS: Dict[str, Callable[[Namespace, CensusConfig], ExperimentRecord]] = {
    'census': run_census,
    'family': run_family,
    'diameter-scan': run_diameter_scan,
    'random-graph': run_random_graph,
    'bounds': run_bounds,
    'nerve': run_nerve,
}
