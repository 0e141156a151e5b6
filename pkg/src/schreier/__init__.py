"""Schreier coset graphs, diameters and random-cover experiments."""

from .graphs import SchreierGraph, build_schreier, to_pair, distances_from, vertex_degrees, is_connected
from .diameter import (
    DiameterResult,
    eccentricities,
    eccentricity_of,
    graph_diameter,
    double_sweep,
    diameter_with_flag,
    moore_lower_bound,
    representative_eccentricity_bound,
)
from .experiments import (
    SCAN_COLUMNS,
    TRIAL_COLUMNS,
    SUMMARY_COLUMNS,
    LemmaConstants,
    DiameterScan,
    ExpanderExperiment,
    lemma_constants,
    lemma_diameter_bound,
    fitted_growth_constant,
    diameter_growth_scan,
    random_regular_graph,
    expander_diameter_experiment,
)

__all__ = [
    'SchreierGraph',
    'build_schreier',
    'to_pair',
    'distances_from',
    'vertex_degrees',
    'is_connected',
    'DiameterResult',
    'eccentricities',
    'eccentricity_of',
    'graph_diameter',
    'double_sweep',
    'diameter_with_flag',
    'moore_lower_bound',
    'representative_eccentricity_bound',
    'SCAN_COLUMNS',
    'TRIAL_COLUMNS',
    'SUMMARY_COLUMNS',
    'LemmaConstants',
    'DiameterScan',
    'ExpanderExperiment',
    'lemma_constants',
    'lemma_diameter_bound',
    'fitted_growth_constant',
    'diameter_growth_scan',
    'random_regular_graph',
    'expander_diameter_experiment',
]
