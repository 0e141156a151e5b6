"""Explicit family of index-r subgroups of F2 with logarithmic-length coset representatives."""

from .family import (
    ConstraintMode,
    DEFAULT_MODE,
    FamilySpec,
    sigma1,
    constrained_inputs,
    family_size,
    log_family_size,
    family_prefix,
    family_members,
    satisfies_constraints,
)
from .representatives import (
    CosetRepresentative,
    RepresentativeReport,
    coset_rep_word,
    representative_table,
    length_bound,
    b_inputs,
    verify_representatives,
)
from .counts import (
    LowerBoundCount,
    CoversAtDiameter,
    conjugacy_cap,
    log_family_count,
    lower_bound_count,
    exact_log,
    dominance_table,
    log_covers_at_diameter,
)

__all__ = [
    'ConstraintMode',
    'DEFAULT_MODE',
    'FamilySpec',
    'sigma1',
    'constrained_inputs',
    'family_size',
    'log_family_size',
    'family_prefix',
    'family_members',
    'satisfies_constraints',
    'CosetRepresentative',
    'RepresentativeReport',
    'coset_rep_word',
    'representative_table',
    'length_bound',
    'b_inputs',
    'verify_representatives',
    'LowerBoundCount',
    'CoversAtDiameter',
    'conjugacy_cap',
    'log_family_count',
    'lower_bound_count',
    'exact_log',
    'dominance_table',
    'log_covers_at_diameter',
]
