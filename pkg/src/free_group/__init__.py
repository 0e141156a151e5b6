"""Permutation model of finite-index subgroups of the free group F2."""

from .words import GeneratorWord, Letter
from .permutations import Permutation, PermutationPair
from .action import (
    apply_word,
    trace_word,
    orbit_of_zero,
    is_transitive,
    coset_of,
    in_stabilizer,
    canonical_form,
    conjugate_pair,
    find_relabeling,
    pairs_equivalent,
    pairs_equivalent_bruteforce,
    letter_matrix,
    apply_words,
)
from .census import CensusResult, enumerate_transitive_pairs, hall_sequence, hall_subgroup_count

__all__ = [
    'GeneratorWord',
    'Letter',
    'Permutation',
    'PermutationPair',
    'apply_word',
    'trace_word',
    'orbit_of_zero',
    'is_transitive',
    'coset_of',
    'in_stabilizer',
    'canonical_form',
    'conjugate_pair',
    'find_relabeling',
    'pairs_equivalent',
    'pairs_equivalent_bruteforce',
    'letter_matrix',
    'apply_words',
    'CensusResult',
    'enumerate_transitive_pairs',
    'hall_sequence',
    'hall_subgroup_count',
]
