"""Binary-expansion coset representatives shared by the whole family.

For i >= 1 with binary digits d_k ... d_0 (d_k = 1) the word

    a^(2 d_k) b a^(2 d_(k-1)) b ... b a^(2 d_0)

sends 0 to 2i whenever sigma1 is the r-cycle and sigma2 doubles every
constrained input: each ``b`` is applied to an even point strictly between
0 and r/2. Appending one ``a`` gives a representative of coset 2i+1.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np

from common.errors import DomainError
from free_group import (
    GeneratorWord, Letter, Permutation, PermutationPair, apply_words, letter_matrix, trace_word,
)
from .family import FamilySpec, MIN_FAMILY_DEGREE, sigma1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetRepresentative:
    coset: int
    word: GeneratorWord

    @property
    def length(self) -> int:
        return self.word.length


def length_bound(i: int) -> float:
    """3 (1 + log2 i), the length bound for the representative of coset 2i."""
    if i < 1:
        raise DomainError(f"length bound needs i >= 1, got {i}")
    return 3.0 * (1.0 + math.log2(i))


def coset_rep_word(i: int, r: int) -> Tuple[CosetRepresentative, CosetRepresentative]:
    """Representatives of cosets 2i and 2i+1 (the latter taken mod r).

    Raises:
        DomainError: r < 5, i < 0, or i >= r/2
    """
    if r < MIN_FAMILY_DEGREE:
        raise DomainError(f"representatives need r >= {MIN_FAMILY_DEGREE}, got {r}")
    if i < 0 or 2 * i >= r:
        raise DomainError(f"index i={i} must satisfy 0 <= i < r/2 for r={r}")

    letters: List[Letter] = []
    if i > 0:
        digits = bin(i)[2:]
        for position, digit in enumerate(digits):
            if position > 0:
                letters.append(Letter.B)
            letters.extend([Letter.A] * (2 * int(digit)))
    even_word = GeneratorWord(tuple(letters))
    odd_word = even_word + Letter.A
    return (
        CosetRepresentative(coset=2 * i, word=even_word),
        CosetRepresentative(coset=(2 * i + 1) % r, word=odd_word),
    )


def representative_table(r: int) -> Dict[int, CosetRepresentative]:
    """One representative per coset 0..r-1."""
    table: Dict[int, CosetRepresentative] = {}
    for i in range((r + 1) // 2):
        for rep in coset_rep_word(i, r):
            table.setdefault(rep.coset, rep)
    return dict(sorted(table.items()))


def b_inputs(pair: PermutationPair, word: GeneratorWord) -> List[int]:
    """Points fed to letter b while evaluating ``word`` from 0."""
    trajectory = trace_word(pair, word)
    return [trajectory[position] for position, letter in enumerate(word.letters)
            if letter is Letter.B]


@dataclass
class RepresentativeReport:
    """Result of checking the representative table against sampled sigma2."""
    degree: int
    members_checked: int = 0
    words_checked: int = 0
    max_length: int = 0
    landing_failures: List[Tuple[int, int]] = field(default_factory=list)
    length_failures: List[int] = field(default_factory=list)
    b_input_failures: List[int] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (self.landing_failures or self.length_failures or self.b_input_failures)

    @property
    def max_length_bound(self) -> float:
        """3 (1 + log2 i_max) for the largest i < r/2."""
        i_max = (self.degree - 1) // 2
        return length_bound(i_max) if i_max >= 1 else 0.0


def verify_representatives(spec: FamilySpec, members: Iterable[Permutation]) -> RepresentativeReport:
    """Check every representative word against every given sigma2.

    Checks landing on 2i and 2i+1, the length bound, and that each b input is
    even and strictly between 0 and r/2. Words are evaluated in one batch
    per member.
    """
    r = spec.degree
    a_perm = sigma1(r)
    reps = [coset_rep_word(i, r) for i in range((r + 1) // 2)]
    report = RepresentativeReport(degree=r)

    for i, (even, odd) in enumerate(reps):
        report.max_length = max(report.max_length, odd.length)
        if i >= 1 and even.length > length_bound(i):
            report.length_failures.append(i)

    letters = letter_matrix(even.word for even, _ in reps)
    even_targets = np.array([even.coset for even, _ in reps], dtype=np.int64)
    odd_targets = np.array([odd.coset for _, odd in reps], dtype=np.int64)
    a_images = np.asarray(a_perm.images, dtype=np.int64)

    for member_index, sigma in enumerate(members):
        pair = PermutationPair(a_perm, sigma)
        ends, fed_to_b = apply_words(pair, letters, record_letter=Letter.B)
        report.members_checked += 1
        report.words_checked += 2 * len(reps)

        for coset in even_targets[ends != even_targets]:
            report.landing_failures.append((member_index, int(coset)))
        odd_ends = a_images[ends]
        for coset in odd_targets[odd_ends != odd_targets]:
            report.landing_failures.append((member_index, int(coset)))

        used = fed_to_b >= 0
        bad = used & ((fed_to_b % 2 != 0) | (fed_to_b <= 0) | (2 * fed_to_b >= r))
        report.b_input_failures.extend(int(i) for i in np.flatnonzero(bad.any(axis=1)))

    if not report.valid:
        logger.warning(
            f"Representative check failed for r={r}: "
            f"{len(report.landing_failures)} landing, {len(report.length_failures)} length, "
            f"{len(report.b_input_failures)} b-input failures"
        )
    return report
