"""The explicit family of index-r subgroups with short coset representatives.

sigma1 is the r-cycle i -> i+1 mod r. sigma2 ranges over the set S of
permutations with sigma2(i) = 2i on a constrained set of inputs below r/2.
Two readings of the constrained set are supported:

* ``EVEN_ONLY``: only even i with 0 < i < r/2 are constrained.
* ``ALL_BELOW_HALF``: every i with 0 < i < r/2 is constrained; this is the
  reading for which |S| = (floor(r/2) + 1)!.

Both readings make the binary-expansion representative words valid.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

import numpy as np
from scipy.special import gammaln

from common.errors import DomainError
from free_group import Permutation

logger = logging.getLogger(__name__)

MIN_FAMILY_DEGREE = 5


class ConstraintMode(Enum):
    """Which inputs below r/2 are forced to double."""
    ALL_BELOW_HALF = "all-below-half"
    EVEN_ONLY = "even-only"

    @classmethod
    def parse(cls, text: str) -> "ConstraintMode":
        normalized = text.strip().lower().replace("_", "-")
        aliases = {
            "all-below-half": cls.ALL_BELOW_HALF,
            "allbelowhalf": cls.ALL_BELOW_HALF,
            "even-only": cls.EVEN_ONLY,
            "evenonly": cls.EVEN_ONLY,
        }
        try:
            return aliases[normalized]
        except KeyError:
            raise DomainError(
                f"unknown constraint mode {text!r}; use 'all-below-half' or 'even-only'"
            ) from None


DEFAULT_MODE = ConstraintMode.ALL_BELOW_HALF


@dataclass(frozen=True)
class FamilySpec:
    degree: int
    constraint_mode: ConstraintMode = DEFAULT_MODE

    def __post_init__(self):
        if self.degree < MIN_FAMILY_DEGREE:
            raise DomainError(f"family degree must be >= {MIN_FAMILY_DEGREE}, got {self.degree}")
        if not isinstance(self.constraint_mode, ConstraintMode):
            object.__setattr__(self, "constraint_mode", ConstraintMode.parse(str(self.constraint_mode)))


def sigma1(r: int) -> Permutation:
    """The r-cycle i -> i+1 mod r."""
    if r < 1:
        raise DomainError(f"sigma1 needs r >= 1, got {r}")
    return Permutation(tuple((i + 1) % r for i in range(r)))


def constrained_inputs(spec: FamilySpec) -> Tuple[int, ...]:
    """Inputs i with sigma2(i) = 2i forced (0 < i < r/2, strict)."""
    below_half = range(1, (spec.degree + 1) // 2)
    if spec.constraint_mode is ConstraintMode.EVEN_ONLY:
        return tuple(i for i in below_half if i % 2 == 0)
    return tuple(below_half)


def _free_points(spec: FamilySpec) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Unconstrained inputs and the outputs left for them, both sorted."""
    fixed = constrained_inputs(spec)
    fixed_inputs = set(fixed)
    fixed_outputs = {2 * i for i in fixed}
    free_inputs = tuple(i for i in range(spec.degree) if i not in fixed_inputs)
    free_outputs = tuple(i for i in range(spec.degree) if i not in fixed_outputs)
    return free_inputs, free_outputs


def family_size(spec: FamilySpec) -> int:
    """|S| = (r - m)! with m the number of constrained inputs."""
    return math.factorial(spec.degree - len(constrained_inputs(spec)))


def log_family_size(spec: FamilySpec) -> float:
    """ln |S| via log-gamma; usable where |S| has too many digits to print."""
    return float(gammaln(spec.degree - len(constrained_inputs(spec)) + 1))


def _assemble(spec: FamilySpec, free_inputs, assignment) -> Permutation:
    images = [0] * spec.degree
    for i in constrained_inputs(spec):
        images[i] = 2 * i
    for source, target in zip(free_inputs, assignment):
        images[source] = int(target)
    return Permutation(tuple(images))


def family_prefix(spec: FamilySpec, count: Optional[int] = None) -> Iterator[Permutation]:
    """Members of S in lexicographic order of the free-point assignment."""
    free_inputs, free_outputs = _free_points(spec)
    assignments = itertools.permutations(free_outputs)
    if count is not None:
        assignments = itertools.islice(assignments, count)
    for assignment in assignments:
        yield _assemble(spec, free_inputs, assignment)


def family_members(spec: FamilySpec, budget: int, seed: Optional[int] = None) -> Iterator[Permutation]:
    """All of S if it fits in ``budget``, otherwise ``budget`` uniform samples.

    Sampling draws a uniform bijection from free inputs to free outputs with
    ``numpy.random.default_rng(seed)``, so a fixed seed gives a fixed stream.
    """
    if budget < 0:
        raise DomainError(f"budget must be non-negative, got {budget}")
    size = family_size(spec)
    if size <= budget:
        logger.debug(f"Enumerating all members of S for r={spec.degree}")
        yield from family_prefix(spec)
        return

    if seed is None:
        raise DomainError("sampling S requires a seed")
    free_inputs, free_outputs = _free_points(spec)
    outputs = np.asarray(free_outputs, dtype=np.int64)
    rng = np.random.default_rng(seed)
    logger.debug(f"Sampling {budget} members of S (ln|S| = {log_family_size(spec):.2f}) for r={spec.degree}")
    for _ in range(budget):
        yield _assemble(spec, free_inputs, rng.permutation(outputs))


def satisfies_constraints(spec: FamilySpec, sigma: Permutation) -> bool:
    return sigma.degree == spec.degree and all(
        sigma(i) == 2 * i for i in constrained_inputs(spec)
    )
