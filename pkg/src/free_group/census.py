"""Subgroup census of F2: brute-force enumeration against Hall's recurrence.

``enumerate_transitive_pairs`` walks all (r!)^2 pairs, keeps the transitive
ones and partitions them by canonical form. The number of classes is the
number of index-r subgroups, which ``hall_subgroup_count`` computes
independently.
"""

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Set, Tuple

from tqdm import tqdm

from common.errors import DomainError, EnumerationRefused, InvariantViolation
from .action import DEFAULT_ENUMERATION_CUTOFF, canonical_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusResult:
    """Outcome of the exhaustive enumeration at one degree."""
    degree: int
    total_pairs: int
    transitive_pairs: int
    classes: int

    @property
    def pairs_per_class(self) -> int:
        return math.factorial(self.degree - 1)


def _inverse(images: Tuple[int, ...]) -> Tuple[int, ...]:
    inverse = [0] * len(images)
    for i, image in enumerate(images):
        inverse[image] = i
    return tuple(inverse)


def _orbit_size(images1, inverse1, images2, inverse2, degree: int) -> int:
    seen = [False] * degree
    seen[0] = True
    stack = [0]
    size = 1
    while stack:
        x = stack.pop()
        for y in (images1[x], inverse1[x], images2[x], inverse2[x]):
            if not seen[y]:
                seen[y] = True
                size += 1
                stack.append(y)
    return size


def _all_permutations(degree: int):
    perms = list(itertools.permutations(range(degree)))
    return perms, [_inverse(p) for p in perms]


def _census_rows(perms, inverses, degree: int,
                 outer_indices: Iterable[int]) -> Tuple[int, Set[Tuple[int, ...]]]:
    transitive = 0
    keys: Set[Tuple[int, ...]] = set()
    for i in outer_indices:
        images1, inverse1 = perms[i], inverses[i]
        for images2, inverse2 in zip(perms, inverses):
            if _orbit_size(images1, inverse1, images2, inverse2, degree) == degree:
                transitive += 1
                keys.add(canonical_key(images1, images2, inverse1, inverse2))
    return transitive, keys


def _census_chunk(degree: int, outer_indices: List[int]) -> Tuple[int, Set[Tuple[int, ...]]]:
    """Transitive count and canonical keys for a slice of outer permutations."""
    perms, inverses = _all_permutations(degree)
    return _census_rows(perms, inverses, degree, outer_indices)


def _chunks(count: int, parts: int) -> List[List[int]]:
    parts = max(1, min(parts, count))
    return [list(range(start, count, parts)) for start in range(parts)]


def enumerate_transitive_pairs(r: int,
                               cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
                               workers: int = 1,
                               progress: bool = False) -> CensusResult:
    """Exhaustively count transitive pairs of degree ``r`` and their classes.

    Args:
        r: Degree, 1 <= r <= cutoff
        cutoff: Largest degree accepted (the search space is (r!)^2)
        workers: Process count; the outer permutation is partitioned
        progress: Show a progress bar over outer permutations

    Raises:
        EnumerationRefused: r above cutoff
        InvariantViolation: transitive count is not classes * (r-1)!
    """
    if r < 1:
        raise DomainError(f"degree must be >= 1, got {r}")
    if r > cutoff:
        raise EnumerationRefused(r, cutoff, "exhaustive pair enumeration")

    outer_count = math.factorial(r)
    logger.info(f"Enumerating {outer_count ** 2} pairs of degree {r} with {workers} worker(s)")

    transitive = 0
    keys: Set[Tuple[int, ...]] = set()
    if workers <= 1:
        indices: Iterable[int] = range(outer_count)
        if progress:
            indices = tqdm(indices, desc=f"census r={r}", unit="perm")
        perms, inverses = _all_permutations(r)
        transitive, keys = _census_rows(perms, inverses, r, indices)
    else:
        chunks = _chunks(outer_count, workers * 4)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_census_chunk, itertools.repeat(r), chunks)
            if progress:
                results = tqdm(results, total=len(chunks), desc=f"census r={r}", unit="chunk")
            for count, chunk_keys in results:
                transitive += count
                keys |= chunk_keys

    result = CensusResult(
        degree=r,
        total_pairs=outer_count ** 2,
        transitive_pairs=transitive,
        classes=len(keys),
    )
    if result.classes * result.pairs_per_class != result.transitive_pairs:
        raise InvariantViolation(
            "transitive = classes * (r-1)!",
            f"r={r}: {transitive} transitive pairs, {len(keys)} classes",
        )
    logger.debug(f"r={r}: {transitive} transitive pairs in {len(keys)} classes")
    return result


def hall_sequence(n: int) -> List[int]:
    """[a_1, ..., a_n] from a_n = n * n! - sum_{i<n} (n-i)! a_i."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    factorials = [1] * (n + 1)
    for i in range(1, n + 1):
        factorials[i] = factorials[i - 1] * i
    values: List[int] = []
    for m in range(1, n + 1):
        total = m * factorials[m]
        for i in range(1, m):
            total -= factorials[m - i] * values[i - 1]
        values.append(total)
    return values


def hall_subgroup_count(r: int) -> int:
    """Number of index-r subgroups of F2, exact."""
    return hall_sequence(r)[-1]
