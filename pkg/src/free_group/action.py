"""The action of F2 on {0, ..., r-1} given by a permutation pair.

Basepoint is always 0. Two transitive pairs define the same stabilizer
subgroup exactly when a relabeling fixing 0 conjugates one to the other;
``pairs_equivalent`` builds that relabeling with a labeled breadth-first
traversal instead of searching all (r-1)! candidates.
"""

import itertools
import logging
from collections import deque
from typing import List, Optional, Tuple

import numpy as np

from common.errors import DomainError, EnumerationRefused, PreconditionError
from .permutations import Permutation, PermutationPair
from .words import LETTER_ORDER, GeneratorWord, Letter

logger = logging.getLogger(__name__)

BASEPOINT = 0
DEFAULT_ENUMERATION_CUTOFF = 7

_MAP_INDEX = {letter: position for position, letter in enumerate(LETTER_ORDER)}


def apply_letter(pair: PermutationPair, letter: Letter, point: int) -> int:
    return pair.maps()[_MAP_INDEX[letter]][point]


def apply_word(pair: PermutationPair, word: GeneratorWord, start: int) -> int:
    """Image of ``start`` under ``word``, letters applied left to right."""
    if not 0 <= start < pair.degree:
        raise DomainError(f"start point {start} outside 0..{pair.degree - 1}")
    maps = pair.maps()
    point = start
    for letter in word.letters:
        point = maps[_MAP_INDEX[letter]][point]
    return point


def trace_word(pair: PermutationPair, word: GeneratorWord, start: int = BASEPOINT) -> List[int]:
    """Every point visited while applying ``word`` (start included)."""
    if not 0 <= start < pair.degree:
        raise DomainError(f"start point {start} outside 0..{pair.degree - 1}")
    maps = pair.maps()
    trajectory = [start]
    for letter in word.letters:
        trajectory.append(maps[_MAP_INDEX[letter]][trajectory[-1]])
    return trajectory


def _bfs_order(maps: Tuple[Tuple[int, ...], ...], degree: int) -> List[int]:
    """Points reachable from 0 in discovery order."""
    seen = [False] * degree
    seen[BASEPOINT] = True
    order = [BASEPOINT]
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for point_map in maps:
            y = point_map[x]
            if not seen[y]:
                seen[y] = True
                order.append(y)
                queue.append(y)
    return order


def orbit_of_zero(pair: PermutationPair) -> List[int]:
    """Orbit of the basepoint in breadth-first discovery order."""
    if pair.degree < 1:
        raise DomainError("orbit of 0 needs degree >= 1")
    return _bfs_order(pair.maps(), pair.degree)


def is_transitive(pair: PermutationPair) -> bool:
    """True iff the orbit of 0 is all of {0, ..., r-1}."""
    return len(orbit_of_zero(pair)) == pair.degree


def _require_transitive(pair: PermutationPair, what: str) -> None:
    if not is_transitive(pair):
        raise PreconditionError(f"{what} needs a transitive pair")


def coset_of(pair: PermutationPair, word: GeneratorWord) -> int:
    """Index of the coset containing ``word``; 0 iff the word fixes 0."""
    _require_transitive(pair, "coset_of")
    return apply_word(pair, word, BASEPOINT)


def in_stabilizer(pair: PermutationPair, word: GeneratorWord) -> bool:
    return coset_of(pair, word) == BASEPOINT


def _canonical_labels(maps: Tuple[Tuple[int, ...], ...], degree: int) -> List[int]:
    labels = [-1] * degree
    for position, point in enumerate(_bfs_order(maps, degree)):
        labels[point] = position
    return labels


def canonical_key(images1: Tuple[int, ...], images2: Tuple[int, ...],
                  inverse1: Tuple[int, ...], inverse2: Tuple[int, ...]) -> Tuple[int, ...]:
    """Hashable canonical form of a transitive pair given as raw tuples."""
    degree = len(images1)
    labels = _canonical_labels((images1, inverse1, images2, inverse2), degree)
    relabeled = [0] * (2 * degree)
    for x in range(degree):
        relabeled[labels[x]] = labels[images1[x]]
        relabeled[degree + labels[x]] = labels[images2[x]]
    return tuple(relabeled)


def canonical_form(pair: PermutationPair) -> PermutationPair:
    """Relabel every point by its breadth-first discovery index from 0.

    Two transitive pairs are equivalent iff their canonical forms are equal.
    """
    _require_transitive(pair, "canonical_form")
    key = canonical_key(pair.sigma1.images, pair.sigma2.images,
                        pair.sigma1.inverse_images, pair.sigma2.inverse_images)
    return PermutationPair.from_images(key[:pair.degree], key[pair.degree:])


def conjugate_pair(pair: PermutationPair, relabeling: Permutation) -> PermutationPair:
    """Conjugate both permutations by ``relabeling``.

    Any relabeling is accepted; only those fixing 0 preserve the subgroup.
    """
    return pair.conjugate_by(relabeling)


def find_relabeling(p1: PermutationPair, p2: PermutationPair) -> Optional[Permutation]:
    """Relabeling π with π(0)=0 and π p1 π⁻¹ = p2, or None if none exists."""
    if p1.degree != p2.degree:
        raise DomainError(f"degree mismatch: {p1.degree} vs {p2.degree}")
    _require_transitive(p1, "pairs_equivalent")
    _require_transitive(p2, "pairs_equivalent")

    degree = p1.degree
    maps1, maps2 = p1.maps(), p2.maps()
    forward = [-1] * degree
    used = [False] * degree
    forward[BASEPOINT] = BASEPOINT
    used[BASEPOINT] = True
    queue = deque([BASEPOINT])
    while queue:
        x = queue.popleft()
        y = forward[x]
        for map1, map2 in zip(maps1, maps2):
            x_next, y_next = map1[x], map2[y]
            if forward[x_next] == -1:
                if used[y_next]:
                    return None
                forward[x_next] = y_next
                used[y_next] = True
                queue.append(x_next)
            elif forward[x_next] != y_next:
                return None
    return Permutation(tuple(forward))


def pairs_equivalent(p1: PermutationPair, p2: PermutationPair) -> bool:
    """True iff a relabeling fixing 0 conjugates ``p1`` onto ``p2``."""
    return find_relabeling(p1, p2) is not None


def pairs_equivalent_bruteforce(p1: PermutationPair, p2: PermutationPair,
                                cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> bool:
    """Search all (r-1)! relabelings fixing 0. Test oracle only."""
    if p1.degree != p2.degree:
        raise DomainError(f"degree mismatch: {p1.degree} vs {p2.degree}")
    if p1.degree > cutoff:
        raise EnumerationRefused(p1.degree, cutoff, "brute-force equivalence")
    degree = p1.degree
    for tail in itertools.permutations(range(1, degree)):
        relabeling = Permutation((BASEPOINT,) + tail)
        if p1.conjugate_by(relabeling) == p2:
            return True
    return False


def letter_matrix(words) -> np.ndarray:
    """Pad words into an int matrix of letter indices (-1 marks padding)."""
    words = list(words)
    width = max((word.length for word in words), default=0)
    matrix = np.full((len(words), width), -1, dtype=np.int8)
    for row, word in enumerate(words):
        for column, letter in enumerate(word.letters):
            matrix[row, column] = _MAP_INDEX[letter]
    return matrix


def apply_words(pair: PermutationPair, letters: np.ndarray,
                starts: Optional[np.ndarray] = None,
                record_letter: Optional[Letter] = None):
    """Evaluate many padded words at once (see ``letter_matrix``).

    Returns the end points, and when ``record_letter`` is given also a
    matrix holding the point fed to that letter at each position (-1 where
    the letter does not occur).
    """
    maps = np.asarray(pair.maps(), dtype=np.int64)
    count, width = letters.shape
    points = np.zeros(count, dtype=np.int64) if starts is None else np.array(starts, dtype=np.int64)
    recorded = np.full((count, width), -1, dtype=np.int64) if record_letter is not None else None
    for column in range(width):
        column_letters = letters[:, column]
        active = column_letters >= 0
        if record_letter is not None:
            hits = column_letters == _MAP_INDEX[record_letter]
            recorded[hits, column] = points[hits]
        points[active] = maps[column_letters[active], points[active]]
    if record_letter is not None:
        return points, recorded
    return points
