"""Permutations of {0, ..., r-1} and pairs of them.

A transitive ``PermutationPair`` (sigma1, sigma2) encodes the index-r
subgroup of F2 fixing the basepoint 0, with generator a acting by sigma1
and b by sigma2.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

from common.errors import DomainError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., degree-1}; ``images[i]`` is the image of i."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"images {images} are not a bijection of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 0:
            raise DomainError(f"degree must be non-negative, got {degree}")
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, [(0, 1), (2, 3)])``."""
        images = list(range(degree))
        for cycle in cycles:
            for position, point in enumerate(cycle):
                if not 0 <= point < degree:
                    raise DomainError(f"point {point} outside 0..{degree - 1}")
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @cached_property
    def inverse_images(self) -> Tuple[int, ...]:
        inverse = [0] * self.degree
        for i, image in enumerate(self.images):
            inverse[image] = i
        return tuple(inverse)

    def inverse(self) -> "Permutation":
        return Permutation(self.inverse_images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __len__(self) -> int:
        return self.degree

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        if other.degree != self.degree:
            raise DomainError("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[x] for x in other.images))

    def conjugate_by(self, relabeling: "Permutation") -> "Permutation":
        """Return π σ π⁻¹, i.e. the permutation sending π(x) to π(σ(x))."""
        if relabeling.degree != self.degree:
            raise DomainError("relabeling degree differs from permutation degree")
        images = [0] * self.degree
        for x, image in enumerate(self.images):
            images[relabeling.images[x]] = relabeling.images[image]
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))


@dataclass(frozen=True)
class PermutationPair:
    """The action of the two generators of F2 on {0, ..., r-1}."""
    sigma1: Permutation
    sigma2: Permutation

    def __post_init__(self):
        if self.sigma1.degree != self.sigma2.degree:
            raise DomainError(
                f"pair degrees differ: {self.sigma1.degree} vs {self.sigma2.degree}"
            )

    @classmethod
    def from_images(cls, images1: Sequence[int], images2: Sequence[int]) -> "PermutationPair":
        return cls(Permutation(tuple(images1)), Permutation(tuple(images2)))

    @property
    def degree(self) -> int:
        return self.sigma1.degree

    def maps(self) -> Tuple[Tuple[int, ...], ...]:
        """Point maps in letter order a, a⁻¹, b, b⁻¹."""
        return (
            self.sigma1.images,
            self.sigma1.inverse_images,
            self.sigma2.images,
            self.sigma2.inverse_images,
        )

    def conjugate_by(self, relabeling: Permutation) -> "PermutationPair":
        return PermutationPair(
            self.sigma1.conjugate_by(relabeling),
            self.sigma2.conjugate_by(relabeling),
        )
