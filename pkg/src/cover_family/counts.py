"""Counting the non-isometric covers produced by the family.

Each subgroup of index r is conjugate to at most r*k others (k is the
commensurator index, a free parameter), so the family yields at least
(floor(r/2) + 1)! / (r k) pairwise non-isometric covers.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from scipy.special import gammaln

from common.errors import DomainError
from .family import MIN_FAMILY_DEGREE

DEFAULT_EXACT_DIGIT_LIMIT = 1_000_000
_LN10 = math.log(10.0)


@dataclass(frozen=True)
class LowerBoundCount:
    degree: int
    k: int
    log_value: float
    exact: Optional[Fraction] = None

    @property
    def log_minus_degree(self) -> float:
        """ln(count) - r; positive means the count beats e^r."""
        return self.log_value - self.degree


def conjugacy_cap(r: int, k: int) -> int:
    """Most subgroups of index r conjugate to a given one: r*k."""
    if r < 1 or k < 1:
        raise DomainError(f"conjugacy cap needs r, k >= 1, got r={r}, k={k}")
    return r * k


def log_family_count(r: int) -> float:
    """ln((floor(r/2) + 1)!) via log-gamma."""
    return float(gammaln(r // 2 + 2))


def lower_bound_count(r: int, k: int,
                      exact_digit_limit: int = DEFAULT_EXACT_DIGIT_LIMIT) -> LowerBoundCount:
    """(floor(r/2) + 1)! / (r k), exact when it has at most ``exact_digit_limit`` digits.

    The natural logarithm is always computed with log-gamma.
    """
    if r < MIN_FAMILY_DEGREE:
        raise DomainError(f"lower bound needs r >= {MIN_FAMILY_DEGREE}, got {r}")
    if k < 1:
        raise DomainError(f"commensurator index k must be >= 1, got {k}")

    log_numerator = log_family_count(r)
    log_value = log_numerator - math.log(conjugacy_cap(r, k))
    exact = None
    if log_numerator / _LN10 <= exact_digit_limit:
        exact = Fraction(math.factorial(r // 2 + 1), conjugacy_cap(r, k))
    return LowerBoundCount(degree=r, k=k, log_value=log_value, exact=exact)


def exact_log(value: Fraction) -> float:
    """ln of a positive Fraction without going through floats."""
    return math.log(value.numerator) - math.log(value.denominator)


def dominance_table(r_grid: Iterable[int], k: int) -> List[Tuple[int, float]]:
    """(r, ln(count) - r) over a grid of degrees."""
    return [(r, lower_bound_count(r, k, exact_digit_limit=0).log_minus_degree) for r in r_grid]


@dataclass(frozen=True)
class CoversAtDiameter:
    diameter: float
    growth_constant: float
    degree: Union[int, float]
    log_count: float


def log_covers_at_diameter(d: float, D: float, k: int) -> CoversAtDiameter:
    """Lower bound on ln(#covers of diameter <= d) when diameters grow like D log r.

    Takes the largest r with D log r <= d, i.e. r = floor(e^(d/D)), and
    returns ln((floor(r/2) + 1)! / (r k)). Beyond d/D ~ 709 both are reported
    as infinity.
    """
    if D <= 0:
        raise DomainError(f"growth constant D must be positive, got {D}")
    if k < 1:
        raise DomainError(f"commensurator index k must be >= 1, got {k}")
    exponent = d / D
    if exponent < 709:
        r: Union[int, float] = math.floor(math.exp(exponent))
        if r < MIN_FAMILY_DEGREE:
            raise DomainError(f"d={d} with D={D} gives degree {r} < {MIN_FAMILY_DEGREE}")
        log_count = lower_bound_count(int(r), k, exact_digit_limit=0).log_value
    else:
        # the count overflows double precision even in log space
        r, log_count = math.inf, math.inf
    return CoversAtDiameter(diameter=d, growth_constant=D, degree=r, log_count=log_count)
