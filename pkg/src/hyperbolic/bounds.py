"""Log-space evaluation of the counting bounds for hyperbolic manifolds of bounded diameter.

Raw counts overflow at once, so every bound is reported as a natural log
(ln) or a double log (lnln). The constants a, b, c, c1..c4, k only have
existence guarantees; their defaults are conventions.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import pandas as pd

from common.errors import DomainError
from .volumes import (
    DEFAULT_QUAD_TOL, log_ball_volume, log_net_size_bound,
)

logger = logging.getLogger(__name__)

CHAIN_COLUMNS = ['step', 'scale', 'value', 'holds']


@dataclass(frozen=True)
class BoundConstants:
    n: int
    d: float
    a: float = 1.0
    b: float = 1.0
    c: float = 3.0
    c1: float = 1.0
    c2: float = 1.0
    c3: float = 1.0
    c4: float = 1.0
    k: float = 729.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"dimension n must be an integer >= 2, got {self.n}")
        object.__setattr__(self, 'n', int(self.n))
        for name in ('d', 'a', 'b', 'c', 'c1', 'c2', 'c3', 'c4', 'k'):
            value = getattr(self, name)
            if not value > 0:
                raise DomainError(f"constant {name} must be positive, got {value}")


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def counting_bounds(s: int, k: float) -> Tuple[float, float]:
    """ln of the graph count s^(k s) and of the 2-skeleton count s^(k s) 2^(s k^2)."""
    if s < 1:
        raise DomainError(f"net size must be >= 1, got {s}")
    if k < 1:
        raise DomainError(f"degree bound must be >= 1, got {k}")
    graphs = k * s * math.log(s)
    return graphs, graphs + s * k * k * math.log(2.0)


def growth_exponent(n: int, d: float) -> float:
    """Exponent of the upper bound: 5d in dimension 3, (n-1)d above."""
    return 5.0 * d if n == 3 else (n - 1) * d


@dataclass(frozen=True)
class TauBounds:
    """e^(e^(a d)) < tau_n(d) < e^(b d e^(growth)), kept as logs."""
    n: int
    d: float
    lnln_lower: float
    ln_upper: float
    lnln_upper: float

    @property
    def upper_exceeds_lower(self) -> bool:
        return self.lnln_upper > self.lnln_lower


def tau_bounds(consts: BoundConstants) -> TauBounds:
    """ln ln of the lower bound and ln of the upper bound on the manifold count.

    ``ln_upper`` may be inf; ``lnln_upper`` is always finite.
    """
    if consts.n < 3:
        raise DomainError(f"the manifold count bounds need n >= 3, got {consts.n}")
    exponent = growth_exponent(consts.n, consts.d)
    lnln_upper = math.log(consts.b) + math.log(consts.d) + exponent
    return TauBounds(
        n=consts.n,
        d=consts.d,
        lnln_lower=consts.a * consts.d,
        ln_upper=consts.b * consts.d * _safe_exp(exponent),
        lnln_upper=lnln_upper,
    )


@dataclass(frozen=True)
class VolumeChain:
    ln_ball_volume: float
    ln_asymptote: float


def volume_bound_chain(n: int, d: float, c1: float = 1.0,
                       tol: float = DEFAULT_QUAD_TOL) -> VolumeChain:
    """ln Vol B(d) in H^n next to its growth ln c1 + (n-1) d."""
    if d < 0:
        raise DomainError(f"diameter must be non-negative, got {d}")
    if c1 <= 0:
        raise DomainError(f"c1 must be positive, got {c1}")
    return VolumeChain(ln_ball_volume=log_ball_volume(n, d, tol),
                       ln_asymptote=math.log(c1) + (n - 1) * d)


def bglm_log_count(V: float, a: float, b: float) -> Tuple[float, float]:
    """(a V ln V, b V ln V): the range of ln(#manifolds of volume <= V)."""
    if V < 1:
        raise DomainError(f"volume must be >= 1, got {V}")
    if a <= 0 or b <= 0:
        raise DomainError(f"constants must be positive, got a={a}, b={b}")
    base = V * math.log(V)
    return a * base, b * base


def _lnln_counts(ln_s: float, k: float) -> Tuple[float, float]:
    """lnln of k s ln s and of k s ln s + s k^2 ln 2, from ln s."""
    if ln_s <= 0:
        # s = 1: ln(graph count) is 0
        return -math.inf, math.log(k * k * math.log(2.0))
    graphs = math.log(k) + ln_s + math.log(ln_s)
    skeletons = ln_s + math.log(k * ln_s + k * k * math.log(2.0))
    return graphs, skeletons


@dataclass
class UpperBoundChain:
    consts: BoundConstants
    table: pd.DataFrame = field(repr=False)

    @property
    def all_hold(self) -> bool:
        return bool(self.table['holds'].all())

    def value(self, step: str) -> float:
        return float(self.table.loc[self.table['step'] == step, 'value'].iloc[0])


def upper_bound_chain(consts: BoundConstants, tol: float = DEFAULT_QUAD_TOL) -> UpperBoundChain:
    """Every estimate behind the dimension-3 upper bound, with whether it holds.

    ``ln`` rows are logs of net sizes, ``lnln`` rows logs of logs of counts.
    ``holds`` says whether the row bounds the one it estimates for these
    constants.
    """
    if consts.n != 3:
        raise DomainError(f"the upper-bound chain is for n = 3, got {consts.n}")
    d = consts.d
    log_r = -d / consts.c
    ln_net = log_net_size_bound(d, consts.c, tol)
    ln_net_c1 = math.log(consts.c1) + 2.0 * d - 3.0 * (log_r - math.log(4.0))
    ln_net_c2 = math.log(consts.c2) + 5.0 * d
    # the net has at least one point
    ln_s = max(ln_net, 0.0)
    lnln_graphs, lnln_skeletons = _lnln_counts(ln_s, consts.k)
    lnln_c3 = math.log(consts.c3) + math.log(d) + 5.0 * d
    lnln_c4 = math.log(consts.c4) + math.log(d) + 5.0 * d

    rows: List[dict] = [
        {'step': 'net_size_exact', 'scale': 'ln', 'value': ln_net, 'holds': True},
        {'step': 'net_size_c1', 'scale': 'ln', 'value': ln_net_c1, 'holds': ln_net <= ln_net_c1},
        {'step': 'net_size_c2', 'scale': 'ln', 'value': ln_net_c2, 'holds': ln_net_c1 <= ln_net_c2},
        {'step': 'graph_count', 'scale': 'lnln', 'value': lnln_graphs, 'holds': True},
        {'step': 'skeleton_count', 'scale': 'lnln', 'value': lnln_skeletons,
         'holds': lnln_graphs <= lnln_skeletons},
        {'step': 'skeleton_c3', 'scale': 'lnln', 'value': lnln_c3, 'holds': lnln_skeletons <= lnln_c3},
        {'step': 'manifolds_c4', 'scale': 'lnln', 'value': lnln_c4, 'holds': lnln_skeletons <= lnln_c4},
    ]
    table = pd.DataFrame(rows, columns=CHAIN_COLUMNS)
    failing = table.loc[~table['holds'], 'step'].tolist()
    if failing:
        logger.info(f"With d={d} the chosen constants do not close the chain at: {', '.join(failing)}")
    return UpperBoundChain(consts=consts, table=table)
