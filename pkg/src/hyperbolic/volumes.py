"""Ball volumes in hyperbolic space and the estimates built from them.

Vol B(R) = Vol(S^(n-1)) * integral_0^R sinh^(n-1)(t) dt, evaluated with
adaptive quadrature. ``log_ball_volume`` stays finite where the volume
itself under- or overflows.
"""

import math

from scipy.integrate import quad
from scipy.special import gammaln

from common.errors import DomainError

DEFAULT_QUAD_TOL = 1e-12
SMALL_RADIUS = 1e-3
LARGE_RADIUS = 50.0


def _check_dimension(n: int) -> None:
    if int(n) != n or n < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {n}")


def log_sphere_area(n: int) -> float:
    """ln Vol(S^(n-1)) = ln 2 + (n/2) ln pi - ln Gamma(n/2)."""
    _check_dimension(n)
    return math.log(2.0) + 0.5 * n * math.log(math.pi) - float(gammaln(n / 2.0))


def sphere_area(n: int) -> float:
    """Vol(S^(n-1)), the area of the unit sphere bounding the unit ball of R^n."""
    return math.exp(log_sphere_area(n))


def ball_volume(n: int, R: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    """Volume of a radius-R ball in H^n by quadrature of sinh^(n-1)."""
    _check_dimension(n)
    if R < 0:
        raise DomainError(f"radius must be non-negative, got {R}")
    if R == 0:
        return 0.0
    integral, _ = quad(lambda t: math.sinh(t) ** (n - 1), 0.0, R,
                       epsabs=tol, epsrel=tol, limit=200)
    return sphere_area(n) * integral


def _log_sinh(t: float) -> float:
    return t + math.log1p(-math.exp(-2.0 * t)) - math.log(2.0)


def _log_small_ball(n: int, log_R: float) -> float:
    """Series ln Vol B(R) for small R, from ln R so that tiny radii never underflow."""
    R = math.exp(log_R)
    correction = (n - 1) * n * R * R / (6.0 * (n + 2))
    return log_sphere_area(n) + n * log_R - math.log(n) + math.log1p(correction)


def log_ball_volume(n: int, R: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    """ln Vol B(R) in H^n, finite for every R > 0 (-inf at R = 0).

    Small radii use R^n/n * (1 + n(n-1)R^2 / (6(n+2))), large radii the
    leading term e^((n-1)R) / ((n-1) 2^(n-1)); in between the integrand is
    rescaled by sinh^(n-1)(R) before quadrature.
    """
    _check_dimension(n)
    if R < 0:
        raise DomainError(f"radius must be non-negative, got {R}")
    if R == 0:
        return -math.inf
    log_area = log_sphere_area(n)
    if R < SMALL_RADIUS:
        return _log_small_ball(n, math.log(R))
    if R > LARGE_RADIUS:
        return log_area + (n - 1) * R - (n - 1) * math.log(2.0) - math.log(n - 1)

    log_top = _log_sinh(R)

    def scaled(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return math.exp((n - 1) * (_log_sinh(t) - log_top))

    integral, _ = quad(scaled, 0.0, R, epsabs=tol, epsrel=tol, limit=200)
    return log_area + (n - 1) * log_top + math.log(integral)


def euclidean_log_ball_volume(n: int, R: float) -> float:
    """ln of the Euclidean volume Vol(S^(n-1)) R^n / n."""
    _check_dimension(n)
    if R <= 0:
        return -math.inf
    return log_sphere_area(n) + n * math.log(R) - math.log(n)


def injectivity_floor(d: float, c: float) -> float:
    """Injectivity radius floor e^(-d/c) for diameter d."""
    if d < 0:
        raise DomainError(f"diameter must be non-negative, got {d}")
    if c <= 0:
        raise DomainError(f"constant c must be positive, got {c}")
    return math.exp(-d / c)


def diameter_floor_from_injectivity(eps: float, c: float) -> float:
    """-c ln(eps): how far the thin part reaches for injectivity radius eps."""
    if not 0 < eps <= 1:
        raise DomainError(f"injectivity radius must lie in (0, 1], got {eps}")
    if c <= 0:
        raise DomainError(f"constant c must be positive, got {c}")
    return -c * math.log(eps)


def log_net_size_bound(d: float, c: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    """ln(Vol B(d) / Vol B(r/4)) in H^3 with r = e^(-d/c) the injectivity floor.

    The small ball is evaluated from ln(r/4), so it never underflows.
    """
    if d <= 0:
        raise DomainError(f"diameter must be positive, got {d}")
    if c <= 0:
        raise DomainError(f"constant c must be positive, got {c}")
    log_quarter = -d / c - math.log(4.0)
    if log_quarter < math.log(SMALL_RADIUS):
        small = _log_small_ball(3, log_quarter)
    else:
        small = log_ball_volume(3, math.exp(log_quarter), tol)
    return log_ball_volume(3, d, tol) - small


def net_size_bound(d: float, c: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    """Most points an r/4-separated set in a diameter-d 3-manifold can have.

    Returns inf once the bound exceeds double precision; use
    ``log_net_size_bound`` there.
    """
    log_value = log_net_size_bound(d, c, tol)
    return math.exp(log_value) if log_value < 709.0 else math.inf


def log_degree_bound_constant(r: float, n: int = 3, tol: float = DEFAULT_QUAD_TOL) -> float:
    if r <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    return log_ball_volume(n, r + r / 8.0, tol) - log_ball_volume(n, r / 8.0, tol)


def degree_bound_constant(r: float, n: int = 3, tol: float = DEFAULT_QUAD_TOL) -> float:
    """Vol B(r + r/8) / Vol B(r/8): a packing bound on nerve vertex degrees.

    Tends to 9^n as r -> 0.
    """
    return math.exp(log_degree_bound_constant(r, n, tol))


def euclidean_degree_bound_constant(n: int = 3) -> float:
    """The same ratio in R^n, where it is 9^n for every r."""
    _check_dimension(n)
    return 9.0 ** n
