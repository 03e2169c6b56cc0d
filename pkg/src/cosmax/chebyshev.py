"""Chebyshev polynomials of the first kind, plus a stable weighted sum.

T_k satisfies T_k(cos(phi)) = cos(k*phi), the recurrence
T_{k+1}(x) = 2x*T_k(x) - T_{k-1}(x) with T_0 = 1 and T_1 = x, and
|T_k(x)| <= 1 for x in [-1, 1].
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from .errors import DomainError

# Recurrence cost is O(k); refuse anything above this rather than stall.
K_MAX = 10**6


def _check_degree(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(f"degree must be an integer, got {k!r}")
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    if k > K_MAX:
        raise DomainError(f"degree must be at most {K_MAX}, got {k}")


def _check_x(x: float) -> None:
    if not (-1.0 <= x <= 1.0):
        raise DomainError(f"x must lie in [-1, 1], got {x!r}")


def cheb_t(k: int, x: float) -> float:
    """Evaluate T_k(x) with the ascending three-term recurrence.

    Rounding can push the recurrence a few ulp outside [-1, 1] for large
    k; the exact value always lies inside, so the result is clamped back,
    which can only reduce the error.
    """
    _check_degree(k)
    _check_x(x)
    if k == 0:
        return 1.0
    prev, cur = 1.0, x
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return max(-1.0, min(1.0, cur))


def cheb_t_trig(k: int, x: float) -> float:
    """Evaluate T_k(x) as cos(k*arccos(x)).

    Cross-check twin for cheb_t; arccos loses accuracy near x = +-1, so
    this is not the production path.
    """
    _check_degree(k)
    _check_x(x)
    return math.cos(k * math.acos(x))


def clenshaw_sum(c: Sequence[float], x: float) -> float:
    """Evaluate sum_{k=0}^{N} c[k] * T_k(x) by Clenshaw's backward recurrence.

    b_j = c_j + 2x*b_{j+1} - b_{j+2} for j = N..1, then the sum is
    c_0 + x*b_1 - b_2.  c must be nonempty with finite entries.
    """
    if len(c) == 0:
        raise DomainError("coefficient sequence must not be empty")
    for ck in c:
        if not math.isfinite(ck):
            raise DomainError(f"coefficients must be finite, got {ck!r}")
    _check_x(x)
    b1 = 0.0
    b2 = 0.0
    two_x = 2.0 * x
    for ck in reversed(c[1:]):
        b1, b2 = ck + two_x * b1 - b2, b1
    return c[0] + x * b1 - b2
