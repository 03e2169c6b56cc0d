"""Cross-route consistency engine and grid scanners.

Four scanners, each returning a Report:

- consistency_scan: every admissible route pair must agree within the sum
  of the reported bounds plus a slack of max(1e-12, tol/2).  The slack
  scales with the requested tolerance because the quadrature error
  estimate is asymptotic: at coarse tolerances (panels too wide for the
  h^4 model) the true error can run a small factor past the report, and
  tol/2 absorbs that without loosening the tight-tolerance regime.
- monotonicity_scan: forward differences of f in x must be positive, and
  the derivative route must be positive at every grid point.
- inequality_scan: f(1, r) - f(cos phi, r) must exceed the combined
  evaluation error bounds, so a pass is meaningful in floating point.
- identity_scan: partial sums of sum (-1)^{k+1} T_k(x) r^k must approach
  their closed form within r^{N+1}/(1-r), and the generating function at
  z = -r must equal 1 minus that closed form.

Scans run sequentially in var-major then r order; min_margin ties break
to first occurrence, so reports are deterministic for identical inputs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

from .analytic import f_at_one, f_at_one_error_bound, f_closed
from .errors import DomainError, ToleranceUnreachable, UnsupportedParameters
from .quadrature import dfdx_quad, f_quad
from .series import (
    SERIES_R_MAX,
    EvalPoint,
    EvalResult,
    Tolerance,
    f_series,
    generating_lhs,
    generating_partial_sum,
)

DEFAULT_INSET = 1e-3
SERIES_DISPATCH_R = 1e-3
CONSISTENCY_SLACK = 1e-12
MIN_DIFF_SPACING = 1e-2
IDENTITY_PARTIAL_ORDERS = (5, 20, 80)

SCAN_KINDS = ("consistency", "monotonicity", "inequality", "identity")


@dataclass(frozen=True)
class ScanGrid:
    """Uniform (var, r) grid kept strictly inside the open parts of the domain.

    var_kind "x_grid" requires var values in [-1+inset, 1]; "phi_grid"
    requires [inset, pi-inset]; r always lies in [inset, 1].
    """

    var_kind: str
    var_min: float
    var_max: float
    var_count: int
    r_min: float
    r_max: float
    r_count: int
    inset: float = DEFAULT_INSET

    def __post_init__(self) -> None:
        if self.var_kind not in ("x_grid", "phi_grid"):
            raise DomainError(f"var_kind must be x_grid or phi_grid, got {self.var_kind!r}")
        for name in ("var_min", "var_max", "r_min", "r_max", "inset"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)):
                raise DomainError(f"{name} must be a finite number, got {v!r}")
        for name in ("var_count", "r_count"):
            v = getattr(self, name)
            if not (isinstance(v, int) and not isinstance(v, bool) and v >= 1):
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
        if not (0.0 < self.inset < 1.0):
            raise DomainError(f"inset must lie in (0, 1), got {self.inset!r}")
        if self.var_min > self.var_max:
            raise DomainError(f"var_min {self.var_min!r} exceeds var_max {self.var_max!r}")
        if self.r_min > self.r_max:
            raise DomainError(f"r_min {self.r_min!r} exceeds r_max {self.r_max!r}")
        if self.var_kind == "x_grid":
            if self.var_min < -1.0 + self.inset or self.var_max > 1.0:
                raise DomainError(
                    f"x grid must lie in [{-1.0 + self.inset!r}, 1], "
                    f"got [{self.var_min!r}, {self.var_max!r}]"
                )
        else:
            if self.var_min < self.inset or self.var_max > math.pi - self.inset:
                raise DomainError(
                    f"phi grid must lie in [{self.inset!r}, {math.pi - self.inset!r}] "
                    f"(phi grid must be positive), got [{self.var_min!r}, {self.var_max!r}]"
                )
        if self.r_min < self.inset or self.r_max > 1.0:
            raise DomainError(
                f"r grid must lie in [{self.inset!r}, 1], got [{self.r_min!r}, {self.r_max!r}]"
            )

    def var_values(self) -> list[float]:
        return _linspace(self.var_min, self.var_max, self.var_count)

    def r_values(self) -> list[float]:
        return _linspace(self.r_min, self.r_max, self.r_count)


def _linspace(a: float, b: float, n: int) -> list[float]:
    if n == 1:
        return [a]
    step = (b - a) / (n - 1)
    vals = [a + i * step for i in range(n)]
    vals[-1] = b  # exact endpoint regardless of rounding
    return vals


@dataclass(frozen=True)
class Violation:
    """One failed check: grid point, the observed quantity, the bound it broke."""

    var: float
    r: float
    observed: float
    bound: float


@dataclass(frozen=True)
class Report:
    """Scan outcome.

    min_margin is the smallest slack observed anywhere (negative margins
    mean violations); worst_point is where it occurred, first occurrence
    winning ties.  elapsed is wall-clock seconds and is excluded from
    machine-readable serializations so identical inputs serialize to
    identical bytes.
    """

    kind: str
    points_checked: int
    violations: tuple[Violation, ...]
    min_margin: float
    worst_point: tuple[float, float]
    elapsed: float

    def __post_init__(self) -> None:
        if self.kind not in SCAN_KINDS:
            raise DomainError(f"kind must be one of {SCAN_KINDS}, got {self.kind!r}")

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        """Serializable form (elapsed deliberately omitted)."""
        return {
            "kind": self.kind,
            "points_checked": self.points_checked,
            "violations": [
                {"point": [v.var, v.r], "observed": v.observed, "bound": v.bound}
                for v in self.violations
            ],
            "min_margin": self.min_margin,
            "worst_point": [self.worst_point[0], self.worst_point[1]],
            "pass": self.passed,
        }


def default_grid(kind: str, inset: float = DEFAULT_INSET) -> ScanGrid:
    """Default grid for each scan kind, with ranges tracking the inset."""
    if kind == "consistency":
        return ScanGrid("x_grid", -1.0 + inset, 1.0, 40, max(0.01, inset), 1.0, 20, inset)
    if kind == "monotonicity":
        return ScanGrid("x_grid", max(-0.99, -1.0 + inset), 1.0, 30, max(0.05, inset), 1.0, 10, inset)
    if kind == "inequality":
        return ScanGrid("phi_grid", inset, math.pi - inset, 100, inset, 1.0, 100, inset)
    if kind == "identity":
        return ScanGrid("x_grid", -0.9, 1.0, 15, 0.05, 0.95, 10, inset)
    raise DomainError(f"unknown scan kind {kind!r}")


def dispatch_eval(p: EvalPoint, tol: Tolerance = Tolerance()) -> EvalResult:
    """Route selection: series below r = 1e-3 (avoids the 1/r^2 rescaling
    amplification in quadrature and the closed form's cancellation),
    closed form otherwise, quadrature as the fallback when the chosen
    route refuses the point or gives up on the tolerance."""
    try:
        if p.r < SERIES_DISPATCH_R:
            return f_series(p, tol)
        return f_closed(p)
    except (DomainError, UnsupportedParameters, ToleranceUnreachable):
        return f_quad(p, tol)


def _located(err: Exception, var: float, r: float) -> Exception:
    return type(err)(f"{err} [at grid point var = {var!r}, r = {r!r}]")


def _require_kind(g: ScanGrid, kind: str, op: str) -> None:
    if g.var_kind != kind:
        raise DomainError(f"{op} requires var_kind = {kind!r}, got {g.var_kind!r}")


def consistency_scan(
    g: ScanGrid,
    tol: Tolerance = Tolerance(1e-10),
    *,
    series_eval: Callable[[EvalPoint, Tolerance], EvalResult] = f_series,
    quad_eval: Callable[[EvalPoint, Tolerance], EvalResult] = f_quad,
    closed_eval: Callable[[EvalPoint], EvalResult] = f_closed,
) -> Report:
    """Compare every admissible route pair at each grid point.

    A pair violates if |v_i - v_j| > bound_i + bound_j + slack, where
    slack = max(1e-12, tol/2) (see the module docstring).  The series
    route is skipped where it refuses r (above 1 - 1e-9).  The eval
    keyword hooks exist for mutation-sensitivity fixtures.
    """
    _require_kind(g, "x_grid", "consistency_scan")
    slack = max(CONSISTENCY_SLACK, 0.5 * tol.effective())
    t0 = time.perf_counter()
    points = 0
    violations: list[Violation] = []
    min_margin = math.inf
    worst = (g.var_min, g.r_min)
    for x in g.var_values():
        for r in g.r_values():
            p = EvalPoint(x, r)
            points += 1
            try:
                results = []
                if r <= SERIES_R_MAX:
                    results.append(series_eval(p, tol))
                results.append(quad_eval(p, tol))
                results.append(closed_eval(p))
            except (DomainError, UnsupportedParameters, ToleranceUnreachable) as err:
                raise _located(err, x, r) from err
            for i in range(len(results)):
                for j in range(i + 1, len(results)):
                    diff = abs(results[i].value - results[j].value)
                    bound = results[i].error_bound + results[j].error_bound + slack
                    slack = bound - diff
                    if slack < min_margin:
                        min_margin = slack
                        worst = (x, r)
                    if diff > bound:
                        violations.append(Violation(x, r, diff, bound))
    return Report(
        "consistency", points, tuple(violations), min_margin, worst,
        time.perf_counter() - t0,
    )


def monotonicity_scan(
    g: ScanGrid,
    tol: Tolerance = Tolerance(1e-10),
    *,
    eval_fn: Callable[[EvalPoint, Tolerance], EvalResult] = dispatch_eval,
    dfdx_fn: Callable[[EvalPoint, Tolerance], EvalResult] = dfdx_quad,
) -> Report:
    """Check that f increases in x.

    For each r, forward differences across consecutive x at least 1e-2
    apart must exceed the two evaluation bounds combined; the derivative
    route must be positive beyond its own bound at every grid point.
    min_margin is the smallest forward difference found.
    """
    _require_kind(g, "x_grid", "monotonicity_scan")
    if g.var_count < 3:
        raise DomainError(f"monotonicity_scan requires var_count >= 3, got {g.var_count}")
    t0 = time.perf_counter()
    xs = g.var_values()
    rs = g.r_values()
    try:
        values = [[eval_fn(EvalPoint(x, r), tol) for r in rs] for x in xs]
    except (DomainError, UnsupportedParameters, ToleranceUnreachable) as err:
        raise type(err)(f"{err} [while tabulating the monotonicity grid]") from err
    violations: list[Violation] = []
    min_margin = math.inf
    worst = (xs[0], rs[0])
    for i in range(len(xs) - 1):
        if xs[i + 1] - xs[i] < MIN_DIFF_SPACING:
            continue
        for j, r in enumerate(rs):
            lo, hi = values[i][j], values[i + 1][j]
            diff = hi.value - lo.value
            if diff < min_margin:
                min_margin = diff
                worst = (xs[i], r)
            if diff <= lo.error_bound + hi.error_bound:
                violations.append(Violation(xs[i], r, diff, lo.error_bound + hi.error_bound))
    for x in xs:
        for r in rs:
            try:
                d = dfdx_fn(EvalPoint(x, r), tol)
            except (DomainError, UnsupportedParameters, ToleranceUnreachable) as err:
                raise _located(err, x, r) from err
            if d.value <= d.error_bound:
                violations.append(Violation(x, r, d.value, d.error_bound))
    return Report(
        "monotonicity", len(xs) * len(rs), tuple(violations), min_margin, worst,
        time.perf_counter() - t0,
    )


def inequality_scan(
    g: ScanGrid,
    tol: Tolerance = Tolerance(1e-10),
    *,
    eval_fn: Callable[[EvalPoint, Tolerance], EvalResult] = dispatch_eval,
) -> Report:
    """Check f(1, r) - f(cos phi, r) > 0 across the phi grid.

    The margin must exceed the combined evaluation error bounds of the
    two sides, so a pass is meaningful in floating point.  min_margin is
    the smallest raw margin; it is expected near the small-phi edge.
    """
    _require_kind(g, "phi_grid", "inequality_scan")
    t0 = time.perf_counter()
    points = 0
    violations: list[Violation] = []
    min_margin = math.inf
    worst = (g.var_min, g.r_min)
    for phi in g.var_values():
        x = math.cos(phi)
        for r in g.r_values():
            points += 1
            try:
                res = eval_fn(EvalPoint(x, r), tol)
                top = f_at_one(r)
                bound = res.error_bound + f_at_one_error_bound(r)
            except (DomainError, UnsupportedParameters, ToleranceUnreachable) as err:
                raise _located(err, phi, r) from err
            m = top - res.value
            if m < min_margin:
                min_margin = m
                worst = (phi, r)
            if m <= bound:
                violations.append(Violation(phi, r, m, bound))
    return Report(
        "inequality", points, tuple(violations), min_margin, worst,
        time.perf_counter() - t0,
    )


def identity_scan(
    tol: Tolerance = Tolerance(1e-10),
    *,
    lhs_fn: Callable[[EvalPoint], float] = generating_lhs,
) -> Report:
    """Verify the generating-function identities on a fixed 15x10 grid.

    (i) partial sums of sum (-1)^{k+1} T_k(x) r^k for N in {5, 20, 80}
    must sit within r^{N+1}/(1-r) of the closed form; (ii) the generating
    function (1-xz)/(1-2xz+z^2) at z = -r must equal 1 minus that closed
    form, which is the constant-term rearrangement the series route rests
    on.  The x grid is [-0.9, 1] (15 points), r is [0.05, 0.95] (10).
    """
    t0 = time.perf_counter()
    g = default_grid("identity")
    algebra_tol = max(tol.effective(), 1e-13)
    points = 0
    violations: list[Violation] = []
    min_margin = math.inf
    worst = (g.var_min, g.r_min)
    for x in g.var_values():
        for r in g.r_values():
            p = EvalPoint(x, r)
            points += 1
            lhs = lhs_fn(p)
            for n in IDENTITY_PARTIAL_ORDERS:
                residual = abs(lhs - generating_partial_sum(p, n))
                bound = r ** (n + 1) / (1.0 - r) + 1e-12
                slack = bound - residual
                if slack < min_margin:
                    min_margin = slack
                    worst = (x, r)
                if residual > bound:
                    violations.append(Violation(x, r, residual, bound))
            z = -r
            gen = (1.0 - x * z) / (1.0 - 2.0 * x * z + z * z)
            residual = abs(gen - (1.0 - lhs))
            slack = algebra_tol - residual
            if slack < min_margin:
                min_margin = slack
                worst = (x, r)
            if residual > algebra_tol:
                violations.append(Violation(x, r, residual, algebra_tol))
    return Report(
        "identity", points, tuple(violations), min_margin, worst,
        time.perf_counter() - t0,
    )
