# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Bohr-type radii and the optimisation problems behind them.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .exceptions import DomainError, NumericError
from .optimize import maximize_on_interval
from .rootfind import (
    abs_quartic,
    bisect,
    maximal_positive_root,
    minimal_positive_root,
    roots_in_unit_interval,
    theorem1_polynomial,
    theorem2_cubic,
)
from .series_engine import Interval, PowerSeries, mobius_coefficients, p_symmetrize
from .settings import (
    get_logger,
    get_setting,
    PROVENANCE_CLOSED_FORM,
    PROVENANCE_OPTIMIZED,
    PROVENANCE_ROOT_FOUND,
    RADIUS_ABS_LOWER,
    RADIUS_CLOSED_FORM_R_STAR,
    RADIUS_COROLLARY5,
    RADIUS_REMARK1_IMPROVED,
    RADIUS_SUBORDINATION,
    RADIUS_THEOREM1,
)

logger = get_logger(__file__)

GOLDEN_RADIUS = (math.sqrt(5) - 1) / 2
REMARK1_GRID_POINTS = 10_000
REMARK1_BRACKET = (0.5, GOLDEN_RADIUS)
REMARK1_TOLERANCE = 1e-9
# The reduction y = 1 - x^2 is justified for r up to this value
REMARK1_REDUCTION_LIMIT = 0.6


@dataclass
class RadiusResult:
    label: str
    radius: float
    residual: float
    provenance: str
    extremal_a: Optional[float] = None
    bracket: Optional[Interval] = None
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 < self.radius < 1:
            raise NumericError(f"{self.label} radius {self.radius} escaped (0, 1)")
        if (self.extremal_a is not None) != (self.label == RADIUS_THEOREM1):
            raise DomainError("extremal_a accompanies theorem1 radii and nothing else")

    def describe(self) -> str:
        text = f"{self.label}: r = {self.radius:.12g}  residual = {self.residual:.3e}  ({self.provenance})"
        if self.extremal_a is not None:
            text += f"  extremal a = {self.extremal_a:.12g}"
        return text

    def to_dict(self):
        return {
            'label': self.label,
            'radius': self.radius,
            'residual': self.residual,
            'provenance': self.provenance,
            'extremal_a': self.extremal_a,
            'bracket': self.bracket.to_dict() if self.bracket is not None else None,
            'parameters': self.parameters,
        }


@dataclass(frozen=True)
class ClosedFormConstants:
    B: float

    def __post_init__(self):
        if not self.B > 2:
            raise NumericError(f"B = {self.B} must exceed 2")


@dataclass
class OptimizationResult:
    x_opt: float
    value: float
    boundary_active: bool
    y_opt: Optional[float] = None

    def to_dict(self):
        return {'x_opt': self.x_opt, 'y_opt': self.y_opt, 'value': self.value, 'boundary_active': self.boundary_active}


def _check_p(p):
    if int(p) != p or p < 1:
        raise DomainError(f"p must be a positive integer, got {p}")
    return int(p)


def bohr_radius_p_symmetric(p: int, tol: float = None) -> RadiusResult:
    p = _check_p(p)
    if tol is None:
        tol = get_setting('radius_tolerance')
    root = maximal_positive_root(theorem1_polynomial(p), tol=tol)
    result = RadiusResult(
        RADIUS_THEOREM1,
        root.root,
        root.residual,
        PROVENANCE_ROOT_FOUND,
        extremal_a=extremal_parameter(p, root.root),
        bracket=root.bracket,
        parameters={'p': p, 'method': root.method, 'iterations': root.iterations},
    )
    logger.info(f"p={p}: {result.describe()}")
    return result


def extremal_parameter(p: int, r: float) -> float:
    """
    a = (1 - sqrt(1 - r^{2p}) / sqrt(2)) / r^p, the parameter of the extremal
    function z (z^p - a) / (1 - a z^p) when r is the radius r_p.

    :raises DomainError: if r^{2p} >= 1 or the result falls outside (0, 1)
    """
    p = _check_p(p)
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    rp = r ** p
    if rp * rp >= 1:
        raise DomainError(f"r^(2p) = {rp * rp} must be below 1")
    a = (1 - math.sqrt(1 - rp * rp) / math.sqrt(2)) / rp
    if not 0 < a < 1:
        raise DomainError(f"a = {a} lies outside (0, 1); the formula is meant for r = r_p (got r = {r}, p = {p})")
    return a


def extremal_series(p: int, a: float, order: int) -> PowerSeries:
    """
    z (z^p - a) / (1 - a z^p) as z g(z^p) with g(u) = (u - a) / (1 - a u).
    """
    p = _check_p(p)
    if not 0 < a < 1:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    g = mobius_coefficients(a, order)
    return p_symmetrize(PowerSeries(-g.coeffs, sup_bound=1.0), p)


def extremal_majorant(p: int, a: float, r: float) -> float:
    p = _check_p(p)
    if not 0 < a < 1 or not 0 <= r < 1:
        raise DomainError(f"Need 0 < a < 1 and 0 <= r < 1, got a = {a}, r = {r}")
    rp = r ** p
    return r * (a + (1 - a * a) * rp / (1 - a * rp))


def closed_form_constants() -> ClosedFormConstants:
    root327 = math.sqrt(327)
    return ClosedFormConstants(float(np.cbrt(3601 - 192 * root327) + np.cbrt(3601 + 192 * root327)))


def closed_form_r_star() -> RadiusResult:
    B = closed_form_constants().B
    inner = 3 * math.sqrt(6 / (B - 2)) - B / 24 - 1 / 6
    if inner < 0:
        raise NumericError(f"Negative radicand {inner} in the closed form")
    r = math.sqrt((B - 2) / 6) / 4 + math.sqrt(inner) / 2
    residual = abs(float(theorem1_polynomial(2)(r)))
    return RadiusResult(RADIUS_CLOSED_FORM_R_STAR, r, residual, PROVENANCE_CLOSED_FORM, parameters={'B': B})


def psi_case1(x, alpha: float):
    """
    x + alpha (1 - x^2) / (1 - alpha x); equals 1 + 2x at alpha = 1.
    """
    x = np.asarray(x, dtype=float)
    if alpha == 1:
        return 1 + 2 * x
    return x + alpha * (1 - x * x) / (1 - alpha * x)


def psi_case1_max(alpha: float) -> OptimizationResult:
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if alpha >= 1 / 3:
        x1 = (1 - math.sqrt(1 - alpha * alpha) / math.sqrt(2)) / alpha
        x_opt = min(max(x1, 0.0), 1.0)
        boundary_active = x_opt != x1
    else:
        x_opt, _ = maximize_on_interval(lambda x: psi_case1(x, alpha), 0.0, 1.0, grid_points=REMARK1_GRID_POINTS)
        boundary_active = x_opt in (0.0, 1.0)
    return OptimizationResult(x_opt, float(psi_case1(x_opt, alpha)), boundary_active)


def case2_bound(p: int, r: float, a: float) -> float:
    p = _check_p(p)
    rp = r ** p if r > 0 else 0.0
    if not (0 < r and 0 <= a < rp < 1):
        raise DomainError(f"Need 0 <= a < r^p < 1, got a = {a}, r = {r}, p = {p}")
    return r * (a + rp * math.sqrt(1 - a * a) / math.sqrt(1 - rp * rp))


def additional_bound(p: int, r: float, a: float, rho: float) -> float:
    """
    r^p (1 - a^2) / sqrt(1 - a^2 r^p rho^p) / sqrt(1 - rho^-p r^p), the bound on
    sum_{k>=1} |b_k| r^{pk} obtained from Cauchy-Schwarz with weights rho^{pk}.
    """
    p = _check_p(p)
    if not (0 < r < 1 and 0 <= a < 1 and rho > 1 and rho * r <= 1):
        raise DomainError(f"Need 0 < r < 1, 0 <= a < 1, rho > 1, rho r <= 1; got r = {r}, a = {a}, rho = {rho}")
    rp = r ** p
    first = 1 - a * a * rp * rho ** p
    second = 1 - rp / rho ** p
    if first <= 0 or second <= 0:
        raise DomainError("Radicand is not positive")
    return rp * (1 - a * a) / math.sqrt(first) / math.sqrt(second)


def finish1_bound(p: int, r: float) -> float:
    p = _check_p(p)
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    return (3 - 2 * math.sqrt(2) * math.sqrt(1 - r ** (2 * p))) / r ** (p - 1)


def subordination_radius(tol: float = None) -> RadiusResult:
    if tol is None:
        tol = get_setting('radius_tolerance')
    root = minimal_positive_root(theorem2_cubic(), tol=tol)
    x = root.root
    residual = abs(x * x - (1 - x) ** 2 * (1 + x))
    result = RadiusResult(RADIUS_SUBORDINATION, x, residual, PROVENANCE_ROOT_FOUND, bracket=root.bracket)
    logger.info(result.describe())
    return result


def subordination_bound(r: float) -> float:
    if not 0 <= r < 1:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    return r / ((1 - r) * math.sqrt(1 + r))


def psi_remark1(x, y, r: float):
    """
    r x + r^2 y + r^2 / sqrt(1 - r) * sqrt(1 / (1 - r^2) - x^2 - r y^2)
    """
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x < 0) or np.any(x > 1):
        raise DomainError("x must lie in [0, 1]")
    radicand = 1 / (1 - r * r) - x * x - r * y * y
    if np.any(radicand < -1e-14):
        raise DomainError("Negative radicand")
    return r * x + r * r * y + r * r / math.sqrt(1 - r) * np.sqrt(np.maximum(radicand, 0.0))


def remark1_max(r: float) -> OptimizationResult:
    x_opt, value = maximize_on_interval(lambda x: psi_remark1(x, 1 - x * x, r), 0.0, 1.0, grid_points=REMARK1_GRID_POINTS)
    return OptimizationResult(x_opt, value, x_opt in (0.0, 1.0), y_opt=1 - x_opt * x_opt)


def remark1_stationary_y(x, r: float):
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    x = np.asarray(x, dtype=float)
    return np.sqrt(1 - x * x + r * r * x * x) / math.sqrt(r + r * r)


def remark1_interior_check(r: float, points: int = 1001) -> bool:
    """
    True if the unconstrained critical point in y lies above 1 - x^2 for every grid x.
    """
    x = np.linspace(0.0, 1.0, points)
    return bool(np.all(remark1_stationary_y(x, r) > 1 - x * x))


def remark1_improved_radius(tol: float = REMARK1_TOLERANCE) -> RadiusResult:
    def excess(r):
        return remark1_max(r).value - 1

    lo, hi = REMARK1_BRACKET
    lo, hi, iterations = bisect(excess, lo, hi, tol)
    if lo <= REMARK1_REDUCTION_LIMIT and not remark1_interior_check(lo):
        logger.warning(f"Interior critical point is feasible at r={lo}; the reduction y = 1 - x^2 does not apply")
    best = remark1_max(lo)
    result = RadiusResult(
        RADIUS_REMARK1_IMPROVED,
        lo,
        abs(best.value - 1),
        PROVENANCE_OPTIMIZED,
        bracket=Interval(lo, hi),
        parameters={'x_opt': best.x_opt, 'y_opt': best.y_opt, 'iterations': iterations},
    )
    logger.info(result.describe())
    return result


def corollary5_radius(alpha: float) -> RadiusResult:
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    # (-alpha + sqrt(4 + alpha^2)) / 2 without the cancellation
    r = 2 / (alpha + math.sqrt(4 + alpha * alpha))
    residual = abs(alpha * r / (1 - r * r) - 1)
    return RadiusResult(RADIUS_COROLLARY5, r, residual, PROVENANCE_CLOSED_FORM, parameters={'alpha': alpha})


def abs_lower_radius(tol: float = None) -> RadiusResult:
    if tol is None:
        tol = get_setting('radius_tolerance')
    lower = 1 / math.sqrt(3)
    roots = [r for r in roots_in_unit_interval(abs_quartic(), tol=tol) if r.root > lower]
    if len(roots) != 1:
        raise NumericError(f"Expected one root of the quartic in (1/sqrt(3), 1), found {len(roots)}")
    root = roots[0]
    return RadiusResult(RADIUS_ABS_LOWER, root.root, root.residual, PROVENANCE_ROOT_FOUND, bracket=root.bracket)


def lemma1_envelope(r):
    r = np.asarray(r, dtype=float)
    return (6 + 4 * math.sqrt(2) * np.sqrt(1 - r * r)) / (8 + 1 / (r * r))
