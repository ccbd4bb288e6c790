# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Real roots of sparse polynomials on (0, 1): a fine sign-change scan,
bisection of each bracket and a guarded Newton polish.
"""

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .exceptions import ConfigurationError, DomainError, NumericError, RootNotFoundError
from .series_engine import Interval
from .settings import get_logger, get_setting, METHOD_BISECTION, METHOD_BISECTION_NEWTON

logger = get_logger(__file__)

MAX_NEWTON_STEPS = 5
MAX_BISECTIONS = 200
TANGENTIAL_THRESHOLD = 1e-10


@dataclass
class PolynomialSpec:
    """
    A polynomial given as {exponent: coefficient}.
    """
    coefficients: Dict[int, float]
    description: str = ''
    dense: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        coefficients = {}
        for exponent, value in self.coefficients.items():
            if int(exponent) != exponent or exponent < 0:
                raise DomainError(f"Exponents must be non-negative integers, got {exponent}")
            if not math.isfinite(value):
                raise NumericError(f"Coefficient of r^{exponent} is not finite")
            if value != 0:
                coefficients[int(exponent)] = float(value)
        if not coefficients or max(coefficients) < 1:
            raise DomainError("A polynomial of degree at least 1 is required")
        self.coefficients = coefficients
        self.dense = np.zeros(max(coefficients) + 1)
        for exponent, value in coefficients.items():
            self.dense[exponent] = value

    @property
    def degree(self) -> int:
        return len(self.dense) - 1

    def __call__(self, x):
        return P.polyval(x, self.dense)

    def derivative(self, x):
        return P.polyval(x, P.polyder(self.dense))

    def __str__(self):
        terms = []
        for exponent in sorted(self.coefficients, reverse=True):
            value = self.coefficients[exponent]
            power = '' if exponent == 0 else ('r' if exponent == 1 else f'r^{exponent}')
            magnitude = f"{abs(value):g}" if (abs(value) != 1 or exponent == 0) else ''
            sign = '-' if value < 0 else '+'
            terms.append(f"{sign} {magnitude}{power}")
        text = ' '.join(terms)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def to_dict(self):
        return {
            'coefficients': {str(k): v for k, v in sorted(self.coefficients.items())},
            'description': self.description,
        }


@dataclass
class RootResult:
    root: float
    residual: float
    bracket: Interval
    iterations: int
    method: str

    def to_dict(self):
        return {
            'root': self.root,
            'residual': self.residual,
            'bracket': self.bracket.to_dict(),
            'iterations': self.iterations,
            'method': self.method,
        }


def theorem1_polynomial(p: int) -> PolynomialSpec:
    """
    8 r^{2p} + r^{2(p-1)} - 6 r^{p-1} + 1, with coinciding exponents merged.
    """
    if int(p) != p or p < 1:
        raise DomainError(f"p must be a positive integer, got {p}")
    p = int(p)
    coefficients = defaultdict(float)
    for exponent, value in ((0, 1.0), (p - 1, -6.0), (2 * (p - 1), 1.0), (2 * p, 8.0)):
        coefficients[exponent] += value
    return PolynomialSpec(dict(coefficients), description=f"8r^{2 * p} + r^{2 * (p - 1)} - 6r^{p - 1} + 1")


def theorem2_cubic() -> PolynomialSpec:
    return PolynomialSpec({0: 1.0, 1: -1.0, 2: -2.0, 3: 1.0}, description="r^3 - 2r^2 - r + 1")


def abs_quartic() -> PolynomialSpec:
    return PolynomialSpec({0: 1.0, 1: -4.0, 2: -2.0, 3: 4.0, 4: 5.0}, description="5r^4 + 4r^3 - 2r^2 - 4r + 1")


def bisect(func: Callable[[float], float], lo: float, hi: float, tol: float) -> Tuple[float, float, int]:
    """
    Shrink a sign-change bracket of func below width tol.

    :return: (lo, hi, iterations); the bracket still changes sign, or an
        endpoint is an exact zero
    """
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0:
        return lo, lo, 0
    if f_hi == 0:
        return hi, hi, 0
    if np.sign(f_lo) == np.sign(f_hi):
        raise NumericError(f"[{lo}, {hi}] is not a sign-change bracket")
    iterations = 0
    while hi - lo >= tol and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        f_mid = func(mid)
        iterations += 1
        if f_mid == 0:
            return mid, mid, iterations
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo, hi, iterations


def _refine(poly: PolynomialSpec, lo: float, hi: float, tol: float) -> RootResult:
    bracket_lo, bracket_hi = lo, hi
    lo, hi, iterations = bisect(poly, lo, hi, tol)
    root = 0.5 * (lo + hi)
    if lo == hi:
        lo, hi = bracket_lo, bracket_hi
    residual = abs(float(poly(root)))
    method = METHOD_BISECTION
    for _ in range(MAX_NEWTON_STEPS):
        if residual == 0:
            break
        slope = float(poly.derivative(root))
        if slope == 0 or not math.isfinite(slope):
            break
        candidate = root - float(poly(root)) / slope
        if not lo <= candidate <= hi or candidate == root:
            break
        candidate_residual = abs(float(poly(candidate)))
        if candidate_residual >= residual:
            break
        root, residual = candidate, candidate_residual
        iterations += 1
        method = METHOD_BISECTION_NEWTON
    if residual >= tol:
        logger.warning(f"Root {root:.15g} of {poly.description or poly} has residual {residual:.3e} at the rounding floor")
    return RootResult(root, residual, Interval(lo, hi), iterations, method)


def roots_in_unit_interval(poly: PolynomialSpec, scan_step: float = None, tol: float = None) -> List[RootResult]:
    """
    All sign-change roots of poly in (0, 1), ascending.

    Roots where the polynomial touches zero without changing sign are not
    bracketed; a warning is logged when the scan passes that close to zero.
    """
    if scan_step is None:
        scan_step = get_setting('scan_step')
    if tol is None:
        tol = get_setting('root_tolerance')
    if not 0 < scan_step <= 1e-3:
        raise ConfigurationError(f"scan_step must lie in (0, 1e-3], got {scan_step}")
    if not tol > 0:
        raise ConfigurationError(f"Root tolerance must be positive, got {tol}")

    count = int(round(1 / scan_step))
    grid = np.linspace(0.0, 1.0, count + 1)
    values = poly(grid)
    if not np.all(np.isfinite(values)):
        raise NumericError(f"{poly} is not finite on [0, 1]")
    signs = np.sign(values)

    brackets = [(grid[i], grid[i + 1]) for i in np.nonzero(signs[:-1] * signs[1:] < 0)[0]]
    for i in np.nonzero(signs[1:-1] == 0)[0] + 1:
        if signs[i - 1] * signs[i + 1] < 0:
            brackets.append((grid[i - 1], grid[i + 1]))

    magnitude = np.abs(values)
    for i in range(1, count):
        if (magnitude[i] < TANGENTIAL_THRESHOLD and magnitude[i] <= magnitude[i - 1]
                and magnitude[i] <= magnitude[i + 1] and signs[i - 1] * signs[i + 1] > 0):
            logger.warning(f"{poly} nearly touches zero at r={grid[i]:.6f} without changing sign")

    results = sorted((_refine(poly, lo, hi, tol) for lo, hi in brackets), key=lambda r: r.root)
    logger.debug(f"{poly}: {len(results)} root(s) in (0, 1)")
    return results


def maximal_positive_root(poly: PolynomialSpec, tol: float = None, scan_step: float = None) -> RootResult:
    roots = roots_in_unit_interval(poly, scan_step=scan_step, tol=tol)
    if not roots:
        raise RootNotFoundError(f"{poly} has no root in (0, 1)")
    return roots[-1]


def minimal_positive_root(poly: PolynomialSpec, tol: float = None, scan_step: float = None) -> RootResult:
    roots = roots_in_unit_interval(poly, scan_step=scan_step, tol=tol)
    if not roots:
        raise RootNotFoundError(f"{poly} has no root in (0, 1)")
    return roots[0]
