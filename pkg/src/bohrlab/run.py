# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
The work behind each CLI command.  Every function returns an OutputRecord
and leaves printing to the caller.
"""

from typing import Optional

import numpy as np

from .exceptions import DomainError
from .radii import (
    RadiusResult,
    abs_lower_radius,
    bohr_radius_p_symmetric,
    closed_form_r_star,
    corollary5_radius,
    extremal_series,
    remark1_improved_radius,
    subordination_radius,
)
from .report import OutputRecord
from .rootfind import bisect
from .series_engine import PowerSeries, majorant, mobius_coefficients
from .settings import get_logger, get_seed, get_setting
from .verify import TrialConfig, run_suites
from .verify.samplers import ODD_KOEBE, odd_univalent_samples

logger = get_logger(__file__)

RADIUS_KINDS = ['theorem1', 'rstar', 'subordination', 'remark1', 'corollary5', 'abs']
CLOSED_FORM_KINDS = ('rstar', 'corollary5')
TABLE_COLUMNS = ['p', 'r_p', 'extremal_a', 'residual', 'lemma1_value']
MAJORANT_FUNCTIONS = ['extremal', 'mobius', 'oddkoebe']
MAJORANT_COLUMNS = ['r', 'lower', 'upper', 'midpoint', 'width', 'crossing']
CROSSING_TOLERANCE = 1e-12


def compute_radius(kind: str, p: int = None, alpha: float = None, tol: float = None) -> RadiusResult:
    if kind == 'theorem1':
        if p is None:
            raise DomainError("--p is required for --kind theorem1")
        return bohr_radius_p_symmetric(p, tol=tol)
    if kind in CLOSED_FORM_KINDS and tol is not None:
        raise DomainError(f"--tol does not apply to --kind {kind}, which is a closed form")
    if kind == 'rstar':
        return closed_form_r_star()
    if kind == 'subordination':
        return subordination_radius(tol=tol)
    if kind == 'remark1':
        return remark1_improved_radius() if tol is None else remark1_improved_radius(tol=tol)
    if kind == 'corollary5':
        if alpha is None:
            raise DomainError("--alpha is required for --kind corollary5")
        return corollary5_radius(alpha)
    if kind == 'abs':
        return abs_lower_radius(tol=tol)
    raise DomainError(f"Unknown radius kind {kind!r}")


def radius(kind: str, p: int = None, alpha: float = None, tol: float = None) -> OutputRecord:
    result = compute_radius(kind, p=p, alpha=alpha, tol=tol)
    return OutputRecord('radius', {'kind': kind, 'p': p, 'alpha': alpha, 'tol': tol}, [result.to_dict()])


def table(p_max: int, tol: float = None) -> OutputRecord:
    if p_max < 1:
        raise DomainError(f"p_max must be a positive integer, got {p_max}")
    rows = []
    for p in range(1, p_max + 1):
        result = bohr_radius_p_symmetric(p, tol=tol)
        rows.append({
            'p': p,
            'r_p': result.radius,
            'extremal_a': result.extremal_a,
            'residual': result.residual,
            'lemma1_value': 2 * result.radius ** (p + 1),
        })
    return OutputRecord('table', {'p_max': p_max, 'tol': tol}, rows)


def verify(suite: str, p: int = None, trials: int = None, seed: int = None, p_max: int = 32) -> OutputRecord:
    config = TrialConfig.from_settings(trials=trials, seed=get_seed(seed))
    reports = run_suites(suite, config, p=p, p_max=p_max)
    arguments = {'suite': suite, 'p': p, 'trials': config.trials, 'seed': config.seed, 'p_max': p_max}
    return OutputRecord('verify', arguments, [r.to_dict() for r in reports])


def majorant_series(function: str, p: int = None, a: float = None, truncation: int = None) -> PowerSeries:
    truncation = truncation if truncation is not None else get_setting('truncation')
    if function == 'extremal':
        p = p if p is not None else 2
        if a is None:
            a = bohr_radius_p_symmetric(p).extremal_a
        return extremal_series(p, a, truncation)
    if function == 'mobius':
        if a is None:
            raise DomainError("--a is required for --function mobius")
        return mobius_coefficients(a, truncation)
    if function == 'oddkoebe':
        return dict(odd_univalent_samples(truncation))[ODD_KOEBE]
    raise DomainError(f"Unknown function {function!r}")


def majorant_sweep(
        function: str,
        r_from: float,
        r_to: float,
        steps: int,
        p: int = None,
        a: float = None,
        truncation: int = None
) -> OutputRecord:
    """
    Certified M_f(r) on an even grid; the row whose step brackets M = 1 carries
    the crossing refined by bisection on the interval midpoint.
    """
    if not 0 <= r_from < r_to < 1:
        raise DomainError(f"Need 0 <= r_from < r_to < 1, got {r_from}, {r_to}")
    if steps < 2:
        raise DomainError(f"steps must be at least 2, got {steps}")
    series = majorant_series(function, p=p, a=a, truncation=truncation)
    grid = np.linspace(r_from, r_to, steps)
    intervals = [majorant(series, r) for r in grid]
    rows = [
        {'r': float(r), 'lower': i.lo, 'upper': i.hi, 'midpoint': i.mid, 'width': i.width, 'crossing': None}
        for r, i in zip(grid, intervals)
    ]
    crossing: Optional[float] = None
    for k in range(steps - 1):
        if intervals[k].mid <= 1 < intervals[k + 1].mid:
            lo, hi, _ = bisect(lambda r: majorant(series, r).mid - 1, float(grid[k]), float(grid[k + 1]), CROSSING_TOLERANCE)
            crossing = 0.5 * (lo + hi)
            rows[k]['crossing'] = crossing
            break
    if crossing is None:
        logger.info(f"M = 1 is not crossed on [{r_from}, {r_to}] for {function}")
    arguments = {'function': function, 'p': p, 'a': a, 'r_from': r_from, 'r_to': r_to, 'steps': steps}
    return OutputRecord('majorant', arguments, rows)
