# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Suites for functions subordinate to odd univalent functions.
"""

import math

import numpy as np

from .samplers import (
    IDENTITY,
    ODD_KOEBE,
    ODD_UNIVALENT_MAPS,
    extract_subordinate,
    odd_koebe,
    odd_univalent_samples,
    random_odd_schwarz_function,
    random_schwarz_function,
)
from .suite import TrialConfig, TrialOutcome, VerificationSuite, certified_margin
from ..exceptions import DomainError
from ..radii import GOLDEN_RADIUS, corollary5_radius, subordination_bound, subordination_radius
from ..series_engine import SchwarzSpec, majorant, square_majorant
from ..settings import SUITE_EQ6, SUITE_REMARK2, SUITE_THEOREM2

PROBE_STEP = 0.01
# r = 0.95 is left out: at truncation 256 its tail is wider than the tolerance
DEFAULT_R_GRID = tuple(sorted((0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, GOLDEN_RADIUS)))


def subordinate_tail(r: float, order: int) -> float:
    """
    Tail bound for g = f o w with f dominated by the odd Koebe function.

    With sum |b_k|^2 r^k <= r / (1 - r^2), Cauchy-Schwarz gives
    sum_{k>N} |b_k| r^k <= sqrt(r / (1 - r^2) * r^{N+1} / (1 - r)).
    """
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    return math.sqrt(r / (1 - r * r) * r ** (order + 1) / (1 - r))


class Eq6Suite(VerificationSuite):
    """
        sum |a_{2k-1}| r^{2k-1} <= r / (1 - r^2) and the partial sums S_n <= n
    """
    name = SUITE_EQ6

    def __init__(self, config, samples=None, r_grid=None):
        self.samples = samples if samples is not None else odd_univalent_samples(config.truncation)
        self.r_grid = tuple(r_grid) if r_grid is not None else DEFAULT_R_GRID
        if not self.samples:
            raise DomainError("At least one sample is required")
        if any(not 0 < r < 1 for r in self.r_grid):
            raise DomainError("r-grid must lie in (0, 1)")
        super().__init__(config)

    def trial_count(self):
        return len(self.samples) * len(self.r_grid)

    def run_trial(self, index, rng):
        name, series = self.samples[index // len(self.r_grid)]
        r = self.r_grid[index % len(self.r_grid)]
        major = certified_margin(majorant(series, r), r / (1 - r * r), self.tolerance)
        odd = np.maximum(np.abs(series.coeffs[1::2]) - series.errors[1::2], 0.0)
        partial_sums = np.cumsum(odd)
        robertson = float(np.min(np.arange(1, len(partial_sums) + 1) - partial_sums)) if len(odd) else 0.0
        return TrialOutcome(
            index,
            min(major, robertson),
            detail={'sample': name, 'r': r, 'majorant_margin': major, 'partial_sum_margin': robertson}
        )


class Theorem2Suite(VerificationSuite):
    """
        M_g(r_*) <= 1 for g = f o w, f(z) = z / (1 - z^2), w a Schwarz function
    """
    name = SUITE_THEOREM2

    def __init__(self, config):
        self.radius = subordination_radius()
        super().__init__(config)

    def _margins(self, schwarz):
        r = self.radius.radius
        N = self.config.truncation
        g = extract_subordinate(odd_koebe, schwarz, N, r)
        bohr = certified_margin(majorant(g, r, tail=subordinate_tail(r, N)), 1.0, self.tolerance)
        l2 = certified_margin(square_majorant(g, r), r / (1 - r * r), self.tolerance)
        return bohr, l2

    def run_trial(self, index, rng):
        schwarz = random_schwarz_function(rng, self.config.max_blaschke_degree, self.config.zero_cap)
        bohr, l2 = self._margins(schwarz)
        return TrialOutcome(
            index,
            min(bohr, l2),
            detail={'spec': schwarz.to_dict(), 'radius': self.radius.radius, 'bohr_margin': bohr, 'l2_margin': l2}
        )

    def extras(self):
        r = self.radius.radius
        identity_margin, _ = self._margins(SchwarzSpec(zeros=(0,)))
        square_margin, _ = self._margins(SchwarzSpec(zeros=(0, 0)))
        return {
            'radius': r,
            'identity_margin': identity_margin,
            'identity_closed_form_margin': 1 - r / (1 - r * r),
            'square_margin': square_margin,
            'square_closed_form_margin': 1 - r * r / (1 - r ** 4),
            'subordination_bound': subordination_bound(r),
        }


class Remark2Suite(VerificationSuite):
    """
        M_g((sqrt(5) - 1) / 2) <= 1 for odd g subordinate to an odd univalent sample
    """
    name = SUITE_REMARK2
    map_names = sorted(ODD_UNIVALENT_MAPS)

    def __init__(self, config):
        self.radius = corollary5_radius(1.0)
        super().__init__(config)

    def _margin(self, outer, schwarz, r):
        N = self.config.truncation
        g = extract_subordinate(outer, schwarz, N, r)
        return certified_margin(majorant(g, r, tail=subordinate_tail(r, N)), 1.0, self.tolerance)

    def run_trial(self, index, rng):
        name = self.map_names[index % len(self.map_names)]
        schwarz = random_odd_schwarz_function(rng, self.config.max_blaschke_degree, self.config.zero_cap)
        margin = self._margin(ODD_UNIVALENT_MAPS[name], schwarz, self.radius.radius)
        return TrialOutcome(index, margin, detail={'map': name, 'spec': schwarz.to_dict(), 'radius': self.radius.radius})

    def extras(self):
        r = self.radius.radius
        samples = dict(odd_univalent_samples(self.config.truncation))
        koebe = samples[ODD_KOEBE]
        probe = r + PROBE_STEP
        return {
            'radius': r,
            'extremal_margin': 1.0 - majorant(koebe, r).mid,
            'probe_radius': probe,
            'probe_margin': 1.0 - majorant(koebe, probe).lo,
            'cube_margin': self._margin(ODD_UNIVALENT_MAPS[ODD_KOEBE], SchwarzSpec(zeros=(0, 0, 0)), r),
            'cube_closed_form_margin': 1 - r ** 3 / (1 - r ** 6),
            'identity_margin': 1.0 - majorant(samples[IDENTITY], r).mid,
        }


def verify_eq6(samples=None, r_grid=None, cfg=None):
    cfg = cfg if cfg is not None else TrialConfig.from_settings()
    return Eq6Suite(cfg, samples, r_grid).run()


def verify_theorem2(cfg):
    return Theorem2Suite(cfg).run()


def verify_remark2(cfg):
    return Remark2Suite(cfg).run()
