# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Suites for functions bounded by 1 in the unit disk.
"""

import numpy as np

from .samplers import extract_bounded, random_bounded_function
from .suite import TrialConfig, TrialOutcome, VerificationSuite, certified_margin
from ..exceptions import CertificationError, DomainError
from ..radii import bohr_radius_p_symmetric, lemma1_envelope
from ..series_engine import (
    BlaschkeSpec,
    majorant,
    mobius_coefficients,
    p_symmetrize,
    square_majorant,
)
from ..settings import (
    SUITE_CLASSICAL,
    SUITE_LEMMA1,
    SUITE_LEMMA2,
    SUITE_SCHWARZ_PICK,
    SUITE_THEOREM1,
)

LEMMA1_TOLERANCE = 1e-12
LEMMA1_ENVELOPE_POINTS = 100_000
INTERIOR_FACTOR = 0.9
PROBE_STEP = 0.01
CLASSICAL_RADIUS = 1 / 3
CLASSICAL_PROBES = ((0.9, CLASSICAL_RADIUS), (0.99, CLASSICAL_RADIUS), (0.999, CLASSICAL_RADIUS),
                    (0.9, 0.4), (0.99, 0.34))
SCHWARZ_PICK_EVAL_RADIUS = 0.96


class Theorem1Suite(VerificationSuite):
    """
        M_f(r) <= 1 for f = z g(z^p), |g| <= 1, at r_p and inside it
    """
    name = SUITE_THEOREM1

    def __init__(self, config, p: int = 2):
        if p < 1:
            raise DomainError(f"p must be a positive integer, got {p}")
        self.p = p
        self.radius = bohr_radius_p_symmetric(p)
        super().__init__(config)

    def _series(self, spec):
        g = extract_bounded(spec, self.config.truncation, self.radius.radius ** self.p)
        return p_symmetrize(g, self.p)

    def run_trial(self, index, rng):
        spec = random_bounded_function(rng, self.config.max_blaschke_degree, self.config.zero_cap)
        f = self._series(spec)
        r = self.radius.radius
        margins = {radius: certified_margin(majorant(f, radius), 1.0, self.tolerance) for radius in (r, INTERIOR_FACTOR * r)}
        worst = min(margins, key=margins.get)
        return TrialOutcome(index, margins[worst], detail={'spec': spec.to_dict(), 'radius': worst, 'p': self.p})

    def extras(self):
        r = self.radius.radius
        a = self.radius.extremal_a
        f = self._series(BlaschkeSpec(zeros=(a,)))
        probe = min(r + PROBE_STEP, (1 + r) / 2)
        return {
            'p': self.p,
            'radius': r,
            'extremal_a': a,
            'extremal_margin': 1.0 - majorant(f, r).mid,
            'probe_radius': probe,
            'probe_margin': 1.0 - majorant(f, probe).lo,
        }


class Lemma1Suite(VerificationSuite):
    """
        2 r_p^{p+1} <= 1 for p = 1..p_max
    """
    name = SUITE_LEMMA1

    def __init__(self, config, p_max: int = 32):
        if p_max < 1:
            raise DomainError(f"p_max must be a positive integer, got {p_max}")
        self.p_max = p_max
        super().__init__(config)

    @property
    def tolerance(self):
        return LEMMA1_TOLERANCE

    def trial_count(self):
        return self.p_max

    def run_trial(self, index, rng):
        p = index + 1
        r = bohr_radius_p_symmetric(p).radius
        value = 2 * r ** (p + 1)
        return TrialOutcome(index, 1.0 - value, detail={'p': p, 'radius': r, 'lemma1_value': value})

    def extras(self):
        grid = np.linspace(1.0 / LEMMA1_ENVELOPE_POINTS, 1.0, LEMMA1_ENVELOPE_POINTS)
        values = lemma1_envelope(grid)
        i = int(np.argmax(values))
        return {'p_max': self.p_max, 'envelope_sup': float(values[i]), 'envelope_argmax': float(grid[i])}


def lemma2_bound(b0: float, R: float, p: int) -> float:
    """
    R^p (1 - |b_0|^2)^2 / (1 - |b_0|^2 R^p); decreasing in |b_0|.
    """
    rp = R ** p
    b2 = b0 * b0
    return rp * (1 - b2) ** 2 / (1 - b2 * rp)


class Lemma2Suite(VerificationSuite):
    """
        sum_{k>=1} |b_k|^2 R^{pk} <= R^p (1 - |b_0|^2)^2 / (1 - |b_0|^2 R^p)
    """
    name = SUITE_LEMMA2

    def __init__(self, config, p: int = 2, R: float = 0.9):
        if p < 1:
            raise DomainError(f"p must be a positive integer, got {p}")
        if not 0 < R < 1:
            raise DomainError(f"R must lie in (0, 1) for a certified tail, got {R}")
        self.p = p
        self.R = R
        super().__init__(config)

    def run_trial(self, index, rng):
        spec = random_bounded_function(rng, self.config.max_blaschke_degree, self.config.zero_cap)
        g = extract_bounded(spec, self.config.truncation, self.R ** (self.p / 2))
        lhs = square_majorant(g, self.R ** self.p)
        b0 = max(abs(g.coeffs[0]) - g.errors[0], 0.0)
        margin = certified_margin(lhs, lemma2_bound(b0, self.R, self.p), self.tolerance)
        return TrialOutcome(index, margin, detail={'spec': spec.to_dict(), 'p': self.p, 'R': self.R, 'lhs': lhs.to_dict()})

    def extras(self):
        a = 0.5
        mobius = mobius_coefficients(a, self.config.truncation)
        stated = lemma2_bound(a, self.R, self.p) - square_majorant(mobius, self.R ** self.p).mid
        # the R^{2k} form the argument passes through before substituting R^p
        proof_form = lemma2_bound(a, self.R, 2) - square_majorant(mobius, self.R ** 2).mid
        return {'p': self.p, 'R': self.R, 'mobius_a': a, 'mobius_margin': stated, 'mobius_proof_form_margin': proof_form}


class SchwarzPickSuite(VerificationSuite):
    """
        |a_n| <= 1 - |a_0|^2 for n >= 1
    """
    name = SUITE_SCHWARZ_PICK

    def _margin(self, f):
        if f.errors.max() >= self.tolerance / 10:
            raise CertificationError(f"Coefficient error {f.errors.max():.3e} is not below {self.tolerance / 10:.1e}")
        modulus = np.abs(f.coeffs)
        a0 = max(modulus[0] - f.errors[0], 0.0)
        lower = np.maximum(modulus[1:] - f.errors[1:], 0.0)
        n = int(np.argmax(lower))
        return 1 - a0 * a0 - lower[n], n + 1

    def run_trial(self, index, rng):
        spec = random_bounded_function(rng, self.config.max_blaschke_degree, self.config.zero_cap)
        margin, n = self._margin(extract_bounded(spec, self.config.truncation, SCHWARZ_PICK_EVAL_RADIUS))
        return TrialOutcome(index, margin, detail={'spec': spec.to_dict(), 'n': n})

    def extras(self):
        mobius_margin, _ = self._margin(mobius_coefficients(0.5, self.config.truncation))
        identity_margin, _ = self._margin(extract_bounded(BlaschkeSpec(zeros=(0,)), self.config.truncation, SCHWARZ_PICK_EVAL_RADIUS))
        return {'mobius_margin': mobius_margin, 'identity_margin': identity_margin}


class ClassicalBohrSuite(VerificationSuite):
    """
        M_f(1/3) <= 1 for |f| <= 1
    """
    name = SUITE_CLASSICAL

    def run_trial(self, index, rng):
        spec = random_bounded_function(rng, self.config.max_blaschke_degree, self.config.zero_cap)
        f = extract_bounded(spec, self.config.truncation, CLASSICAL_RADIUS)
        margin = certified_margin(majorant(f, CLASSICAL_RADIUS), 1.0, self.tolerance)
        return TrialOutcome(index, margin, detail={'spec': spec.to_dict(), 'radius': CLASSICAL_RADIUS})

    def extras(self):
        probes = []
        for a, r in CLASSICAL_PROBES:
            interval = majorant(mobius_coefficients(a, self.config.truncation), r)
            probes.append({'a': a, 'r': r, 'margin': 1.0 - interval.mid})
        return {'radius': CLASSICAL_RADIUS, 'mobius_probes': probes}


def verify_theorem1(p, cfg):
    return Theorem1Suite(cfg, p).run()


def verify_lemma1(p_max, cfg=None):
    return Lemma1Suite(cfg if cfg is not None else TrialConfig.from_settings(), p_max).run()


def verify_lemma2(cfg, p=2, R=0.9):
    return Lemma2Suite(cfg, p, R).run()


def verify_schwarz_pick(cfg):
    return SchwarzPickSuite(cfg).run()


def verify_classical_bohr(cfg):
    return ClassicalBohrSuite(cfg).run()
