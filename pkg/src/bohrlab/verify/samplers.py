# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Random and fixed test functions for the verification suites.
"""

import math
from typing import List, Tuple

import numpy as np

from ..series_engine import (
    BlaschkeSpec,
    PowerSeries,
    SchwarzSpec,
    extract_coefficients,
    sample_count,
    sampling_radius,
)

ODD_KOEBE = 'odd_koebe'
ODD_KOEBE_ROTATED = 'odd_koebe_rotated'
IDENTITY = 'identity'


def _random_zeros(rng: np.random.Generator, count: int, zero_cap: float) -> np.ndarray:
    # sqrt of a uniform radius gives zeros uniform in area
    radii = zero_cap * np.sqrt(rng.random(count))
    return radii * np.exp(2j * np.pi * rng.random(count))


def random_bounded_function(rng: np.random.Generator, max_degree: int = 12, zero_cap: float = 0.95) -> BlaschkeSpec:
    degree = int(rng.integers(1, max_degree + 1))
    zeros = _random_zeros(rng, degree, zero_cap)
    return BlaschkeSpec(zeros=tuple(zeros), rotation=2 * math.pi * rng.random())


def random_schwarz_function(rng: np.random.Generator, max_degree: int = 12, zero_cap: float = 0.95) -> SchwarzSpec:
    degree = int(rng.integers(1, max_degree + 1))
    zeros = _random_zeros(rng, degree - 1, zero_cap)
    return SchwarzSpec(zeros=(0j, *zeros), rotation=2 * math.pi * rng.random())


def random_odd_schwarz_function(rng: np.random.Generator, max_degree: int = 12, zero_cap: float = 0.95) -> SchwarzSpec:
    """
    A Schwarz function with zeros 0, +z_k, -z_k; such a product is odd.
    """
    pairs = int(rng.integers(0, (max_degree - 1) // 2 + 1))
    zeros = _random_zeros(rng, pairs, zero_cap)
    return SchwarzSpec(zeros=(0j, *zeros, *(-zeros)), rotation=2 * math.pi * rng.random())


def odd_koebe(z):
    return z / (1 - z * z)


def odd_koebe_rotated(z):
    return z / (1 + z * z)


def identity(z):
    return z


ODD_UNIVALENT_MAPS = {
    ODD_KOEBE: odd_koebe,
    ODD_KOEBE_ROTATED: odd_koebe_rotated,
    IDENTITY: identity,
}


def odd_univalent_samples(order: int = 256) -> List[Tuple[str, PowerSeries]]:
    """
    z/(1-z^2), z/(1+z^2) and z, truncated at `order`, each with coefficient bound 1.
    """
    koebe = np.zeros(order + 1)
    koebe[1::2] = 1.0
    rotated = np.zeros(order + 1)
    rotated[1::2] = (-1.0) ** np.arange(len(rotated[1::2]))
    ident = np.zeros(order + 1)
    if order >= 1:
        ident[1] = 1.0
    return [
        (ODD_KOEBE, PowerSeries(koebe, coeff_bound=1.0)),
        (ODD_KOEBE_ROTATED, PowerSeries(rotated, coeff_bound=1.0)),
        (IDENTITY, PowerSeries(ident, coeff_bound=1.0)),
    ]


def extract_bounded(spec: BlaschkeSpec, order: int, r_eval: float) -> PowerSeries:
    """
    Coefficients of a Blaschke product, sampled on a circle suited to evaluation at r_eval.
    """
    return extract_coefficients(spec, order, sampling_radius(r_eval), sample_count(order), bound=1.0)


def extract_subordinate(outer, schwarz: SchwarzSpec, order: int, r_eval: float) -> PowerSeries:
    """
    Coefficients of outer(schwarz(z)) for outer dominated by |z| / (1 - |z|^2).

    The composition is unbounded on the disk; its coefficients are bounded
    through the Schwarz lemma on the circle of radius (1 + rho) / 2.
    """
    rho = sampling_radius(r_eval)
    bound_radius = (1 + rho) / 2
    bound = bound_radius / (1 - bound_radius ** 2)
    return extract_coefficients(
        lambda z: outer(schwarz(z)),
        order,
        rho,
        sample_count(order),
        bound=bound,
        bound_radius=bound_radius
    )
