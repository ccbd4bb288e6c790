# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Truncated power series on the unit disk.

Series carry enough bound information to certify the part of a majorant
sum that truncation throws away: either a sup bound B (|f| <= B on the
disk, so |a_n| <= B) or a coefficient bound C on a circle of radius R
(|a_n| <= C R^-n).  Coefficients obtained numerically also carry a
per-coefficient absolute error bound.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from .exceptions import (
    CertificationError,
    ConfigurationError,
    DomainError,
    NumericError,
)
from .settings import get_logger
from .utils import is_power_of_two, next_power_of_two

logger = get_logger(__file__)

EPS = float(np.finfo(float).eps)
# Rounding allowance of an FFT coefficient, in units of eps * log2(M) * max|f|
FFT_ROUNDING_FACTOR = 16.0
MAX_SAMPLING_RADIUS = 0.98
MIN_SAMPLING_RADIUS = 0.5


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise NumericError(f"Interval [{self.lo}, {self.hi}] is not finite")
        if self.lo > self.hi:
            raise NumericError(f"Interval [{self.lo}, {self.hi}] is empty")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack

    def to_dict(self):
        return {'lo': self.lo, 'hi': self.hi}


@dataclass
class PowerSeries:
    """
    Coefficients a_0..a_N of f(z) = sum a_n z^n.

    :param coeffs: the coefficients, lowest order first
    :param sup_bound: B with sup_{|z|<1} |f(z)| <= B, if known
    :param coeff_bound: C with |a_n| <= C * bound_radius^-n, if known
    :param bound_radius: radius of the circle the coefficient bound refers to
    :param errors: absolute error bound of each stored coefficient
    """
    coeffs: np.ndarray
    sup_bound: Optional[float] = None
    coeff_bound: Optional[float] = None
    bound_radius: float = 1.0
    errors: Optional[np.ndarray] = None

    def __post_init__(self):
        self.coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if self.coeffs.ndim != 1:
            raise DomainError("Coefficients must be a one-dimensional sequence")
        if not np.all(np.isfinite(self.coeffs)):
            raise NumericError("Coefficients must be finite")
        if self.errors is None:
            self.errors = np.zeros(len(self.coeffs))
        else:
            self.errors = np.asarray(self.errors, dtype=float)
            if self.errors.shape != self.coeffs.shape:
                raise DomainError("One error bound is needed per coefficient")
            if not np.all(np.isfinite(self.errors)) or np.any(self.errors < 0):
                raise NumericError("Error bounds must be finite and non-negative")
        for name in ('sup_bound', 'coeff_bound'):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value >= 0):
                raise DomainError(f"{name} must be a finite non-negative number, got {value}")
        if not 0 < self.bound_radius <= 1:
            raise DomainError(f"bound_radius must lie in (0, 1], got {self.bound_radius}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, z):
        return P.polyval(z, self.coeffs)

    def cauchy_constant(self) -> Optional[float]:
        if self.coeff_bound is not None:
            return self.coeff_bound
        return self.sup_bound

    def tail_bound(self, r: float) -> float:
        """
        Bound on sum_{n>N} |a_n| r^n from |a_n| <= C R^-n.
        """
        constant = self.cauchy_constant()
        if constant is None:
            raise CertificationError("No sup or coefficient bound; the tail cannot be certified")
        if r >= self.bound_radius:
            raise CertificationError(
                f"r = {r} is not inside the circle of radius {self.bound_radius} the bound refers to"
            )
        q = r / self.bound_radius
        return constant * q ** (self.order + 1) / (1 - q)

    def check_cauchy(self, tol: float = 0.0) -> bool:
        constant = self.cauchy_constant()
        if constant is None:
            raise CertificationError("No bound to check coefficients against")
        n = np.arange(self.order + 1)
        limit = constant * self.bound_radius ** (-n.astype(float))
        return bool(np.all(np.abs(self.coeffs) - self.errors <= limit + tol))

    def check_parseval(self, rho: float, tol: float = 0.0) -> bool:
        if self.sup_bound is None:
            raise CertificationError("Parseval check needs a sup bound")
        if not 0 < rho < 1:
            raise DomainError(f"rho must lie in (0, 1), got {rho}")
        lower = np.maximum(np.abs(self.coeffs) - self.errors, 0.0)
        return bool(P.polyval(rho * rho, lower ** 2) <= self.sup_bound ** 2 + tol)


@dataclass(frozen=True)
class BlaschkeSpec:
    zeros: Sequence[complex]
    rotation: float = 0.0

    def __post_init__(self):
        zeros = tuple(complex(z) for z in self.zeros)
        if any(abs(z) >= 1 for z in zeros):
            raise DomainError("Blaschke zeros must lie inside the unit disk")
        object.__setattr__(self, 'zeros', zeros)
        object.__setattr__(self, 'rotation', float(self.rotation) % (2 * math.pi))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        return blaschke_eval(self, z)

    def to_dict(self):
        return {
            'zeros': [[z.real, z.imag] for z in self.zeros],
            'rotation': self.rotation,
        }


@dataclass(frozen=True)
class SchwarzSpec(BlaschkeSpec):
    """
        A Blaschke product vanishing at the origin, i.e. a Schwarz function w
    """

    def __post_init__(self):
        super().__post_init__()
        if not any(z == 0 for z in self.zeros):
            raise DomainError("A Schwarz function needs a zero at the origin")


def blaschke_eval(spec: BlaschkeSpec, z):
    """
    e^{i theta} prod_k (z - z_k) / (1 - conj(z_k) z), for |z| < 1.

    Accepts a scalar or an array of points.
    """
    if spec.degree == 0:
        raise DomainError("An empty Blaschke product is a unimodular constant, not an interior test function")
    points = np.asarray(z, dtype=complex)
    if np.any(np.abs(points) >= 1):
        raise DomainError("Blaschke products are evaluated inside the unit disk only")
    value = np.full(points.shape, np.exp(1j * spec.rotation), dtype=complex)
    for zero in spec.zeros:
        value *= (points - zero) / (1 - np.conj(zero) * points)
    if value.ndim == 0:
        return complex(value)
    return value


def schwarz_eval(spec: SchwarzSpec, z):
    if not isinstance(spec, SchwarzSpec):
        raise DomainError("schwarz_eval needs a SchwarzSpec")
    return blaschke_eval(spec, z)


def mobius_coefficients(a: complex, order: int) -> PowerSeries:
    """
    Taylor coefficients of (a - z) / (1 - conj(a) z):
    b_0 = a, b_k = -(1 - |a|^2) conj(a)^(k-1).
    """
    a = complex(a)
    if abs(a) >= 1:
        raise DomainError(f"Mobius parameter must satisfy |a| < 1, got {a}")
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    coeffs = np.empty(order + 1, dtype=complex)
    coeffs[0] = a
    if order >= 1:
        powers = np.ones(order, dtype=complex)
        powers[1:] = np.cumprod(np.full(order - 1, np.conj(a)))
        coeffs[1:] = -(1 - abs(a) ** 2) * powers
    return PowerSeries(coeffs, sup_bound=1.0)


def sampling_radius(r_eval: float) -> float:
    return min(max(MIN_SAMPLING_RADIUS, (1 + r_eval) / 2), MAX_SAMPLING_RADIUS)


def sample_count(order: int) -> int:
    return next_power_of_two(8 * (order + 1))


def extract_coefficients(
        func: Callable,
        order: int,
        radius: float,
        samples: int,
        bound: float = 1.0,
        bound_radius: float = 1.0
) -> PowerSeries:
    """
    Taylor coefficients of a function analytic in the disk, from samples on
    the circle |z| = radius (discretised Cauchy integral computed by FFT).

    :param func: vectorised callable evaluated on an array of points
    :param order: highest coefficient index N to return
    :param radius: sampling radius rho
    :param samples: number of sample points M, a power of two >= 8(N+1)
    :param bound: sup of |func| on the circle of radius bound_radius
    :param bound_radius: 1 for functions bounded on the disk, otherwise a
        radius in (rho, 1) on which `bound` holds

    :raises ConfigurationError: if the sample count does not suit the order
    :raises CertificationError: if sampled values exceed the declared bound
    """
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    if not 0 < radius < 1:
        raise DomainError(f"Sampling radius must lie in (0, 1), got {radius}")
    if not radius < bound_radius <= 1:
        raise ConfigurationError(f"bound_radius {bound_radius} must lie in ({radius}, 1]")
    if not is_power_of_two(samples):
        raise ConfigurationError(f"Sample count {samples} is not a power of two")
    if samples < 8 * (order + 1):
        raise ConfigurationError(f"Sample count {samples} is too small for order {order}; need >= {8 * (order + 1)}")
    if bound is None or not bound >= 0:
        raise ConfigurationError(f"A non-negative bound is required, got {bound}")

    theta = 2 * np.pi * np.arange(samples) / samples
    points = radius * np.exp(1j * theta)
    values = np.broadcast_to(np.asarray(func(points), dtype=complex), points.shape)
    if not np.all(np.isfinite(values)):
        raise NumericError("Function returned non-finite values on the sampling circle")
    peak = float(np.max(np.abs(values)))
    if peak > bound * (1 + 1e-12) + 1e-15:
        raise CertificationError(f"Sampled modulus {peak} exceeds the declared bound {bound}")

    n = np.arange(order + 1)
    scale = radius ** (-n.astype(float))
    coeffs = np.fft.fft(values)[:order + 1] / samples * scale

    q = radius / bound_radius
    aliasing = bound * bound_radius ** (-n.astype(float)) * q ** (samples - n) / (1 - q ** samples)
    rounding = FFT_ROUNDING_FACTOR * EPS * (math.log2(samples) + 1) * peak * scale
    errors = aliasing + rounding
    logger.debug(f"Extracted {order + 1} coefficients at rho={radius}, M={samples}, max error {errors.max():.3e}")

    if bound_radius == 1.0:
        return PowerSeries(coeffs, sup_bound=bound, errors=errors)
    return PowerSeries(coeffs, coeff_bound=bound, bound_radius=bound_radius, errors=errors)


def p_symmetrize(g: PowerSeries, p: int) -> PowerSeries:
    """
    f(z) = z g(z^p): f's coefficient at index pk+1 is g's coefficient b_k.
    """
    if p < 1:
        raise DomainError(f"p must be a positive integer, got {p}")
    size = p * g.order + 2
    coeffs = np.zeros(size, dtype=complex)
    errors = np.zeros(size)
    coeffs[1::p] = g.coeffs
    errors[1::p] = g.errors
    if g.coeff_bound is None:
        coeff_bound, bound_radius = None, 1.0
    else:
        # |b_k| <= C R^-k becomes |a_n| <= C R^(1/p) (R^(1/p))^-n
        bound_radius = g.bound_radius ** (1.0 / p)
        coeff_bound = g.coeff_bound * bound_radius
    return PowerSeries(
        coeffs,
        sup_bound=g.sup_bound,
        coeff_bound=coeff_bound,
        bound_radius=bound_radius,
        errors=errors
    )


def majorant(f: PowerSeries, r: float, tail: float = None) -> Interval:
    """
    Certified enclosure of M_f(r) = sum |a_n| r^n.

    The enclosure accounts for coefficient errors, the truncated tail (from
    the series' own bound unless `tail` is given) and rounding in the sum.
    """
    r = float(r)
    if not 0 <= r < 1:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    modulus = np.abs(f.coeffs)
    lower = np.maximum(modulus - f.errors, 0.0)
    upper = modulus + f.errors
    if r == 0:
        return Interval(float(lower[0]), float(upper[0]))
    if tail is None:
        tail = f.tail_bound(r)
    s_lo = float(P.polyval(r, lower))
    s_hi = float(P.polyval(r, upper))
    rounding = 2 * (f.order + 1) * EPS * s_hi
    return Interval(max(s_lo - rounding, 0.0), s_hi + rounding + tail)


def square_majorant(f: PowerSeries, w: float, tail: float = None) -> Interval:
    """
    Certified enclosure of sum_{k>=1} |a_k|^2 w^k.
    """
    w = float(w)
    if not 0 <= w < 1:
        raise DomainError(f"w must lie in [0, 1), got {w}")
    modulus = np.abs(f.coeffs)
    lower = np.maximum(modulus - f.errors, 0.0) ** 2
    upper = (modulus + f.errors) ** 2
    lower[0] = upper[0] = 0.0
    if w == 0:
        return Interval(0.0, 0.0)
    if tail is None:
        constant = f.cauchy_constant()
        if constant is None:
            raise CertificationError("No sup or coefficient bound; the tail cannot be certified")
        q = w / f.bound_radius ** 2
        if q >= 1:
            raise CertificationError(f"w = {w} is outside the certified range of the coefficient bound")
        tail = constant ** 2 * q ** (f.order + 1) / (1 - q)
    s_lo = float(P.polyval(w, lower))
    s_hi = float(P.polyval(w, upper))
    rounding = 2 * (f.order + 1) * EPS * s_hi
    return Interval(max(s_lo - rounding, 0.0), s_hi + rounding + tail)
