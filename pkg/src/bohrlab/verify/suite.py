# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

import math
from dataclasses import asdict, dataclass, field
from typing import List, Optional

import dask.bag
import numpy as np

from ..exceptions import CertificationError, ConfigurationError
from ..series_engine import Interval
from ..settings import get_logger, get_settings

logger = get_logger(__file__)

SCHEDULERS = ('threads', 'processes', 'sync', 'synchronous', 'single-threaded')
EXECUTION_FIELDS = ('scheduler', 'partitions')


@dataclass(frozen=True)
class TrialConfig:
    trials: int = 1000
    seed: int = 0
    max_blaschke_degree: int = 12
    truncation: int = 256
    tolerance: float = 1e-8
    zero_cap: float = 0.95
    scheduler: str = 'threads'
    partitions: int = 8

    def __post_init__(self):
        for name in ('trials', 'max_blaschke_degree', 'truncation', 'partitions'):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ConfigurationError(f"{name} must be a positive integer, got {value}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2 ** 64:
            raise ConfigurationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not self.tolerance > 0:
            raise ConfigurationError(f"tolerance must be positive, got {self.tolerance}")
        if not 0 < self.zero_cap < 1:
            raise ConfigurationError(f"zero_cap must lie in (0, 1), got {self.zero_cap}")
        if self.scheduler not in SCHEDULERS:
            raise ConfigurationError(f"Unknown scheduler {self.scheduler!r}; expected one of {SCHEDULERS}")

    @classmethod
    def from_settings(cls, **overrides):
        """
        Build a config from the settings file; keyword arguments that are not None win.
        """
        settings = get_settings()
        values = {name: settings[name] for name in cls.__dataclass_fields__ if name in settings}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def to_dict(self):
        # scheduler and partitions change how trials run, never their results
        return {k: v for k, v in asdict(self).items() if k not in EXECUTION_FIELDS}


@dataclass
class TrialOutcome:
    index: int
    margin: Optional[float]
    skipped: bool = False
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {'index': self.index, 'margin': self.margin, 'skipped': self.skipped, **self.detail}


@dataclass
class VerificationReport:
    """
    Outcome of one verification suite.

    worst_margin is the smallest RHS - LHS seen over counted trials; a
    negative value beyond the tolerance is a failure.
    """
    name: str
    trials: int
    failures: int
    skipped: int
    worst_margin: Optional[float]
    seed: int
    config: dict = field(default_factory=dict)
    diagnostics: List[dict] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        worst = 'n/a' if self.worst_margin is None else f"{self.worst_margin:.6e}"
        status = 'PASS' if self.passed else 'FAIL'
        return (
            f"{self.name}: {status} trials={self.trials} failures={self.failures} "
            f"skipped={self.skipped} worst_margin={worst} seed={self.seed}"
        )

    def to_dict(self):
        return {
            'name': self.name,
            'trials': self.trials,
            'failures': self.failures,
            'skipped': self.skipped,
            'worst_margin': self.worst_margin,
            'seed': self.seed,
            'passed': self.passed,
            'config': self.config,
            'diagnostics': self.diagnostics,
            'extras': self.extras,
        }


def trial_generator(seed: int, index: int) -> np.random.Generator:
    """
    Independent PCG64 stream for one trial, fixed by (seed, index) alone.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(index,))))


def certified_margin(interval: Interval, rhs: float, tolerance: float) -> float:
    """
    rhs - interval.lo, provided the interval is narrow enough to be conclusive.
    """
    if interval.width >= tolerance / 10:
        raise CertificationError(f"Certified width {interval.width:.3e} is not below {tolerance / 10:.1e}")
    return rhs - interval.lo


class VerificationSuite:
    """
        A family of independent checks of one inequality.

        Subclasses set `name` and implement `run_trial`; `extras` may add
        named sharpness or oracle margins to the report.
    """
    name = None

    def __init__(self, config: TrialConfig):
        self.config = config
        if not hasattr(self, 'logger'):
            self.logger = get_logger(f"VerificationSuite({self.name})")

    @property
    def tolerance(self) -> float:
        return self.config.tolerance

    def trial_count(self) -> int:
        return self.config.trials

    def run_trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        raise NotImplementedError()

    def extras(self) -> dict:
        return {}

    def _guarded_trial(self, index: int) -> TrialOutcome:
        try:
            return self.run_trial(index, trial_generator(self.config.seed, index))
        except CertificationError as e:
            self.logger.warning(f"Trial {index} skipped: {e}")
            return TrialOutcome(index, None, skipped=True, detail={'reason': str(e)})

    def run(self) -> VerificationReport:
        count = self.trial_count()
        bag = dask.bag.from_sequence(range(count), npartitions=min(self.config.partitions, count))
        outcomes = bag.map(self._guarded_trial).compute(scheduler=self.config.scheduler)
        return self.aggregate(outcomes)

    def aggregate(self, outcomes) -> VerificationReport:
        outcomes = sorted(outcomes, key=lambda o: o.index)
        counted = [o for o in outcomes if not o.skipped]
        failed = [o for o in counted if o.margin < -self.tolerance]
        worst = min((o.margin for o in counted), default=None)
        report = VerificationReport(
            name=self.name,
            trials=len(outcomes),
            failures=len(failed),
            skipped=len(outcomes) - len(counted),
            worst_margin=worst if worst is None or math.isfinite(worst) else None,
            seed=self.config.seed,
            config=self.config.to_dict(),
            diagnostics=[o.to_dict() for o in failed],
            extras=self.extras(),
        )
        if failed:
            self.logger.error(
                f"{report.summary()}: a failure of a proven inequality is an implementation bug, "
                f"not a counterexample"
            )
        else:
            self.logger.info(report.summary())
        return report
