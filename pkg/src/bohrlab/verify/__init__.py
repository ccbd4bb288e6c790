# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

from typing import List

from .bounded import (
    ClassicalBohrSuite,
    Lemma1Suite,
    Lemma2Suite,
    SchwarzPickSuite,
    Theorem1Suite,
    verify_classical_bohr,
    verify_lemma1,
    verify_lemma2,
    verify_schwarz_pick,
    verify_theorem1,
)
from .samplers import (
    odd_univalent_samples,
    random_bounded_function,
    random_odd_schwarz_function,
    random_schwarz_function,
)
from .subordination import (
    Eq6Suite,
    Remark2Suite,
    Theorem2Suite,
    verify_eq6,
    verify_remark2,
    verify_theorem2,
)
from .suite import TrialConfig, VerificationReport, VerificationSuite, trial_generator
from ..settings import ALL_SUITES, SUITE_LEMMA1, SUITE_LEMMA2, SUITE_THEOREM1

registered_suites = {
    suite.name: suite for suite in (
        Theorem1Suite,
        Lemma1Suite,
        Lemma2Suite,
        SchwarzPickSuite,
        ClassicalBohrSuite,
        Eq6Suite,
        Theorem2Suite,
        Remark2Suite,
    )
}

# p values for the theorem1 suite when `all` is run without an explicit p
DEFAULT_THEOREM1_P = (1, 2, 3)


def run_suites(name: str, config: TrialConfig, p: int = None, p_max: int = 32, R: float = 0.9) -> List[VerificationReport]:
    """
    Run one registered suite, or every suite in order for name 'all'.
    """
    names = ALL_SUITES if name == 'all' else [name]
    reports = []
    for suite_name in names:
        suite_cls = registered_suites[suite_name]
        if suite_name == SUITE_THEOREM1:
            for value in ((p,) if p is not None else (DEFAULT_THEOREM1_P if name == 'all' else (2,))):
                reports.append(suite_cls(config, value).run())
        elif suite_name == SUITE_LEMMA1:
            reports.append(suite_cls(config, p_max).run())
        elif suite_name == SUITE_LEMMA2:
            reports.append(suite_cls(config, p if p is not None else 2, R).run())
        else:
            reports.append(suite_cls(config).run())
    return reports
