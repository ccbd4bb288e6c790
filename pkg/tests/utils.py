# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.
from bohrlab.verify import TrialConfig


def fail(e, *kwargs):
    raise Exception(e)


def quick_config(**kwargs) -> TrialConfig:
    """
    A small deterministic config that runs on the synchronous scheduler.
    """
    values = {'trials': 40, 'seed': 42, 'scheduler': 'sync', 'partitions': 4}
    values.update(kwargs)
    return TrialConfig(**values)
