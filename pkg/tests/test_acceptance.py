# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

"""
Full-size runs of the property suites. These take tens of seconds.
"""

import json
import os
import tempfile
import unittest

from click.testing import CliRunner

from bohrlab.radii import bohr_radius_p_symmetric, extremal_series
from bohrlab.series_engine import majorant
from bohrlab.start import click_wrapper
from bohrlab.verify import (
    TrialConfig,
    verify_classical_bohr,
    verify_lemma2,
    verify_remark2,
    verify_schwarz_pick,
    verify_theorem1,
    verify_theorem2,
)


class TestPropertySuites(unittest.TestCase):
    def setUp(self):
        self.config = TrialConfig(trials=1000, seed=42)

    def assertClean(self, report):
        self.assertEqual(report.failures, 0, report.summary())
        # a handful of inconclusive trials is tolerable, a systematic loss of certification is not
        self.assertLess(report.skipped, report.trials // 100 + 1, report.summary())

    def test_theorem1(self):
        for p in (1, 2, 3):
            self.assertClean(verify_theorem1(p, self.config))

    def test_bounded_function_suites(self):
        self.assertClean(verify_lemma2(self.config))
        self.assertClean(verify_schwarz_pick(self.config))
        self.assertClean(verify_classical_bohr(self.config))

    def test_subordination_suites(self):
        self.assertClean(verify_theorem2(TrialConfig(trials=500, seed=42)))
        self.assertClean(verify_remark2(self.config))


class TestSharpness(unittest.TestCase):
    def test_extremal_functions(self):
        for p in (1, 2, 3):
            result = bohr_radius_p_symmetric(p)
            f = extremal_series(p, result.extremal_a, 256)
            at_radius = majorant(f, result.radius)
            self.assertTrue(at_radius.contains(1.0, slack=1e-10), (p, at_radius))
            self.assertLess(at_radius.width, 1e-8)
            self.assertGreater(majorant(f, result.radius + 0.01).lo - 1, 1e-4)


class TestDeterminism(unittest.TestCase):
    def test_verify_all(self):
        runner = CliRunner(env={'BOHRLAB_SEED': None})
        records = []
        with tempfile.TemporaryDirectory() as tmp:
            for name in ("first.json", "second.json"):
                out = os.path.join(tmp, name)
                result = runner.invoke(click_wrapper, ['verify', '--suite', 'all', '--seed', '7', '--out', out])
                self.assertEqual(result.exit_code, 0, result.output)
                with open(out) as f:
                    record = json.load(f)
                del record['timestamp']
                records.append(record)
        self.assertEqual(records[0], records[1])
        self.assertEqual(records[0]['command']['arguments']['seed'], 7)
