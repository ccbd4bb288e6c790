# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.
import io
import json
import math
import os
import tempfile
import unittest
from unittest.mock import patch

import jsonschema
import pandas
from click.testing import CliRunner

from bohrlab.exceptions import RootNotFoundError
from bohrlab.report import load_schema
from bohrlab.start import click_wrapper
from bohrlab.verify import VerificationReport

NO_SEED = {'BOHRLAB_SEED': None}


def read_record(path):
    with open(path) as f:
        content = json.load(f)
    jsonschema.validate(content, load_schema())
    return content


class TestRadiusCommand(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmp.name, "record.json")

    def tearDown(self):
        self.tmp.cleanup()

    def radius(self, *args):
        result = self.runner.invoke(click_wrapper, ['radius', *args, '--out', self.out])
        self.assertEqual(result.exit_code, 0, result.output)
        return read_record(self.out)['results'][0]

    def test_theorem1(self):
        result = self.radius('--kind', 'theorem1', '--p', '2')
        self.assertEqual(result['label'], 'theorem1')
        self.assertEqual(result['provenance'], 'root_found')
        self.assertAlmostEqual(result['radius'], 0.789991, delta=5e-7)
        self.assertLess(result['residual'], 1e-12)
        self.assertAlmostEqual(self.radius('--kind', 'theorem1', '--p', '1')['radius'], 1 / math.sqrt(2), delta=1e-12)

    def test_other_kinds(self):
        self.assertAlmostEqual(self.radius('--kind', 'rstar')['radius'], 0.789991, delta=5e-7)
        self.assertAlmostEqual(self.radius('--kind', 'subordination')['radius'], 0.554958, delta=5e-7)
        remark1 = self.radius('--kind', 'remark1')
        self.assertEqual(remark1['provenance'], 'optimized')
        self.assertTrue(0.564 < remark1['radius'] < 0.565)
        self.assertAlmostEqual(self.radius('--kind', 'corollary5', '--alpha', '1')['radius'], (math.sqrt(5) - 1) / 2, delta=1e-12)
        self.assertAlmostEqual(self.radius('--kind', 'abs')['radius'], 0.7313, delta=5e-5)

    def test_console_output(self):
        result = self.runner.invoke(click_wrapper, ['radius', '--kind', 'theorem1', '--p', '1'])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("theorem1: r = 0.707106781187", result.output)
        self.assertIn("provenance: root_found", result.output)
        self.assertIn("extremal a:", result.output)

    def test_usage_errors(self):
        for args in (
                ['radius', '--kind', 'theorem1', '--p', '0'],
                ['radius', '--kind', 'theorem1'],
                ['radius', '--kind', 'corollary5'],
                ['radius', '--kind', 'corollary5', '--alpha', '0'],
                ['radius', '--kind', 'nonsense'],
        ):
            result = self.runner.invoke(click_wrapper, args)
            self.assertEqual(result.exit_code, 2, args)
            self.assertNotIn("r =", result.output)

    def test_tolerance(self):
        coarse = self.radius('--kind', 'subordination', '--tol', '1e-6')
        self.assertLess(coarse['bracket']['hi'] - coarse['bracket']['lo'], 1e-6)
        self.assertAlmostEqual(coarse['radius'], 0.554958, delta=2e-6)
        self.assertAlmostEqual(self.radius('--kind', 'abs', '--tol', '1e-6')['radius'], 0.7313, delta=5e-5)
        for kind in (['--kind', 'rstar'], ['--kind', 'corollary5', '--alpha', '1']):
            result = self.runner.invoke(click_wrapper, ['radius', *kind, '--tol', '1e-6'])
            self.assertEqual(result.exit_code, 2, kind)
            self.assertNotIn("r =", result.output)

    @patch('bohrlab.run.compute_radius')
    def test_numeric_failure(self, mock_compute):
        mock_compute.side_effect = RootNotFoundError("no root in (0, 1)")
        result = self.runner.invoke(click_wrapper, ['radius', '--kind', 'abs'])
        self.assertEqual(result.exit_code, 3)
        self.assertNotIn("r =", result.stdout)


class TestTableCommand(unittest.TestCase):
    def test_csv_matches_json(self):
        runner = CliRunner()
        as_csv = runner.invoke(click_wrapper, ['table', '--p-max', '8', '--format', 'csv'])
        as_json = runner.invoke(click_wrapper, ['table', '--p-max', '8', '--format', 'json'])
        self.assertEqual(as_csv.exit_code, 0)
        self.assertEqual(as_json.exit_code, 0)
        frame = pandas.read_csv(io.StringIO(as_csv.output), float_precision='round_trip')
        self.assertEqual(list(frame.columns), ['p', 'r_p', 'extremal_a', 'residual', 'lemma1_value'])
        self.assertEqual(list(frame['p']), list(range(1, 9)))
        record = json.loads(as_json.output)
        jsonschema.validate(record, load_schema())
        pandas.testing.assert_frame_equal(frame, pandas.DataFrame(record['results'])[frame.columns], check_dtype=False)
        self.assertTrue((frame['lemma1_value'] <= 1 + 1e-12).all())
        self.assertTrue(((frame['r_p'] > 0) & (frame['r_p'] < 1)).all())

    def test_bad_p_max(self):
        result = CliRunner().invoke(click_wrapper, ['table', '--p-max', '0'])
        self.assertEqual(result.exit_code, 2)


class TestVerifyCommand(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner(env=NO_SEED)
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def verify(self, *args, out=None):
        extra = ['--out', out] if out is not None else []
        return self.runner.invoke(click_wrapper, ['verify', *args, *extra])

    def test_pass(self):
        result = self.verify('--suite', 'classical', '--trials', '10', '--seed', '3')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("classical: PASS trials=10 failures=0", result.output)
        self.assertIn("seed: 3", result.output)

    def test_reproducible(self):
        records = []
        for name in ("first.json", "second.json"):
            out = os.path.join(self.tmp.name, name)
            result = self.verify('--suite', 'theorem1', '--p', '2', '--trials', '12', '--seed', '11', out=out)
            self.assertEqual(result.exit_code, 0, result.output)
            record = read_record(out)
            del record['timestamp']
            records.append(record)
        self.assertEqual(records[0], records[1])

    def test_env_seed(self):
        result = self.runner.invoke(
            click_wrapper,
            ['verify', '--suite', 'lemma1', '--p-max', '4', '--seed', '9'],
            env={'BOHRLAB_SEED': '5'}
        )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("seed: 5", result.output)

    def test_invalid_env_seed(self):
        result = self.runner.invoke(
            click_wrapper,
            ['verify', '--suite', 'lemma1', '--p-max', '2'],
            env={'BOHRLAB_SEED': 'abc'}
        )
        self.assertEqual(result.exit_code, 2, result.output)
        self.assertIn("BOHRLAB_SEED", result.output)
        self.assertNotIn("lemma1:", result.output)

    @patch('bohrlab.run.run_suites')
    def test_failures_exit_1(self, mock_run):
        mock_run.return_value = [
            VerificationReport('theorem1', trials=3, failures=1, skipped=0, worst_margin=-1e-3, seed=0)
        ]
        result = self.verify('--suite', 'theorem1', '--trials', '3')
        self.assertEqual(result.exit_code, 1)
        self.assertIn("theorem1: FAIL", result.output)

    def test_bad_arguments(self):
        self.assertEqual(self.verify('--suite', 'nonsense').exit_code, 2)
        self.assertEqual(self.verify('--suite', 'classical', '--trials', '0').exit_code, 2)
        self.assertEqual(self.verify('--suite', 'classical', '--seed', '-1').exit_code, 2)


class TestMajorantCommand(unittest.TestCase):
    def majorant(self, *args):
        result = CliRunner().invoke(click_wrapper, ['majorant', *args])
        self.assertEqual(result.exit_code, 0, result.output)
        frame = pandas.read_csv(io.StringIO(result.output))
        self.assertEqual(list(frame.columns), ['r', 'lower', 'upper', 'midpoint', 'width', 'crossing'])
        self.assertTrue((frame['lower'] <= frame['upper']).all())
        crossings = frame['crossing'].dropna()
        return frame, crossings

    def test_extremal(self):
        frame, crossings = self.majorant('--function', 'extremal', '--p', '2', '--r-from', '0.7', '--r-to', '0.85', '--steps', '151')
        self.assertEqual(len(frame), 151)
        self.assertEqual(len(crossings), 1)
        self.assertAlmostEqual(crossings.iloc[0], 0.789991, delta=1e-6)

    def test_odd_koebe(self):
        _, crossings = self.majorant('--function', 'oddkoebe', '--r-from', '0.5', '--r-to', '0.7')
        self.assertAlmostEqual(crossings.iloc[0], (math.sqrt(5) - 1) / 2, delta=1e-9)

    def test_mobius(self):
        _, crossings = self.majorant('--function', 'mobius', '--a', '0.9', '--r-from', '0.3', '--r-to', '0.4')
        self.assertAlmostEqual(crossings.iloc[0], 1 / 2.8, delta=1e-9)

    def test_no_crossing(self):
        _, crossings = self.majorant('--function', 'oddkoebe', '--r-from', '0.1', '--r-to', '0.3', '--steps', '5')
        self.assertEqual(len(crossings), 0)

    def test_record(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "sweep.json")
            result = CliRunner().invoke(
                click_wrapper,
                ['majorant', '--function', 'oddkoebe', '--r-from', '0.5', '--r-to', '0.7', '--steps', '5', '--out', out]
            )
            self.assertEqual(result.exit_code, 0)
            record = read_record(out)
            self.assertEqual(record['command']['name'], 'majorant')
            self.assertEqual(len(record['results']), 5)

    def test_bad_ranges(self):
        runner = CliRunner()
        for args in (
                ['--function', 'oddkoebe', '--r-from', '0.6', '--r-to', '0.5'],
                ['--function', 'oddkoebe', '--r-from', '0.5', '--r-to', '1.0'],
                ['--function', 'oddkoebe', '--r-from', '0.5', '--r-to', '0.6', '--steps', '1'],
                ['--function', 'mobius', '--r-from', '0.3', '--r-to', '0.4'],
        ):
            result = runner.invoke(click_wrapper, ['majorant', *args])
            self.assertEqual(result.exit_code, 2, args)
