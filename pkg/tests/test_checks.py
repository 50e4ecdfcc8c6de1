"""
Test Property Suites
"""

import os
import tempfile
import unittest

import pandas as pd

from src.core.checks import PropertyChecker
from src.utils.config_manager import ConfigManager


class TestPropertyChecker(unittest.TestCase):
    """Seeded suites with a small in-memory config"""

    def setUp(self):
        """Set up checker without progress bars"""
        config = ConfigManager()
        config.set_show_progress(False)
        self.checker = PropertyChecker(config)

    def test_every_suite_passes(self):
        for seed in (42, 0):
            with self.subTest(seed=seed):
                results = self.checker.run(['all'], seed=seed, cases=200)
                self.assertEqual([r.suite for r in results], self.checker.suite_names)
                for result in results:
                    self.assertTrue(result.ok, f"{result.suite}: {result.counterexample}")
                    self.assertEqual(result.passed, 200)

    def test_small_words_from_config(self):
        config = ConfigManager()
        config.set_show_progress(False)
        config.set_max_strands(3)
        config.set_max_length(4)
        checker = PropertyChecker(config)
        self.assertEqual((checker.max_strands, checker.max_length), (3, 4))
        for result in checker.run(['all'], seed=3, cases=50):
            self.assertTrue(result.ok, f"{result.suite}: {result.counterexample}")

    def test_zero_cases_is_vacuous_pass(self):
        result = self.checker.run_suite('similarity', seed=0, cases=0)
        self.assertTrue(result.ok)
        self.assertEqual(result.cases, 0)

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            self.checker.run_suite('theorem3', seed=0, cases=1)

    def test_negative_cases(self):
        with self.assertRaises(ValueError):
            self.checker.run_suite('lemmas', seed=0, cases=-1)

    def test_dataframe_and_csv(self):
        self.checker.run(['theorem1', 'pure-symmetry'], seed=7, cases=10)
        df = self.checker.generate_dataframe()
        self.assertEqual(list(df.columns), ['suite', 'cases', 'passed', 'failed', 'seed', 'seconds', 'counterexample'])
        self.assertEqual(list(df['suite']), ['theorem1', 'pure-symmetry'])

        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'suites.csv')
            self.checker.save_to_csv(path)
            loaded = pd.read_csv(path)
        self.assertEqual(list(loaded['failed']), [0, 0])

    def test_summary(self):
        self.checker.run_suite('product-formula', seed=1, cases=5)
        summary = self.checker.get_summary()
        self.assertEqual(summary['suites'], 1)
        self.assertEqual(summary['cases'], 5)
        self.assertTrue(summary['all_passed'])


if __name__ == '__main__':
    unittest.main()
