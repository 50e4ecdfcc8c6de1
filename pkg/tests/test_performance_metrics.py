"""
Test Search Metrics
"""

import unittest

from src.utils.performance_metrics import SearchMetrics


class TestSearchMetrics(unittest.TestCase):
    """Counters, merging and summaries"""

    def setUp(self):
        """Set up metrics"""
        self.metrics = SearchMetrics()

    def test_timer(self):
        self.assertEqual(self.metrics.get_total_time(), 0.0)
        self.metrics.start_timer()
        self.metrics.end_timer()
        self.assertGreaterEqual(self.metrics.get_total_time(), 0.0)

    def test_pruning_rate(self):
        self.assertEqual(self.metrics.get_pruning_rate(), 0.0)
        self.metrics.nodes_expanded = 6
        self.metrics.pruned_by_bound = 3
        self.metrics.pruned_by_dominance = 1
        self.assertAlmostEqual(self.metrics.get_pruning_rate(), 40.0)

    def test_merge(self):
        branch = SearchMetrics()
        branch.nodes_expanded = 5
        branch.leaves_reached = 2
        branch.budget_exhausted = True
        self.metrics.merge(branch)
        self.metrics.merge(SearchMetrics())
        self.assertEqual(self.metrics.nodes_expanded, 5)
        self.assertEqual(self.metrics.leaves_reached, 2)
        self.assertTrue(self.metrics.budget_exhausted)
        self.assertEqual(self.metrics.branches, 2)

    def test_summary_keys(self):
        summary = self.metrics.get_summary()
        for key in ('time', 'nodes_expanded', 'pruning_rate', 'budget_exhausted', 'best_value'):
            self.assertIn(key, summary)

    def test_log_summary(self):
        self.metrics.budget_exhausted = True
        with self.assertLogs('src.utils.performance_metrics', level='INFO') as logs:
            self.metrics.log_summary()
        self.assertTrue(any('not certified' in line for line in logs.output))


if __name__ == '__main__':
    unittest.main()
