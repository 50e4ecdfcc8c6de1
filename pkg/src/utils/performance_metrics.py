"""
Performance Metrics Module
Tracks node counts and timing of the exact warping-degree search
"""

import time
import logging
from typing import Dict, Any, Optional

logger = logging.getLogger(__name__)


class SearchMetrics:
    """Track branch-and-bound effort for one or more searches"""

    def __init__(self):
        """Initialize search tracking"""
        # Timing metrics
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None

        # Search metrics
        self.nodes_expanded: int = 0
        self.pruned_by_bound: int = 0
        self.pruned_by_dominance: int = 0
        self.incumbent_updates: int = 0
        self.leaves_reached: int = 0
        self.budget_exhausted: bool = False
        self.branches: int = 0

        # Result
        self.lower_bound: Optional[int] = None
        self.initial_upper_bound: Optional[int] = None
        self.best_value: Optional[int] = None

    def start_timer(self):
        """Start overall timing"""
        self.start_time = time.perf_counter()

    def end_timer(self):
        """End overall timing"""
        self.end_time = time.perf_counter()

    def get_total_time(self) -> float:
        """Get total search time in seconds"""
        if self.start_time is not None and self.end_time is not None:
            return self.end_time - self.start_time
        return 0.0

    def merge(self, other: 'SearchMetrics'):
        """Add the counters of a branch search into this one"""
        self.nodes_expanded += other.nodes_expanded
        self.pruned_by_bound += other.pruned_by_bound
        self.pruned_by_dominance += other.pruned_by_dominance
        self.incumbent_updates += other.incumbent_updates
        self.leaves_reached += other.leaves_reached
        self.budget_exhausted = self.budget_exhausted or other.budget_exhausted
        self.branches += 1

    def get_pruning_rate(self) -> float:
        """Pruned nodes as a percentage of all generated nodes"""
        pruned = self.pruned_by_bound + self.pruned_by_dominance
        total = self.nodes_expanded + pruned
        if total == 0:
            return 0.0
        return pruned / total * 100

    def get_summary(self) -> Dict[str, Any]:
        """
        Generate search summary

        Returns:
            Dictionary with all search metrics
        """
        total_time = self.get_total_time()

        return {
            'time': f"{total_time:.3f}s",
            'nodes_expanded': self.nodes_expanded,
            'pruned_by_bound': self.pruned_by_bound,
            'pruned_by_dominance': self.pruned_by_dominance,
            'pruning_rate': f"{self.get_pruning_rate():.1f}%",
            'leaves_reached': self.leaves_reached,
            'incumbent_updates': self.incumbent_updates,
            'branches': self.branches,
            'budget_exhausted': self.budget_exhausted,
            'lower_bound': self.lower_bound,
            'initial_upper_bound': self.initial_upper_bound,
            'best_value': self.best_value,
        }

    def log_summary(self):
        """Log search summary"""
        summary = self.get_summary()
        logger.info(f"Search summary: value={summary['best_value']} "
                    f"(bounds {summary['lower_bound']}..{summary['initial_upper_bound']}), "
                    f"{summary['nodes_expanded']} nodes, {summary['pruning_rate']} pruned, "
                    f"{summary['time']}")
        if self.budget_exhausted:
            logger.info("  Node budget exhausted; result is not certified optimal")
