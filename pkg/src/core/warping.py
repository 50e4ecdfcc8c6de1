"""
Warping Degree Module
The warping degree as a linear ordering problem on the OU matrix: objective,
lower bounds, exact branch-and-bound search, and a greedy + insertion heuristic
"""

import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.core.braid import BraidWord, ou_matrix, simulate
from src.core.invariants import det_of
from src.core.linalg import below_diagonal_sum
from src.core.permutation import Permutation, identity
from src.utils.performance_metrics import SearchMetrics

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_STRANDS = 8


@dataclass(frozen=True)
class WdResult:
    """Warping degree value with a witness strand order"""

    value: int
    order: Permutation
    exact: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'value': self.value, 'order': list(self.order.image), 'exact': self.exact}


def _check_order(word: BraidWord, pi: Permutation):
    if pi.n != word.n:
        raise ValueError(f"Permutation on {pi.n} labels does not fit a {word.n}-strand braid")


def objective(word: BraidWord, pi: Permutation) -> int:
    """
    f_B(pi): sum of the OU matrix entries below the main diagonal

    Equals the warping degree of B with the strand sequence given by pi.
    """
    _check_order(word, pi)
    return below_diagonal_sum(ou_matrix(word, pi))


def warping_degree_of_order(word: BraidWord, pi: Permutation) -> int:
    """
    Count crossings whose under-strand comes before its over-strand in pi

    Computed from the crossing events directly, independently of the matrix.
    """
    _check_order(word, pi)
    rank_in_order = {label: k for k, label in enumerate(pi.image)}
    return sum(1 for e in simulate(word) if rank_in_order[e.under_strand] < rank_in_order[e.over_strand])


def pair_lower_bound(word: BraidWord) -> int:
    """Sum over strand pairs of the smaller of the two OU entries"""
    m = ou_matrix(word).rows
    n = word.n
    return sum(min(m[a][b], m[b][a]) for a in range(n) for b in range(a + 1, n))


def wd_lower_bound(word: BraidWord) -> int:
    """
    Pair bound, raised to 1 when the determinant is nonzero

    A zero warping degree gives a strictly upper triangular OU matrix for the
    optimal order, hence a zero determinant.
    """
    bound = pair_lower_bound(word)
    if bound == 0 and det_of(word) != 0:
        bound = 1
    return bound


def _order_cost(m: Sequence[Sequence[int]], order: Sequence[int]) -> int:
    """Objective for a 0-based order over a 0-based label matrix"""
    return sum(m[order[i]][order[j]] for i in range(len(order)) for j in range(i))


def wd_heuristic(word: BraidWord, seed: int = 0) -> WdResult:
    """
    Greedy construction followed by first-improvement insertion local search

    The greedy step appends the unplaced strand that goes under the fewest
    crossings with the other unplaced strands (smallest label on ties). The
    local search relocates one strand at a time, scanning strands in a
    seed-dependent order, until no relocation improves the objective.

    Args:
        word: Braid word
        seed: Seed for the scan order of the local search

    Returns:
        WdResult with exact=False
    """
    n = word.n
    m = ou_matrix(word).rows

    unplaced = list(range(n))
    order: List[int] = []
    while unplaced:
        best = min(unplaced, key=lambda x: (sum(m[y][x] for y in unplaced if y != x), x))
        order.append(best)
        unplaced.remove(best)

    rng = random.Random(seed)
    value = _order_cost(m, order)
    improved = True
    while improved and value > 0:
        improved = False
        strands = list(order)
        rng.shuffle(strands)
        for x in strands:
            i = order.index(x)
            for j in range(n):
                if j == i:
                    continue
                if j > i:
                    delta = sum(m[x][y] - m[y][x] for y in order[i + 1:j + 1])
                else:
                    delta = sum(m[y][x] - m[x][y] for y in order[j:i])
                if delta < 0:
                    order.pop(i)
                    order.insert(j, x)
                    value += delta
                    improved = True
                    break
            if improved:
                break

    return WdResult(value, Permutation(tuple(x + 1 for x in order)), False)


class _BranchAndBound:
    """
    Depth-first search over strand-order prefixes

    Children are expanded in increasing label order, so the first optimal
    order reached is the lexicographically smallest one. A node is pruned when
    committed cost + forced cost against the remainder + pairwise minima of
    the remainder cannot beat the incumbent, or when the same strand set was
    already reached as a prefix with no larger cost.
    """

    def __init__(self, m: Sequence[Sequence[int]], upper: int, upper_order: Sequence[int],
                 lower: int, node_budget: Optional[int] = None):
        self.m = m
        self.n = len(m)
        self.pair_min = [[min(m[a][b], m[b][a]) for b in range(self.n)] for a in range(self.n)]
        self.best_value = upper
        self.best_order = list(upper_order)
        self.from_search = False
        self.lower = lower
        self.node_budget = node_budget
        self.memo: Dict[int, int] = {}
        self.metrics = SearchMetrics()
        self.stopped = False

    def run(self, prefixes: Sequence[Sequence[int]]):
        """Search below each given prefix, in the given order"""
        for prefix in prefixes:
            if self.stopped:
                break
            under_placed = [0] * self.n
            cost = 0
            mask = 0
            for x in prefix:
                cost += under_placed[x]
                mask |= 1 << x
                for r in range(self.n):
                    under_placed[r] += self.m[r][x]
            self._visit(list(prefix), mask, cost, under_placed)

    def _visit(self, prefix: List[int], mask: int, cost: int, under_placed: List[int]):
        metrics = self.metrics
        if self.node_budget is not None and metrics.nodes_expanded >= self.node_budget:
            metrics.budget_exhausted = True
            self.stopped = True
            return
        metrics.nodes_expanded += 1

        if len(prefix) == self.n:
            metrics.leaves_reached += 1
            if cost < self.best_value or (cost == self.best_value and not self.from_search):
                self.best_value = cost
                self.best_order = list(prefix)
                self.from_search = True
                metrics.incumbent_updates += 1
                if cost <= self.lower:
                    self.stopped = True
            return

        seen = self.memo.get(mask)
        if seen is not None and seen <= cost:
            metrics.pruned_by_dominance += 1
            return
        self.memo[mask] = cost

        remaining = [r for r in range(self.n) if not mask >> r & 1]
        bound = cost + sum(under_placed[r] for r in remaining)
        for a_idx, a in enumerate(remaining):
            row = self.pair_min[a]
            for b in remaining[a_idx + 1:]:
                bound += row[b]
        if bound > self.best_value or (bound == self.best_value and self.from_search):
            metrics.pruned_by_bound += 1
            return

        for x in remaining:
            child_under = [u + self.m[r][x] for r, u in enumerate(under_placed)]
            prefix.append(x)
            self._visit(prefix, mask | 1 << x, cost + under_placed[x], child_under)
            prefix.pop()
            if self.stopped:
                return


def _search_branch(m: Tuple[Tuple[int, ...], ...], first: int, upper: int,
                   upper_order: Tuple[int, ...], lower: int) -> Tuple[int, Tuple[int, ...], bool, SearchMetrics]:
    """Worker entry point: search all orders starting with ``first``"""
    search = _BranchAndBound(m, upper, upper_order, lower)
    search.run([[first]])
    return search.best_value, tuple(search.best_order), search.from_search, search.metrics


def wd_exact(word: BraidWord, node_budget: Optional[int] = None, threads: int = 1,
             metrics: Optional[SearchMetrics] = None) -> WdResult:
    """
    Exact warping degree by branch and bound

    The witness is the lexicographically smallest optimal strand order, both
    for the sequential search and for the parallel search over first-level
    branches. A node budget forces the sequential search; if the budget runs
    out the best order found so far is returned with exact=False.

    Args:
        word: Braid word
        node_budget: Optional cap on expanded search nodes
        threads: Worker processes for first-level branches (1 = sequential)
        metrics: Optional SearchMetrics to fill

    Returns:
        WdResult
    """
    if metrics is None:
        metrics = SearchMetrics()
    metrics.start_timer()

    n = word.n
    matrix = ou_matrix(word)
    if n == 1 or matrix.total() == 0:
        metrics.lower_bound = metrics.initial_upper_bound = metrics.best_value = 0
        metrics.end_timer()
        return WdResult(0, identity(n), True)

    m = matrix.rows
    lower = wd_lower_bound(word)
    start = wd_heuristic(word)
    upper_order = tuple(x - 1 for x in start.order.image)
    metrics.lower_bound = lower
    metrics.initial_upper_bound = start.value
    logger.debug(f"wd bounds for {n} strands: {lower}..{start.value}")

    if threads > 1 and node_budget is None:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_search_branch, m, x, start.value, upper_order, lower)
                       for x in range(n)]
            outcomes = [future.result() for future in futures]
        best: Optional[Tuple[int, Tuple[int, ...]]] = None
        for value, order, from_search, branch_metrics in outcomes:
            metrics.merge(branch_metrics)
            if from_search and (best is None or value < best[0]):
                best = (value, order)
        value, order = best
        exact = True
    else:
        search = _BranchAndBound(m, start.value, upper_order, lower, node_budget)
        search.run([[x] for x in range(n)])
        metrics.merge(search.metrics)
        value, order = search.best_value, tuple(search.best_order)
        exact = not search.metrics.budget_exhausted

    metrics.best_value = value
    metrics.end_timer()
    metrics.log_summary()
    return WdResult(value, Permutation(tuple(x + 1 for x in order)), exact)


def wd_bruteforce(word: BraidWord) -> WdResult:
    """
    Minimum objective over all n! orders, lexicographically first witness

    Raises:
        ValueError: for more than BRUTEFORCE_MAX_STRANDS strands
    """
    n = word.n
    if n > BRUTEFORCE_MAX_STRANDS:
        raise ValueError(f"Brute force is limited to {BRUTEFORCE_MAX_STRANDS} strands, got {n}")
    m = ou_matrix(word).rows
    best_value, best_order = None, None
    for order in itertools.permutations(range(n)):
        value = _order_cost(m, order)
        if best_value is None or value < best_value:
            best_value, best_order = value, order
    return WdResult(best_value, Permutation(tuple(x + 1 for x in best_order)), True)
