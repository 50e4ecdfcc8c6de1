"""
Property Checker Module
Runs the seeded randomized property suites behind the `check` command and
collects their outcomes into a table
"""

import logging
import random
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd
from tqdm import tqdm

from src.core.braid import braid_permutation, format_word, identity_word, ou_matrix, product
from src.core.families import (
    permutation_braid,
    random_braid,
    random_permutation,
    random_positive,
    random_positive_pure,
)
from src.core.invariants import (
    over_set,
    random_rewrite,
    same_ou_matrices,
    under_set,
)
from src.core.layers import block_view, extract_layer, finest_layering, is_valid_layering, layered_compose
from src.core.linalg import (
    charpoly,
    conjugate_swap,
    det,
    is_strict_lower_triangular,
    is_symmetric,
    rank,
    rotate180,
    similarity_witness,
)
from src.core.permutation import compose, reverse, transpose
from src.core.warping import objective, wd_exact
from src.utils.config_manager import ConfigManager

logger = logging.getLogger(__name__)

WD_CHECK_MAX_STRANDS = 7
LAYER_MAX_STRANDS = 4
REWRITE_MOVES = 50
SIMILARITY_ORDERS = 5
PURE_ORDERS = 10


class SuiteResult:
    """Outcome of one property suite"""

    def __init__(self, suite: str, cases: int, passed: int, failed: int, seed: int,
                 seconds: float, counterexample: Optional[str] = None):
        self.suite = suite
        self.cases = cases
        self.passed = passed
        self.failed = failed
        self.seed = seed
        self.seconds = seconds
        self.counterexample = counterexample  # first failing case, if any

    @property
    def ok(self) -> bool:
        return self.failed == 0


class PropertyChecker:
    """Seeded randomized checks of the OU matrix identities"""

    def __init__(self, config_manager: Optional[ConfigManager] = None):
        """
        Initialize checker

        Args:
            config_manager: Configuration manager instance (defaults in memory when None)
        """
        self.config = config_manager or ConfigManager()
        self.max_strands = max(2, self.config.get_max_strands())
        self.max_length = max(0, self.config.get_max_length())
        self.results: List[SuiteResult] = []
        self.suites: Dict[str, Callable[[random.Random], Optional[str]]] = {
            'similarity': self._case_similarity,
            'product-formula': self._case_product_formula,
            'lemmas': self._case_matrix_identities,
            'positive-invariance': self._case_positive_invariance,
            'theorem1': self._case_layered_det_product,
            'theorem2': self._case_det_forces_warping,
            'pure-symmetry': self._case_pure_symmetry,
            'permutation-braids': self._case_permutation_braids,
        }

    @property
    def suite_names(self) -> List[str]:
        return list(self.suites)

    def _draw_word(self, rng: random.Random, max_strands: Optional[int] = None, positive: bool = False):
        n = rng.randint(2, max_strands or self.max_strands)
        length = rng.randint(0, self.max_length)
        maker = random_positive if positive else random_braid
        return maker(n, length, rng.randrange(2 ** 31))

    # -- individual cases: return None on success, or a counterexample description --

    def _case_similarity(self, rng: random.Random) -> Optional[str]:
        word = self._draw_word(rng)
        base = ou_matrix(word)
        expected = (det(base), rank(base), charpoly(base), over_set(word), under_set(word))
        identity_order = list(range(1, word.n + 1))
        for _ in range(SIMILARITY_ORDERS):
            pi = random_permutation(word.n, rng)
            m = ou_matrix(word, pi)
            got = (det(m), rank(m), charpoly(m), over_set(word, pi), under_set(word, pi))
            if got != expected:
                return f"word ({format_word(word)}) n={word.n} pi={pi}: invariants differ"
            witness = similarity_witness(identity_order, list(pi.image))
            if witness.transpose() @ base @ witness != m:
                return f"word ({format_word(word)}) n={word.n} pi={pi}: similarity witness fails"
        return None

    def _case_product_formula(self, rng: random.Random) -> Optional[str]:
        first = self._draw_word(rng)
        second = random_braid(first.n, rng.randint(0, self.max_length), rng.randrange(2 ** 31))
        pi = random_permutation(first.n, rng)
        rho = braid_permutation(first)
        lhs = ou_matrix(product(first, second), pi)
        rhs = ou_matrix(first, pi) + ou_matrix(second, compose(pi, rho))
        if lhs != rhs:
            return f"B=({format_word(first)}) C=({format_word(second)}) n={first.n} pi={pi}"
        return None

    def _case_matrix_identities(self, rng: random.Random) -> Optional[str]:
        word = self._draw_word(rng)
        pi = random_permutation(word.n, rng)
        m = ou_matrix(word, pi)
        k, l = sorted(rng.sample(range(1, word.n + 1), 2))
        if conjugate_swap(m, k, l) != ou_matrix(word, transpose(pi, k, l)):
            return f"word ({format_word(word)}) n={word.n} pi={pi}: transposition ({k},{l})"
        if rotate180(m) != ou_matrix(word, reverse(pi)):
            return f"word ({format_word(word)}) n={word.n} pi={pi}: reversal"
        return None

    def _case_positive_invariance(self, rng: random.Random) -> Optional[str]:
        word = self._draw_word(rng, positive=True)
        rewritten = random_rewrite(word, REWRITE_MOVES, rng.randrange(2 ** 31))
        orders = [random_permutation(word.n, rng) for _ in range(3)]
        if (len(rewritten) != len(word)
                or braid_permutation(rewritten) != braid_permutation(word)
                or ou_matrix(rewritten) != ou_matrix(word)
                or not same_ou_matrices(word, rewritten, orders)):
            return f"word ({format_word(word)}) -> ({format_word(rewritten)}) n={word.n}"
        return None

    def _case_layered_det_product(self, rng: random.Random) -> Optional[str]:
        n1 = rng.randint(1, LAYER_MAX_STRANDS)
        n2 = rng.randint(1, LAYER_MAX_STRANDS)
        first = random_braid(n1, rng.randint(0, self.max_length), rng.randrange(2 ** 31)) if n1 > 1 \
            else identity_word(1)
        second = random_braid(n2, rng.randint(0, self.max_length), rng.randrange(2 ** 31)) if n2 > 1 \
            else identity_word(1)
        tags = [1] * n1 + [2] * n2
        rng.shuffle(tags)
        word = layered_compose(first, second, tags)
        s1, s2 = list(range(1, n1 + 1)), list(range(n1 + 1, n1 + n2 + 1))
        label = f"B1=({format_word(first)}) B2=({format_word(second)}) interleave={tags}"

        if not is_valid_layering(word, (s1, s2)):
            return f"{label}: composite is not layered"
        if det(ou_matrix(word)) != det(ou_matrix(first)) * det(ou_matrix(second)):
            return f"{label}: det is not multiplicative"
        m1, _, m2 = block_view(word, (s1, s2))
        if m1 != ou_matrix(first) or m2 != ou_matrix(second):
            return f"{label}: diagonal blocks differ from the layers"
        if extract_layer(word, s1) != first or extract_layer(word, s2) != second:
            return f"{label}: extracted layers differ"
        if not finest_layering(word).det_product_holds(word):
            return f"{label}: finest layering det product fails"
        return None

    def _case_det_forces_warping(self, rng: random.Random) -> Optional[str]:
        word = self._draw_word(rng, max_strands=min(WD_CHECK_MAX_STRANDS, self.max_strands))
        result = wd_exact(word)
        if det(ou_matrix(word)) != 0 and result.value < 1:
            return f"word ({format_word(word)}) n={word.n}: det != 0 but wd = 0"
        if (result.value == 0) != finest_layering(word).is_completely_layered:
            return f"word ({format_word(word)}) n={word.n}: wd = 0 disagrees with complete layering"
        return None

    def _case_pure_symmetry(self, rng: random.Random) -> Optional[str]:
        n = rng.randint(2, self.max_strands)
        word = random_positive_pure(n, rng.randint(0, self.max_length), rng.randrange(2 ** 31))
        if not is_symmetric(ou_matrix(word)):
            return f"word ({format_word(word)}) n={n}: OU matrix not symmetric"
        half = len(word) // 2
        for _ in range(PURE_ORDERS):
            pi = random_permutation(n, rng)
            if objective(word, pi) != half:
                return f"word ({format_word(word)}) n={n} pi={pi}: objective != {half}"
        return None

    def _case_permutation_braids(self, rng: random.Random) -> Optional[str]:
        rho = random_permutation(rng.randint(2, self.max_strands), rng)
        word = permutation_braid(rho)
        m = ou_matrix(word)
        if (braid_permutation(word) != rho or not is_strict_lower_triangular(m)
                or det(m) != 0 or wd_exact(word).value != 0):
            return f"rho={rho} word ({format_word(word)})"
        return None

    # -- running --

    def run_suite(self, suite: str, seed: int, cases: Optional[int] = None) -> SuiteResult:
        """
        Run one suite

        Args:
            suite: Suite name
            seed: Random seed; the same seed replays the same cases
            cases: Number of cases (config default when None)

        Returns:
            SuiteResult (also appended to self.results)
        """
        if suite not in self.suites:
            raise ValueError(f"Unknown suite {suite!r}; choose from {', '.join(self.suites)}")
        if cases is None:
            cases = self.config.get_default_cases()
        if cases < 0:
            raise ValueError(f"Number of cases must be >= 0, got {cases}")

        case_fn = self.suites[suite]
        rng = random.Random(seed)
        show = self.config.get_show_progress() and sys.stderr.isatty()
        start = time.perf_counter()
        passed = failed = 0
        counterexample = None
        for case in tqdm(range(cases), desc=suite, file=sys.stderr, disable=not show, leave=False):
            outcome = case_fn(rng)
            if outcome is None:
                passed += 1
            else:
                failed += 1
                logger.debug(f"{suite} case {case} failed: {outcome}")
                if counterexample is None:
                    counterexample = f"case {case} (seed {seed}): {outcome}"

        result = SuiteResult(suite, cases, passed, failed, seed, time.perf_counter() - start, counterexample)
        self.results.append(result)
        logger.info(f"Suite {suite}: {passed}/{cases} passed in {result.seconds:.2f}s")
        return result

    def run(self, suites: Sequence[str], seed: int, cases: Optional[int] = None) -> List[SuiteResult]:
        """Run several suites; 'all' expands to every suite"""
        names: List[str] = []
        for name in suites:
            names.extend(self.suite_names if name == 'all' else [name])
        return [self.run_suite(name, seed, cases) for name in names]

    def generate_dataframe(self) -> pd.DataFrame:
        """
        Generate pandas DataFrame from suite results

        Returns:
            DataFrame with one row per suite run
        """
        columns = ['suite', 'cases', 'passed', 'failed', 'seed', 'seconds', 'counterexample']
        rows = [{
            'suite': r.suite,
            'cases': r.cases,
            'passed': r.passed,
            'failed': r.failed,
            'seed': r.seed,
            'seconds': round(r.seconds, 3),
            'counterexample': r.counterexample or ''
        } for r in self.results]
        return pd.DataFrame(rows, columns=columns)

    def save_to_csv(self, output_path: str):
        """
        Save suite results to CSV file

        Args:
            output_path: Path to output CSV file
        """
        self.generate_dataframe().to_csv(output_path, index=False)

    def get_summary(self) -> dict:
        return {
            'suites': len(self.results),
            'cases': sum(r.cases for r in self.results),
            'failed': sum(r.failed for r in self.results),
            'all_passed': all(r.ok for r in self.results),
        }

