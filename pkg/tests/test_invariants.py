"""
Test Braid Invariants
"""

import random
import unittest

from src.core.braid import BraidMoveError, BraidWord, ou_matrix, parse_word
from src.core.families import random_braid, random_permutation, random_positive
from src.core.invariants import (
    CrossingMultiset,
    charpoly_of,
    det_of,
    invariant_report,
    is_positive_braid_invariant_consistent,
    over_set,
    random_rewrite,
    rank_of,
    same_ou_matrices,
    trace_of,
    under_set,
)
from src.core.linalg import charpoly, det, rank
from src.core.permutation import Permutation


class TestCrossingMultisets(unittest.TestCase):
    """Over and under crossing sets"""

    def test_det_witness_example(self):
        word = parse_word("1 2^4 1 2")
        self.assertEqual(over_set(word).to_lists(), [[0, 0, 1], [0, 1, 2], [0, 1, 2]])
        self.assertEqual(under_set(word).to_lists(), [[0, 0, 2], [0, 1, 1], [0, 1, 2]])
        self.assertEqual(str(over_set(word)), "{{0,0,1}, {0,1,2}, {0,1,2}}")

    def test_four_strand_example(self):
        rows = [[0, 1, 0, 0], [2, 0, 0, 1], [0, 2, 0, 1], [0, 1, 0, 0]]
        columns = [list(col) for col in zip(*rows)]
        self.assertEqual(CrossingMultiset.from_lines(rows).to_lists(),
                         [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 1, 2], [0, 0, 1, 2]])
        self.assertEqual(CrossingMultiset.from_lines(columns).to_lists(),
                         [[0, 0, 0, 0], [0, 0, 0, 2], [0, 0, 1, 1], [0, 1, 1, 2]])

    def test_empty_word(self):
        word = BraidWord(2)
        self.assertEqual(over_set(word).to_lists(), [[0, 0], [0, 0]])
        self.assertEqual(under_set(word), over_set(word))

    def test_independent_of_order(self):
        rng = random.Random(17)
        for _ in range(40):
            word = random_braid(rng.randint(2, 6), rng.randint(0, 14), rng.randrange(10 ** 6))
            pi = random_permutation(word.n, rng)
            self.assertEqual(over_set(word, pi), over_set(word))
            self.assertEqual(under_set(word, pi), under_set(word))


class TestScalarInvariants(unittest.TestCase):
    """det, rank, trace and charpoly do not depend on the strand order"""

    def test_det_witness_example(self):
        word = parse_word("1 2^4 1 2")
        self.assertEqual(det_of(word), 2)
        self.assertEqual(rank_of(word), 3)
        self.assertEqual(trace_of(word), 0)
        self.assertEqual(charpoly_of(word).coefficients, (1, 0, -5, -2))

    def test_similarity_over_random_orders(self):
        rng = random.Random(23)
        for _ in range(40):
            word = random_braid(rng.randint(2, 6), rng.randint(0, 14), rng.randrange(10 ** 6))
            for _ in range(5):
                m = ou_matrix(word, random_permutation(word.n, rng))
                self.assertEqual(det(m), det_of(word))
                self.assertEqual(rank(m), rank_of(word))
                self.assertEqual(charpoly(m), charpoly_of(word))


class TestRandomRewrite(unittest.TestCase):
    """Positive braid rewriting keeps the OU matrices"""

    def test_rewrites_keep_matrices(self):
        rng = random.Random(42)
        for _ in range(40):
            word = random_positive(rng.randint(3, 6), rng.randint(0, 12), rng.randrange(10 ** 6))
            rewritten = random_rewrite(word, 50, rng.randrange(10 ** 6))
            orders = [random_permutation(word.n, rng) for _ in range(3)]
            self.assertEqual(len(rewritten), len(word))
            self.assertTrue(same_ou_matrices(word, rewritten, orders))
            self.assertTrue(is_positive_braid_invariant_consistent(word, rewritten))

    def test_same_seed_same_result(self):
        word = random_positive(5, 12, 7)
        self.assertEqual(random_rewrite(word, 20, 3), random_rewrite(word, 20, 3))

    def test_zero_moves(self):
        word = BraidWord(3, (1, 2, 1))
        self.assertEqual(random_rewrite(word, 0, 1), word)

    def test_rejects_bad_input(self):
        with self.assertRaises(BraidMoveError):
            random_rewrite(BraidWord(3, (1, -2)), 5, 0)
        with self.assertRaises(ValueError):
            random_rewrite(BraidWord(3, (1, 2)), -1, 0)

    def test_consistency_helper(self):
        self.assertFalse(is_positive_braid_invariant_consistent(BraidWord(3, (1, 2)), BraidWord(3, (2, 1))))
        self.assertFalse(is_positive_braid_invariant_consistent(BraidWord(2, (-1,)), BraidWord(2, (-1,))))


class TestInvariantReport(unittest.TestCase):
    """Report assembly and its JSON form"""

    def test_report_fields(self):
        report = invariant_report(parse_word("1 -2 3^2"))
        self.assertEqual(report.n, 4)
        self.assertEqual(report.length, 4)
        self.assertEqual(report.rho, (3, 1, 2, 4))
        self.assertEqual(report.order, (1, 2, 3, 4))
        self.assertIsNone(report.wd)

    def test_to_dict(self):
        data = invariant_report(parse_word("1 2^4 1 2"), warping='exact').to_dict()
        self.assertEqual(data['det'], "2")
        self.assertEqual(data['rank'], 3)
        self.assertEqual(data['charpoly'], ["1", "0", "-5", "-2"])
        self.assertEqual(data['word'], "1 2^4 1 2")
        self.assertTrue(data['wd']['exact'])
        self.assertGreaterEqual(data['wd']['value'], 1)

    def test_order_changes_matrix_only(self):
        word = parse_word("1 2^4 1 2")
        plain = invariant_report(word)
        ordered = invariant_report(word, Permutation((2, 3, 1)))
        self.assertNotEqual(plain.ou_matrix, ordered.ou_matrix)
        self.assertEqual((plain.det, plain.rank, plain.charpoly, plain.over_set),
                         (ordered.det, ordered.rank, ordered.charpoly, ordered.over_set))

    def test_unknown_warping_mode(self):
        with self.assertRaises(ValueError):
            invariant_report(BraidWord(2, (1,)), warping='fast')


if __name__ == '__main__':
    unittest.main()
