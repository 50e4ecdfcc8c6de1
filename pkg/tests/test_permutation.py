"""
Test Permutation Utilities
"""

import unittest

from hypothesis import given, settings, strategies as st

from src.core.permutation import (
    Permutation,
    compose,
    identity,
    parse_permutation,
    reverse,
    transpose,
)


def permutations(max_n: int = 7):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))
    )


class TestPermutation(unittest.TestCase):
    """Bijection checks and the small worked cases"""

    def test_rejects_non_bijection(self):
        with self.assertRaises(ValueError):
            Permutation((1, 1, 3))
        with self.assertRaises(ValueError):
            Permutation((0, 1))

    def test_call_is_one_based(self):
        pi = Permutation((3, 1, 2))
        self.assertEqual(pi(1), 3)
        self.assertEqual(pi(3), 2)

    def test_reverse_example(self):
        self.assertEqual(reverse(identity(4)).image, (4, 3, 2, 1))

    def test_transpose_example(self):
        self.assertEqual(transpose(identity(4), 1, 3).image, (3, 2, 1, 4))

    def test_compose_applies_first_argument_first(self):
        pi = Permutation((2, 3, 1))
        rho = Permutation((3, 1, 2))
        # i -> rho(pi(i))
        self.assertEqual(compose(pi, rho).image, (1, 2, 3))
        self.assertEqual(compose(identity(3), pi), pi)

    def test_compose_size_mismatch(self):
        with self.assertRaises(ValueError):
            compose(identity(2), identity(3))

    def test_parse_permutation_formats(self):
        self.assertEqual(parse_permutation("1,3,2").image, (1, 3, 2))
        self.assertEqual(parse_permutation("(3 1 2 4)").image, (3, 1, 2, 4))
        with self.assertRaises(ValueError):
            parse_permutation("1,1")

    @given(permutations())
    @settings(max_examples=50, deadline=None)
    def test_inverse_composes_to_identity(self, pi):
        self.assertTrue(compose(pi, pi.inverse()).is_identity())
        self.assertTrue(compose(pi.inverse(), pi).is_identity())

    @given(permutations())
    @settings(max_examples=50, deadline=None)
    def test_reverse_is_involution(self, pi):
        self.assertEqual(reverse(reverse(pi)), pi)


if __name__ == '__main__':
    unittest.main()
