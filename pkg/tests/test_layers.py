"""
Test Layer Decomposition
"""

import random
import unittest

from src.core.braid import BraidWord, ou_matrix, parse_word, wd_pair
from src.core.families import det_witness, fundamental, random_braid
from src.core.invariants import det_of
from src.core.layers import (
    block_view,
    extract_layer,
    finest_layering,
    is_completely_layered,
    is_layered,
    is_valid_layering,
    layered_compose,
    strongly_connected_components,
    under_digraph,
)
from src.core.linalg import det
from src.core.warping import wd_exact


class TestUnderDigraph(unittest.TestCase):
    """Edges i -> j when strand i goes under strand j"""

    def test_fundamental(self):
        graph = under_digraph(fundamental(3))
        self.assertEqual(graph, {1: [2, 3], 2: [3], 3: []})

    def test_two_cycle(self):
        self.assertEqual(under_digraph(parse_word("1 1")), {1: [2], 2: [1]})

    def test_empty(self):
        self.assertEqual(under_digraph(BraidWord(3)), {1: [], 2: [], 3: []})

    def test_scc(self):
        edges = {1: [2], 2: [3], 3: [1], 4: [1], 5: []}
        components = list(strongly_connected_components([1, 2, 3, 4, 5], edges))
        self.assertEqual(components, [(1, 2, 3), (4,), (5,)])

    def test_scc_emits_targets_first(self):
        edges = {1: [2], 2: [3], 3: [2, 4], 4: []}
        self.assertEqual(strongly_connected_components([1, 2, 3, 4], edges), [(4,), (2, 3), (1,)])

    def test_scc_long_chain(self):
        n = 5000
        edges = {v: [v + 1] for v in range(1, n)}
        components = strongly_connected_components(range(1, n + 1), edges)
        self.assertEqual(components, [(v,) for v in range(n, 0, -1)])


class TestFinestLayering(unittest.TestCase):
    """SCC condensation in layer order"""

    def test_disjoint_crossings(self):
        decomposition = finest_layering(parse_word("1 3", 4))
        self.assertEqual(decomposition.layers, ((2,), (1,), (4,), (3,)))
        self.assertTrue(decomposition.is_completely_layered)

    def test_fundamental(self):
        for n in range(2, 7):
            decomposition = finest_layering(fundamental(n))
            self.assertEqual(decomposition.layers, tuple((k,) for k in range(n, 0, -1)))

    def test_not_layered(self):
        word = parse_word("1 1")
        self.assertEqual(finest_layering(word).k, 1)
        self.assertFalse(is_layered(word))
        self.assertFalse(is_completely_layered(word))

    def test_layering_condition_holds(self):
        rng = random.Random(8)
        for _ in range(50):
            word = random_braid(rng.randint(2, 6), rng.randint(0, 8), rng.randrange(10 ** 6))
            decomposition = finest_layering(word)
            self.assertTrue(is_valid_layering(word, decomposition.layers))
            self.assertTrue(decomposition.det_product_holds(word))
            self.assertEqual(finest_layering(word), decomposition)

    def test_completely_layered_iff_wd_zero(self):
        rng = random.Random(19)
        for _ in range(50):
            word = random_braid(rng.randint(2, 5), rng.randint(0, 6), rng.randrange(10 ** 6))
            self.assertEqual(is_completely_layered(word), wd_exact(word).value == 0)


class TestExtractLayer(unittest.TestCase):
    """Sub-diagrams on a strand set"""

    def test_full_set(self):
        word = parse_word("1 -2 3^2")
        self.assertEqual(extract_layer(word, [1, 2, 3, 4]), word)

    def test_pair(self):
        self.assertEqual(extract_layer(parse_word("1 3", 4), {3, 4}), BraidWord(2, (1,)))

    def test_non_adjacent_strands(self):
        # strand 3 meets strand 1 at positions 2, 3 after sigma_1 moved strand 1 right
        word = BraidWord(3, (1, 2))
        self.assertEqual(extract_layer(word, {1, 3}), BraidWord(2, (1,)))

    def test_errors(self):
        with self.assertRaises(ValueError):
            extract_layer(BraidWord(3, (1,)), set())
        with self.assertRaises(ValueError):
            extract_layer(BraidWord(3, (1,)), {4})


class TestLayeredCompose(unittest.TestCase):
    """Layered diagrams built from two braids"""

    def test_trivial_interleave(self):
        word = layered_compose(BraidWord(2, (1,)), BraidWord(2, (-1,)), [1, 1, 2, 2])
        self.assertEqual(word, BraidWord(4, (1, -3)))

    def test_shuffle_letters(self):
        word = layered_compose(BraidWord(2, (1,)), BraidWord(2, (1,)), [1, 2, 1, 2])
        self.assertEqual(word.letters, (1, 3, -2))
        self.assertEqual(wd_pair(word, 4, 1), 1)

    def test_det_multiplicative(self):
        first, second = det_witness(1), det_witness(2)
        word = layered_compose(first, second, [2, 1, 1, 2, 1, 2])
        self.assertEqual(det_of(word), 2)
        self.assertTrue(is_valid_layering(word, ([1, 2, 3], [4, 5, 6])))

    def test_random_instances(self):
        rng = random.Random(13)
        for _ in range(60):
            n1, n2 = rng.randint(2, 4), rng.randint(2, 4)
            first = random_braid(n1, rng.randint(0, 10), rng.randrange(10 ** 6))
            second = random_braid(n2, rng.randint(0, 10), rng.randrange(10 ** 6))
            tags = [1] * n1 + [2] * n2
            rng.shuffle(tags)
            word = layered_compose(first, second, tags)
            s1, s2 = list(range(1, n1 + 1)), list(range(n1 + 1, n1 + n2 + 1))
            self.assertEqual(det_of(word), det_of(first) * det_of(second))
            self.assertEqual(ou_matrix(extract_layer(word, s1)), ou_matrix(first))
            self.assertEqual(ou_matrix(extract_layer(word, s2)), ou_matrix(second))
            for si in s1:
                for sj in s2:
                    self.assertEqual(wd_pair(word, si, sj), 0)

    def test_bad_interleave(self):
        with self.assertRaises(ValueError):
            layered_compose(BraidWord(2), BraidWord(2), [1, 1, 1, 2])
        with self.assertRaises(ValueError):
            layered_compose(BraidWord(2), BraidWord(2), [1, 2, 1])


class TestBlockView(unittest.TestCase):
    """Block triangular OU matrix of a 2-layering"""

    def test_blocks(self):
        word = layered_compose(BraidWord(2, (1,)), BraidWord(2, (1,)), [1, 2, 1, 2])
        m1, n_block, m2 = block_view(word, ([1, 2], [3, 4]))
        self.assertEqual(m1.to_lists(), [[0, 0], [1, 0]])
        self.assertEqual(m2.to_lists(), [[0, 0], [1, 0]])
        self.assertEqual(n_block, [[0, 1], [0, 0]])

    def test_side_by_side_has_zero_corner(self):
        word = layered_compose(det_witness(1), det_witness(3), [1, 1, 1, 2, 2, 2])
        m1, n_block, m2 = block_view(word, ([1, 2, 3], [4, 5, 6]))
        self.assertEqual(n_block, [[0] * 3] * 3)
        self.assertEqual(det(m1) * det(m2), det_of(word))

    def test_single_strand_layer(self):
        word = layered_compose(BraidWord(1), det_witness(2), [2, 1, 2, 2])
        m1, _, _ = block_view(word, ([1], [2, 3, 4]))
        self.assertEqual(m1.to_lists(), [[0]])
        self.assertEqual(det_of(word), 0)

    def test_invalid_layering(self):
        with self.assertRaises(ValueError):
            block_view(parse_word("1 1"), ([1], [2]))
        with self.assertRaises(ValueError):
            block_view(fundamental(3), ([1], [2, 3]))


if __name__ == '__main__':
    unittest.main()
