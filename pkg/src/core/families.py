"""
Braid Families Module
Generators for weaving braids, fundamental braids, permutation braids and
seeded random words, plus the closed-form OU matrices used as oracles
"""

import random
from typing import List

from src.core.braid import BraidWord, braid_permutation, product
from src.core.linalg import IntMatrix, strict_lower_ones
from src.core.permutation import Permutation


def weaving(p: int, q: int) -> BraidWord:
    """
    Weaving braid B_W(p, q): q repetitions of sigma_1 sigma_2^-1 sigma_3 ...

    Generator i carries the sign (-1)^(i+1).

    Args:
        p: Strand count (>= 2)
        q: Number of block repetitions (>= 1)

    Returns:
        BraidWord on p strands
    """
    if p < 2 or q < 1:
        raise ValueError(f"Weaving braid needs p >= 2 and q >= 1, got p={p}, q={q}")
    block = tuple(i if i % 2 == 1 else -i for i in range(1, p))
    return BraidWord(p, block * q)


def weaving_order(p: int) -> Permutation:
    """(1, 3, ..., p, 2, 4, ..., p-1) for odd p"""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"Weaving order is defined for odd p >= 3, got {p}")
    return Permutation(tuple(range(1, p + 1, 2)) + tuple(range(2, p, 2)))


def weaving_ou_pattern(p: int) -> IntMatrix:
    """
    Closed-form OU matrix of B_W(p, p) under the order (1, 3, ..., p, 2, 4, ..., p-1)

    Entry (i, j) is 2 when i > j and (p+1)/2 <= i-j <= p-1, or when
    i < j and 1 <= j-i <= (p-1)/2; all other entries are 0.

    Args:
        p: Odd strand count (>= 3)

    Returns:
        p x p IntMatrix
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"Weaving OU pattern is defined for odd p >= 3, got {p}")
    half = (p - 1) // 2
    rows = []
    for i in range(1, p + 1):
        row = []
        for j in range(1, p + 1):
            if i > j:
                value = 2 if half + 1 <= i - j <= p - 1 else 0
            elif i < j:
                value = 2 if 1 <= j - i <= half else 0
            else:
                value = 0
            row.append(value)
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def fundamental(n: int) -> BraidWord:
    """Fundamental braid as the staircase (s1)(s2 s1)...(s_{n-1} ... s1)"""
    if n < 1:
        raise ValueError(f"Fundamental braid needs n >= 1, got {n}")
    letters: List[int] = []
    for top in range(1, n):
        letters.extend(range(top, 0, -1))
    return BraidWord(n, tuple(letters))


def delta_power(n: int, r: int) -> BraidWord:
    """r-fold product of the fundamental braid"""
    if r < 0:
        raise ValueError(f"Power must be >= 0, got {r}")
    delta = fundamental(n)
    return BraidWord(n, delta.letters * r)


def fundamental_matrix(n: int) -> IntMatrix:
    """D: ones strictly below the diagonal"""
    return strict_lower_ones(n)


def delta_power_matrix(n: int, r: int) -> IntMatrix:
    """ceil(r/2) D + floor(r/2) D^T, the OU matrix of the r-th power at id"""
    d = strict_lower_ones(n)
    return d.scale((r + 1) // 2) + d.transpose().scale(r // 2)


def permutation_braid(rho: Permutation) -> BraidWord:
    """
    Positive permutation braid realizing rho, via bubble-sort adjacent swaps

    Every strand pair crosses at most once and the word length equals the
    number of inversions of rho.

    Args:
        rho: Target braid permutation

    Returns:
        Positive BraidWord with braid permutation rho
    """
    n = rho.n
    strands = list(range(1, n + 1))
    letters: List[int] = []
    swapped = True
    while swapped:
        swapped = False
        for p in range(1, n):
            if rho(strands[p - 1]) > rho(strands[p]):
                strands[p - 1], strands[p] = strands[p], strands[p - 1]
                letters.append(p)
                swapped = True
    return BraidWord(n, tuple(letters))


def det_witness(k: int) -> BraidWord:
    """sigma_1 sigma_2^(2k) sigma_1 sigma_2, a positive 3-braid with determinant k"""
    if k < 0:
        raise ValueError(f"Determinant witness needs k >= 0, got {k}")
    return BraidWord(3, (1,) + (2,) * (2 * k) + (1, 2))


def _check_random_bounds(n: int, length: int):
    if n < 2 or length < 0:
        raise ValueError(f"Random words need n >= 2 and length >= 0, got n={n}, length={length}")


def random_braid(n: int, length: int, seed: int) -> BraidWord:
    """Uniform i.i.d. signed letters"""
    _check_random_bounds(n, length)
    rng = random.Random(seed)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
    return BraidWord(n, letters)


def random_positive(n: int, length: int, seed: int) -> BraidWord:
    """Uniform i.i.d. positive letters"""
    _check_random_bounds(n, length)
    rng = random.Random(seed)
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


def random_positive_pure(n: int, length: int, seed: int) -> BraidWord:
    """
    Positive word with identity braid permutation

    A random positive word is completed by the permutation braid of the
    inverse of its braid permutation.
    """
    word = random_positive(n, length, seed)
    closing = permutation_braid(braid_permutation(word).inverse())
    return product(word, closing)


def random_permutation(n: int, rng: random.Random) -> Permutation:
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation(tuple(image))
