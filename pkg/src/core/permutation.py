"""
Permutation Module
Bijections on {1..n}, used both as braid permutations and strand permutations
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Permutation:
    """
    A bijection on {1..n} stored by its image sequence

    ``image[i - 1]`` is the value of the permutation at ``i``. As a strand
    permutation it lists the strand labels in order; as a braid permutation it
    maps a top position to the bottom position of the same strand.
    """

    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, 'image', image)

    @property
    def n(self) -> int:
        return len(self.image)

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.image):
            raise ValueError(f"Index {i} outside 1..{len(self.image)}")
        return self.image[i - 1]

    def __iter__(self):
        return iter(self.image)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.image) + ")"

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, 1))

    def inverse(self) -> 'Permutation':
        """Return the inverse bijection"""
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


def identity(n: int) -> Permutation:
    """Identity permutation on {1..n}"""
    if n < 1:
        raise ValueError(f"Permutation size must be >= 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def compose(pi: Permutation, rho: Permutation) -> Permutation:
    """
    Compose two permutations, applying ``pi`` first and ``rho`` second

    Args:
        pi: First permutation
        rho: Second permutation

    Returns:
        The permutation i -> rho(pi(i)); this is the product written pi rho
    """
    if pi.n != rho.n:
        raise ValueError(f"Size mismatch: {pi.n} vs {rho.n}")
    return Permutation(tuple(rho(v) for v in pi.image))


def reverse(pi: Permutation) -> Permutation:
    """(pi(n), ..., pi(1))"""
    return Permutation(tuple(reversed(pi.image)))


def transpose(pi: Permutation, k: int, l: int) -> Permutation:
    """
    Swap the k-th and l-th components of a permutation

    Args:
        pi: Permutation to modify
        k: First position (1-based)
        l: Second position (1-based)

    Returns:
        The permutation related to ``pi`` by the transposition of positions k, l
    """
    n = pi.n
    if not (1 <= k <= n and 1 <= l <= n):
        raise ValueError(f"Transposition ({k}, {l}) outside 1..{n}")
    image = list(pi.image)
    image[k - 1], image[l - 1] = image[l - 1], image[k - 1]
    return Permutation(tuple(image))


def parse_permutation(text: str) -> Permutation:
    """
    Parse a permutation written as comma or space separated labels

    Args:
        text: e.g. "1,3,5,7,2,4,6" or "(3 1 2 4)"

    Returns:
        Permutation
    """
    cleaned = text.strip().strip('()[]').replace(',', ' ')
    try:
        values = tuple(int(tok) for tok in cleaned.split())
    except ValueError:
        raise ValueError(f"Malformed permutation: {text!r}")
    if not values:
        raise ValueError("Empty permutation")
    return Permutation(values)
