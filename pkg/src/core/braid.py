"""
Braid Core Module
Parses braid words, simulates diagrams top to bottom and builds OU matrices
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple

from src.core.linalg import IntMatrix
from src.core.permutation import Permutation

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'^([+-]?\d+)(?:\^([+-]?\d+))?$')


class BraidParseError(ValueError):
    """Raised for malformed braid word text or out-of-range generators"""


class BraidMoveError(ValueError):
    """Raised when a positive-braid move cannot be applied"""


class MoveKind(Enum):
    """Positive braid relations used as rewrite moves"""
    FAR_COMMUTATION = "far-commutation"
    TYPE_III = "type-III"


@dataclass(frozen=True)
class BraidWord:
    """
    A braid diagram as a word in the Artin generators

    Letter ``g > 0`` is sigma_g, letter ``g < 0`` is sigma_|g| inverse.
    """

    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidParseError(f"Strand count must be >= 1, got {self.n}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) > self.n - 1:
                raise BraidParseError(
                    f"Generator {g} out of range for {self.n} strands (need 1 <= |g| <= {self.n - 1})"
                )
        object.__setattr__(self, 'letters', letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class CrossingEvent:
    """One crossing met while scanning the diagram from the top"""

    index: int           # 0-based position in the word
    over_strand: int     # strand label (top position)
    under_strand: int
    sign: int            # +1 or -1
    position: int        # generator index i of the crossing


def parse_word(text: str, n: Optional[int] = None) -> BraidWord:
    """
    Parse whitespace separated generator tokens into a braid word

    Tokens are nonzero integers with an optional ``^k`` exponent. A negative
    exponent flips the letter sign; exponent 0 contributes nothing.

    Args:
        text: Word text, e.g. "1 -2 3^2"
        n: Strand count; defaults to 1 + the largest generator index

    Returns:
        BraidWord

    Raises:
        BraidParseError: on malformed tokens, token 0, or generators out of range
    """
    letters: List[int] = []
    for token in text.split():
        match = _TOKEN.match(token)
        if not match:
            raise BraidParseError(f"Malformed token {token!r}")
        g = int(match.group(1))
        if g == 0:
            raise BraidParseError(f"Generator 0 is not allowed (token {token!r})")
        k = int(match.group(2)) if match.group(2) is not None else 1
        if k == 0:
            continue
        letter = g if k > 0 else -g
        letters.extend([letter] * abs(k))

    if n is None:
        n = 1 + max((abs(g) for g in letters), default=0)
    elif n < 1:
        raise BraidParseError(f"Strand count must be >= 1, got {n}")

    return BraidWord(n, tuple(letters))


def format_word(word: BraidWord) -> str:
    """
    Canonical text for a braid word; runs of a repeated letter use ``g^k``

    ``parse_word(format_word(B), B.n) == B`` for every valid word.
    """
    parts: List[str] = []
    letters = word.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run = j - i
        parts.append(str(letters[i]) if run == 1 else f"{letters[i]}^{run}")
        i = j
    return " ".join(parts)


@lru_cache(maxsize=256)
def simulate(word: BraidWord) -> Tuple[CrossingEvent, ...]:
    """
    Scan the diagram from the top, emitting one event per letter

    For a positive letter +i the strand at position i+1 passes over; for -i
    the strand at position i passes over.

    Args:
        word: Braid word

    Returns:
        Tuple of CrossingEvent in word order
    """
    strands = list(range(1, word.n + 1))  # strands[p - 1] = label at position p
    events = []
    for index, g in enumerate(word.letters):
        i = abs(g)
        left, right = strands[i - 1], strands[i]
        if g > 0:
            over, under = right, left
        else:
            over, under = left, right
        events.append(CrossingEvent(index, over, under, 1 if g > 0 else -1, i))
        strands[i - 1], strands[i] = right, left
    return tuple(events)


def final_positions(word: BraidWord) -> List[int]:
    """Strand labels at the bottom, left to right"""
    strands = list(range(1, word.n + 1))
    for g in word.letters:
        i = abs(g)
        strands[i - 1], strands[i] = strands[i], strands[i - 1]
    return strands


def braid_permutation(word: BraidWord) -> Permutation:
    """rho(i) = j when the strand starting at top position i ends at bottom position j"""
    bottom = final_positions(word)
    rho = [0] * word.n
    for position, label in enumerate(bottom, 1):
        rho[label - 1] = position
    return Permutation(tuple(rho))


@lru_cache(maxsize=256)
def _label_matrix(word: BraidWord) -> IntMatrix:
    counts = [[0] * word.n for _ in range(word.n)]
    for event in simulate(word):
        counts[event.over_strand - 1][event.under_strand - 1] += 1
    return IntMatrix(tuple(tuple(row) for row in counts))


def ou_matrix(word: BraidWord, pi: Optional[Permutation] = None) -> IntMatrix:
    """
    OU matrix M_B(pi)

    Entry (i, j) counts the crossings where strand pi(i) passes over strand pi(j).

    Args:
        word: Braid word
        pi: Strand permutation (identity when omitted)

    Returns:
        n x n IntMatrix with zero diagonal
    """
    base = _label_matrix(word)
    if pi is None:
        return base
    if pi.n != word.n:
        raise ValueError(f"Permutation on {pi.n} labels does not fit a {word.n}-strand braid")
    if pi.is_identity():
        return base
    return base.permute(pi.image)


def _check_strand(word: BraidWord, label: int):
    if not 1 <= label <= word.n:
        raise ValueError(f"Strand {label} outside 1..{word.n}")


def wd_pair(word: BraidWord, i: int, j: int) -> int:
    """Number of crossings where strand i passes under strand j"""
    _check_strand(word, i)
    _check_strand(word, j)
    if i == j:
        raise ValueError(f"Warping degree of a pair needs distinct strands, got ({i}, {j})")
    return _label_matrix(word).entry(j, i)


def pair_crossings(word: BraidWord, i: int, j: int) -> int:
    """Total number of mutual crossings of strands i and j"""
    return wd_pair(word, i, j) + wd_pair(word, j, i)


def product(first: BraidWord, second: BraidWord) -> BraidWord:
    """Braid product BC: the diagram of B stacked above the diagram of C"""
    if first.n != second.n:
        raise ValueError(f"Strand-count mismatch: {first.n} vs {second.n}")
    return BraidWord(first.n, first.letters + second.letters)


def inverse_word(word: BraidWord) -> BraidWord:
    return BraidWord(word.n, tuple(-g for g in reversed(word.letters)))


def is_positive(word: BraidWord) -> bool:
    return all(g > 0 for g in word.letters)


def is_pure(word: BraidWord) -> bool:
    return braid_permutation(word).is_identity()


def identity_word(n: int) -> BraidWord:
    return BraidWord(n, ())


def move_applies(letters: Tuple[int, ...], kind: MoveKind, position: int) -> bool:
    """Whether a move of the given kind matches the letters at position"""
    if kind is MoveKind.FAR_COMMUTATION:
        if position < 0 or position + 2 > len(letters):
            return False
        a, b = letters[position], letters[position + 1]
        return a > 0 and b > 0 and abs(a - b) != 1
    if position < 0 or position + 3 > len(letters):
        return False
    a, b, c = letters[position:position + 3]
    return a > 0 and b > 0 and a == c and abs(a - b) == 1


def apply_braid_move(word: BraidWord, kind: MoveKind, position: int) -> BraidWord:
    """
    Rewrite a positive word by one braid relation

    Args:
        word: Positive braid word
        kind: FAR_COMMUTATION (s_i s_j -> s_j s_i, |i-j| != 1) or
              TYPE_III (s_i s_j s_i -> s_j s_i s_j, |i-j| = 1)
        position: 0-based index of the first letter of the pattern

    Returns:
        Rewritten word of the same length on the same strands

    Raises:
        BraidMoveError: non-positive word or pattern absent
    """
    if not is_positive(word):
        raise BraidMoveError("Braid moves are only defined here for positive words")
    letters = word.letters
    if not move_applies(letters, kind, position):
        raise BraidMoveError(f"No {kind.value} pattern at position {position} in ({format_word(word)})")

    rewritten = list(letters)
    if kind is MoveKind.FAR_COMMUTATION:
        rewritten[position], rewritten[position + 1] = letters[position + 1], letters[position]
    else:
        a, b = letters[position], letters[position + 1]
        rewritten[position:position + 3] = [b, a, b]
    logger.debug(f"Applied {kind.value} at {position}")
    return BraidWord(word.n, tuple(rewritten))


def move_sites(word: BraidWord) -> List[Tuple[MoveKind, int]]:
    """All (kind, position) pairs where a move applies, in position order"""
    sites = []
    for position in range(len(word.letters)):
        for kind in (MoveKind.FAR_COMMUTATION, MoveKind.TYPE_III):
            if not move_applies(word.letters, kind, position):
                continue
            if kind is MoveKind.FAR_COMMUTATION and word.letters[position] == word.letters[position + 1]:
                continue
            sites.append((kind, position))
    return sites
