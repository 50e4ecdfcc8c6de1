"""
Braid Invariants Module
Permutation-independent quantities of the OU matrix: determinant, rank,
characteristic polynomial, over/under crossing multisets, and the positive
braid rewriting used to check their invariance
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from src.core.braid import (
    BraidMoveError,
    BraidWord,
    apply_braid_move,
    braid_permutation,
    format_word,
    is_positive,
    move_sites,
    ou_matrix,
)
from src.core.linalg import CharPoly, IntMatrix, charpoly, det, rank
from src.core.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossingMultiset:
    """
    Multiset of multisets in canonical form

    Each inner multiset is sorted ascending and the outer list is sorted
    lexicographically, so equality of multisets is equality of tuples.
    """

    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_lines(cls, lines: Iterable[Iterable[int]]) -> 'CrossingMultiset':
        return cls(tuple(sorted(tuple(sorted(line)) for line in lines)))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(str(v) for v in row) + "}" for row in self.rows) + "}"


@dataclass
class InvariantReport:
    """Bundle of the invariants of one braid word, ready for serialization"""

    n: int
    word: str
    length: int
    rho: Tuple[int, ...]
    order: Tuple[int, ...]
    ou_matrix: IntMatrix
    det: int
    rank: int
    charpoly: CharPoly
    over_set: CrossingMultiset
    under_set: CrossingMultiset
    wd: Optional[Any] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready dict; big integers are decimal strings"""
        data = {
            'n': self.n,
            'word': self.word,
            'length': self.length,
            'rho': list(self.rho),
            'order': list(self.order),
            'ou_matrix': self.ou_matrix.to_lists(),
            'det': str(self.det),
            'rank': self.rank,
            'charpoly': [str(c) for c in self.charpoly.coefficients],
            'over_set': self.over_set.to_lists(),
            'under_set': self.under_set.to_lists(),
        }
        if self.wd is not None:
            data['wd'] = self.wd.to_dict()
        return data


def det_of(word: BraidWord) -> int:
    """det(B): determinant of the OU matrix at the identity order"""
    return det(ou_matrix(word))


def rank_of(word: BraidWord) -> int:
    return rank(ou_matrix(word))


def trace_of(word: BraidWord) -> int:
    return ou_matrix(word).trace()


def charpoly_of(word: BraidWord) -> CharPoly:
    return charpoly(ou_matrix(word))


def over_set(word: BraidWord, pi: Optional[Permutation] = None) -> CrossingMultiset:
    """O(B): canonical multiset of the rows of the OU matrix"""
    return CrossingMultiset.from_lines(ou_matrix(word, pi).rows)


def under_set(word: BraidWord, pi: Optional[Permutation] = None) -> CrossingMultiset:
    """U(B): canonical multiset of the columns of the OU matrix"""
    return CrossingMultiset.from_lines(ou_matrix(word, pi).transpose().rows)


def random_rewrite(word: BraidWord, moves: int, seed: int) -> BraidWord:
    """
    Apply random positive braid moves

    At each step every applicable far-commutation and type-III site is
    enumerated and one is picked uniformly. Both moves are their own inverse
    pattern, so both directions are covered. Stops early if no site exists.

    Args:
        word: Positive braid word
        moves: Number of moves to apply
        seed: Random seed

    Returns:
        A positive word of the same length representing the same positive braid

    Raises:
        BraidMoveError: if the word is not positive
    """
    if not is_positive(word):
        raise BraidMoveError("random_rewrite needs a positive word")
    if moves < 0:
        raise ValueError(f"Number of moves must be >= 0, got {moves}")

    rng = random.Random(seed)
    current = word
    for step in range(moves):
        sites = move_sites(current)
        if not sites:
            logger.debug(f"No applicable move after {step} steps for ({format_word(word)})")
            break
        kind, position = rng.choice(sites)
        current = apply_braid_move(current, kind, position)
    return current


def same_ou_matrices(word: BraidWord, other: BraidWord, orders: Iterable[Permutation]) -> bool:
    """Entrywise equality of the OU matrices of two words for each given order"""
    if word.n != other.n:
        return False
    return all(ou_matrix(word, pi) == ou_matrix(other, pi) for pi in orders)


def is_positive_braid_invariant_consistent(word: BraidWord, other: BraidWord) -> bool:
    """
    Two positive words for the same positive braid must share the OU matrix

    Checks the identity-order matrices; every other order is a simultaneous
    permutation of it. Words that are not positive or differ in strand count
    or braid permutation are never consistent.
    """
    if not (is_positive(word) and is_positive(other)) or word.n != other.n:
        return False
    if braid_permutation(word) != braid_permutation(other):
        return False
    return ou_matrix(word) == ou_matrix(other)


def invariant_report(word: BraidWord, pi: Optional[Permutation] = None,
                     warping: Optional[str] = None, seed: int = 0,
                     node_budget: Optional[int] = None) -> InvariantReport:
    """
    Assemble all invariants of a braid word

    Args:
        word: Braid word
        pi: Order used for the displayed OU matrix (identity when omitted);
            the invariants do not depend on it
        warping: None, "exact" or "heuristic" to include a warping degree result
        seed: Seed for the heuristic
        node_budget: Optional node budget for the exact search

    Returns:
        InvariantReport
    """
    matrix = ou_matrix(word, pi)
    report = InvariantReport(
        n=word.n,
        word=format_word(word),
        length=len(word),
        rho=braid_permutation(word).image,
        order=pi.image if pi is not None else tuple(range(1, word.n + 1)),
        ou_matrix=matrix,
        det=det(matrix),
        rank=rank(matrix),
        charpoly=charpoly(matrix),
        over_set=CrossingMultiset.from_lines(matrix.rows),
        under_set=CrossingMultiset.from_lines(matrix.transpose().rows),
    )

    if warping is not None:
        # warping imports this module for the determinant bound
        from src.core.warping import wd_exact, wd_heuristic
        if warping == 'exact':
            report.wd = wd_exact(word, node_budget=node_budget)
        elif warping == 'heuristic':
            report.wd = wd_heuristic(word, seed)
        else:
            raise ValueError(f"Unknown warping mode {warping!r}")

    logger.debug(f"Report for ({report.word}): det={report.det}, rank={report.rank}")
    return report
