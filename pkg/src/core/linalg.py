"""
Exact Integer Linear Algebra Module
Square matrices of Python integers: determinant, rank, characteristic polynomial
and the permutation-conjugation operators used on OU matrices
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of arbitrary-precision integers"""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        n = len(rows)
        if n < 1:
            raise ValueError("Matrix dimension must be >= 1")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"Matrix is not square: row of length {len(row)} in {n}x{n}")
        object.__setattr__(self, 'rows', rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        """0-based entry access: ``M[i, j]``"""
        i, j = index
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> int:
        """1-based entry access, matching the (i, j)-component notation"""
        return self.rows[i - 1][j - 1]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(tuple(zip(*self.rows)))

    def __add__(self, other: 'IntMatrix') -> 'IntMatrix':
        _check_same_size(self, other)
        return IntMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: 'IntMatrix') -> 'IntMatrix':
        _check_same_size(self, other)
        return IntMatrix(tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        _check_same_size(self, other)
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
        ))

    def scale(self, k: int) -> 'IntMatrix':
        return IntMatrix(tuple(tuple(k * v for v in row) for row in self.rows))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    def permute(self, order: Sequence[int]) -> 'IntMatrix':
        """
        Simultaneous row/column permutation

        Args:
            order: 1-based labels; result[i][j] = self[order[i]][order[j]]

        Returns:
            Permuted matrix
        """
        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError(f"Order {tuple(order)} is not a permutation of 1..{self.n}")
        idx = [k - 1 for k in order]
        return IntMatrix(tuple(tuple(self.rows[a][b] for b in idx) for a in idx))

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> List[List[int]]:
        """Sub-block as lists (0-based index sequences); may be rectangular"""
        return [[self.rows[i][j] for j in cols] for i in rows]

    def __str__(self) -> str:
        width = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(xI - M), coefficients from x^n down"""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        if not coefficients or coefficients[0] != 1:
            raise ValueError(f"Characteristic polynomial must be monic: {coefficients}")
        object.__setattr__(self, 'coefficients', coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def constant_term(self) -> int:
        return self.coefficients[-1]

    def evaluate(self, x: int) -> int:
        value = 0
        for c in self.coefficients:
            value = value * x + c
        return value

    def __str__(self) -> str:
        terms = []
        n = self.degree
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = n - k
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if power == 1 else f"x^{power}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _check_same_size(a: IntMatrix, b: IntMatrix):
    if a.n != b.n:
        raise ValueError(f"Size mismatch: {a.n}x{a.n} vs {b.n}x{b.n}")


def from_rows(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return IntMatrix(tuple(tuple(row) for row in rows))


def zeros(n: int) -> IntMatrix:
    return IntMatrix(tuple((0,) * n for _ in range(n)))


def identity_matrix(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def permutation_matrix(order: Sequence[int]) -> IntMatrix:
    """
    Matrix P with P[i][order[i]] = 1, so that P M P^T = M.permute(order)

    Args:
        order: 1-based permutation image

    Returns:
        Permutation matrix
    """
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"Order {tuple(order)} is not a permutation of 1..{n}")
    return IntMatrix(tuple(tuple(int(j + 1 == order[i]) for j in range(n)) for i in range(n)))


def similarity_witness(order: Sequence[int], other: Sequence[int]) -> IntMatrix:
    """
    Invertible N with M.permute(other) = N^-1 M.permute(order) N

    N is a permutation matrix, so N^-1 is its transpose.
    """
    return permutation_matrix(order) @ permutation_matrix(other).transpose()


def det(m: IntMatrix) -> int:
    """
    Exact determinant by fraction-free (Bareiss) elimination

    Args:
        m: Square integer matrix

    Returns:
        Determinant as a Python int
    """
    a = m.to_lists()
    n = m.n
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """
    Rank over the rationals by fraction-free elimination

    Args:
        m: Square integer matrix

    Returns:
        Rank
    """
    a = m.to_lists()
    n = m.n
    r = 0
    prev = 1
    for col in range(n):
        pivot_row = next((i for i in range(r, n) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        for i in range(r + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = pivot
        r += 1
        if r == n:
            break
    return r


def charpoly(m: IntMatrix) -> CharPoly:
    """
    Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence

    Every division in the recurrence is exact for integer matrices.

    Args:
        m: Square integer matrix

    Returns:
        CharPoly with n + 1 coefficients
    """
    n = m.n
    eye = identity_matrix(n)
    coefficients = [1]
    mk = eye
    for k in range(1, n + 1):
        am = m @ mk
        quotient, remainder = divmod(-am.trace(), k)
        if remainder:
            raise ArithmeticError(f"Inexact Faddeev-LeVerrier step {k} (trace {am.trace()})")
        coefficients.append(quotient)
        mk = am + eye.scale(quotient)
    return CharPoly(tuple(coefficients))


def conjugate_swap(m: IntMatrix, k: int, l: int) -> IntMatrix:
    """
    I_kl M I_kl: swap rows k and l, then columns k and l (1-based)
    """
    if not 1 <= k < l <= m.n:
        raise ValueError(f"Need 1 <= k < l <= {m.n}, got k={k}, l={l}")
    order = list(range(1, m.n + 1))
    order[k - 1], order[l - 1] = order[l - 1], order[k - 1]
    return m.permute(order)


def rotate180(m: IntMatrix) -> IntMatrix:
    """I' M I': entry (i, j) becomes entry (n+1-i, n+1-j)"""
    return IntMatrix(tuple(tuple(reversed(row)) for row in reversed(m.rows)))


def below_diagonal_sum(m: IntMatrix) -> int:
    return sum(m.rows[i][j] for i in range(m.n) for j in range(i))


def is_symmetric(m: IntMatrix) -> bool:
    return all(m.rows[i][j] == m.rows[j][i] for i in range(m.n) for j in range(i))


def is_strict_lower_triangular(m: IntMatrix) -> bool:
    return all(m.rows[i][j] == 0 for i in range(m.n) for j in range(i, m.n))


def is_strict_upper_triangular(m: IntMatrix) -> bool:
    return all(m.rows[i][j] == 0 for i in range(m.n) for j in range(i + 1))


def strict_lower_ones(n: int) -> IntMatrix:
    """The matrix D with entries 1 strictly below the diagonal"""
    return IntMatrix(tuple(tuple(int(i > j) for j in range(n)) for i in range(n)))
