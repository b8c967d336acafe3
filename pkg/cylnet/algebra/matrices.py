"""
Dense matrices over the exact rings of the package (:class:`MPoly`,
:class:`TPoly` and :class:`fractions.Fraction`).

Determinants and characteristic polynomials are division free: cofactor
expansion for small sizes and the Berkowitz recursion otherwise.
"""

__all__ = ['RingMatrix', 'berkowitz', 'charpoly', 'det_division_free', 'minors',
           't_matrix']

from .mpoly import MPoly
from .tpoly import TPoly
from fractions import Fraction
from itertools import combinations
from typing import (Callable, Dict, FrozenSet, List, Sequence, Tuple)

import logging

# Starting logger
logger = logging.getLogger(__name__)

# Largest size handled by cofactor expansion
COFACTOR_LIMIT = 6

_UNITS = {
    MPoly: (MPoly, lambda: MPoly.constant(1)),
    TPoly: (TPoly, lambda: TPoly.constant(1)),
    Fraction: (Fraction, lambda: Fraction(1)),
}


def _ring(ring: type) -> Tuple[Callable, Callable]:
    if ring not in _UNITS:
        raise TypeError(f"unsupported ring: {ring}")
    return _UNITS[ring]


class RingMatrix:
    """Immutable square or rectangular matrix with entries in `ring`"""

    __slots__ = ('rows', 'ring')

    def __init__(self, rows: Sequence[Sequence], ring: type = MPoly):
        _ring(ring)
        coerce = _coercion(ring)
        self.ring = ring
        self.rows = tuple(tuple(coerce(x) for x in row) for row in rows)
        if self.rows and any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int, ring: type = MPoly) -> 'RingMatrix':
        zero, one = _ring(ring)
        return cls([[one() if i == j else zero() for j in range(n)]
                    for i in range(n)], ring)

    @classmethod
    def zeros(cls, n: int, m: int = None, ring: type = MPoly) -> 'RingMatrix':
        zero, _ = _ring(ring)
        return cls([[zero() for _ in range(n if m is None else m)]
                    for _ in range(n)], ring)

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: 'RingMatrix') -> 'RingMatrix':
        return RingMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.ring)

    def __sub__(self, other: 'RingMatrix') -> 'RingMatrix':
        return RingMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.ring)

    def __mul__(self, other: 'RingMatrix') -> 'RingMatrix':
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shapes {self.shape} and {other.shape} do not match")
        zero, _ = _ring(self.ring)
        rows = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = zero()
                for l in range(k):
                    a = self.rows[i][l]
                    if a:
                        b = other.rows[l][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return RingMatrix(rows, self.ring)

    def __pow__(self, n: int) -> 'RingMatrix':
        result = RingMatrix.identity(self.shape[0], self.ring)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> 'RingMatrix':
        return RingMatrix([[c * x for x in row] for row in self.rows], self.ring)

    def transpose(self) -> 'RingMatrix':
        return RingMatrix(list(zip(*self.rows)), self.ring)

    def map(self, func: Callable, ring: type = None) -> 'RingMatrix':
        return RingMatrix([[func(x) for x in row] for row in self.rows],
                          ring or self.ring)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'RingMatrix':
        return RingMatrix([[self.rows[i][j] for j in cols] for i in rows], self.ring)

    def determinant(self):
        return det_division_free(self)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]"
                         for row in self.rows)

    def __repr__(self) -> str:
        return f"RingMatrix({[[str(x) for x in row] for row in self.rows]})"


def _coercion(ring: type) -> Callable:
    if ring is Fraction:
        return Fraction
    return ring.coerce


def det_division_free(mat: RingMatrix):
    """
    Determinant without divisions.

    :param mat: square matrix
    :returns: determinant in the ring of `mat`
    """
    n, m = mat.shape
    if n != m:
        raise ValueError(f"determinant of a non square {n}x{m} matrix")
    zero, one = _ring(mat.ring)
    if n == 0:
        return one()
    if n <= COFACTOR_LIMIT:
        return _cofactor(mat.rows, zero, one)
    coeffs = berkowitz(mat)
    return coeffs[-1] if n % 2 == 0 else -coeffs[-1]


def _cofactor(rows, zero, one):
    """Laplace expansion along the rows with memoized minors"""
    n = len(rows)
    memo: Dict[FrozenSet[int], object] = {}

    def minor(i: int, cols: FrozenSet[int]):
        if i == n:
            return one()
        if cols in memo:
            return memo[cols]
        acc = zero()
        for pos, j in enumerate(sorted(cols)):
            a = rows[i][j]
            if not a:
                continue
            sub = minor(i + 1, cols - {j})
            if not sub:
                continue
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(0, frozenset(range(n)))


def berkowitz(mat: RingMatrix) -> List:
    """
    Coefficients ``[1, c_1, ..., c_n]`` of ``det(t Id - mat)`` in
    decreasing powers of ``t``.

    The leading principal submatrices are grown one row and column at a
    time using ``det(t - M') = (t - a) p(t) - R adj(t - A) C`` where the
    adjugate is expanded through the Cayley-Hamilton theorem.
    """
    n, m = mat.shape
    if n != m:
        raise ValueError(f"characteristic polynomial of a {n}x{m} matrix")
    zero, one = _ring(mat.ring)
    rows = mat.rows
    coeffs = [one()]
    for k in range(n):
        a = rows[k][k]
        col = [rows[i][k] for i in range(k)]
        row = [rows[k][j] for j in range(k)]
        # s_j = R A^j C
        s = []
        vec = col
        for _ in range(k):
            s.append(_dot(row, vec, zero))
            vec = [_dot(rows[i][:k], vec, zero) for i in range(k)]
        new = coeffs + [zero()]
        for i in range(1, k + 2):
            new[i] = new[i] - a * coeffs[i - 1]
        for i in range(k):
            acc = zero()
            for j in range(i + 1):
                if s[i - j]:
                    acc = acc + coeffs[j] * s[i - j]
            new[i + 2] = new[i + 2] - acc
        coeffs = new
    return coeffs


def _dot(xs, ys, zero):
    acc = zero()
    for x, y in zip(xs, ys):
        if x and y:
            acc = acc + x * y
    return acc


def charpoly(mat: RingMatrix) -> TPoly:
    """``det(t Id - mat)`` for a matrix over :class:`MPoly`"""
    if mat.ring is not MPoly:
        raise TypeError("charpoly expects a matrix over MPoly")
    coeffs = berkowitz(mat)
    n = len(coeffs) - 1
    return TPoly({n - i: c for i, c in enumerate(coeffs)})


def t_matrix(mat: RingMatrix) -> RingMatrix:
    """Embed a matrix over MPoly into matrices over TPoly"""
    return mat.map(TPoly.constant, TPoly)


def minors(mat: RingMatrix, size: int):
    """Iterate ``(rows, cols, minor)`` over all square minors of `size`"""
    n, m = mat.shape
    for rows in combinations(range(n), size):
        for cols in combinations(range(m), size):
            yield rows, cols, det_division_free(mat.submatrix(rows, cols))
