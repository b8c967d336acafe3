"""Companion matrices and the exterior and symmetric powers of a matrix."""

__all__ = ['basis_exterior', 'basis_symmetric', 'companion', 'exterior_power',
           'symmetric_power']

from cylnet.algebra import (MPoly, RingMatrix, TPoly, det_division_free)
from cylnet.common import BadRank
from itertools import (combinations, combinations_with_replacement)
from typing import (Dict, List, Tuple)

import logging

# Starting logger
logger = logging.getLogger(__name__)


def companion(q: TPoly) -> RingMatrix:
    """
    Companion matrix of a monic polynomial, ``charpoly(companion(q)) == q``.
    Ones on the subdiagonal, ``-q_0, ..., -q_(d-1)`` in the last column.
    """
    if not q.is_polynomial or not q.is_monic:
        raise ValueError(f"companion matrix of a non monic polynomial: {q}")
    d = q.degree
    rows = [[MPoly() for _ in range(d)] for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = MPoly.constant(1)
    for i in range(d):
        rows[i][d - 1] = -q[i]
    return RingMatrix(rows)


def basis_exterior(n: int, r: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(n), r))


def basis_symmetric(n: int, r: int) -> List[Tuple[int, ...]]:
    return list(combinations_with_replacement(range(n), r))


def exterior_power(mat: RingMatrix, r: int) -> RingMatrix:
    """
    ``Lambda^r`` of a square matrix: the ``C(n, r)`` square matrix of its
    ``r x r`` minors, rows and columns indexed by the ``r``-subsets in
    lexicographic order.
    """
    n = mat.shape[0]
    if not 0 <= r <= n:
        raise BadRank(f"exterior power {r} of a {n}x{n} matrix")
    basis = basis_exterior(n, r)
    return RingMatrix([[det_division_free(mat.submatrix(rows, cols)) for cols in basis]
                       for rows in basis])


def symmetric_power(mat: RingMatrix, r: int) -> RingMatrix:
    """
    ``Sym^r`` of a square matrix on the basis of degree ``r`` monomials
    ``w_I`` (multisets in lexicographic order). Row ``I`` holds the
    coefficients of ``prod_(i in I) (sum_j m_ij w_j)``.
    """
    n = mat.shape[0]
    if r < 0:
        raise BadRank(f"symmetric power {r}")
    basis = basis_symmetric(n, r)
    position = {key: k for k, key in enumerate(basis)}
    rows = []
    for multiset in basis:
        expansion: Dict[Tuple[int, ...], MPoly] = {(): MPoly.constant(1)}
        for i in multiset:
            step: Dict[Tuple[int, ...], MPoly] = {}
            for key, coeff in expansion.items():
                for j in range(n):
                    entry = mat[i, j]
                    if entry:
                        new = tuple(sorted(key + (j,)))
                        step[new] = step.get(new, MPoly()) + coeff * entry
            expansion = step
        row = [MPoly() for _ in basis]
        for key, coeff in expansion.items():
            row[position[key]] = coeff
        rows.append(row)
    return RingMatrix(rows)
