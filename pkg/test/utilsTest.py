"""
Oracles written independently of the package: exact determinants by
fraction free elimination, numeric roots and semistandard tableaux.
"""

from cylnet.algebra import MPoly
from cylnet.workflows.input_validation import read_network
from fractions import Fraction
from itertools import combinations_with_replacement
from os.path import join
from typing import (List, Sequence)

import numpy as np

PATH_FILES = join("test", "test_files")


def load_network(name: str):
    """Read one of the networks in the test folder"""
    return read_network(join(PATH_FILES, name))


def bareiss_det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix by fraction free elimination"""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def numeric_roots(ascending: Sequence) -> np.ndarray:
    """Complex roots of the polynomial with ascending coefficients"""
    return np.roots([float(c) for c in reversed(list(ascending))])


def vanishes_at(ascending: Sequence, z: complex, rtol: float = 1e-6) -> bool:
    """Whether the polynomial is numerically zero at `z`, relative to its size there"""
    coeffs = [float(c) for c in reversed(list(ascending))]
    value = np.polyval(coeffs, z)
    scale = np.polyval([abs(c) for c in coeffs], abs(z))
    return abs(value) <= rtol * max(scale, 1.0)


def pairwise_products(roots: Sequence[complex], strict: bool) -> List[complex]:
    n = len(roots)
    pairs = [(i, j) for i in range(n) for j in range(i, n) if not strict or i < j]
    return [roots[i] * roots[j] for i, j in pairs]


def schur_by_tableaux(lam: Sequence[int], n: int) -> MPoly:
    """``s_lam(x_1, ..., x_n)`` as the sum over semistandard tableaux"""
    parts = [p for p in lam if p > 0]
    total = MPoly()

    def fill(row: int, previous: Sequence[int], weight: MPoly):
        nonlocal total
        if row == len(parts):
            total = total + weight
            return
        for entries in combinations_with_replacement(range(1, n + 1), parts[row]):
            if previous and any(entries[k] <= previous[k] for k in range(len(entries))):
                continue
            w = weight
            for e in entries:
                w = w * MPoly.var(f"x{e}")
            fill(row + 1, entries, w)

    fill(0, (), MPoly.constant(1))
    return total
