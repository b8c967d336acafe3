"""
Plethysms of a monic polynomial ``Q`` of degree ``d`` with roots
``gamma_1, ..., gamma_d``:

* ``Q^(r)``: roots ``gamma_I`` over the ``r``-subsets ``I``, the
  characteristic polynomial of ``Lambda^r`` of the companion matrix.
* ``Q^<r>``: roots ``gamma_I`` over the ``r``-multisets ``I``, the
  characteristic polynomial of ``Sym^r`` of the companion matrix.
"""

__all__ = ['conjugate', 'psi_schur', 'q_plee', 'q_pleh', 'rescale']

from .compound import (companion, exterior_power, symmetric_power)
from cylnet.algebra import (MPoly, RingMatrix, TPoly, charpoly, det_division_free)
from cylnet.common import BadRank
from typing import (List, Sequence, Union)

import logging

# Starting logger
logger = logging.getLogger(__name__)


def q_plee(q: TPoly, r: int) -> TPoly:
    """
    Elementary plethysm ``Q^(r)`` of degree ``C(d, r)``.

    :raises BadRank: unless ``1 <= r <= d``
    """
    d = q.degree
    if not 1 <= r <= d:
        raise BadRank(f"Q^({r}) of a polynomial of degree {d}")
    return charpoly(exterior_power(companion(q), r))


def q_pleh(q: TPoly, r: int) -> TPoly:
    """
    Complete homogeneous plethysm ``Q^<r>`` of degree ``C(d + r - 1, r)``.

    :raises BadRank: unless ``r >= 1``
    """
    if r < 1:
        raise BadRank(f"Q^<{r}> needs r >= 1")
    return charpoly(symmetric_power(companion(q), r))


def conjugate(lam: Sequence[int]) -> List[int]:
    """Conjugate partition"""
    parts = [p for p in lam if p > 0]
    return [sum(1 for p in parts if p > k) for k in range(parts[0] if parts else 0)]


def psi_schur(lam: Sequence[int], h: Sequence[MPoly]) -> MPoly:
    """
    Image of the Schur function ``s_lam`` under the specialization
    ``e_k -> H_k``, given ``h = [H_0, ..., H_d]`` (``H_k = 0`` outside that
    range), through the dual Jacobi-Trudi determinant
    ``det[H_(lam'_i - i + j)]``. Since ``H_k = e_k(gamma)`` for the roots
    ``gamma`` of ``Q_N``, this is ``s_lam(gamma_1, ..., gamma_d)``.
    """
    parts = conjugate(lam)
    n = len(parts)

    def entry(k: int) -> MPoly:
        return MPoly.coerce(h[k]) if 0 <= k < len(h) else MPoly()

    return det_division_free(RingMatrix(
        [[entry(parts[i] - i + j) for j in range(n)] for i in range(n)]))


def rescale(q: TPoly, c: Union[MPoly, int]) -> TPoly:
    """
    Monic polynomial whose roots are those of `q` times `c`:
    ``c^D Q(t / c) = sum q_k c^(D - k) t^k``.
    """
    c = MPoly.coerce(c)
    d = q.degree
    return TPoly({k: a * c ** (d - k) for k, a in q.items()})
