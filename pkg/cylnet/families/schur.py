"""
Cylindrical grid network whose LGV sequences are Schur polynomials.

The cover is the grid ``Z x {1, ..., n}`` with horizontal edges
``(i, j) -> (i + 1, j)`` of weight ``x_j`` and vertical edges
``(i, j) -> (i, j + 1)`` of weight 1; the period vector is ``(m, 0)``.
The quotient has the ``m * n`` vertices ``(i mod m, j)``.
"""

__all__ = ['build_schur', 'complete_homogeneous', 'schur_endpoints', 'schur_oracle',
           'schur_vertex']

from cylnet.algebra import (MPoly, RingMatrix, det_division_free)
from cylnet.common import LiftedVertex
from cylnet.network import (QuotientNetwork, build_network)
from typing import (List, Sequence, Tuple)

import logging

# Starting logger
logger = logging.getLogger(__name__)


def _name(i: int, j: int) -> str:
    return f"s{i}_{j}"


def schur_vertex(i: int, j: int, m: int) -> LiftedVertex:
    """Lifted vertex of the cover point ``(i, j)``"""
    return LiftedVertex(_name(i % m, j), i // m)


def build_schur(n: int, m: int = 1) -> QuotientNetwork:
    """Quotient of the Schur grid with `n` rows and period `m`"""
    if n < 1 or m < 1:
        raise ValueError(f"Schur network needs n, m >= 1, got n={n}, m={m}")
    vertices = [_name(i, j) for j in range(1, n + 1) for i in range(m)]
    edges = []
    for j in range(1, n + 1):
        for i in range(m):
            edges.append({"from": _name(i, j), "to": _name((i + 1) % m, j),
                          "offset": 1 if i == m - 1 else 0, "weight": f"x{j}"})
            if j < n:
                edges.append({"from": _name(i, j), "to": _name(i, j + 1),
                              "offset": 0, "weight": "1"})
    description = {"name": f"schur_n{n}_m{m}", "vertices": vertices,
                   "vars": [f"x{j}" for j in range(1, n + 1)], "planar": True,
                   "edges": edges}
    return build_network(description)


def schur_endpoints(lam: Sequence[int], n: int, m: int = 1
                    ) -> Tuple[List[LiftedVertex], List[LiftedVertex]]:
    """
    Sources ``(k, 1)`` and sinks ``(lam_(r+1-k) + k, n)``, ``k = 1..r``,
    with ``r = len(lam)``. Translating the sinks by ``ell`` periods adds
    ``ell * m`` to every part.
    """
    r = len(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p < 0 for p in lam):
        raise ValueError(f"{list(lam)} is not a partition")
    sources = [schur_vertex(k, 1, m) for k in range(1, r + 1)]
    sinks = [schur_vertex(lam[r - k] + k, n, m) for k in range(1, r + 1)]
    return sources, sinks


def complete_homogeneous(k: int, n: int) -> MPoly:
    """``h_k(x_1, ..., x_n)``"""
    if k < 0:
        return MPoly()
    # h[k] for the variables processed so far
    h = [MPoly.constant(1)] + [MPoly() for _ in range(k)]
    for j in range(1, n + 1):
        x = MPoly.var(f"x{j}")
        for deg in range(1, k + 1):
            h[deg] = h[deg] + x * h[deg - 1]
    return h[k] if n > 0 or k == 0 else MPoly()


def schur_oracle(lam: Sequence[int], n: int) -> MPoly:
    """Jacobi-Trudi determinant ``det[h_(lam_i - i + j)]`` in ``n`` variables"""
    parts = [p for p in lam if p > 0]
    if len(parts) > n:
        return MPoly()
    r = len(parts)
    cache = {}

    def h(k: int) -> MPoly:
        if k not in cache:
            cache[k] = complete_homogeneous(k, n)
        return cache[k]

    return det_division_free(RingMatrix(
        [[h(parts[i] - i + j) for j in range(r)] for i in range(r)]))
