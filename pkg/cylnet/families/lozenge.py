"""
Lozenge network ``N_m`` and reverse plane partitions.

``N_m`` lives on the strip ``0 <= j - i <= m - 1`` of the square grid with
west steps ``(i, j) -> (i - 1, j)`` of weight 1 and south steps
``(i, j) -> (i, j - 1)`` of weight ``q^(j - 1 - i)``; the period vector is
``(-1, -1)``. The quotient vertex of ``(i, j)`` is ``k = j - i`` and its
shift is ``-i``.

Reverse plane partitions of the skew shape ``lam / mu`` with

    lam = ((ell + a)^b, ell + a - 1, ..., c),   mu = (ell, ell - 1, ..., 1)

(``a + b = c + d``) and entries at most ``r`` correspond to
non-intersecting ``r``-paths of ``N_m`` with ``m = a + b + 2r - 1``: the
level ``v`` contour separating the entries ``< v`` from the entries
``>= v``, moved ``v - 1`` diagonal steps, is a lattice path of the strip.
"""

__all__ = ['LozengeQuery', 'build_lozenge', 'carlitz', 'lozenge_endpoints_and_beta',
           'lozenge_identity', 'lozenge_recurrence', 'lozenge_shape',
           'reverse_plane_partitions', 'rpp_oracle', 'rpp_to_rpath']

from cylnet.algebra import (MPoly, TPoly)
from cylnet.common import (DEFAULTS, EnumerationLimit, LiftedVertex)
from cylnet.network import (QuotientNetwork, build_network, q_n_cycles)
from cylnet.paths import path_weight
from cylnet.plethysm import (q_plee, rescale)
from collections import (defaultdict, namedtuple)
from typing import (Dict, Iterator, List, Sequence, Tuple)

import logging

# Starting logger
logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


class LozengeQuery(namedtuple("LozengeQuery", ("a", "b", "c", "d", "r"))):
    """Shape parameters ``a + b = c + d`` and the entry bound ``r``"""

    __slots__ = ()

    def validate(self) -> 'LozengeQuery':
        if min(self) < 0 or self.a + self.b != self.c + self.d:
            raise ValueError(f"invalid lozenge query {tuple(self)}: needs a + b = c + d "
                             "and nonnegative parameters")
        if self.b < 1 or self.r < 1:
            raise ValueError("lozenge query needs b >= 1 and r >= 1")
        return self

    @property
    def m(self) -> int:
        return self.a + self.b + 2 * self.r - 1

    @property
    def first_ell(self) -> int:
        """Smallest ``ell >= 1`` for which the shape is defined"""
        return max(1, self.c - self.a)


def build_lozenge(m: int) -> QuotientNetwork:
    """Quotient ``N_m`` with vertices ``k0, ..., k(m-1)``"""
    if m < 1:
        raise ValueError(f"lozenge network needs m >= 1, got {m}")
    edges = []
    for k in range(m - 1):
        edges.append({"from": f"k{k}", "to": f"k{k + 1}", "offset": 1, "weight": "1"})
        edges.append({"from": f"k{k + 1}", "to": f"k{k}", "offset": 0,
                      "weight": f"q^{k}" if k else "1"})
    description = {"name": f"lozenge_m{m}", "vertices": [f"k{k}" for k in range(m)],
                   "vars": ["q"], "planar": True, "edges": edges}
    return build_network(description)


def carlitz(n: int) -> TPoly:
    """``F_0 = 0, F_1 = 1, F_n = F_(n-1) + q^(n-3) t F_(n-2)``"""
    q = MPoly.var("q")
    prev, current = TPoly(), TPoly.constant(1)
    if n == 0:
        return prev
    for k in range(2, n + 1):
        prev, current = current, current + prev.shift(1).map_coefficients(
            lambda c: c * q ** (k - 3))
    return current


def lozenge_identity(m: int) -> TPoly:
    """``t^d F_(m+1)(-1/t)``, the characteristic polynomial of ``N_m``"""
    f = carlitz(m + 1)
    d = f.degree
    return TPoly({d - k: c if k % 2 == 0 else -c for k, c in f.items()})


def lozenge_shape(a: int, b: int, c: int, d: int, ell: int
                  ) -> Tuple[List[int], List[int]]:
    """Outer and inner partitions, both with ``ell + d`` parts"""
    if ell + a < c:
        raise ValueError(f"shape undefined for ell={ell} (needs ell + a >= c)")
    lam = [ell + a] * b + list(range(ell + a - 1, c - 1, -1))
    mu = list(range(ell, 0, -1))
    mu += [0] * (len(lam) - len(mu))
    return lam, mu


def _rows(lam: Sequence[int], mu: Sequence[int]) -> List[Tuple[int, int]]:
    return [(mu[x] + 1, lam[x]) for x in range(len(lam))]


def reverse_plane_partitions(lam: Sequence[int], mu: Sequence[int], r: int,
                             limit: int = None) -> Iterator[Dict[Cell, int]]:
    """
    Fillings of ``lam / mu`` with entries in ``0..r`` weakly increasing
    along rows and down columns, as maps ``(row, column) -> entry``
    (1-based).
    """
    limit = DEFAULTS.enumeration_limit if limit is None else limit
    cells = [(x + 1, y) for x, (lo, hi) in enumerate(_rows(lam, mu))
             for y in range(lo, hi + 1)]
    filling: Dict[Cell, int] = {}
    produced = 0

    def fill(k: int):
        nonlocal produced
        if k == len(cells):
            produced += 1
            if produced > limit:
                raise EnumerationLimit(f"more than {limit} plane partitions")
            yield dict(filling)
            return
        x, y = cells[k]
        low = max(filling.get((x, y - 1), 0), filling.get((x - 1, y), 0))
        for value in range(low, r + 1):
            filling[x, y] = value
            yield from fill(k + 1)
        del filling[x, y]

    yield from fill(0)


def _weakly_increasing(lower: Sequence[int], r: int) -> Iterator[Tuple[int, ...]]:
    def rec(k: int, minimum: int):
        if k == len(lower):
            yield ()
            return
        for value in range(max(minimum, lower[k]), r + 1):
            for rest in rec(k + 1, value):
                yield (value,) + rest
    return rec(0, 0)


def rpp_oracle(query: LozengeQuery, ell: int, limit: int = None) -> MPoly:
    """
    ``sum q^|pi|`` over the reverse plane partitions of the shape of
    `query` at `ell`, by a row by row transfer over the possible rows.

    :raises EnumerationLimit: more than `limit` intermediate states
    """
    limit = DEFAULTS.enumeration_limit if limit is None else limit
    lam, mu = lozenge_shape(query.a, query.b, query.c, query.d, ell)
    rows = _rows(lam, mu)
    # previous row (first column, entries) -> {size: count}
    states: Dict[Tuple[int, Tuple[int, ...]], Dict[int, int]] = {(1, ()): {0: 1}}
    for lo, hi in rows:
        new_states: Dict = defaultdict(lambda: defaultdict(int))
        for (prev_lo, prev), sizes in states.items():
            lower = [prev[y - prev_lo] if 0 <= y - prev_lo < len(prev) else 0
                     for y in range(lo, hi + 1)]
            for row in _weakly_increasing(lower, query.r):
                total = sum(row)
                target = new_states[lo, row]
                for size, count in sizes.items():
                    target[size + total] += count
        if len(new_states) > limit:
            raise EnumerationLimit(f"more than {limit} row states")
        states = new_states

    result: Dict[int, int] = defaultdict(int)
    for sizes in states.values():
        for size, count in sizes.items():
            result[size] += count
    return MPoly({(("q", e),) if e else (): c for e, c in result.items()})


def _cover_vertex(i: int, j: int) -> LiftedVertex:
    return LiftedVertex(f"k{j - i}", -i)


def rpp_to_rpath(query: LozengeQuery, ell: int, filling: Dict[Cell, int]
                 ) -> List[List[LiftedVertex]]:
    """
    The ``r`` lattice paths of ``N_m`` encoding a reverse plane partition,
    path ``v`` running from ``u_v`` to ``v_v + ell``.
    """
    a, b, c, d, r = query
    lam, mu = lozenge_shape(a, b, c, d, ell)
    height = len(lam)
    paths = []
    for v in range(1, r + 1):
        corners = [(height, 0)]
        for x in range(height, 0, -1):
            below = sum(1 for y in range(mu[x - 1] + 1, lam[x - 1] + 1)
                        if filling[x, y] < v)
            target = mu[x - 1] + below
            corners.extend((x, y) for y in range(corners[-1][1] + 1, target + 1))
            corners.append((x - 1, target))
        corners.extend((0, y) for y in range(corners[-1][1] + 1, ell + a + 1))
        path = [_cover_vertex(yy + v - 1 - ell - a, b + 2 * r - 2 - (xx + v - 1))
                for xx, yy in reversed(corners)]
        paths.append(path)
    return paths


def lozenge_endpoints_and_beta(query: LozengeQuery
                               ) -> Tuple[List[LiftedVertex], List[LiftedVertex], int, int]:
    """
    Sources ``u_v = (k = b + 2(r - v), shift 1 - v)``, sinks
    ``v_v = (k = c + 2(r - v), shift a + 1 - v)`` and the exponents
    ``alpha, beta`` with ``rpp(ell) = q^(alpha + ell beta) LGV(ell)``,
    read off the images of the zero filling at two consecutive ``ell``.
    """
    a, b, c, d, r = query.validate()
    sources = [LiftedVertex(f"k{b + 2 * (r - v)}", 1 - v) for v in range(1, r + 1)]
    sinks = [LiftedVertex(f"k{c + 2 * (r - v)}", a + 1 - v) for v in range(1, r + 1)]
    net = build_lozenge(query.m)
    exponents = []
    for ell in (query.first_ell, query.first_ell + 1):
        lam, mu = lozenge_shape(a, b, c, d, ell)
        zero = {(x + 1, y): 0 for x in range(len(lam))
                for y in range(mu[x] + 1, lam[x] + 1)}
        weight = MPoly.constant(1)
        for path in rpp_to_rpath(query, ell, zero):
            weight = weight * path_weight(net, path)
        (mono, _), = weight.items()
        exponents.append(dict(mono).get("q", 0))
    beta = exponents[0] - exponents[1]
    alpha = -exponents[0] - query.first_ell * beta
    logger.info(f"lozenge query {tuple(query)}: alpha={alpha}, beta={beta}")
    return sources, sinks, alpha, beta


def lozenge_recurrence(query: LozengeQuery) -> TPoly:
    """``Q^(r)`` of ``N_m`` with roots multiplied by ``q^beta``"""
    _, _, _, beta = lozenge_endpoints_and_beta(query)
    plee = q_plee(q_n_cycles(build_lozenge(query.m)), query.r)
    return rescale(plee, MPoly.monomial({"q": beta}))

