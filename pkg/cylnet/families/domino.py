"""
Domino tilings of truncated Aztec diamonds in the strip ``0 <= y < m``.

Squares are indexed by their lower left corner ``(x, y)``; a square is
black when ``x + y`` is odd. The network ``N_(n,m)`` has the black squares
as vertices, period vector ``(2n, 0)`` and edges from a black square to
the three black squares sharing a white neighbour on its right::

    (x, y) -> (x + 1, y + 1)   weight w(x+2, y+2) / w(x+1, y+1)
    (x, y) -> (x + 2, y)       weight w(x+3, y+1) w(x+3, y) / (w(x+2, y) w(x+2, y+1))
    (x, y) -> (x + 1, y - 1)   weight w(x+2, y-1) / w(x+1, y)

written with the target square ``(i, j)`` these read
``w(i+1, j+1) / w(i, j)``, ``w(i+1, j+1) w(i+1, j) / (w(i, j) w(i, j+1))``
and ``w(i+1, j) / w(i, j+1)``. Lattice point weights are ``2n``-periodic
in ``x`` and equal to 1 on the lines ``y = 0`` and ``y = m``.

A tiling maps to non-intersecting paths: every black square ``S`` whose
right neighbour ``W`` lies in the region points to the black square
paired with ``W``, unless that square is ``S`` itself.
"""

__all__ = ['DominoQuery', 'all_horizontal_tiling', 'aztec_region', 'build_domino',
           'count_tilings_permanent', 'domino_endpoints', 'domino_oracle',
           'domino_partition_function', 'domino_tilings', 'domino_vertex',
           'family_to_cylinder_tiling', 'query_region', 'reference_path_weight',
           'tiling_to_rpath', 'tiling_weight']

from cylnet.algebra import MPoly
from cylnet.common import (DEFAULTS, EnumerationLimit, LiftedVertex, Untileable)
from cylnet.network import (QuotientNetwork, build_network)
from cylnet.paths import path_weight
from collections import namedtuple
from itertools import combinations
from typing import (Callable, Dict, FrozenSet, Iterator, List, Mapping, Set, Tuple)

import logging

# Starting logger
logger = logging.getLogger(__name__)

Square = Tuple[int, int]
Tiling = Dict[Square, Square]

DominoQuery = namedtuple("DominoQuery", ("n", "m", "i", "j", "l0", "weights"))
DominoQuery.__new__.__defaults__ = (None,)

BOUNDARY_RULES = ("omit", "normalized")


def _is_black(square: Square) -> bool:
    return (square[0] + square[1]) % 2 == 1


def _name(x: int, y: int) -> str:
    return f"d{x}_{y}"


def domino_vertex(square: Square, n: int) -> LiftedVertex:
    """Lifted vertex of a black square"""
    x, y = square
    return LiftedVertex(_name(x % (2 * n), y), x // (2 * n))


def weight_function(n: int, m: int, weights: Mapping[Square, MPoly] = None
                    ) -> Callable[[int, int], MPoly]:
    """
    Lattice point weights: 1 on the boundary lines, otherwise the
    entry of `weights` for ``(x mod 2n, y)`` or the variable ``x{x}_{y}``.
    """
    one = MPoly.constant(1)

    def w(x: int, y: int) -> MPoly:
        if y in (0, m):
            return one
        key = (x % (2 * n), y)
        if weights is not None and key in weights:
            return MPoly.coerce(weights[key])
        return MPoly.var(f"x{key[0]}_{key[1]}")

    return w


def weight_variables(n: int, m: int) -> List[str]:
    return [f"x{p}_{q}" for p in range(2 * n) for q in range(1, m)]


def build_domino(n: int, m: int, weights: Mapping[Square, MPoly] = None
                 ) -> QuotientNetwork:
    """
    Quotient network ``N_(n,m)`` with the ``n * m`` black squares of a
    period as vertices.
    """
    if n < 1 or m < 1:
        raise ValueError(f"domino network needs n, m >= 1, got n={n}, m={m}")
    w = weight_function(n, m, weights)
    period = 2 * n
    vertices, edges = [], []
    for y in range(m):
        for x in range(period):
            if not _is_black((x, y)):
                continue
            vertices.append(_name(x, y))
            targets = [(x + 2, y)]
            if y + 1 < m:
                targets.append((x + 1, y + 1))
            if y > 0:
                targets.append((x + 1, y - 1))
            for i, j in targets:
                if j == y + 1:
                    weight = w(i + 1, j + 1) / w(i, j)
                elif j == y:
                    weight = (w(i + 1, j + 1) * w(i + 1, j)) / (w(i, j) * w(i, j + 1))
                else:
                    weight = w(i + 1, j) / w(i, j + 1)
                edges.append({"from": _name(x, y), "to": _name(i % period, j),
                              "offset": i // period, "weight": str(weight)})
    variables = weight_variables(n, m) if weights is None else None
    description = {"name": f"domino_n{n}_m{m}", "vertices": vertices,
                   "vars": variables, "planar": True, "edges": edges}
    if variables is None:
        del description["vars"]
    return build_network(description)


def aztec_region(i: int, j: int, radius: int, m: int) -> FrozenSet[Square]:
    """
    Squares whose centre ``(x + 1/2, y + 1/2)`` is within taxicab distance
    `radius` of ``(i, j)``, restricted to ``0 <= y < m``.
    """
    squares = set()
    for y in range(max(0, j - radius), min(m, j + radius + 1)):
        for x in range(i - radius - 1, i + radius + 1):
            if abs(2 * x + 1 - 2 * i) + abs(2 * y + 1 - 2 * j) <= 2 * radius:
                squares.add((x, y))
    return frozenset(squares)


def domino_tilings(squares: FrozenSet[Square], limit: int = None) -> Iterator[Tiling]:
    """
    Every domino tiling of `squares` as a map from each square to its
    partner; the first uncovered square in ``(x, y)`` order is matched
    with its upper or right neighbour.

    :raises EnumerationLimit: more than `limit` tilings
    """
    limit = DEFAULTS.enumeration_limit if limit is None else limit
    order = sorted(squares)
    partner: Tiling = {}
    produced = 0

    def place(k: int):
        nonlocal produced
        while k < len(order) and order[k] in partner:
            k += 1
        if k == len(order):
            produced += 1
            if produced > limit:
                raise EnumerationLimit(f"more than {limit} tilings")
            yield dict(partner)
            return
        x, y = order[k]
        for other in ((x, y + 1), (x + 1, y)):
            if other in squares and other not in partner:
                partner[x, y], partner[other] = other, (x, y)
                yield from place(k + 1)
                del partner[x, y], partner[other]

    if len(squares) % 2 == 0:
        yield from place(0)


def all_horizontal_tiling(squares: FrozenSet[Square]) -> Tiling:
    """Pair every row from the left; the rows of the regions are even"""
    partner: Tiling = {}
    for x, y in sorted(squares, key=lambda s: (s[1], s[0])):
        if (x, y) in partner:
            continue
        if (x + 1, y) not in squares or (x + 1, y) in partner:
            raise Untileable(f"row {y} cannot be tiled horizontally")
        partner[x, y], partner[x + 1, y] = (x + 1, y), (x, y)
    return partner


def _lattice_points(squares: FrozenSet[Square]) -> Set[Square]:
    return {(x + dx, y + dy) for x, y in squares for dx in (0, 1) for dy in (0, 1)}


def _adjacency(point: Square, squares: FrozenSet[Square], tiling: Tiling) -> Tuple[int, int]:
    """Number of region squares and of dominoes touching the lattice point"""
    px, py = point
    around = [(px + dx, py + dy) for dx in (-1, 0) for dy in (-1, 0)]
    inside = [s for s in around if s in squares]
    dominoes = {frozenset((s, tiling[s])) for s in inside}
    return len(inside), len(dominoes)


def tiling_weight(tiling: Tiling, squares: FrozenSet[Square], w: Callable,
                  boundary: str = "omit", reference: Tiling = None) -> MPoly:
    """
    Product of ``w(p)^e(p)`` over the lattice points of the region.
    ``"omit"``: interior points only, ``e = dominoes around p - 3``.
    ``"normalized"``: every point, ``e`` is the number of dominoes around
    ``p`` minus that number for the `reference` tiling (all horizontal by
    default).
    """
    if boundary not in BOUNDARY_RULES:
        raise ValueError(f"unknown boundary rule {boundary!r}")
    if boundary == "normalized" and reference is None:
        reference = all_horizontal_tiling(squares)
    weight = MPoly.constant(1)
    for point in sorted(_lattice_points(squares)):
        count, adj = _adjacency(point, squares, tiling)
        if boundary == "omit":
            if count < 4:
                continue
            exponent = adj - 3
        else:
            exponent = adj - _adjacency(point, squares, reference)[1]
        if exponent:
            weight = weight * w(*point) ** exponent
    return weight


def domino_partition_function(n: int, m: int, i: int, j: int, radius: int,
                              weights: Mapping[Square, MPoly] = None,
                              boundary: str = "omit", strict: bool = False,
                              limit: int = None) -> MPoly:
    """
    Weighted sum over the tilings of the truncated Aztec diamond of
    `radius` centred at ``(i, j)``.

    :raises Untileable: when `strict` and the region has no tiling
    """
    squares = aztec_region(i, j, radius, m)
    w = weight_function(n, m, weights)
    reference = all_horizontal_tiling(squares) if boundary == "normalized" else None
    total, count = MPoly(), 0
    for tiling in domino_tilings(squares, limit):
        total = total + tiling_weight(tiling, squares, w, boundary, reference)
        count += 1
    logger.info(f"{count} tilings of the region of radius {radius} at {(i, j)}")
    if not count:
        if strict:
            raise Untileable(f"no tiling of the region of radius {radius} at {(i, j)}")
        logger.warning(f"region of radius {radius} at {(i, j)} has no tiling")
    return total


def query_region(query: DominoQuery, ell: int) -> Tuple[int, int, int]:
    """Centre and radius of the ``ell``-th region, ``(i + ell n, j, ell n + l0)``"""
    return query.i + ell * query.n, query.j, ell * query.n + query.l0


def domino_oracle(query: DominoQuery, ell: int, boundary: str = "omit",
                  strict: bool = False, limit: int = None) -> MPoly:
    """``Z_m`` of the ``ell``-th region of `query` by explicit enumeration"""
    i, j, radius = query_region(query, ell)
    return domino_partition_function(query.n, query.m, i, j, radius, query.weights,
                                     boundary, strict, limit)


def domino_endpoints(n: int, m: int, i: int, j: int, radius: int
                     ) -> Tuple[List[LiftedVertex], List[LiftedVertex]]:
    """
    Sources and sinks of the paths of the region. When ``i + j - radius``
    is even the paths run along the rows ``j + k``, ``k < min(m - j, radius)``,
    from ``(i - radius + k - 1, j + k)`` to ``(i + radius - k - 1, j + k)``;
    otherwise along the rows ``j - 1 - k``, ``k < min(j, radius)``.
    """
    if (i + j - radius) % 2 == 0:
        rows = [j + k for k in range(min(m - j, radius))]
    else:
        rows = [j - 1 - k for k in range(min(j, radius))]
    sources, sinks = [], []
    for k, y in enumerate(rows):
        sources.append(domino_vertex((i - radius + k - 1, y), n))
        sinks.append(domino_vertex((i + radius - k - 1, y), n))
    return sources, sinks


def tiling_to_rpath(tiling: Tiling, squares: FrozenSet[Square], n: int, j: int
                    ) -> List[List[LiftedVertex]]:
    """
    Paths of the local rule, ordered by the distance of their row to the
    centre row `j` (the order of :func:`domino_endpoints`).
    """
    successor: Dict[Square, Square] = {}
    for white in squares:
        if _is_black(white):
            continue
        black = (white[0] - 1, white[1])
        paired = tiling[white]
        if paired != black:
            successor[black] = paired
    targets = set(successor.values())
    starts = [s for s in successor if s not in targets]
    paths = []
    for start in starts:
        path, square = [start], start
        while square in successor:
            square = successor[square]
            path.append(square)
        paths.append(path)
    paths.sort(key=lambda p: abs(2 * p[0][1] + 1 - 2 * j))
    return [[domino_vertex(s, n) for s in path] for path in paths]


def count_tilings_permanent(squares: FrozenSet[Square]) -> int:
    """Number of tilings as the permanent (Ryser) of the black/white adjacency"""
    blacks = sorted(s for s in squares if _is_black(s))
    whites = sorted(s for s in squares if not _is_black(s))
    if len(blacks) != len(whites):
        return 0
    size = len(blacks)
    if size == 0:
        return 1
    adjacency = [[1 if abs(b[0] - w[0]) + abs(b[1] - w[1]) == 1 else 0 for w in whites]
                 for b in blacks]
    total = 0
    for k in range(1, size + 1):
        for cols in combinations(range(size), k):
            prod = 1
            for row in adjacency:
                prod *= sum(row[c] for c in cols)
                if not prod:
                    break
            total += (-1) ** k * prod
    return (-1) ** size * total


def family_to_cylinder_tiling(family, n: int, m: int) -> List[FrozenSet[Square]]:
    """
    Inverse of the local rule on the cylinder of circumference ``2n``: the
    white square right of a black square on a cycle is paired with the
    next square of the cycle, every other black square with its right
    neighbour.

    :raises ValueError: the pairing is not a tiling of the cylinder
    """
    period = 2 * n

    def square(name: str) -> Square:
        x, y = name[1:].split('_')
        return int(x), int(y)

    pairs: Dict[Square, Square] = {}
    for cycle in family.cycles:
        for e in cycle.edges:
            x, y = square(e.tail)
            pairs[((x + 1) % period, y)] = square(e.head)
    dominoes = []
    covered: Dict[Square, int] = {}
    for y in range(m):
        for x in range(period):
            if _is_black((x, y)):
                continue
            black_left = ((x - 1) % period, y)
            other = pairs.get((x, y), black_left)
            dominoes.append(frozenset(((x, y), other)))
            for s in ((x, y), other):
                covered[s] = covered.get(s, 0) + 1
    expected = {(x, y) for y in range(m) for x in range(period)}
    if set(covered) != expected or any(c != 1 for c in covered.values()):
        raise ValueError("the cycle family does not give a tiling of the cylinder")
    return dominoes


def reference_path_weight(query: DominoQuery, ell: int, net: QuotientNetwork = None
                          ) -> MPoly:
    """
    Weight of the paths of the all horizontal tiling of the ``ell``-th
    region. With the ``"normalized"`` rule every tiling satisfies
    ``wt(P(T)) = wt(T) * reference_path_weight``.
    """
    i, j, radius = query_region(query, ell)
    squares = aztec_region(i, j, radius, query.m)
    net = build_domino(query.n, query.m, query.weights) if net is None else net
    weight = MPoly.constant(1)
    for path in tiling_to_rpath(all_horizontal_tiling(squares), squares, query.n, j):
        weight = weight * path_weight(net, path)
    return weight
