"""
Lindstrom-Gessel-Viennot determinants of path counts between r-vertices
of the cover, and the sequences obtained by translating the sink
r-vertex along the period vector.
"""

__all__ = ['disjoint', 'enumerate_r_paths', 'lgv_determinant', 'lgv_matrix', 'lgv_sequence',
           'permutation_sign']

from .cover import (count_paths, enumerate_paths, shift_r_vertex)
from cylnet.algebra import (MPoly, RingMatrix, det_division_free)
from cylnet.common import (DEFAULTS, EnumerationLimit, LiftedVertex, SequenceF)
from cylnet.schedule.components import parallel_map
from functools import partial
from itertools import permutations
from typing import (List, Sequence)

import logging

# Starting logger
logger = logging.getLogger(__name__)


def lgv_matrix(net, sources: Sequence[LiftedVertex], sinks: Sequence[LiftedVertex],
               max_window: int = None) -> RingMatrix:
    """``a_ij = N(u_i, v_j)``"""
    if len(sources) != len(sinks):
        raise ValueError(f"{len(sources)} sources and {len(sinks)} sinks")
    return RingMatrix([[count_paths(net, u, v, max_window) for v in sinks]
                       for u in sources])


def lgv_determinant(net, sources: Sequence[LiftedVertex],
                    sinks: Sequence[LiftedVertex], max_window: int = None) -> MPoly:
    return det_division_free(lgv_matrix(net, sources, sinks, max_window))


def _term(net, sources, sinks, max_window, ell: int) -> MPoly:
    return lgv_determinant(net, sources, shift_r_vertex(sinks, ell), max_window)


def lgv_sequence(net, sources: Sequence[LiftedVertex], sinks: Sequence[LiftedVertex],
                 length: int, start: int = 0, max_window: int = None,
                 n_threads: int = None) -> SequenceF:
    """
    ``f(ell) = det N(u, v + ell g)`` for ``ell = start, ..., start + length - 1``.
    The terms are computed as independent tasks.
    """
    ells = list(range(start, start + length))
    values = parallel_map(partial(_term, net, list(sources), list(sinks), max_window),
                          ells, n_threads)
    meta = {"sources": [list(u) for u in sources], "sinks": [list(v) for v in sinks],
            "start": start}
    return SequenceF(values, meta)


def permutation_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def enumerate_r_paths(net, sources: Sequence[LiftedVertex],
                      sinks: Sequence[LiftedVertex], limit: int = None) -> MPoly:
    """
    Signed weighted sum over all vertex-disjoint path tuples
    ``u_i -> v_sigma(i)``, by explicit enumeration.

    :raises EnumerationLimit: more than `limit` paths were generated
    """
    limit = DEFAULTS.enumeration_limit if limit is None else limit
    r = len(sources)
    paths = {}
    generated = 0
    for i, u in enumerate(sources):
        for j, v in enumerate(sinks):
            paths[i, j] = list(enumerate_paths(net, u, v, limit))
            generated += len(paths[i, j])
            if generated > limit:
                raise EnumerationLimit(f"more than {limit} paths")

    total = MPoly()
    for perm in permutations(range(r)):
        sign = permutation_sign(perm)

        def extend(i: int, used: frozenset, weight: MPoly) -> MPoly:
            if i == r:
                return weight
            acc = MPoly()
            for vertices, w in paths[i, perm[i]]:
                occupied = frozenset(vertices)
                if not (occupied & used):
                    acc = acc + extend(i + 1, used | occupied, weight * w)
            return acc

        contribution = extend(0, frozenset(), MPoly.constant(1))
        total = total + contribution if sign > 0 else total - contribution
    return total


def disjoint(paths: List[Sequence[LiftedVertex]]) -> bool:
    """True when no lifted vertex is shared by two of the paths"""
    seen = set()
    for path in paths:
        vertices = set(path)
        if vertices & seen:
            return False
        seen |= vertices
    return True

