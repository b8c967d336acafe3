"""
Weighted path counting in the cylinder cover of a quotient network.

A lifted vertex ``(v, s)`` is the copy of ``v`` in the ``s``-th
fundamental domain; an edge with offset ``o`` joins ``(tail, s)`` to
``(head, s + o)``. Since every cycle winds positively, a vertex ``w``
can only lie on a path from ``(u, s0)`` to ``(v, s1)`` at shifts in the
window ``[s0 + dist(u, w), s1 - dist(w, v)]`` where ``dist`` is the
smallest total offset between quotient vertices.
"""

__all__ = ['count_paths', 'enumerate_paths', 'parse_r_vertex', 'path_weight',
           'shift_r_vertex']

from cylnet.algebra import MPoly
from cylnet.common import (DEFAULTS, EnumerationLimit, LiftedVertex, ParseError,
                           UnknownVertex, WindowOverflow)
from cylnet.network.quotient import offset_digraph
from typing import (Dict, Iterator, List, Sequence, Tuple)

import logging
import networkx as nx

# Starting logger
logger = logging.getLogger(__name__)

Window = Dict[str, Tuple[int, int]]


def parse_r_vertex(text: str, net=None) -> List[LiftedVertex]:
    """
    Parse ``"u@0,v@-1"`` into lifted vertices, a missing ``@shift`` means 0.

    :raises ParseError: malformed shift
    :raises UnknownVertex: vertex not in `net`
    """
    result = []
    for chunk in text.split(','):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty vertex in {text!r}")
        base, _, shift = chunk.partition('@')
        try:
            shift = int(shift) if shift else 0
        except ValueError:
            raise ParseError(f"invalid shift in {chunk!r}") from None
        if net is not None and base not in net:
            raise UnknownVertex(f"unknown vertex: {base!r}")
        result.append(LiftedVertex(base, shift))
    return result


def shift_r_vertex(vertices: Sequence[LiftedVertex], ell: int) -> List[LiftedVertex]:
    """Translate by ``ell`` times the period vector"""
    return [LiftedVertex(v.base, v.shift + ell) for v in vertices]


def _windows(net, source: LiftedVertex, target: LiftedVertex, max_window: int) -> Window:
    if source.base not in net:
        raise UnknownVertex(f"unknown vertex: {source.base!r}")
    if target.base not in net:
        raise UnknownVertex(f"unknown vertex: {target.base!r}")
    forward = nx.single_source_bellman_ford_path_length(
        offset_digraph(net), source.base, weight="offset")
    backward = nx.single_source_bellman_ford_path_length(
        offset_digraph(net, reverse=True), target.base, weight="offset")
    windows = {}
    for w in set(forward) & set(backward):
        low, high = source.shift + forward[w], target.shift - backward[w]
        if low <= high:
            if high - low + 1 > max_window:
                raise WindowOverflow(
                    f"window of {high - low + 1} shifts for vertex {w} exceeds "
                    f"{max_window}")
            windows[w] = (low, high)
    return windows


def count_paths(net, source: LiftedVertex, target: LiftedVertex,
                max_window: int = None) -> MPoly:
    """
    Sum of the weights of all directed paths from `source` to `target`
    in the cover.

    :raises WindowOverflow: a shift window is wider than `max_window`
    """
    max_window = DEFAULTS.max_window if max_window is None else max_window
    windows = _windows(net, source, target, max_window)
    adjacency = net.adjacency()
    memo: Dict[Tuple[str, int], MPoly] = {}

    def inside(w: str, s: int) -> bool:
        return w in windows and windows[w][0] <= s <= windows[w][1]

    def count(w: str, s: int) -> MPoly:
        if (w, s) == (target.base, target.shift):
            return MPoly.constant(1)
        key = (w, s)
        if key not in memo:
            acc = MPoly()
            for e in adjacency[w]:
                if inside(e.head, s + e.offset):
                    sub = count(e.head, s + e.offset)
                    if sub:
                        acc = acc + e.weight * sub
            memo[key] = acc
        return memo[key]

    if not inside(source.base, source.shift):
        return MPoly()
    return count(source.base, source.shift)


def enumerate_paths(net, source: LiftedVertex, target: LiftedVertex,
                    limit: int = None, max_window: int = None
                    ) -> Iterator[Tuple[Tuple[LiftedVertex, ...], MPoly]]:
    """
    Yield every path from `source` to `target` as its lifted vertices and
    weight; parallel edges give distinct paths.

    :raises EnumerationLimit: more than `limit` partial paths explored
    """
    limit = DEFAULTS.enumeration_limit if limit is None else limit
    max_window = DEFAULTS.max_window if max_window is None else max_window
    windows = _windows(net, source, target, max_window)
    adjacency = net.adjacency()
    explored = 0

    def inside(w: str, s: int) -> bool:
        return w in windows and windows[w][0] <= s <= windows[w][1]

    def walk(path: List[LiftedVertex], weight: MPoly):
        nonlocal explored
        explored += 1
        if explored > limit:
            raise EnumerationLimit(f"more than {limit} partial paths")
        last = path[-1]
        if last == target:
            yield tuple(path), weight
            return
        for e in adjacency[last.base]:
            nxt = LiftedVertex(e.head, last.shift + e.offset)
            if inside(*nxt):
                path.append(nxt)
                yield from walk(path, weight * e.weight)
                path.pop()

    if inside(*source):
        yield from walk([source], MPoly.constant(1))


def path_weight(net, vertices: Sequence[LiftedVertex]) -> MPoly:
    """
    Weight of a lifted vertex sequence, the sum over parallel edges
    realizing each step.

    :raises ValueError: two consecutive vertices are not joined by an edge
    """
    adjacency = net.adjacency()
    weight = MPoly.constant(1)
    for a, b in zip(vertices, vertices[1:]):
        step = MPoly()
        for e in adjacency[a.base]:
            if e.head == b.base and a.shift + e.offset == b.shift:
                step = step + e.weight
        if not step:
            raise ValueError(f"no edge from {a} to {b}")
        weight = weight * step
    return weight
