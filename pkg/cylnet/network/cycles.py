"""
Simple cycles of a quotient network and families of vertex-disjoint
simple cycles.
"""

__all__ = ['cycle_families', 'planar_sanity', 'simple_cycles']

from cylnet.algebra import MPoly
from cylnet.common import (
    DEFAULTS, CycleFamily, EdgeRecord, PlanarityViolation, SimpleCycle, SizeLimit)
from functools import reduce
from itertools import product
from typing import (Dict, List, Sequence, Tuple)

import logging
import networkx as nx
import operator

# Starting logger
logger = logging.getLogger(__name__)


def simple_cycles(net, max_cycles: int = None) -> List[SimpleCycle]:
    """
    All simple cycles of `net`. A cycle through the same vertices using
    parallel edges with different offsets counts once per edge choice.
    Cycles are rotated to start at their smallest vertex (declaration
    order) and sorted.

    :raises SizeLimit: more than `max_cycles` cycles
    """
    max_cycles = DEFAULTS.max_cycles if max_cycles is None else max_cycles
    index = {v: i for i, v in enumerate(net.vertices)}
    parallel: Dict[Tuple[str, str], List[EdgeRecord]] = {}
    for e in net.edges:
        parallel.setdefault((e.tail, e.head), []).append(e)

    graph = nx.DiGraph()
    graph.add_nodes_from(net.vertices)
    graph.add_edges_from(parallel)

    cycles = []
    for nodes in nx.simple_cycles(graph):
        start = min(range(len(nodes)), key=lambda k: index[nodes[k]])
        nodes = nodes[start:] + nodes[:start]
        pairs = list(zip(nodes, nodes[1:] + nodes[:1]))
        for choice in product(*(parallel[p] for p in pairs)):
            cycles.append(SimpleCycle(
                tuple(nodes), tuple(choice), sum(e.offset for e in choice),
                reduce(operator.mul, (e.weight for e in choice))))
            if len(cycles) > max_cycles:
                raise SizeLimit(f"more than {max_cycles} simple cycles")

    cycles.sort(key=lambda c: (tuple(index[v] for v in c.vertices),
                               tuple(e.offset for e in c.edges)))
    logger.debug(f"found {len(cycles)} simple cycles")
    return cycles


def cycle_families(net, cycles: Sequence[SimpleCycle] = None,
                   max_families: int = None) -> List[CycleFamily]:
    """
    Every family of pairwise vertex-disjoint simple cycles, the empty
    family included.

    :raises SizeLimit: more than `max_families` families
    """
    max_families = DEFAULTS.max_families if max_families is None else max_families
    if cycles is None:
        cycles = simple_cycles(net)
    vertex_sets = [frozenset(c.vertices) for c in cycles]
    families: List[CycleFamily] = []

    def extend(start: int, chosen: List[int], used: frozenset):
        members = tuple(cycles[i] for i in chosen)
        families.append(CycleFamily(
            members, len(members), sum(c.winding for c in members),
            reduce(operator.mul, (c.weight for c in members), MPoly.constant(1))))
        if len(families) > max_families:
            raise SizeLimit(f"more than {max_families} cycle families")
        for i in range(start, len(cycles)):
            if not (vertex_sets[i] & used):
                extend(i + 1, chosen + [i], used | vertex_sets[i])

    extend(0, [], frozenset())
    return families


def planar_sanity(net) -> bool:
    """
    Check that every simple cycle has winding exactly 1, as it must be
    for a network embedded in the cylinder.

    :raises PlanarityViolation: carrying the first offending cycle
    """
    for cycle in simple_cycles(net):
        if cycle.winding != 1:
            raise PlanarityViolation(
                f"simple cycle through {list(cycle.vertices)} has winding "
                f"{cycle.winding}, a planar network needs 1", cycle)
    return True
