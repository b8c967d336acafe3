"""
Relabeling of the lift of a network so that every offset is 0 or 1.

Changing the fundamental domain by an integer potential ``z`` on the
vertices changes the offsets to ``o(e) + z(tail) - z(head)``. Such a
potential with all new offsets in {0, 1} is a solution of the
difference constraints::

    z(head) - z(tail) <= o(e)
    z(tail) - z(head) <= 1 - o(e)

computed with Bellman-Ford; a negative cycle of the constraint graph is
the witness that no local lift exists.
"""

__all__ = ['LocalForm', 'localize', 'local_counts', 'relabel']

from .quotient import QuotientNetwork
from cylnet.algebra import (MPoly, RingMatrix)
from cylnet.common import (NotLocal, NotNilpotent)
from collections import namedtuple
from typing import (Dict, Mapping)

import logging
import networkx as nx

# Starting logger
logger = logging.getLogger(__name__)

LocalForm = namedtuple("LocalForm", ("network", "potential", "C", "D", "S"))


def _constraint_graph(net: QuotientNetwork) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(net.vertices)

    def add(tail, head, weight):
        if graph.has_edge(tail, head):
            weight = min(weight, graph[tail][head]["weight"])
        graph.add_edge(tail, head, weight=weight)

    for e in net.edges:
        add(e.tail, e.head, e.offset)
        add(e.head, e.tail, 1 - e.offset)
    return graph


def relabel(net: QuotientNetwork, potential: Mapping[str, int]) -> QuotientNetwork:
    """Network with offsets ``o(e) + z(tail) - z(head)``"""
    edges = [e._replace(offset=e.offset + potential[e.tail] - potential[e.head])
             for e in net.edges]
    return QuotientNetwork(net.vertices, edges, net.variables, net.planar_declared,
                           net.name)


def localize(net: QuotientNetwork) -> LocalForm:
    """
    Find a local lift of `net` and its matrices ``C`` (offset 0 edges),
    ``D`` (offset 1 edges) and ``S = (Id - C)^-1 D``.

    :raises NotLocal: the constraint system is infeasible; carries the
        negative cycle of the constraint graph
    :raises NotNilpotent: the offset 0 edges contain a cycle
    """
    graph = _constraint_graph(net)
    if nx.negative_edge_cycle(graph, weight="weight"):
        source = object()
        graph.add_edges_from(((source, v) for v in net.vertices), weight=0)
        cycle = [v for v in nx.find_negative_cycle(graph, source, weight="weight")
                 if v is not source]
        raise NotLocal(f"no relabeling makes the offsets local, witness: {cycle}",
                       cycle)

    source = object()
    graph.add_edges_from(((source, v) for v in net.vertices), weight=0)
    dist = nx.single_source_bellman_ford_path_length(graph, source, weight="weight")
    low = min(dist[v] for v in net.vertices)
    potential: Dict[str, int] = {v: int(dist[v] - low) for v in net.vertices}
    logger.info(f"local relabeling potential: {potential}")

    local = relabel(net, potential)
    assert all(e.offset in (0, 1) for e in local.edges)

    zero_graph = nx.DiGraph()
    zero_graph.add_nodes_from(local.vertices)
    zero_graph.add_edges_from((e.tail, e.head) for e in local.edges if e.offset == 0)
    if not nx.is_directed_acyclic_graph(zero_graph):
        cycle = nx.find_cycle(zero_graph)
        raise NotNilpotent(f"offset 0 edges contain the cycle {cycle}")

    n = len(local.vertices)
    c_rows = [[MPoly() for _ in range(n)] for _ in range(n)]
    d_rows = [[MPoly() for _ in range(n)] for _ in range(n)]
    for e in local.edges:
        rows = c_rows if e.offset == 0 else d_rows
        i, j = local.index(e.tail), local.index(e.head)
        rows[i][j] = rows[i][j] + e.weight
    c, d = RingMatrix(c_rows), RingMatrix(d_rows)
    s = inverse_unipotent(c) * d
    return LocalForm(local, potential, c, d, s)


def inverse_unipotent(c: RingMatrix) -> RingMatrix:
    """``(Id - C)^-1 = Id + C + C^2 + ...`` for nilpotent ``C``"""
    n = c.shape[0]
    total = RingMatrix.identity(n)
    power = RingMatrix.identity(n)
    for _ in range(n):
        power = power * c
        total = total + power
    return total


def local_counts(form: LocalForm, ell: int) -> RingMatrix:
    """
    Weighted path counts from ``(y_i, 0)`` to ``(y_j, ell)`` in the local
    lift: ``S^ell (Id - C)^-1``.
    """
    return (form.S ** ell) * inverse_unipotent(form.C)
