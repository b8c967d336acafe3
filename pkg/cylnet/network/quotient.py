"""
Quotient networks: finite directed multigraphs whose edges carry a
weight (:class:`MPoly`) and an integer offset, the number of
fundamental-domain crossings of the lifted edge in the cylinder cover.
"""

__all__ = ['QuotientNetwork', 'build_network', 'network_to_dict', 'offset_digraph',
           'specialize', 'transfer_matrix']

from .cycles import planar_sanity
from cylnet.algebra import (MPoly, RingMatrix, TPoly, parse_expr)
from cylnet.algebra.mpoly import check_variable_name
from cylnet.algebra.tpoly import T_VARIABLE
from cylnet.common import (EdgeRecord, NonPositiveWinding, ParseError, UnknownVertex)
from collections import OrderedDict
from typing import (Dict, List, Mapping, Sequence)

import logging
import networkx as nx

# Starting logger
logger = logging.getLogger(__name__)


class QuotientNetwork:
    """
    Vertices are strings kept in their declaration order; parallel edges
    with equal offsets are merged by adding their weights.
    """

    def __init__(self, vertices: Sequence[str], edges: Sequence[EdgeRecord],
                 variables: Sequence[str] = None, planar_declared: bool = False,
                 name: str = None):
        self.vertices = list(vertices)
        self.edges = list(edges)
        self.planar_declared = planar_declared
        self.name = name
        if variables is None:
            found = set()
            for e in self.edges:
                found |= e.weight.variables
            variables = sorted(found)
        self.variables = list(variables)
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex: {v!r}") from None

    def __contains__(self, v: str) -> bool:
        return v in self._index

    def out_edges(self, v: str) -> List[EdgeRecord]:
        return [e for e in self.edges if e.tail == v]

    def adjacency(self) -> Dict[str, List[EdgeRecord]]:
        adj: Dict[str, List[EdgeRecord]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.tail].append(e)
        return adj

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return (f"QuotientNetwork(vertices={len(self.vertices)}, "
                f"edges={len(self.edges)}, planar={self.planar_declared})")


def build_network(description: Mapping, check_planar: bool = True) -> QuotientNetwork:
    """
    Build a network from its dictionary description (the JSON network
    format)::

        {"vertices": ["u", "v"], "vars": ["a", ...], "planar": false,
         "edges": [{"from": "u", "to": "v", "offset": 1, "weight": "a"}]}

    :param description: network description
    :param check_planar: verify the winding of every simple cycle when the
        network is declared planar
    :raises ParseError: malformed description or weight
    :raises UnknownVertex: an edge refers to an undeclared vertex
    :raises NonPositiveWinding: some cycle has total offset <= 0
    """
    vertices = [str(v) for v in description.get("vertices", [])]
    if not vertices:
        raise ParseError("a network needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise ParseError(f"duplicated vertices in {vertices}")

    variables = description.get("vars")
    if variables is not None:
        variables = [check_variable_name(v) for v in variables]
        if T_VARIABLE in variables:
            raise ParseError(f"{T_VARIABLE!r} is reserved for the spectral variable")

    merged: Dict = OrderedDict()
    known = set(vertices)
    for edge in description.get("edges", []):
        missing = [key for key in ("from", "to") if key not in edge]
        if missing:
            raise ParseError(f"edge {dict(edge)} lacks the keys {missing}")
        tail, head = str(edge["from"]), str(edge["to"])
        for v in (tail, head):
            if v not in known:
                raise UnknownVertex(f"edge {tail} -> {head} uses unknown vertex {v!r}")
        offset = edge.get("offset", 0)
        if isinstance(offset, bool) or not isinstance(offset, int):
            raise ParseError(f"offset of {tail} -> {head} must be an integer")
        weight = edge.get("weight", 1)
        weight = parse_expr(weight, variables) if isinstance(weight, str) \
            else MPoly.coerce(weight)
        if T_VARIABLE in weight.variables:
            raise ParseError(f"{T_VARIABLE!r} is reserved, found in edge {tail} -> {head}")
        key = (tail, head, offset)
        merged[key] = merged.get(key, MPoly()) + weight

    edges = [EdgeRecord(t, h, o, w) for (t, h, o), w in merged.items() if w]
    net = QuotientNetwork(vertices, edges, variables, bool(description.get("planar", False)),
                          description.get("name"))
    check_positive_winding(net)
    if net.planar_declared and check_planar:
        planar_sanity(net)
    logger.debug(f"built {net!r}")
    return net


def network_to_dict(net: QuotientNetwork) -> Dict:
    """Inverse of :func:`build_network`, weights in canonical form"""
    d = {
        "vertices": list(net.vertices),
        "vars": list(net.variables),
        "planar": net.planar_declared,
        "edges": [{"from": e.tail, "to": e.head, "offset": e.offset,
                   "weight": str(e.weight)} for e in net.edges]}
    if net.name is not None:
        d["name"] = net.name
    return d


def offset_digraph(net: QuotientNetwork, reverse: bool = False) -> nx.DiGraph:
    """Simple digraph keeping the smallest offset between each pair"""
    graph = nx.DiGraph()
    graph.add_nodes_from(net.vertices)
    for e in net.edges:
        tail, head = (e.head, e.tail) if reverse else (e.tail, e.head)
        if graph.has_edge(tail, head):
            graph[tail][head]["offset"] = min(graph[tail][head]["offset"], e.offset)
        else:
            graph.add_edge(tail, head, offset=e.offset)
    return graph


def check_positive_winding(net: QuotientNetwork) -> None:
    """
    Every cycle must wind positively. Cycles of length k <= n with total
    offset w become negative under the weights ``(n + 1) * offset - 1``
    exactly when w <= 0.
    """
    n = len(net.vertices)
    graph = nx.DiGraph()
    graph.add_nodes_from(net.vertices)
    for (tail, head), data in offset_digraph(net).edges.items():
        graph.add_edge(tail, head, weight=(n + 1) * data["offset"] - 1)
    if nx.negative_edge_cycle(graph, weight="weight"):
        cycle = _negative_cycle(graph)
        raise NonPositiveWinding(f"cycle with non positive winding: {cycle}", cycle)


def _negative_cycle(graph: nx.DiGraph) -> List:
    source = object()
    aux = graph.copy()
    aux.add_edges_from(((source, v) for v in graph.nodes), weight=0)
    cycle = nx.find_negative_cycle(aux, source, weight="weight")
    return [v for v in cycle if v is not source]


def transfer_matrix(net: QuotientNetwork) -> RingMatrix:
    """``B(t)`` with ``b_ij = sum t^offset * weight`` over edges i -> j"""
    n = len(net.vertices)
    rows = [[TPoly() for _ in range(n)] for _ in range(n)]
    for e in net.edges:
        i, j = net.index(e.tail), net.index(e.head)
        rows[i][j] = rows[i][j] + TPoly.monomial(e.offset, e.weight)
    return RingMatrix(rows, TPoly)


def specialize(net: QuotientNetwork, point: Mapping[str, int]) -> QuotientNetwork:
    """Same network with the weights evaluated at an integer `point`"""
    edges = []
    for e in net.edges:
        value = e.weight.evaluate(point)
        if value.denominator != 1:
            raise ValueError(f"weight {e.weight} is not integral at {dict(point)}")
        edges.append(e._replace(weight=MPoly.constant(int(value))))
    return QuotientNetwork(net.vertices, [e for e in edges if e.weight],
                           [], net.planar_declared, net.name)
