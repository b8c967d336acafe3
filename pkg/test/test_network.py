from .utilsTest import load_network
from cylnet.algebra import (MPoly, TPoly, parse_expr, parse_tpoly)
from cylnet.analysis import random_local_network
from cylnet.common import (
    NonPositiveWinding, NotLocal, ParseError, PlanarityViolation, UnknownVertex)
from cylnet.network import (
    build_network, cycle_families, localize, network_to_dict, q_n_cycles, q_n_det,
    q_n_local, simple_cycles, specialize, transfer_matrix)
import json
import pytest

FIG1_Q = parse_tpoly("t^2 - (a + e + c*d)*t + a*e - b*d")


def test_build_fig1():
    """
    The two vertex example and its edges
    """
    net = load_network("fig1.json")
    assert len(net) == 2
    assert len(net.edges) == 5
    assert net.variables == ["a", "b", "c", "d", "e"]
    again = build_network(network_to_dict(net))
    assert again.edges == net.edges and again.vertices == net.vertices


def test_characteristic_polynomial_fig1():
    """
    Cycle families, transfer matrix and local form agree
    """
    net = load_network("fig1.json")
    assert q_n_cycles(net) == FIG1_Q
    assert q_n_det(net) == FIG1_Q
    assert q_n_local(net) == FIG1_Q


def test_original_lift():
    """
    A lift with offsets -1 and 2 gives the same polynomial and relabels
    to the local one
    """
    net = load_network("fig1_original_lift.json")
    b = transfer_matrix(net)
    assert b[0, 1] == TPoly({0: MPoly.var("b"), -1: MPoly.var("c")})
    assert q_n_det(net) == FIG1_Q
    assert q_n_cycles(net) == FIG1_Q

    form = localize(net)
    assert form.potential == {"u": 1, "v": 0}
    offsets = {str(e.weight): e.offset for e in form.network.edges}
    assert offsets == {"a": 1, "b": 1, "c": 0, "d": 1, "e": 1}


def test_local_form_fig1():
    """
    S = (Id - C)^-1 D
    """
    form = localize(load_network("fig1.json"))
    expected = [["a + c*d", "b + c*e"], ["d", "e"]]
    assert all(form.S[i, j] == parse_expr(expected[i][j])
               for i in range(2) for j in range(2))


def test_cycles_fig1():
    """
    Four simple cycles, one of them winding twice, and six families
    """
    net = load_network("fig1.json")
    cycles = simple_cycles(net)
    assert len(cycles) == 4
    windings = {str(c.weight): c.winding for c in cycles}
    assert windings == {"a": 1, "e": 1, "c*d": 1, "b*d": 2}

    families = cycle_families(net)
    assert len(families) == 6
    pairs = [f for f in families if f.r == 2]
    assert len(pairs) == 1
    assert pairs[0].weight == parse_expr("a*e") and pairs[0].winding == 2


def test_acyclic_network():
    """
    No cycles: Q_N = 1
    """
    net = build_network({"vertices": ["u", "v"],
                         "edges": [{"from": "u", "to": "v", "offset": 0, "weight": "x"}]})
    assert simple_cycles(net) == []
    assert q_n_det(net) == TPoly.constant(1)
    assert q_n_cycles(net) == TPoly.constant(1)


def test_invalid_networks():
    """
    Cycles without positive winding, undeclared vertices and lifts that
    cannot be made local
    """
    with pytest.raises(NonPositiveWinding) as info:
        build_network({"vertices": ["u"],
                       "edges": [{"from": "u", "to": "u", "offset": 0}]})
    assert info.value.cycle

    with pytest.raises(NonPositiveWinding):
        load_network("not_positive.json")

    with pytest.raises(UnknownVertex):
        build_network({"vertices": ["u"], "edges": [{"from": "u", "to": "w"}]})

    loop = build_network({"vertices": ["u"],
                          "edges": [{"from": "u", "to": "u", "offset": 2}]})
    with pytest.raises(NotLocal):
        localize(loop)


def test_planar_declaration():
    """
    The b*d cycle winds twice, so the example is not planar
    """
    description = dict(network_to_dict(load_network("fig1.json")), planar=True)
    with pytest.raises(PlanarityViolation):
        build_network(description)


def test_random_local_networks():
    """
    The cycle and determinant formulas agree on random networks
    """
    for seed in range(10):
        net = random_local_network(n_vertices=4, n_edges=7, seed=seed)
        q = q_n_det(net)
        assert q_n_cycles(net) == q
        assert q.is_monic
        assert q_n_local(net) == q


def test_specialize():
    """
    Integer substitution of the weights
    """
    net = specialize(load_network("fig1.json"), {"a": 1, "b": 2, "c": 3, "d": 4, "e": 5})
    assert q_n_det(net) == parse_tpoly("t^2 - 18*t - 3")


def test_cancelling_top_coefficients():
    """
    With all weights 1 the families of winding 2 cancel (ae = bd); every
    method returns the same polynomial of degree 1
    """
    net = specialize(load_network("fig1.json"), {v: 1 for v in "abcde"})
    expected = parse_tpoly("t - 3")
    assert q_n_cycles(net) == expected
    assert q_n_det(net) == expected
    assert q_n_local(net) == expected


def test_edge_keys(tmp_path):
    """
    Edges are written with "from" and "to" and read back unchanged
    """
    net = load_network("fig1.json")
    d = network_to_dict(net)
    assert all(set(e) == {"from", "to", "offset", "weight"} for e in d["edges"])
    path = tmp_path / "fig1.json"
    path.write_text(json.dumps(d))
    again = build_network(json.loads(path.read_text()))
    assert again.edges == net.edges and q_n_det(again) == FIG1_Q

    with pytest.raises(ParseError):
        build_network({"vertices": ["u"], "edges": [{"tail": "u", "head": "u",
                                                      "offset": 1}]})
