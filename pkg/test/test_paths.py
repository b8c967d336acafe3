from .utilsTest import load_network
from cylnet.algebra import (MPoly, parse_expr)
from cylnet.analysis import random_planar_network
from cylnet.common import (LiftedVertex, ParseError, UnknownVertex, WindowOverflow)
from cylnet.families import (build_schur, schur_endpoints)
from cylnet.paths import (
    count_paths, disjoint, enumerate_r_paths, lgv_determinant, lgv_matrix, lgv_sequence,
    parse_r_vertex, shift_r_vertex)
import pytest


def test_parse_r_vertex():
    """
    ``vertex@shift`` lists
    """
    net = load_network("fig1.json")
    assert parse_r_vertex("u@0, v@-1", net) == [LiftedVertex("u", 0), LiftedVertex("v", -1)]
    assert parse_r_vertex("v") == [LiftedVertex("v", 0)]
    assert shift_r_vertex(parse_r_vertex("u@0,v@1"), 2) == parse_r_vertex("u@2,v@3")
    with pytest.raises(ParseError):
        parse_r_vertex("u@x")
    with pytest.raises(ParseError):
        parse_r_vertex("u@0,,v@1")
    with pytest.raises(UnknownVertex):
        parse_r_vertex("w@0", net)


def test_lgv_matrix_fig1():
    """
    Path counts between the two translated pairs of the example
    """
    net = load_network("fig1.json")
    sources, sinks = parse_r_vertex("u@0,v@0"), parse_r_vertex("u@1,v@1")
    mat = lgv_matrix(net, sources, sinks)
    expected = [["a + c*d", "b + c*e + a*c + c^2*d"], ["d", "e + c*d"]]
    assert all(mat[i, j] == parse_expr(expected[i][j]) for i in range(2) for j in range(2))
    assert lgv_determinant(net, sources, sinks) == parse_expr("a*e - b*d")
    assert enumerate_r_paths(net, sources, sinks) == parse_expr("a*e - b*d")


def test_lgv_sequence_fig1():
    """
    Translating the sinks multiplies the determinant by det S
    """
    net = load_network("fig1.json")
    sequence = lgv_sequence(net, parse_r_vertex("u@0,v@0"), parse_r_vertex("u@1,v@1"), 4)
    det_s = parse_expr("a*e - b*d")
    assert sequence.values == [det_s ** (k + 1) for k in range(4)]
    assert sequence.meta["start"] == 0


def test_trivial_counts():
    """
    Empty paths and unreachable targets
    """
    net = load_network("fig1.json")
    u0, u1 = LiftedVertex("u", 0), LiftedVertex("u", 1)
    assert count_paths(net, u0, u0) == 1
    assert count_paths(net, u1, u0) == MPoly()
    assert enumerate_r_paths(net, [u1], [u0]) == MPoly()


def test_window_overflow():
    """
    The shift window is bounded
    """
    net = load_network("fig1.json")
    with pytest.raises(WindowOverflow):
        count_paths(net, LiftedVertex("u", 0), LiftedVertex("u", 10), max_window=4)


def test_schur_single_path():
    """
    Paths of the Schur grid for a single row partition
    """
    net = build_schur(2)
    sources, sinks = schur_endpoints([1], 2)
    assert count_paths(net, sources[0], sinks[0]) == parse_expr("x1 + x2")
    sources, sinks = schur_endpoints([2], 2)
    assert count_paths(net, sources[0], sinks[0]) == parse_expr("x1^2 + x1*x2 + x2^2")


def test_lgv_against_enumeration():
    """
    Signed enumeration of disjoint path pairs on random planar networks
    """
    for seed in range(3):
        net = random_planar_network(width=2, height=2, seed=seed)
        sources = parse_r_vertex("g0_0@0,g1_0@0")
        sinks = parse_r_vertex("g0_0@2,g1_0@2")
        assert lgv_determinant(net, sources, sinks) == enumerate_r_paths(net, sources, sinks)
        mat = lgv_matrix(net, sources, sinks)
        assert all(mat[i, j] == count_paths(net, sources[i], sinks[j])
                   for i in range(2) for j in range(2))


def test_disjoint():
    u0, v0, u1 = LiftedVertex("u", 0), LiftedVertex("v", 0), LiftedVertex("u", 1)
    assert disjoint([[u0, u1], [v0]])
    assert not disjoint([[u0, u1], [v0, u1]])
