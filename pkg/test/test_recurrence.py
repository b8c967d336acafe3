from .utilsTest import load_network
from cylnet.algebra import parse_tpoly
from cylnet.analysis import (
    annihilates, berlekamp_massey, estimate_minimal, extend, minimal_recurrence,
    random_local_network, random_point)
from cylnet.common import (Inconclusive, LiftedVertex, Unstable)
from cylnet.families import (build_schur, schur_endpoints)
from cylnet.network import (q_n_det, specialize)
from cylnet.paths import (lgv_sequence, parse_r_vertex)
from cylnet.plethysm import q_plee
from fractions import Fraction
import numpy as np
import pytest

FIBONACCI = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_annihilates_integer_sequences():
    """
    Recurrences with and without leading exceptions
    """
    report = annihilates(parse_tpoly("t^2 - t - 1"), FIBONACCI)
    assert report.holds and report.first_valid_index == 0

    report = annihilates(parse_tpoly("t - 1"), [1, 0, 0, 0, 0])
    assert report.holds and report.first_valid_index == 1
    assert report.residuals[0] == -1

    report = annihilates(parse_tpoly("t - 1"), FIBONACCI)
    assert not report.holds

    with pytest.raises(Inconclusive):
        annihilates(parse_tpoly("t^2 - t - 1"), [0, 1, 1])


def test_extend():
    """
    Continuing sequences with a recurrence
    """
    assert extend(parse_tpoly("t - 2"), [1], 5) == [1, 2, 4, 8, 16]
    fibonacci = extend(parse_tpoly("t^2 - t - 1"), [0, 1], 10)
    assert fibonacci == FIBONACCI
    q = parse_tpoly("2*t^2 - 3*t + 1")
    values = extend(q, [Fraction(1), Fraction(1, 3)], 8)
    report = annihilates(q, values, point={})
    assert report.holds and report.first_valid_index == 0


def test_berlekamp_massey():
    """
    Shortest recurrences of rational sequences
    """
    assert berlekamp_massey(FIBONACCI) == [-1, -1, 1]
    assert berlekamp_massey([3 ** n for n in range(8)]) == [-3, 1]
    poly = minimal_recurrence([3 ** n for n in range(8)])
    assert poly.all_coeffs() == [1, -3]
    with pytest.raises(Unstable):
        minimal_recurrence([1, 2, 4])


def test_minimal_recurrence_schur():
    """
    h_l(2, 3) is annihilated by (t - 2)(t - 3) and nothing smaller
    """
    net = specialize(build_schur(2), {"x1": 2, "x2": 3})
    sources, sinks = schur_endpoints([0], 2)
    sequence = lgv_sequence(net, sources, sinks, 10)
    assert [int(v.constant_term) for v in sequence.values[:3]] == [1, 5, 19]
    assert minimal_recurrence(sequence).all_coeffs() == [1, -5, 6]

    estimates = estimate_minimal(build_schur(2), sources, sinks, 10, points=2, seed=1)
    assert all(poly.degree() == 2 for _, poly in estimates)


def test_fig1_recurrence():
    """
    Q_N annihilates the path counts of the example, symbolically
    """
    net = load_network("fig1.json")
    q = q_n_det(net)
    sequence = lgv_sequence(net, [LiftedVertex("u", 0)], [LiftedVertex("v", 0)], 6)
    report = annihilates(q, sequence)
    assert report.holds and report.first_valid_index <= 1

    sequence = lgv_sequence(net, parse_r_vertex("u@0,v@0"), parse_r_vertex("u@1,v@1"), 5)
    report = annihilates(q_plee(q, 2), sequence)
    assert report.holds and report.first_valid_index == 0


def test_random_local_networks():
    """
    Q_N and Q^(2) annihilate LGV sequences of random local networks at
    random integer points
    """
    rng = np.random.default_rng(11)
    tested = 0
    for seed in range(8):
        net = random_local_network(n_vertices=4, n_edges=10, seed=seed)
        point = random_point(net.variables, rng, (1, 5))
        small = specialize(net, point)
        q = q_n_det(small)
        p = len(small)

        ends = [LiftedVertex(v, 0) for v in small.vertices]
        sequence = lgv_sequence(small, ends[:1], ends[-1:], q.degree + p + 4)
        assert annihilates(q, sequence, max_prefix=p).holds

        if q.degree < 2:
            continue
        plee = q_plee(q, 2)
        sequence = lgv_sequence(small, ends[:2], ends[2:], plee.degree + 6 + 4)
        assert annihilates(plee, sequence, max_prefix=6).holds
        tested += 1
    assert tested > 0
