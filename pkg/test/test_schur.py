from .utilsTest import schur_by_tableaux
from cylnet.algebra import (MPoly, TPoly, parse_expr)
from cylnet.analysis import annihilates
from cylnet.families import (build_schur, complete_homogeneous, schur_endpoints,
                             schur_oracle)
from cylnet.network import (q_n_cycles, q_n_det, simple_cycles)
from cylnet.paths import (lgv_determinant, lgv_sequence, shift_r_vertex)
from cylnet.plethysm import q_plee
from functools import reduce
import operator
import pytest


def test_build_schur():
    """
    Vertices, edges and cycles of the grid quotient
    """
    net = build_schur(2, 1)
    assert len(net) == 2 and len(net.edges) == 3
    assert net.planar_declared
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            net = build_schur(n, m)
            assert len(simple_cycles(net)) == n
            expected = reduce(operator.mul, [
                TPoly.monomial(1) - TPoly.constant(MPoly.var(f"x{j}") ** m)
                for j in range(1, n + 1)])
            assert q_n_cycles(net) == expected
            assert q_n_det(net) == expected


def test_oracles():
    """
    Jacobi-Trudi against tableaux
    """
    assert complete_homogeneous(2, 2) == parse_expr("x1^2 + x1*x2 + x2^2")
    assert complete_homogeneous(-1, 2) == MPoly()
    for lam in ([1], [2, 1], [3, 1, 1], [2, 2]):
        assert schur_oracle(lam, 3) == schur_by_tableaux(lam, 3)
    assert schur_oracle([1, 1, 1, 1], 3) == MPoly()
    with pytest.raises(ValueError):
        schur_endpoints([1, 2], 3)


def test_lgv_sequence_is_schur():
    """
    Translating the sinks by l periods adds l m to every part
    """
    n, m, lam = 3, 2, [1, 0]
    net = build_schur(n, m)
    sources, sinks = schur_endpoints(lam, n, m)
    for ell in range(5):
        shifted = [p + ell * m for p in lam]
        value = lgv_determinant(net, sources, shift_r_vertex(sinks, ell))
        assert value == schur_oracle(shifted, n)
        if ell < 2:
            assert value == schur_by_tableaux(shifted, n)


def test_schur_recurrence():
    """
    Q^(2) of the grid annihilates s_(1 + l, l)(x1, x2, x3)
    """
    net = build_schur(3)
    sources, sinks = schur_endpoints([1, 0], 3)
    sequence = lgv_sequence(net, sources, sinks, 7)
    q = q_plee(q_n_det(net), 2)
    assert q.degree == 3
    report = annihilates(q, sequence)
    assert report.holds
