from cylnet.algebra import (MPoly, parse_expr)
from cylnet.analysis import annihilates
from cylnet.families import (
    DominoQuery, all_horizontal_tiling, aztec_region, build_domino, count_tilings_permanent,
    domino_endpoints, domino_oracle, domino_partition_function, domino_tilings,
    family_to_cylinder_tiling, query_region, reference_path_weight, tiling_to_rpath)
from cylnet.network import (cycle_families, q_n_det)
from cylnet.paths import (disjoint, lgv_determinant, lgv_sequence)
from cylnet.plethysm import q_plee


def test_build_domino():
    """
    Black squares of one period and their families of cycles
    """
    net = build_domino(1, 2)
    assert len(net) == 2
    assert net.planar_declared
    counts = [len(cycle_families(build_domino(1, m))) for m in range(2, 7)]
    assert counts == [5, 12, 29, 70, 169]


def test_cylinder_tilings():
    """
    Every family of cycles is a tiling of the cylinder
    """
    n, m = 1, 3
    for family in cycle_families(build_domino(n, m)):
        dominoes = family_to_cylinder_tiling(family, n, m)
        assert len(dominoes) == n * m


def test_aztec_diamonds():
    """
    Untruncated diamonds of order k have 2^(k(k+1)/2) tilings
    """
    for k, expected in ((1, 2), (2, 8), (3, 64)):
        squares = aztec_region(0, 5, k, 10)
        assert len(squares) == 2 * k * (k + 1)
        assert count_tilings_permanent(squares) == expected
        assert sum(1 for _ in domino_tilings(squares)) == expected


def test_truncated_regions():
    """
    Enumeration against the permanent on regions cut by the strip
    """
    for i, j, radius, m in ((0, 1, 1, 2), (0, 1, 2, 3), (1, 2, 2, 4), (0, 1, 3, 3)):
        squares = aztec_region(i, j, radius, m)
        assert sum(1 for _ in domino_tilings(squares)) == count_tilings_permanent(squares)


def test_single_domino():
    """
    A region made of one domino has weight 1
    """
    assert aztec_region(0, 0, 1, 1) == frozenset({(-1, 0), (0, 0)})
    assert domino_partition_function(1, 1, 0, 0, 1) == 1


def test_two_by_two_block():
    """
    Both tilings of a 2x2 block and their paths
    """
    query = DominoQuery(n=1, m=2, i=0, j=1, l0=1)
    assert domino_oracle(query, 0, "normalized") == 1 + parse_expr("x1_1^-2")
    assert reference_path_weight(query, 0) == parse_expr("x1_1*x0_1^-1")


def test_tilings_to_paths():
    """
    Disjoint paths between the region endpoints
    """
    n, m = 1, 3
    query = DominoQuery(n=n, m=m, i=1, j=1, l0=2)
    i, j, radius = query_region(query, 0)
    squares = aztec_region(i, j, radius, m)
    sources, sinks = domino_endpoints(n, m, i, j, radius)
    assert len(sources) == 2
    for tiling in domino_tilings(squares):
        paths = tiling_to_rpath(tiling, squares, n, j)
        assert disjoint(paths)
        assert [p[0] for p in paths] == sources
        assert [p[-1] for p in paths] == sinks
    horizontal = tiling_to_rpath(all_horizontal_tiling(squares), squares, n, j)
    assert len(horizontal) == 2


def test_normalized_partition_function():
    """
    Z times the weight of the horizontal tiling paths is the LGV determinant
    """
    for query in (DominoQuery(n=1, m=2, i=0, j=1, l0=1),
                  DominoQuery(n=1, m=3, i=1, j=1, l0=2),
                  DominoQuery(n=2, m=2, i=1, j=1, l0=1)):
        net = build_domino(query.n, query.m)
        for ell in range(2):
            sources, sinks = domino_endpoints(query.n, query.m, *query_region(query, ell))
            z = domino_oracle(query, ell, "normalized")
            assert z * reference_path_weight(query, ell, net) == \
                lgv_determinant(net, sources, sinks)


def test_domino_recurrence():
    """
    Q^(2) annihilates the sequence of growing regions
    """
    query = DominoQuery(n=1, m=3, i=1, j=1, l0=2)
    net = build_domino(query.n, query.m)
    sources, sinks = domino_endpoints(query.n, query.m, *query_region(query, 0))
    sequence = lgv_sequence(net, sources, sinks, 9)
    q = q_plee(q_n_det(net), 2)
    assert q.degree == 3
    point = {v: k + 2 for k, v in enumerate(net.variables)}
    report = annihilates(q, sequence, max_prefix=len(net) + 1, point=point)
    assert report.holds
    assert sequence.values[0] != MPoly()
