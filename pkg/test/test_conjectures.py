from .utilsTest import load_network
from cylnet.analysis import (
    check_minimality, check_plee_general, check_polya, check_real_roots,
    check_total_positivity, random_planar_network, report_to_dict,
    toeplitz_minor)
from cylnet.common import (LiftedVertex, NotLocal)
from cylnet.families import (build_lozenge, build_schur, schur_endpoints)
from cylnet.network import (build_network, family_sums, localize, q_n_det)
import pytest


def test_polya_schur_and_lozenge():
    """
    Minors of the family sums of planar networks are nonnegative
    """
    report = check_polya(build_schur(3), max_minor=2)
    assert report.conjecture == "polya"
    assert report.instances > 0 and not report.counterexamples
    assert report_to_dict(report)["verdict"] == "PASS"

    report = check_polya(build_lozenge(5), max_minor=2)
    assert not report.counterexamples


def test_toeplitz_minor():
    h = family_sums(q_n_det(load_network("fig1.json")))
    assert toeplitz_minor(h, [0], [1]) == h[1]
    assert toeplitz_minor(h, [0, 1], [1, 2]) == h[1] ** 2 - h[0] * h[2]
    assert toeplitz_minor(h, [1], [0]) == 0


def test_real_roots():
    """
    Roots of planar networks at positive points
    """
    report = check_real_roots(build_schur(2), trials=5, seed=1)
    assert report.instances == 5 and not report.counterexamples

    report = check_real_roots(build_lozenge(5), points=[{"q": 1}])
    assert report.instances == 1 and not report.counterexamples

    for seed in range(3):
        report = check_real_roots(random_planar_network(seed=seed), trials=4, seed=seed)
        assert report.instances == 4
        assert all("point" in c for c in report.counterexamples)


def test_total_positivity_fig1():
    """
    At the all ones point S = [[2, 2], [1, 1]] is singular
    """
    net = load_network("fig1.json")
    point = {v: 1 for v in net.variables}
    report = check_total_positivity(net, points=[point])
    assert report.instances == 1
    (witness,) = report.counterexamples
    assert witness["negative"] == []
    assert witness["zero"] == [{"rows": [0, 1], "cols": [0, 1]}]
    assert report.parameters["single_lift"]

    report = check_total_positivity(build_schur(2), trials=3)
    assert report.instances == 3


def schur_sampler(net, r, rng):
    """Endpoints of a random partition with r parts"""
    parts = sorted((int(x) for x in rng.integers(0, 3, size=r)), reverse=True)
    return schur_endpoints(parts, 2)


def test_minimality_schur():
    """
    Generic Schur sequences reach the degree C(d, r)
    """
    net = build_schur(2)
    with pytest.raises(ValueError):
        check_minimality(net, 1, trials=1)
    report = check_minimality(net, 1, trials=3, seed=2, endpoint_sampler=schur_sampler,
                              require_strong=False)
    assert report.parameters["bound"] == 2
    assert report.parameters["matches"] + report.parameters["inconclusive"] == 3


def test_minimality_replay():
    """
    Points and endpoints given explicitly are used as they are
    """
    net = build_lozenge(4)
    ends = ([LiftedVertex("k0", 0)], [LiftedVertex("k2", 0)])
    first = check_minimality(net, 1, points=[{"q": 3}], endpoints=[ends])
    second = check_minimality(net, 1, points=[{"q": 3}], endpoints=[ends])
    assert first.instances == 1
    assert first == second


def test_plee_general():
    """
    Q^(1) = Q_N on a network that is not local
    """
    net = build_network({"vertices": ["u", "v"], "edges": [
        {"from": "u", "to": "u", "offset": 2, "weight": "a"},
        {"from": "u", "to": "v", "offset": 0, "weight": "b"},
        {"from": "v", "to": "u", "offset": 1, "weight": "c"}]})
    with pytest.raises(NotLocal):
        localize(net)
    report = check_plee_general(net, 1, trials=2, seed=0)
    assert report.conjecture == "plee_general"
    assert report.instances == 2
    assert not report.parameters["local"]
    assert report_to_dict(report)["verdict"] in ("PASS", "COUNTEREXAMPLE")
