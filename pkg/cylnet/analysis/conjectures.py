"""
Experiments on the conjectured positivity and minimality properties of
cylindrical networks.

Every checker returns a :class:`ConjectureReport`; a negative finding is
data, not an error. Random choices come from a numpy generator seeded
with the `seed` stored in the report, and every counterexample carries
the substitution point (and endpoints) needed to replay it through the
`points` argument of the same checker.
"""

__all__ = ['ConjectureReport', 'check_minimality', 'check_plee_general', 'check_polya',
           'check_real_roots', 'check_total_positivity', 'random_endpoints',
           'random_local_network', 'random_network', 'random_planar_network',
           'random_rational_point', 'report_to_dict', 'toeplitz_minor']

from .recurrence import (annihilates, minimal_recurrence, random_point, rational_poly)
from cylnet.algebra import (MPoly, RingMatrix, det_division_free, minors)
from cylnet.common import (Inconclusive, LiftedVertex, NotLocal, TheoremViolation,
                           Unstable)
from cylnet.network import (QuotientNetwork, build_network, family_sums, localize,
                            offset_digraph, q_n_det, specialize)
from cylnet.paths import lgv_sequence
from cylnet.plethysm import (psi_schur, q_plee)
from cylnet.schedule.components import parallel_map
from collections import namedtuple
from fractions import Fraction
from functools import partial
from itertools import combinations
from math import comb
from typing import (Callable, Dict, List, Mapping, Sequence, Tuple)

import logging
import networkx as nx
import numpy as np
import sympy as sp

# Starting logger
logger = logging.getLogger(__name__)

ConjectureReport = namedtuple(
    "ConjectureReport", ("conjecture", "instances", "counterexamples", "parameters"))

Point = Dict[str, Fraction]
Endpoints = Tuple[List[LiftedVertex], List[LiftedVertex]]


def report_to_dict(report: ConjectureReport) -> Dict:
    return {"conjecture": report.conjecture, "instances": report.instances,
            "counterexamples": list(report.counterexamples),
            "parameters": dict(report.parameters),
            "verdict": "PASS" if not report.counterexamples else "COUNTEREXAMPLE"}


def _point_to_json(point: Mapping) -> Dict[str, str]:
    return {k: str(v) for k, v in sorted(point.items())}


def _point_from_json(point: Mapping) -> Point:
    return {k: Fraction(str(v)) for k, v in point.items()}


def random_rational_point(variables: Sequence[str], rng: np.random.Generator,
                          high: int = 9) -> Point:
    """Independent positive rationals ``p / q`` with ``1 <= p, q <= high``"""
    return {v: Fraction(int(rng.integers(1, high, endpoint=True)),
                        int(rng.integers(1, high, endpoint=True)))
            for v in sorted(variables)}


def _points(net: QuotientNetwork, trials: int, seed: int, points) -> List[Point]:
    if points is not None:
        return [_point_from_json(p) for p in points]
    rng = np.random.default_rng(seed)
    return [random_rational_point(net.variables, rng) for _ in range(trials)]


# ================> Polya frequency <================
def toeplitz_minor(h: Sequence[MPoly], rows: Sequence[int], cols: Sequence[int]) -> MPoly:
    """Minor of the Toeplitz matrix with entries ``H_(j - i)``"""
    def entry(k: int) -> MPoly:
        return MPoly.coerce(h[k]) if 0 <= k < len(h) else MPoly()

    return det_division_free(RingMatrix([[entry(j - i) for j in cols] for i in rows]))


def _partitions_in_box(rows: int, cols: int) -> List[Tuple[int, ...]]:
    def rec(k: int, bound: int):
        if k == rows:
            yield ()
            return
        for part in range(bound, -1, -1):
            for rest in rec(k + 1, part):
                yield (part,) + rest

    return [tuple(p for p in lam if p) for lam in rec(0, cols)]


def check_polya(net: QuotientNetwork, max_minor: int = 3) -> ConjectureReport:
    """
    Test the minors of the Toeplitz matrix of ``H_0, ..., H_d`` up to size
    `max_minor` and the images ``psi(s_lam)`` for ``lam`` with at most
    ``d`` rows and `max_minor` columns for nonnegative coefficients.
    Toeplitz minors are invariant under a common translation of rows and
    columns, so only index sets containing 0 are visited.
    """
    if not net.planar_declared:
        logger.warning(f"{net.name or 'network'} is not declared planar")
    h = family_sums(q_n_det(net))
    d = len(h) - 1
    size = max_minor + d
    instances, counterexamples = 0, []
    for k in range(1, max_minor + 1):
        for rows in combinations(range(size), k):
            for cols in combinations(range(size), k):
                if rows[0] and cols[0]:
                    continue
                minor = toeplitz_minor(h, rows, cols)
                instances += 1
                if not minor.has_nonnegative_coefficients():
                    counterexamples.append({"kind": "toeplitz", "rows": list(rows),
                                            "cols": list(cols), "value": str(minor)})
    for lam in _partitions_in_box(d, max_minor):
        image = psi_schur(lam, h)
        instances += 1
        if not image.has_nonnegative_coefficients():
            counterexamples.append({"kind": "schur", "partition": list(lam),
                                    "value": str(image)})
    logger.info(f"Polya check: {instances} minors, {len(counterexamples)} negative")
    return ConjectureReport("polya", instances, counterexamples,
                            {"max_minor": max_minor, "d": d})


# ================> Real roots <================
def positive_root_count(coeffs: Sequence[Fraction]) -> Tuple[int, int]:
    """
    Number of distinct roots in ``(0, oo)`` and number of distinct
    complex roots of the polynomial with ascending rational `coeffs`,
    counted with Sturm sequences on its square free part.
    """
    poly = rational_poly(coeffs)
    if poly.degree() <= 0:
        return 0, 0
    sqf = poly.sqf_part()
    positive = sqf.count_roots(0, sp.oo)
    if sqf.eval(0) == 0:
        positive -= 1
    return int(positive), sqf.degree()


def _roots_trial(q, indexed_point: Tuple[int, Point]):
    trial, point = indexed_point
    coeffs = q.evaluate_coefficients(point)
    positive, distinct = positive_root_count(coeffs)
    if positive == distinct:
        return None
    return {"trial": trial, "point": _point_to_json(point),
            "positive_roots": positive, "distinct_roots": distinct,
            "polynomial": [str(c) for c in coeffs]}


def check_real_roots(net: QuotientNetwork, trials: int = 20, seed: int = 0,
                     points: Sequence[Mapping] = None) -> ConjectureReport:
    """
    Substitute positive rationals for the weights and check that every
    root of ``Q_N`` is real and positive.
    """
    q = q_n_det(net)
    samples = _points(net, trials, seed, points)
    results = parallel_map(partial(_roots_trial, q), list(enumerate(samples)))
    counterexamples = [r for r in results if r is not None]
    return ConjectureReport("roots", len(samples), counterexamples,
                            {"seed": seed, "d": q.degree})


# ================> Total positivity <================
def _tp_trial(s: RingMatrix, indexed_point: Tuple[int, Point]):
    trial, point = indexed_point
    values = s.map(lambda c: c.evaluate(point), Fraction)
    negative, zero = [], []
    for k in range(1, s.shape[0] + 1):
        for rows, cols, minor in minors(values, k):
            if minor < 0:
                negative.append({"rows": list(rows), "cols": list(cols),
                                 "value": str(minor)})
            elif minor == 0:
                zero.append({"rows": list(rows), "cols": list(cols)})
    if not negative and not zero:
        return None
    return {"trial": trial, "point": _point_to_json(point), "negative": negative,
            "zero": zero}


def check_total_positivity(net: QuotientNetwork, trials: int = 5, seed: int = 0,
                           points: Sequence[Mapping] = None) -> ConjectureReport:
    """
    Check that every minor of ``S`` is positive at random positive
    rational points. Only the canonical local lift is tested, so a
    counterexample does not rule out another lift.

    :raises NotLocal: the network has no local lift
    """
    form = localize(net)
    samples = _points(net, trials, seed, points)
    results = parallel_map(partial(_tp_trial, form.S), list(enumerate(samples)))
    counterexamples = [r for r in results if r is not None]
    return ConjectureReport("tp", len(samples), counterexamples,
                            {"seed": seed, "potential": form.potential,
                             "vertices": list(form.network.vertices),
                             "single_lift": True})


# ================> Recurrence degree <================
def random_endpoints(net: QuotientNetwork, r: int, rng: np.random.Generator) -> Endpoints:
    """`r` distinct sources and `r` distinct sinks, all at shift 0"""
    if r > len(net):
        raise ValueError(f"cannot choose {r} distinct vertices out of {len(net)}")
    sources = sorted(int(i) for i in rng.choice(len(net), size=r, replace=False))
    sinks = sorted(int(i) for i in rng.choice(len(net), size=r, replace=False))
    return ([LiftedVertex(net.vertices[i], 0) for i in sources],
            [LiftedVertex(net.vertices[i], 0) for i in sinks])


def _transient(net: QuotientNetwork) -> Tuple[bool, int]:
    """Whether the network is local and how many leading terms to skip"""
    try:
        form = localize(net)
    except NotLocal:
        return False, len(net) + max((e.offset for e in net.edges), default=0)
    return True, max(form.potential.values(), default=0) + 1


def _trial_setup(net, r, trials, seed, points, endpoints, endpoint_sampler):
    rng = np.random.default_rng(seed)
    sampler = random_endpoints if endpoint_sampler is None else endpoint_sampler
    setups = []
    for k in range(trials if points is None else len(points)):
        if points is None:
            point = random_point(net.variables, rng)
        else:
            point = {v: int(x) for v, x in points[k].items()}
        ends = endpoints[k] if endpoints is not None else sampler(net, r, rng)
        setups.append((k, point, ends))
    return setups


def _witness(trial: int, point: Mapping, ends: Endpoints) -> Dict:
    return {"trial": trial, "point": {v: int(x) for v, x in sorted(point.items())},
            "sources": [list(u) for u in ends[0]], "sinks": [list(v) for v in ends[1]]}


def _minimal_trial(net, length, drop, setup):
    trial, point, (sources, sinks) = setup
    sequence = lgv_sequence(specialize(net, point), sources, sinks, length, n_threads=0)
    try:
        degree = minimal_recurrence(sequence, drop).degree()
    except Unstable as err:
        logger.debug(f"trial {trial}: {err}")
        degree = None
    if not any(sequence.values[drop:]):
        degree = None
    return setup, degree


def check_minimality(net: QuotientNetwork, r: int, trials: int = 5, seed: int = 0,
                     lmax: int = None, endpoint_sampler: Callable = None,
                     require_strong: bool = True, points: Sequence[Mapping] = None,
                     endpoints: Sequence[Endpoints] = None) -> ConjectureReport:
    """
    Compare the degree of the minimal recurrence of random LGV sequences
    with ``C(d, r)``.

    :param endpoint_sampler: ``sampler(net, r, rng) -> (sources, sinks)``,
        random distinct vertices by default
    :param require_strong: reject networks whose quotient is not strongly
        connected
    :param points: integer substitution points to replay, with the
        matching `endpoints`
    :raises ValueError: the quotient is not strongly connected
    :raises TheoremViolation: a local network gives a degree above ``C(d, r)``
    """
    if require_strong and not nx.is_strongly_connected(offset_digraph(net)):
        raise ValueError(f"{net.name or 'network'} is not strongly connected")
    d = q_n_det(net).degree
    bound = comb(d, r)
    local, drop = _transient(net)
    length = drop + 2 * bound + 6 if lmax is None else lmax
    setups = _trial_setup(net, r, trials, seed, points, endpoints, endpoint_sampler)
    results = parallel_map(partial(_minimal_trial, net, length, drop), setups)

    matches, inconclusive, counterexamples = 0, 0, []
    for (trial, point, ends), degree in results:
        if degree is None:
            inconclusive += 1
        elif degree == bound:
            matches += 1
        else:
            witness = dict(_witness(trial, point, ends), degree=degree, bound=bound)
            if degree > bound and local:
                raise TheoremViolation(
                    f"minimal recurrence of degree {degree} exceeds C({d}, {r}) = {bound}: "
                    f"{witness}")
            counterexamples.append(witness)
    logger.info(f"minimality: {matches} of {len(results)} trials reach C({d}, {r})")
    return ConjectureReport("minimal", len(results), counterexamples,
                            {"seed": seed, "r": r, "d": d, "bound": bound,
                             "matches": matches, "inconclusive": inconclusive,
                             "length": length, "drop": drop})


def _plee_trial(net, q, length, drop, setup):
    trial, point, (sources, sinks) = setup
    sequence = lgv_sequence(specialize(net, point), sources, sinks, length, n_threads=0)
    try:
        report = annihilates(q, sequence, max_prefix=drop, point=point)
    except Inconclusive:
        return None
    if report.holds:
        return None
    return dict(_witness(trial, point, (sources, sinks)),
                residuals=[str(x) for x in report.residuals])


def check_plee_general(net: QuotientNetwork, r: int, trials: int = 5, seed: int = 0,
                       points: Sequence[Mapping] = None,
                       endpoints: Sequence[Endpoints] = None) -> ConjectureReport:
    """
    Test whether ``Q^(r)`` annihilates LGV sequences of networks that are
    not necessarily local.
    """
    q = q_plee(q_n_det(net), r)
    local, drop = _transient(net)
    length = drop + q.degree + 6
    setups = _trial_setup(net, r, trials, seed, points, endpoints, None)
    results = parallel_map(partial(_plee_trial, net, q, length, drop), setups)
    counterexamples = [x for x in results if x is not None]
    return ConjectureReport("plee_general", len(setups), counterexamples,
                            {"seed": seed, "r": r, "local": local, "length": length,
                             "max_prefix": drop})


# ================> Generators <================
def _random_description(n_vertices: int, candidates: List[Tuple[int, int, int]],
                        n_edges: int, rng: np.random.Generator, name: str) -> Dict:
    n_edges = min(n_edges, len(candidates))
    chosen = sorted(int(k) for k in rng.choice(len(candidates), size=n_edges,
                                               replace=False))
    edges = [{"from": f"v{candidates[k][0]}", "to": f"v{candidates[k][1]}",
              "offset": candidates[k][2], "weight": f"w{n}"}
             for n, k in enumerate(chosen)]
    return {"name": name, "vertices": [f"v{i}" for i in range(n_vertices)],
            "vars": [f"w{n}" for n in range(n_edges)], "edges": edges}


def random_local_network(n_vertices: int = 4, n_edges: int = 8, seed: int = 0
                         ) -> QuotientNetwork:
    """
    Network with offsets 0 and 1, offset 0 edges only from lower to higher
    index, and a distinct variable on every edge.
    """
    rng = np.random.default_rng(seed)
    candidates = [(i, j, o) for i in range(n_vertices) for j in range(n_vertices)
                  for o in (0, 1) if o == 1 or i < j]
    return build_network(_random_description(n_vertices, candidates, n_edges, rng,
                                      f"local_{seed}"))


def random_network(n_vertices: int = 4, n_edges: int = 8, seed: int = 0,
                   max_offset: int = 2) -> QuotientNetwork:
    """Like :func:`random_local_network` with offsets up to `max_offset`"""
    rng = np.random.default_rng(seed)
    candidates = [(i, j, o) for i in range(n_vertices) for j in range(n_vertices)
                  for o in range(max_offset + 1) if o > 0 or i < j]
    return build_network(_random_description(n_vertices, candidates, n_edges, rng,
                                      f"random_{seed}"))


def random_planar_network(width: int = 2, height: int = 2, seed: int = 0,
                          density: float = 0.7) -> QuotientNetwork:
    """
    Subgraph of the grid on a cylinder of circumference `width` with
    steps right, up and down-right. The right steps of the bottom row are
    always kept; every other step is kept with probability `density`.
    """
    rng = np.random.default_rng(seed)

    def name(i: int, j: int) -> str:
        return f"g{i}_{j}"

    steps = []
    for j in range(height):
        for i in range(width):
            wrap = 1 if i == width - 1 else 0
            nxt = (i + 1) % width
            steps.append((name(i, j), name(nxt, j), wrap, j == 0))
            if j + 1 < height:
                steps.append((name(i, j), name(i, j + 1), 0, False))
            if j > 0:
                steps.append((name(i, j), name(nxt, j - 1), wrap, False))
    kept = [s for s in steps if s[3] or rng.random() < density]
    edges = [{"from": tail, "to": head, "offset": offset, "weight": f"y{k}"}
             for k, (tail, head, offset, _) in enumerate(kept)]
    description = {"name": f"planar_{seed}", "planar": True,
                   "vertices": [name(i, j) for j in range(height) for i in range(width)],
                   "vars": [f"y{k}" for k in range(len(kept))], "edges": edges}
    return build_network(description)
