"""
Networks of the applications and their brute force oracles: Schur
polynomials, reverse plane partitions and domino tilings.
"""

__all__ = ['workflow_family', 'workflow_oracle']

from .input_validation import read_domino_weights
from .tools import WorkflowResult
from cylnet.algebra import MPoly
from cylnet.families import (
    DominoQuery, LozengeQuery, build_domino, build_lozenge, build_schur, domino_endpoints,
    domino_oracle, lozenge_endpoints_and_beta, query_region, reference_path_weight,
    rpp_oracle, schur_endpoints, schur_oracle)
from cylnet.network import network_to_dict
from cylnet.paths import (lgv_determinant, shift_r_vertex)
from typing import (Callable, Iterator, Tuple)

import json
import logging

# Starting logger
logger = logging.getLogger(__name__)

# (ell, oracle value, value predicted by the network or None)
Comparison = Tuple[int, MPoly, MPoly]


def workflow_family(config) -> WorkflowResult:
    """
    Network of an application in the JSON network format. The domino
    network takes its lattice point weights from ``config.weights``.
    """
    if config.weights is not None and config.kind != "domino":
        raise ValueError(f"--weights only applies to the domino network, not {config.kind}")
    if config.kind == "schur":
        net = build_schur(config.n, config.m)
    elif config.kind == "lozenge":
        net = build_lozenge(config.m)
    else:
        weights = None if config.weights is None else \
            read_domino_weights(config.weights, config.n, config.m)
        net = build_domino(config.n, config.m, weights)
    data = network_to_dict(net)
    return WorkflowResult(0, json.dumps(data, indent=2), data)


def _schur(config, ells) -> Iterator[Comparison]:
    net = build_schur(config.n, config.m)
    sources, sinks = schur_endpoints(config.lam, config.n, config.m)
    for ell in ells:
        lam = [p + ell * config.m for p in config.lam]
        yield ell, schur_oracle(lam, config.n), lgv_determinant(
            net, sources, shift_r_vertex(sinks, ell))


def _lozenge(config, ells) -> Iterator[Comparison]:
    query = LozengeQuery(config.a, config.b, config.c, config.d, config.r).validate()
    net = build_lozenge(query.m)
    sources, sinks, alpha, beta = lozenge_endpoints_and_beta(query)
    q = MPoly.var("q")
    for ell in ells:
        lgv = lgv_determinant(net, sources, shift_r_vertex(sinks, ell))
        yield ell, rpp_oracle(query, ell), q ** (alpha + ell * beta) * lgv


def _domino(config, ells) -> Iterator[Comparison]:
    query = DominoQuery(config.n, config.m, config.i, config.j, config.l0)
    net = build_domino(query.n, query.m)
    for ell in ells:
        z = domino_oracle(query, ell, config.boundary)
        if config.boundary != "normalized":
            yield ell, z, None
            continue
        sources, sinks = domino_endpoints(query.n, query.m, *query_region(query, ell))
        lgv = lgv_determinant(net, sources, sinks)
        yield ell, z * reference_path_weight(query, ell, net), lgv


dict_oracles = {"schur": _schur, "lozenge": _lozenge, "domino": _domino}


def _first_ell(config) -> int:
    if config.start is not None:
        return config.start
    if config.kind == "lozenge":
        return LozengeQuery(config.a, config.b, config.c, config.d, config.r).first_ell
    return 0


def workflow_oracle(config) -> WorkflowResult:
    """
    Enumerate the combinatorial objects of an application and compare the
    result with the LGV determinant of its network.
    """
    oracle: Callable = dict_oracles[config.kind]
    first = _first_ell(config)
    lines, rows, agree = [], [], True
    for ell, value, predicted in oracle(config, range(first, first + config.length)):
        match = None if predicted is None else value == predicted
        if match is False:
            logger.error(f"ell={ell}: oracle {value} differs from the network {predicted}")
            agree = False
        lines.append(f"ell={ell}: {value}")
        rows.append({"ell": ell, "oracle": str(value),
                     "network": None if predicted is None else str(predicted),
                     "agree": match})
    lines.append("AGREE" if agree else "DISAGREE")
    return WorkflowResult(0 if agree else 1, "\n".join(lines),
                          {"kind": config.kind, "terms": rows, "agree": agree})
