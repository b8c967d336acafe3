"""LGV sequences of a network and the recurrences they satisfy"""

__all__ = ['workflow_minimal', 'workflow_paths', 'workflow_verify']

from .tools import (WorkflowResult, format_sequence, load_endpoints, load_network)
from cylnet.algebra import parse_tpoly
from cylnet.analysis import (annihilates, estimate_minimal, random_point)
from cylnet.network import q_n_det
from cylnet.paths import lgv_sequence
from cylnet.plethysm import (q_plee, q_pleh)
from math import comb

import logging
import numpy as np

# Starting logger
logger = logging.getLogger(__name__)


def workflow_paths(config) -> WorkflowResult:
    """``f(ell)`` for the requested translations of the sinks"""
    net = load_network(config)
    sources, sinks = load_endpoints(config, net)
    sequence = lgv_sequence(net, sources, sinks, config.length, config.start)
    data = dict(sequence.meta, values=[str(v) for v in sequence.values])
    return WorkflowResult(0, "\n".join(format_sequence(sequence.values, config.start)),
                          data)


def _recurrence(config, net, r: int):
    if config.poly is not None:
        return parse_tpoly(config.poly)
    q = q_n_det(net)
    if config.recurrence == "q":
        return q
    return q_plee(q, r) if config.recurrence == "plee" else q_pleh(q, r)


def workflow_verify(config) -> WorkflowResult:
    """
    Check that the recurrence (``Q^(r)`` by default) annihilates the LGV
    sequence after at most `max_prefix` exceptional terms.
    """
    net = load_network(config)
    sources, sinks = load_endpoints(config, net)
    q = _recurrence(config, net, len(sources))
    sequence = lgv_sequence(net, sources, sinks, config.length, config.start)
    point = None
    if config.numeric:
        point = random_point(net.variables, np.random.default_rng(config.seed))
        logger.info(f"checking at the point {point}")
    report = annihilates(q, sequence, max_prefix=config.max_prefix, point=point)
    verdict = "PASS" if report.holds else "FAIL"
    lines = [f"recurrence: {q}", f"first valid index: {report.first_valid_index}",
             f"nonzero residuals: {sum(1 for x in report.residuals if x)}", verdict]
    data = {"recurrence": str(q), "holds": report.holds,
            "first_valid_index": report.first_valid_index,
            "residuals": [str(x) for x in report.residuals], "point": point}
    return WorkflowResult(0 if report.holds else 1, "\n".join(lines), data)


def workflow_minimal(config) -> WorkflowResult:
    """
    Minimal recurrence of the LGV sequence at random integer points,
    compared with the degree ``C(d, r)`` of ``Q^(r)``.
    """
    net = load_network(config)
    sources, sinks = load_endpoints(config, net)
    estimates = estimate_minimal(net, sources, sinks, config.length, config.points,
                                 config.seed, config.drop)
    bound = comb(q_n_det(net).degree, len(sources))
    lines, points = [], []
    for point, poly in estimates:
        lines.append(f"{point}: {poly.as_expr()} (degree {poly.degree()})")
        points.append({"point": point, "poly": str(poly.as_expr()),
                       "degree": poly.degree()})
    lines.append(f"degree of Q^({len(sources)}): {bound}")
    return WorkflowResult(0, "\n".join(lines), {"estimates": points, "bound": bound})
