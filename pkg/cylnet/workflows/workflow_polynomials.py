"""Characteristic polynomial of a network and its plethysms"""

__all__ = ['workflow_plee', 'workflow_pleh', 'workflow_qpoly']

from .tools import (WorkflowResult, load_network)
from cylnet.network import (family_sums, q_n_cycles, q_n_det)
from cylnet.plethysm import (q_plee, q_pleh)

import logging

# Starting logger
logger = logging.getLogger(__name__)


def workflow_qpoly(config) -> WorkflowResult:
    """
    Compute ``Q_N`` from the cycle families and from ``det(Id - B(t))``
    and report whether both agree.
    """
    net = load_network(config)
    by_cycles = q_n_cycles(net)
    by_det = q_n_det(net)
    agree = by_cycles == by_det
    if not agree:
        logger.error(f"cycle families give {by_cycles} but the determinant gives {by_det}")
    text = "\n".join([f"cycles: {by_cycles}", f"det:    {by_det}",
                      "AGREE" if agree else "DISAGREE"])
    data = {"network": net.name, "cycles": str(by_cycles), "det": str(by_det),
            "agree": agree, "degree": by_det.degree,
            "family_sums": [str(h) for h in family_sums(by_det)]}
    return WorkflowResult(0 if agree else 1, text, data)


def _plethysm(config, func, symbol: str) -> WorkflowResult:
    net = load_network(config)
    q = q_n_det(net)
    result = func(q, config.r)
    logger.info(f"{symbol} of degree {result.degree} from Q_N of degree {q.degree}")
    data = {"network": net.name, "r": config.r, "q": str(q), "plethysm": str(result),
            "degree": result.degree}
    return WorkflowResult(0, str(result), data)


def workflow_plee(config) -> WorkflowResult:
    """``Q^(r)``: roots are the products of ``r`` distinct roots of ``Q_N``"""
    return _plethysm(config, q_plee, f"Q^({config.r})")


def workflow_pleh(config) -> WorkflowResult:
    """``Q^<r>``: roots are the products of ``r`` roots of ``Q_N`` with repetition"""
    return _plethysm(config, q_pleh, f"Q^<{config.r}>")
