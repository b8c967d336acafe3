"""Empirical checks of the positivity and minimality conjectures"""

__all__ = ['workflow_conjecture']

from .tools import (WorkflowResult, load_network)
from cylnet.analysis import (
    check_minimality, check_plee_general, check_polya, check_real_roots,
    check_total_positivity, report_to_dict)

import json
import logging

# Starting logger
logger = logging.getLogger(__name__)


def _run_check(config, net):
    if config.kind == "polya":
        return check_polya(net, config.max_minor)
    if config.kind == "roots":
        return check_real_roots(net, config.trials, config.seed)
    if config.kind == "tp":
        return check_total_positivity(net, config.trials, config.seed)
    if config.kind == "minimal":
        return check_minimality(net, config.r, config.trials, config.seed,
                                require_strong=not config.allow_disconnected)
    return check_plee_general(net, config.r, config.trials, config.seed)


def workflow_conjecture(config) -> WorkflowResult:
    """Run a conjecture check; counterexamples give exit status 1"""
    net = load_network(config)
    report = _run_check(config, net)
    data = report_to_dict(report)
    summary = (f"{report.conjecture}: {report.instances} instances, "
               f"{len(report.counterexamples)} counterexamples, {data['verdict']}")
    logger.info(summary)
    text = "\n".join([summary, json.dumps(data, indent=2, sort_keys=True)])
    return WorkflowResult(1 if report.counterexamples else 0, text, data)
