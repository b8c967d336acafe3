__all__ = ['WorkflowResult', 'format_sequence', 'load_endpoints', 'load_network']

from .input_validation import read_network
from cylnet.network import QuotientNetwork
from cylnet.paths import parse_r_vertex
from collections import namedtuple
from typing import (List, Sequence)

# Exit status, text output and the JSON form of the same output
WorkflowResult = namedtuple("WorkflowResult", ("status", "text", "data"))


def load_network(config) -> QuotientNetwork:
    return read_network(config.network, config.stdin)


def load_endpoints(config, net: QuotientNetwork):
    sources = parse_r_vertex(config.sources, net)
    sinks = parse_r_vertex(config.sinks, net)
    if len(sources) != len(sinks):
        raise ValueError(f"{len(sources)} sources and {len(sinks)} sinks")
    return sources, sinks


def format_sequence(values: Sequence, start: int = 0) -> List[str]:
    return [f"f({start + k}) = {v}" for k, v in enumerate(values)]
