"""
Reading and validation of the inputs: network files in JSON and
workflow configurations, either gathered from the command line or read
from a YAML file.
"""

__all__ = ['process_input', 'read_domino_weights', 'read_network', 'validate_input']

from .schemas import (schema_network, schema_workflows)
from cylnet.algebra import (MPoly, parse_expr)
from cylnet.common import (DictConfig, ParseError)
from cylnet.network import (QuotientNetwork, build_network)
from schema import SchemaError
from typing import (Dict, TextIO, Tuple)

import json
import logging
import sys
import yaml

# Starting logger
logger = logging.getLogger(__name__)


def validate_input(dict_input: Dict, workflow_name: str) -> DictConfig:
    """
    Validate `dict_input` against the schema of `workflow_name`.

    :raises SchemaError: unknown workflow, unknown key or invalid value
    """
    if workflow_name not in schema_workflows:
        raise SchemaError(f"unknown workflow: {workflow_name!r}, available: "
                          f"{sorted(schema_workflows)}")
    schema = schema_workflows[workflow_name]
    d = schema.validate(dict(dict_input, workflow=workflow_name))
    logger.debug(f"{workflow_name} configuration: {d}")
    return DictConfig(d)


def process_input(input_file: str, workflow_name: str = None) -> DictConfig:
    """
    Read the `input_file` in YAML format, validate it against the
    corresponding `workflow_name` schema and return the configuration.
    The workflow is taken from the ``workflow`` key when not given.

    :param input_file: path to the input
    :raises SchemaError: if the input is not valid
    """
    with open(input_file, 'r') as f:
        dict_input = yaml.load(f.read(), Loader=yaml.FullLoader)

    if not isinstance(dict_input, dict):
        raise SchemaError(f"{input_file} does not contain a mapping")
    if workflow_name is None:
        if 'workflow' not in dict_input:
            raise SchemaError("The name of the workflow is required in the input file")
        workflow_name = str(dict_input['workflow']).lower()

    return validate_input(dict_input, workflow_name)


def read_network(path: str, stream: TextIO = None) -> QuotientNetwork:
    """
    Read a network in JSON format from `path`, or from `stream` (the
    standard input by default) when `path` is ``"-"``.

    :raises SchemaError: the document does not follow the network format
    """
    if path == "-":
        text = (sys.stdin if stream is None else stream).read()
    else:
        with open(path, 'r') as f:
            text = f.read()
    d = schema_network.validate(json.loads(text))
    return build_network(d)


def _weight_key(key, n: int, m: int) -> Tuple[int, int]:
    try:
        p, q = (int(s) for s in str(key).split(","))
    except ValueError:
        raise SchemaError(f"weight key {key!r} is not of the form 'p,q'") from None
    if not 0 <= p < 2 * n:
        raise SchemaError(f"weight key {key!r}: p must lie in one period 0 <= p < {2 * n}")
    if not 0 < q < m:
        raise SchemaError(f"weight key {key!r}: the lines q = 0 and q = {m} have weight 1, "
                          f"only 0 < q < {m} can be set")
    return p, q


def read_domino_weights(path: str, n: int, m: int) -> Dict[Tuple[int, int], MPoly]:
    """
    Read the lattice point weights of the domino network from a YAML (or
    JSON) mapping ``"p,q": weight``. Keys are points of one period,
    ``0 <= p < 2n``, strictly inside the strip, ``0 < q < m``. Weights are
    monomials with coefficient 1, such as ``1``, ``y`` or ``"a^2*b^-1"``,
    so that the edge weights stay integral. Points left out keep the
    variable ``x{p}_{q}``.

    :raises SchemaError: the file breaks one of these rules
    """
    with open(path, 'r') as f:
        dict_weights = yaml.load(f.read(), Loader=yaml.FullLoader)
    if not isinstance(dict_weights, dict):
        raise SchemaError(f"{path} does not contain a mapping")

    weights = {}
    for key, value in dict_weights.items():
        point = _weight_key(key, n, m)
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise SchemaError(f"weight of {key!r} must be an integer or an expression")
        try:
            w = parse_expr(value) if isinstance(value, str) else MPoly.coerce(value)
        except ParseError as err:
            raise SchemaError(f"weight of {key!r}: {err}") from None
        if not (w.is_monomial and all(c == 1 for _, c in w.items())):
            raise SchemaError(f"weight of {key!r} must be a monomial with coefficient 1, "
                              f"got {w}")
        if point in weights:
            raise SchemaError(f"point {point} given twice in {path}")
        weights[point] = w
    logger.info(f"read {len(weights)} domino weights from {path}")
    return weights
