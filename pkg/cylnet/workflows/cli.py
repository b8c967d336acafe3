"""
Command line interface::

    cylnet qpoly fig1.json
    cylnet family schur -n 2 -m 2 | cylnet qpoly -
    cylnet run -i input.yml

Exit status: 0 on success, 1 when a verification fails or a
counterexample is found, 2 on usage or input errors.
"""

__all__ = ['dict_workflows', 'main', 'parser', 'run']

from .initialization import initialize
from .input_validation import (process_input, validate_input)
from .tools import WorkflowResult
from .workflow_conjectures import workflow_conjecture
from .workflow_families import (workflow_family, workflow_oracle)
from .workflow_polynomials import (workflow_plee, workflow_pleh, workflow_qpoly)
from .workflow_sequences import (workflow_minimal, workflow_paths, workflow_verify)
from schema import SchemaError
from typing import (List, TextIO)

import argparse
import json
import logging
import sys
import yaml

# Starting logger
logger = logging.getLogger(__name__)

NETWORK_GRAMMAR = """\
network files (JSON, "-" reads the standard input):
  {"name": "fig1",                      optional label
   "vertices": ["u", "v"],              quotient vertices
   "vars": ["a", "b", "c", "d", "e"],   optional, inferred from the weights
   "planar": false,                     optional, checks every cycle winds once
   "edges": [{"from": "u", "to": "v", "offset": 1, "weight": "b"}, ...]}
  offsets are integers and every cycle must have a positive total offset;
  weights are polynomials such as "c*d + 2" or "x1^-1*x2"; "t" is reserved.
r-vertices are written "u@0,v@-1" (vertex@shift, the shift defaults to 0).
"""

msg = "Cylindrical networks: characteristic polynomials, plethysms and LGV sequences"

parser = argparse.ArgumentParser(
    prog="cylnet", description=msg, epilog=NETWORK_GRAMMAR,
    formatter_class=argparse.RawDescriptionHelpFormatter)
subparsers = parser.add_subparsers(dest="workflow", metavar="subcommand")
subparsers.required = True


def _subparser(name: str, description: str) -> argparse.ArgumentParser:
    sub = subparsers.add_parser(
        name, help=description, description=description, epilog=NETWORK_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub.add_argument('--json', action='store_true', default=None,
                     help="print the result as JSON")
    sub.add_argument('--log', dest='log_file', help="write a log to this file")
    sub.add_argument('--threads', type=int,
                     help="worker threads (0 = serial), CYLNET_THREADS by default")
    return sub


def _endpoint_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument('network', help="network file or -")
    sub.add_argument('--sources', required=True, help="source r-vertex, e.g. u@0,v@0")
    sub.add_argument('--sinks', required=True, help="sink r-vertex, e.g. u@1,v@1")
    sub.add_argument('-L', '--length', type=int, help="number of terms")
    sub.add_argument('--start', type=int, help="first translation index")


_qpoly = _subparser('qpoly', "Q_N from cycle families and from det(Id - B(t))")
_qpoly.add_argument('network', help="network file or -")

for _name, _symbol in (('plee', "Q^(r), products of r distinct roots"),
                       ('pleh', "Q^<r>, products of r roots with repetition")):
    _sub = _subparser(_name, _symbol)
    _sub.add_argument('network', help="network file or -")
    _sub.add_argument('-r', type=int, required=True, help="number of factors")

_paths = _subparser('paths', "LGV sequence f(l) = det N(u, v + l g)")
_endpoint_options(_paths)

_verify = _subparser('verify', "check that a recurrence annihilates an LGV sequence")
_endpoint_options(_verify)
_verify.add_argument('--recurrence', choices=("q", "plee", "pleh"),
                     help="Q_N, Q^(r) (default) or Q^<r>, r the number of sources")
_verify.add_argument('--poly', help="explicit polynomial in t to test instead")
_verify.add_argument('--max-prefix', dest='max_prefix', type=int,
                     help="leading exceptions allowed, the degree by default")
_verify.add_argument('--numeric', action='store_true', default=None,
                     help="check at a random integer point")
_verify.add_argument('--seed', type=int)

_minimal = _subparser('minimal', "minimal recurrence at random integer points")
_endpoint_options(_minimal)
_minimal.add_argument('--points', type=int, help="number of substitution points")
_minimal.add_argument('--seed', type=int)
_minimal.add_argument('--drop', type=int, help="leading terms to ignore")

_family = _subparser('family', "network of an application in JSON")
_family.add_argument('kind', choices=("schur", "lozenge", "domino"))
_family.add_argument('-n', type=int, help="rows (schur) or half period (domino)")
_family.add_argument('-m', type=int, help="period (schur) or strip height")
_family.add_argument('--weights', help="YAML map 'p,q': monomial of domino lattice point weights")

_oracle = _subparser('oracle', "brute force enumeration against the LGV determinant")
_oracle.add_argument('kind', choices=("schur", "rpp", "lozenge", "domino"),
                     help="rpp and lozenge both name the reverse plane partitions")
_oracle.add_argument('--lam', help="partition for schur, e.g. 1,0")
for _flag in ('n', 'm', 'a', 'b', 'c', 'd', 'r', 'i', 'j'):
    _oracle.add_argument(f'-{_flag}', type=int)
_oracle.add_argument('--l0', type=int, help="radius offset of the domino regions")
_oracle.add_argument('--boundary', choices=("omit", "normalized"))
_oracle.add_argument('--start', type=int, help="first l")
_oracle.add_argument('-L', '--length', type=int, help="number of terms")

_conjecture = _subparser('conjecture', "evidence for the positivity conjectures")
_conjecture.add_argument('kind', choices=("polya", "roots", "tp", "minimal",
                                          "plee_general"))
_conjecture.add_argument('network', help="network file or -")
_conjecture.add_argument('--trials', type=int)
_conjecture.add_argument('--seed', type=int)
_conjecture.add_argument('--max-minor', dest='max_minor', type=int)
_conjecture.add_argument('-r', type=int)
_conjecture.add_argument('--allow-disconnected', dest='allow_disconnected',
                         action='store_true', default=None)

_run = _subparser('run', "run the workflow described in a YAML file")
_run.add_argument('-i', dest='input', required=True, help="Input file in YAML format")


dict_workflows = {'qpoly': workflow_qpoly,
                  'plee': workflow_plee,
                  'pleh': workflow_pleh,
                  'paths': workflow_paths,
                  'verify': workflow_verify,
                  'minimal': workflow_minimal,
                  'family': workflow_family,
                  'oracle': workflow_oracle,
                  'conjecture': workflow_conjecture}

USAGE_ERRORS = (SchemaError, ValueError, OSError, yaml.YAMLError)


def read_cmd_line(argv: List[str] = None) -> dict:
    """
    Options given on the command line, without the ones left unset so
    that the schema defaults apply.
    """
    args = parser.parse_args(argv)
    return {k: v for k, v in vars(args).items() if v is not None}


def _configure(options: dict):
    name = options.pop('workflow')
    if name != 'run':
        return validate_input(options, name)
    config = process_input(options.pop('input'))
    overrides = {k: v for k, v in options.items() if k in ('json', 'log_file', 'threads')}
    return validate_input(dict(config, **overrides), config.workflow)


def run(argv: List[str] = None, stdin: TextIO = None, stdout: TextIO = None,
        stderr: TextIO = None) -> int:
    """
    Execute a command line and return its exit status.

    :param argv: arguments without the program name, ``sys.argv[1:]`` by default
    :param stdin: stream read by networks given as ``-``
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        options = read_cmd_line(argv)
    except SystemExit as e:
        return e.code

    try:
        config = _configure(options)
    except USAGE_ERRORS as e:
        print(f"cylnet: error: {e}", file=stderr)
        return 2
    config['stdin'] = sys.stdin if stdin is None else stdin

    with initialize(config):
        try:
            result: WorkflowResult = dict_workflows[config.workflow](config)
        except USAGE_ERRORS as e:
            logger.debug("invalid input", exc_info=True)
            print(f"cylnet: error: {e}", file=stderr)
            return 2
        except (RuntimeError, ZeroDivisionError) as e:
            logger.debug("computation failed", exc_info=True)
            print(f"cylnet: {type(e).__name__}: {e}", file=stderr)
            return 1

    if config.json:
        print(json.dumps(result.data, indent=2, sort_keys=True), file=stdout)
    else:
        print(result.text, file=stdout)
    return result.status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
