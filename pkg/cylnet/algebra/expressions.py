"""
Parser for the weight expression grammar::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := integer | variable ['^' ['-'] integer] | '(' expr ')'

Variables match ``[a-zA-Z][a-zA-Z0-9_]*``; exponents are only allowed on
variables.
"""

__all__ = ['parse_expr', 'parse_tpoly']

from .mpoly import MPoly
from .tpoly import (T_VARIABLE, TPoly)
from cylnet.common import ParseError
from functools import reduce
from typing import Iterable

import logging
import operator
import pyparsing as pa

# Starting logger
logger = logging.getLogger(__name__)


def _variable_action(tokens):
    name = tokens[0]
    exponent = int(tokens[1]) if len(tokens) > 1 else 1
    return MPoly.monomial({name: exponent})


def _term_action(tokens):
    return reduce(operator.mul, tokens)


def _expr_action(tokens):
    items = list(tokens)
    sign = 1
    if isinstance(items[0], str):
        sign = -1 if items.pop(0) == '-' else 1
    acc = items[0] if sign > 0 else -items[0]
    for op, value in zip(items[1::2], items[2::2]):
        acc = acc + value if op == '+' else acc - value
    return acc


def _create_grammar():
    expr = pa.Forward()
    integer = pa.Word(pa.nums).set_parse_action(lambda t: MPoly.constant(int(t[0])))
    identifier = pa.Regex(r"[a-zA-Z][a-zA-Z0-9_]*")
    exponent = pa.Suppress('^') + pa.Regex(r"-?[0-9]+")
    variable = (identifier + pa.Optional(exponent)).set_parse_action(_variable_action)
    group = pa.Suppress('(') + expr + pa.Suppress(')')
    factor = integer | variable | group
    term = (factor + pa.ZeroOrMore(pa.Suppress('*') + factor)).set_parse_action(
        _term_action)
    sign = pa.one_of('+ -')
    expr <<= (pa.Optional(sign) + term + pa.ZeroOrMore(sign + term)).set_parse_action(
        _expr_action)
    return expr + pa.StringEnd()


_GRAMMAR = _create_grammar()


def parse_expr(text: str, variables: Iterable[str] = None) -> MPoly:
    """
    Parse `text` into a :class:`MPoly`.

    :param text: expression in the weight grammar
    :param variables: if given, the only variables allowed
    :raises ParseError: on malformed input or undeclared variables
    """
    if not isinstance(text, str):
        raise ParseError(f"expression must be a string, got: {text!r}")
    try:
        poly = _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pa.ParseException as e:
        msg = f"Error parsing the expression: {text!r}\n{e}"
        raise ParseError(msg) from e
    if variables is not None:
        unknown = poly.variables - set(variables)
        if unknown:
            raise ParseError(
                f"undeclared variables {sorted(unknown)} in expression: {text!r}")
    return poly


def parse_tpoly(text: str) -> TPoly:
    """Parse a polynomial in ``t`` with polynomial coefficients"""
    return TPoly.from_mpoly(parse_expr(text), T_VARIABLE)
