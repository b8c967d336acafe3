"""
Linear recurrences of sequences: annihilation checks against a given
polynomial, extension of a recurrence, and the minimal recurrence found
by Berlekamp-Massey over the rationals.

A polynomial ``Q = sum_k q_k t^k`` annihilates ``f`` from ``n0`` on when
``sum_k q_k f(n + k) = 0`` for all ``n >= n0``.
"""

__all__ = ['annihilates', 'berlekamp_massey', 'estimate_minimal', 'extend',
           'minimal_recurrence', 'random_point', 'rational_poly']

from cylnet.algebra import (MPoly, TPoly, as_fraction)
from cylnet.common import (DEFAULTS, Inconclusive, RecurrenceReport, SequenceF,
                           Unstable)
from cylnet.network.quotient import specialize
from cylnet.paths.lgv import lgv_sequence
from cylnet.schedule.components import parallel_map
from fractions import Fraction
from functools import partial
from typing import (Dict, List, Mapping, Sequence, Union)

import logging
import numpy as np
import sympy as sp

# Starting logger
logger = logging.getLogger(__name__)

T = sp.Symbol('t')

Recurrence = Union[TPoly, sp.Poly, Sequence]


def ascending_coefficients(q: Recurrence) -> List:
    """Ascending coefficients of a TPoly, a sympy Poly or a plain list"""
    if isinstance(q, TPoly):
        return q.ascending_coefficients()
    if isinstance(q, sp.Poly):
        return [Fraction(int(c.p), int(c.q)) for c in reversed(q.all_coeffs())]
    return list(q)


def _values(f) -> List:
    return list(f.values) if isinstance(f, SequenceF) else list(f)


def _start(f) -> int:
    return f.meta.get("start", 0) if isinstance(f, SequenceF) else 0


def _evaluate(x, point: Mapping[str, int]):
    return x.evaluate(point) if isinstance(x, MPoly) else Fraction(x)


def annihilates(q: Recurrence, f, max_prefix: int = None, min_trailing: int = 2,
                point: Mapping[str, int] = None) -> RecurrenceReport:
    """
    Check whether `q` annihilates the sequence `f` for all but finitely
    many indices.

    :param q: recurrence polynomial
    :param f: :class:`SequenceF` or list of values
    :param max_prefix: largest number of leading exceptions allowed,
        the degree of `q` by default
    :param min_trailing: zero residuals needed after the exceptions
    :param point: evaluate coefficients and values at this point first
    :returns: report with the residuals and the first valid index
    :raises Inconclusive: fewer than ``deg q + 2`` terms
    """
    coeffs = ascending_coefficients(q)
    values = _values(f)
    if point is not None:
        coeffs = [_evaluate(c, point) for c in coeffs]
        values = [_evaluate(v, point) for v in values]
    elif any(isinstance(c, Fraction) for c in coeffs):
        values = [as_fraction(v) for v in values]
    d = len(coeffs) - 1
    if len(values) < d + 2:
        raise Inconclusive(f"{len(values)} terms cannot test a recurrence of degree {d}")
    max_prefix = d if max_prefix is None else max_prefix

    residuals = []
    for n in range(len(values) - d):
        acc = 0
        for k, c in enumerate(coeffs):
            if c and values[n + k]:
                acc = acc + c * values[n + k]
        residuals.append(acc)

    n0 = len(residuals)
    while n0 > 0 and residuals[n0 - 1] == 0:
        n0 -= 1
    trailing = len(residuals) - n0
    holds = trailing >= min_trailing and n0 <= max_prefix
    first = _start(f) + n0 if trailing else None
    logger.debug(f"recurrence of degree {d}: exceptions {n0}, zero residuals {trailing}")
    return RecurrenceReport(holds, first, residuals)


def extend(q: Recurrence, init: Sequence, length: int) -> List[Fraction]:
    """
    Continue `init` (``deg q`` terms) to `length` terms with the
    recurrence given by `q` with rational coefficients.
    """
    coeffs = [as_fraction(c) for c in ascending_coefficients(q)]
    d = len(coeffs) - 1
    if len(init) != d:
        raise ValueError(f"a recurrence of degree {d} needs {d} initial terms")
    lead = coeffs[-1]
    if not lead:
        raise ValueError("the leading coefficient vanishes")
    values = [Fraction(as_fraction(x)) for x in init]
    while len(values) < length:
        n = len(values) - d
        values.append(-sum(coeffs[k] * values[n + k] for k in range(d)) / lead)
    return values[:length]


def berlekamp_massey(values: Sequence[Fraction]) -> List[Fraction]:
    """
    Shortest linear recurrence of a rational sequence. Returns the
    ascending coefficients ``[c_L, ..., c_1, 1]`` of its monic
    characteristic polynomial.
    """
    s = [Fraction(x) for x in values]
    conn, prev = [Fraction(1)], [Fraction(1)]
    length, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        top = min(length, len(conn) - 1)
        delta = s[n] + sum(conn[i] * s[n - i] for i in range(1, top + 1))
        if delta == 0:
            m += 1
            continue
        coef = delta / b
        update = conn + [Fraction(0)] * max(0, len(prev) + m - len(conn))
        for i, x in enumerate(prev):
            update[i + m] -= coef * x
        if 2 * length <= n:
            prev, b = conn, delta
            length = n + 1 - length
            m = 1
        else:
            m += 1
        conn = update
    conn = conn + [Fraction(0)] * max(0, length + 1 - len(conn))
    return list(reversed(conn[:length + 1]))


def rational_poly(coeffs: Sequence[Fraction]) -> sp.Poly:
    """sympy polynomial in ``t`` over QQ from ascending rational coefficients"""
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                   T, domain=sp.QQ)


def minimal_recurrence(f, drop: int = 0, check: int = 2) -> sp.Poly:
    """
    Minimal polynomial over QQ annihilating ``f`` after its first `drop`
    terms.

    :param check: the estimate is repeated without the last `check` terms
    :raises Unstable: too few terms, or the two estimates differ
    """
    tail = [as_fraction(x) for x in _values(f)[drop:]]
    full = berlekamp_massey(tail)
    degree = len(full) - 1
    if 2 * degree + check > len(tail):
        raise Unstable(f"{len(tail)} terms cannot certify a recurrence of degree {degree}")
    if check and berlekamp_massey(tail[:-check]) != full:
        raise Unstable("the minimal recurrence changes with the window size")
    return rational_poly(full)


def random_point(variables: Sequence[str], rng: np.random.Generator,
                 value_range=None) -> Dict[str, int]:
    """Integer substitution point with values in `value_range` (inclusive)"""
    low, high = DEFAULTS.substitution_range if value_range is None else value_range
    return {v: int(rng.integers(low, high, endpoint=True)) for v in sorted(variables)}


def _minimal_at(net, sources, sinks, length, drop, point):
    sequence = lgv_sequence(specialize(net, point), sources, sinks, length, n_threads=0)
    return minimal_recurrence(sequence, drop)


def estimate_minimal(net, sources, sinks, length: int, points: int = None,
                     seed: int = 0, drop: int = 0) -> List:
    """
    Minimal recurrence of the LGV sequence of `net` at `points` random
    integer substitutions.

    :returns: list of ``(point, poly)``
    :raises Unstable: the degree differs between substitution points
    """
    points = DEFAULTS.substitution_points if points is None else points
    rng = np.random.default_rng(seed)
    samples = [random_point(net.variables, rng) for _ in range(points)]
    polys = parallel_map(partial(_minimal_at, net, sources, sinks, length, drop),
                         samples)
    degrees = {p.degree() for p in polys}
    if len(degrees) > 1:
        raise Unstable(f"minimal degree differs between substitution points: {degrees}")
    return list(zip(samples, polys))
