"""Laurent polynomials in the distinguished variable ``t`` over :class:`MPoly`."""

__all__ = ['T_VARIABLE', 'TPoly']

from .mpoly import MPoly
from fractions import Fraction
from typing import (Dict, List, Mapping, Union)

import logging

# Starting logger
logger = logging.getLogger(__name__)

T_VARIABLE = 't'


class TPoly:
    """
    Map from powers of ``t`` to nonzero :class:`MPoly` coefficients.
    Negative powers are allowed.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Mapping[int, Union[MPoly, int]] = None):
        self._coeffs: Dict[int, MPoly] = {}
        for k, c in (coeffs or {}).items():
            c = MPoly.coerce(c)
            if c:
                self._coeffs[k] = c

    @classmethod
    def constant(cls, c: Union[MPoly, int]) -> 'TPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c: Union[MPoly, int] = 1) -> 'TPoly':
        return cls({k: c})

    @classmethod
    def from_coefficients(cls, coeffs: List[Union[MPoly, int]]) -> 'TPoly':
        """Build from ascending coefficients ``[c_0, c_1, ...]``"""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def from_mpoly(cls, p: MPoly, var: str = T_VARIABLE) -> 'TPoly':
        """Collect the powers of `var` in `p`"""
        coeffs: Dict[int, Dict] = {}
        for mono, c in p.items():
            exps = dict(mono)
            k = exps.pop(var, 0)
            rest = tuple(sorted(exps.items()))
            coeffs.setdefault(k, {})[rest] = c
        return cls({k: MPoly(terms) for k, terms in coeffs.items()})

    @classmethod
    def coerce(cls, other) -> 'TPoly':
        if isinstance(other, TPoly):
            return other
        return cls.constant(MPoly.coerce(other))

    # ================> Inspection <================
    def __getitem__(self, k: int) -> MPoly:
        return self._coeffs.get(k, MPoly())

    def items(self):
        return sorted(self._coeffs.items())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def low_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return min(self._coeffs)

    @property
    def leading_coefficient(self) -> MPoly:
        return self._coeffs[self.degree]

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self.leading_coefficient == 1

    @property
    def is_polynomial(self) -> bool:
        return not self._coeffs or self.low_degree >= 0

    @property
    def variables(self):
        return frozenset().union(*(c.variables for c in self._coeffs.values()))

    def ascending_coefficients(self) -> List[MPoly]:
        """``[c_0, ..., c_deg]`` of a polynomial in ``t``"""
        if not self.is_polynomial:
            raise ValueError(f"{self} has negative powers of t")
        if not self._coeffs:
            return []
        return [self[k] for k in range(self.degree + 1)]

    # ================> Ring operations <================
    def __add__(self, other) -> 'TPoly':
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        coeffs = dict(self._coeffs)
        for k, c in other._coeffs.items():
            coeffs[k] = coeffs.get(k, MPoly()) + c
        return TPoly(coeffs)

    __radd__ = __add__

    def __neg__(self) -> 'TPoly':
        return TPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other) -> 'TPoly':
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'TPoly':
        return (-self) + other

    def __mul__(self, other) -> 'TPoly':
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        coeffs: Dict[int, MPoly] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                coeffs[k1 + k2] = coeffs.get(k1 + k2, MPoly()) + c1 * c2
        return TPoly(coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'TPoly':
        if n < 0:
            raise ValueError("negative powers of a TPoly are not supported")
        result = TPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    # ================> Transformations <================
    def shift(self, k: int) -> 'TPoly':
        """Multiply by ``t^k``"""
        return TPoly({j + k: c for j, c in self._coeffs.items()})

    def strip_t_power(self) -> 'TPoly':
        """Divide by the largest power of ``t`` dividing the polynomial"""
        if not self._coeffs:
            return self
        return self.shift(-self.low_degree)

    def reciprocal(self, d: int = None) -> 'TPoly':
        """``t^d Q(1/t)``, with ``d`` the degree by default"""
        if d is None:
            d = self.degree
        return TPoly({d - k: c for k, c in self._coeffs.items()})

    def scale_variable(self, c: MPoly) -> 'TPoly':
        """``Q(c t)``; `c` must be a unit when negative powers occur"""
        c = MPoly.coerce(c)
        return TPoly({k: a * c ** k for k, a in self._coeffs.items()})

    def map_coefficients(self, func) -> 'TPoly':
        return TPoly({k: func(c) for k, c in self._coeffs.items()})

    def substitute(self, mapping) -> 'TPoly':
        return self.map_coefficients(lambda c: c.substitute(mapping))

    def evaluate_coefficients(self, point) -> List[Fraction]:
        """Ascending rational coefficients at `point`"""
        return [c.evaluate(point) for c in self.ascending_coefficients()]

    def to_mpoly(self, var: str = T_VARIABLE) -> MPoly:
        result = MPoly()
        for k, c in self._coeffs.items():
            tk = MPoly({((var, k),): 1}) if k else MPoly.constant(1)
            result = result + c * tk
        return result

    # ================> Printing <================
    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        chunks = []
        for k, c in sorted(self._coeffs.items(), reverse=True):
            sign, body = _format_t_term(k, c)
            if not chunks:
                chunks.append("-" + body if sign < 0 else body)
            else:
                chunks.append((" - " if sign < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"


def _t_power(k: int) -> str:
    if k == 1:
        return T_VARIABLE
    return f"{T_VARIABLE}^{k}"


def _format_t_term(k: int, c: MPoly):
    """Sign and unsigned body of ``c * t^k``"""
    _, lead = c.sorted_terms()[0]
    sign = -1 if lead < 0 else 1
    c = c if sign > 0 else -c
    if k == 0:
        return sign, (f"({c})" if len(c) > 1 else str(c))
    if c == 1:
        return sign, _t_power(k)
    if c.is_monomial:
        return sign, f"{c}*{_t_power(k)}"
    return sign, f"({c})*{_t_power(k)}"
