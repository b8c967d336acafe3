"""
Sparse multivariate Laurent polynomials with integer coefficients.

A monomial is a sorted tuple of ``(variable, exponent)`` pairs with
nonzero exponents, the polynomial is a map from monomials to nonzero
integers. Instances are immutable and hashable.
"""

__all__ = ['MPoly', 'Monomial', 'as_fraction', 'check_variable_name', 'mono_mul']

from cylnet.common import (DivByZero, NotDivisible, ParseError)
from fractions import Fraction
from numbers import Rational
from typing import (Dict, FrozenSet, Iterator, List, Mapping, Tuple, Union)

import logging
import re

# Starting logger
logger = logging.getLogger(__name__)

Monomial = Tuple[Tuple[str, int], ...]

_VARIABLE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


def check_variable_name(name: str) -> str:
    """Return `name` if it is a valid variable identifier"""
    if not isinstance(name, str) or _VARIABLE.match(name) is None:
        raise ParseError(f"invalid variable name: {name!r}")
    return name


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    """Product of two monomials"""
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for var, e in m2:
        s = exps.get(var, 0) + e
        if s:
            exps[var] = s
        else:
            del exps[var]
    return tuple(sorted(exps.items()))


def mono_pow(m: Monomial, n: int) -> Monomial:
    if n == 0:
        return ()
    return tuple((var, e * n) for var, e in m)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class MPoly:
    """
    Element of Z[x_1^{+-1}, ..., x_k^{+-1}].

    Arithmetic mixes freely with Python integers. Division is exact
    and raises :class:`NotDivisible` when the quotient is not a
    Laurent polynomial with integer coefficients.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[Monomial, int] = None):
        self._terms = {m: c for m, c in terms.items() if c} if terms else {}
        self._hash = None

    # ================> Constructors <================
    @classmethod
    def constant(cls, c: int) -> 'MPoly':
        if not isinstance(c, int):
            raise TypeError(f"integer constant expected, got: {c!r}")
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> 'MPoly':
        return cls({((check_variable_name(name), 1),): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> 'MPoly':
        mono = tuple(sorted(
            (check_variable_name(v), e) for v, e in exponents.items() if e))
        return cls({mono: coeff})

    @classmethod
    def coerce(cls, other) -> 'MPoly':
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"cannot interpret {other!r} as a polynomial")

    # ================> Inspection <================
    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def constant_term(self) -> int:
        return self._terms.get((), 0)

    @property
    def variables(self) -> FrozenSet[str]:
        return frozenset(v for m in self._terms for v, _ in m)

    @property
    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(mono_degree(m) for m in self._terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # ================> Ring operations <================
    def __add__(self, other) -> 'MPoly':
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return MPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> 'MPoly':
        return MPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> 'MPoly':
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'MPoly':
        return (-self) + other

    def __mul__(self, other) -> 'MPoly':
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return MPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'MPoly':
        if not isinstance(n, int):
            raise TypeError(f"integer exponent expected, got: {n!r}")
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_monomial:
            (m, c), = self._terms.items()
            return MPoly({mono_pow(m, n): c ** n})
        result, base = MPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> 'MPoly':
        """Inverse of a unit, i.e. a monomial with coefficient +-1"""
        if not self._terms:
            raise DivByZero("inverse of the zero polynomial")
        if not self.is_monomial:
            raise NotDivisible(f"{self} is not a unit")
        (m, c), = self._terms.items()
        if c not in (1, -1):
            raise NotDivisible(f"{self} is not a unit over the integers")
        return MPoly({mono_pow(m, -1): c})

    def divide(self, other) -> 'MPoly':
        """
        Exact quotient ``self / other``.

        Both operands are cleared of their monomial content (which also
        removes negative exponents) and the resulting polynomials are
        divided with respect to the lexicographic order.

        :raises DivByZero: if `other` is zero.
        :raises NotDivisible: if the quotient is not a Laurent polynomial.
        """
        other = MPoly.coerce(other)
        if not other:
            raise DivByZero(f"division of {self} by zero")
        if not self:
            return MPoly()
        if other.is_monomial:
            (m, c), = other._terms.items()
            if any(a % c for a in self._terms.values()):
                raise NotDivisible(f"{self} is not divisible by {other}")
            inv = mono_pow(m, -1)
            return MPoly({mono_mul(k, inv): a // c for k, a in self._terms.items()})

        shift_a, shift_b = self._content(), other._content()
        variables = sorted(self.variables | other.variables)
        quot = _polynomial_division(
            _dense(self, shift_a, variables), _dense(other, shift_b, variables),
            lambda: f"{self} is not divisible by {other}")
        shift = mono_mul(shift_a, mono_pow(shift_b, -1))
        return MPoly({
            mono_mul(_sparse(e, variables), shift): c for e, c in quot.items()})

    __truediv__ = divide

    def _content(self) -> Monomial:
        """Largest monomial (possibly Laurent) dividing every term"""
        monos = list(self._terms)
        exps: Dict[str, int] = {}
        for var in self.variables:
            exps[var] = min(dict(m).get(var, 0) for m in monos)
        return tuple(sorted((v, e) for v, e in exps.items() if e))

    # ================> Comparison <================
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ================> Evaluation <================
    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Fraction:
        """
        Value of the polynomial at a rational `point`, a map from
        variable names to numbers that must cover every variable.
        """
        total = Fraction(0)
        for m, c in self._terms.items():
            value = Fraction(c)
            for var, e in m:
                if var not in point:
                    raise ValueError(f"no value given for variable {var}")
                x = Fraction(point[var])
                if not x and e < 0:
                    raise DivByZero(f"{var} = 0 in a negative power")
                value *= x ** e
            total += value
        return total

    def substitute(self, mapping: Mapping[str, Union[int, 'MPoly']]) -> 'MPoly':
        """
        Replace the variables in `mapping` by integers or polynomials.
        Variables in negative powers must be mapped to units.
        """
        cache: Dict[Tuple[str, int], MPoly] = {}
        result = MPoly()
        for m, c in self._terms.items():
            term = MPoly.constant(c)
            for var, e in m:
                if var in mapping:
                    key = (var, e)
                    if key not in cache:
                        cache[key] = MPoly.coerce(mapping[var]) ** e
                    term = term * cache[key]
                else:
                    term = term * MPoly({((var, e),): 1})
            result = result + term
        return result

    # ================> Printing <================
    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """Terms by decreasing total degree, ties in graded lex order"""
        variables = sorted(self.variables)

        def key(item):
            exps = dict(item[0])
            vector = tuple(-exps.get(v, 0) for v in variables)
            return (-mono_degree(item[0]), vector)

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            body = _format_term(m, abs(c))
            if i == 0:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def _format_term(m: Monomial, c: int) -> str:
    if not m:
        return str(c)
    factors = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
    return factors if c == 1 else f"{c}*{factors}"


def _dense(p: MPoly, shift: Monomial, variables: List[str]) -> Dict[Tuple[int, ...], int]:
    inv = mono_pow(shift, -1)
    result = {}
    for m, c in p.items():
        exps = dict(mono_mul(m, inv))
        result[tuple(exps.get(v, 0) for v in variables)] = c
    return result


def _sparse(exps: Tuple[int, ...], variables: List[str]) -> Monomial:
    return tuple((v, e) for v, e in zip(variables, exps) if e)


def _polynomial_division(num: Dict, den: Dict, message) -> Dict:
    """Exact division of polynomials with nonnegative exponents"""
    lead_den = max(den)
    coeff_den = den[lead_den]
    rem = dict(num)
    quot: Dict[Tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        diff = tuple(x - y for x, y in zip(lead, lead_den))
        if any(d < 0 for d in diff) or rem[lead] % coeff_den:
            raise NotDivisible(message())
        c = rem[lead] // coeff_den
        quot[diff] = c
        for mono, coeff in den.items():
            key = tuple(x + y for x, y in zip(mono, diff))
            value = rem.get(key, 0) - c * coeff
            if value:
                rem[key] = value
            else:
                rem.pop(key, None)
    return quot


def as_fraction(x) -> Fraction:
    """Rational value of a constant polynomial or a number"""
    if isinstance(x, MPoly):
        if not x.is_constant:
            raise ValueError(f"{x} is not a constant")
        return Fraction(x.constant_term)
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to a rational number")
