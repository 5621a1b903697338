"""Sparse bivariate polynomials in ``u`` and ``v`` with exact rational coefficients."""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from stringye.errors import NonExactDivision

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]


def format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("u" if i == 1 else f"u^{i}")
    if j:
        parts.append("v" if j == 1 else f"v^{j}")
    return "*".join(parts) if parts else "1"


def _monomial_order(monomial: Monomial) -> Tuple[int, int]:
    # graded, then u-degree
    return (monomial[0] + monomial[1], monomial[0])


class BiPoly:
    """An immutable polynomial ``sum c_{i,j} u^i v^j``.

    Coefficients are stored as :class:`fractions.Fraction` and no stored
    coefficient is ever zero. Instances compare equal when their term maps
    agree, and they are hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None) -> None:
        cleaned: Dict[Monomial, Fraction] = {}
        for (i, j), coefficient in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"BiPoly exponents must be nonnegative, got ({i}, {j})")
            value = Fraction(coefficient)
            if value:
                key = (int(i), int(j))
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
                if not cleaned[key]:
                    del cleaned[key]
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "BiPoly":
        poly = cls.__new__(cls)
        poly._terms = {key: value for key, value in terms.items() if value}
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._wrap({})

    @classmethod
    def constant(cls, value: Scalar) -> "BiPoly":
        return cls._wrap({(0, 0): Fraction(value)})

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: Scalar = 1) -> "BiPoly":
        return cls({(i, j): coefficient})

    @classmethod
    def q_power(cls, m: int, coefficient: Scalar = 1) -> "BiPoly":
        """``coefficient * (uv)^m``."""
        return cls({(m, m): coefficient})

    @classmethod
    def u(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def v(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    @classmethod
    def q(cls) -> "BiPoly":
        return cls.monomial(1, 1)

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def sorted_terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in canonical order: total degree, then u-degree, both descending."""
        for monomial in sorted(self._terms, key=_monomial_order, reverse=True):
            yield monomial, self._terms[monomial]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=_monomial_order)

    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def max_exponent(self) -> int:
        return max((max(i, j) for i, j in self._terms), default=0)

    def is_q_polynomial(self) -> bool:
        return all(i == j for i, j in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(value: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return BiPoly.constant(value)
        raise TypeError(f"cannot combine BiPoly with {type(value).__name__}")

    def __add__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return BiPoly._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._wrap({monomial: -coefficient for monomial, coefficient in self._terms.items()})

    def __sub__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            factor = Fraction(other)
            return BiPoly._wrap({monomial: coefficient * factor for monomial, coefficient in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return BiPoly._wrap(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("BiPoly powers must be nonnegative")
        result = BiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, m: int) -> "BiPoly":
        """Multiply by ``(uv)^m`` for ``m >= 0``."""
        if m < 0:
            raise ValueError("use StringyRational for negative q-shifts")
        return BiPoly._wrap({(i + m, j + m): c for (i, j), c in self._terms.items()})

    def reversed(self, degree: int) -> "BiPoly":
        """``(uv)^degree * self(1/u, 1/v)``; requires ``degree >= max_exponent()``."""
        return BiPoly({(degree - i, degree - j): c for (i, j), c in self._terms.items()})

    def truncate(self, max_total_degree: int) -> "BiPoly":
        return BiPoly._wrap({(i, j): c for (i, j), c in self._terms.items() if i + j <= max_total_degree})

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        u, v = Fraction(u), Fraction(v)
        return sum((c * u**i * v**j for (i, j), c in self._terms.items()), Fraction(0))

    def diagonal_coefficients(self) -> Dict[int, Fraction]:
        """Coefficients of the univariate polynomial obtained from ``u = v = t``."""
        coefficients: Dict[int, Fraction] = {}
        for (i, j), c in self._terms.items():
            coefficients[i + j] = coefficients.get(i + j, Fraction(0)) + c
        return {degree: c for degree, c in coefficients.items() if c}

    def exact_divide(self, divisor: "BiPoly") -> "BiPoly":
        """Quotient of an exact division, graded order with u > v.

        Raises:
            NonExactDivision: when a nonzero remainder occurs.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        li, lj = divisor.leading_monomial()
        lead = divisor._terms[(li, lj)]
        quotient: Dict[Monomial, Fraction] = {}
        remainder = self
        while remainder:
            i, j = remainder.leading_monomial()
            if i < li or j < lj:
                raise NonExactDivision(f"{divisor} does not divide {self}")
            key = (i - li, j - lj)
            coefficient = remainder._terms[(i, j)] / lead
            quotient[key] = quotient.get(key, Fraction(0)) + coefficient
            remainder = remainder - BiPoly._wrap({key: coefficient}) * divisor
        return BiPoly._wrap(quotient)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), coefficient in self.sorted_terms():
            magnitude = abs(coefficient)
            if (i, j) == (0, 0):
                body = format_coefficient(magnitude)
            elif magnitude == 1:
                body = format_monomial(i, j)
            else:
                body = f"{format_coefficient(magnitude)}*{format_monomial(i, j)}"
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def exact_divide(numerator: BiPoly, divisor: BiPoly) -> BiPoly:
    return numerator.exact_divide(divisor)
