"""Rational functions whose denominators are products of ``(uv)^m - 1``.

A :class:`StringyRational` is never reduced to lowest terms. Two values are
compared by cross-multiplication, which keeps every operation inside exact
polynomial arithmetic.
"""

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import sympy

from stringye.algebra.bipoly import BiPoly, Monomial, Scalar
from stringye.errors import NonExactDivision, NotAPowerSeries, PoleAtOne

logger = logging.getLogger(__name__)

_T = sympy.Symbol("t")


@lru_cache(maxsize=512)
def expand_denominator(factors: Tuple[int, ...]) -> BiPoly:
    """``prod_m ((uv)^m - 1)`` as a polynomial."""
    product = BiPoly.constant(1)
    for m in factors:
        product = product * (BiPoly.q_power(m) - 1)
    return product


def _multiset_difference(larger: Tuple[int, ...], smaller: Tuple[int, ...]) -> Tuple[int, ...]:
    remaining = Counter(larger)
    remaining.subtract(Counter(smaller))
    return tuple(sorted(remaining.elements()))


def _common_denominator(first: Tuple[int, ...], second: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted((Counter(first) | Counter(second)).elements()))


class StringyRational:
    """``numerator * (uv)^q_shift / prod_m ((uv)^m - 1)``.

    Attributes:
        numerator (BiPoly): the polynomial numerator.
        denominator (tuple[int, ...]): sorted multiset of the exponents ``m >= 1``.
        q_shift (int): exponent of the global factor ``(uv)^q_shift``.
    """

    __slots__ = ("numerator", "denominator", "q_shift")

    def __init__(
        self,
        numerator: Union[BiPoly, Scalar],
        denominator: Iterable[int] = (),
        q_shift: int = 0,
    ) -> None:
        if isinstance(numerator, (int, Fraction)):
            numerator = BiPoly.constant(numerator)
        factors = tuple(sorted(int(m) for m in denominator))
        if any(m < 1 for m in factors):
            raise ValueError(f"denominator factors must be positive, got {factors}")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", factors)
        object.__setattr__(self, "q_shift", int(q_shift))

    def __setattr__(self, name, value):
        raise AttributeError("StringyRational is immutable")

    @classmethod
    def from_laurent(
        cls,
        terms: Mapping[Monomial, Scalar],
        denominator: Iterable[int] = (),
        q_shift: int = 0,
    ) -> "StringyRational":
        """Build a value from a numerator that may carry negative exponents.

        Negative exponents are absorbed into ``q_shift``.
        """
        low = min((min(i, j) for i, j in terms), default=0)
        low = min(low, 0)
        numerator = BiPoly({(i - low, j - low): c for (i, j), c in terms.items()})
        return cls(numerator, denominator, q_shift + low)

    @classmethod
    def coerce(cls, value: Union["StringyRational", BiPoly, Scalar]) -> "StringyRational":
        if isinstance(value, StringyRational):
            return value
        if isinstance(value, (BiPoly, int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to StringyRational")

    def expanded_denominator(self) -> BiPoly:
        return expand_denominator(self.denominator)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def _over(self, denominator: Tuple[int, ...], q_shift: int) -> BiPoly:
        """Numerator of ``self`` rewritten over a larger denominator and smaller shift."""
        extra = _multiset_difference(denominator, self.denominator)
        return (self.numerator * expand_denominator(extra)).shift(self.q_shift - q_shift)

    def __add__(self, other: Union["StringyRational", BiPoly, Scalar]) -> "StringyRational":
        try:
            other = StringyRational.coerce(other)
        except TypeError:
            return NotImplemented
        denominator = _common_denominator(self.denominator, other.denominator)
        q_shift = min(self.q_shift, other.q_shift)
        return StringyRational(self._over(denominator, q_shift) + other._over(denominator, q_shift), denominator, q_shift)

    __radd__ = __add__

    def __neg__(self) -> "StringyRational":
        return StringyRational(-self.numerator, self.denominator, self.q_shift)

    def __sub__(self, other: Union["StringyRational", BiPoly, Scalar]) -> "StringyRational":
        try:
            other = StringyRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[BiPoly, Scalar]) -> "StringyRational":
        return StringyRational.coerce(other) - self

    def __mul__(self, other: Union["StringyRational", BiPoly, Scalar]) -> "StringyRational":
        try:
            other = StringyRational.coerce(other)
        except TypeError:
            return NotImplemented
        return StringyRational(
            self.numerator * other.numerator,
            self.denominator + other.denominator,
            self.q_shift + other.q_shift,
        )

    __rmul__ = __mul__

    def cross_equal(self, other: Union["StringyRational", BiPoly, Scalar]) -> bool:
        other = StringyRational.coerce(other)
        q_shift = min(self.q_shift, other.q_shift)
        left = self.numerator.shift(self.q_shift - q_shift) * other.expanded_denominator()
        right = other.numerator.shift(other.q_shift - q_shift) * self.expanded_denominator()
        return left == right

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (StringyRational, BiPoly, int, Fraction)):
            return NotImplemented
        return self.cross_equal(other)

    __hash__ = None

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        u, v = Fraction(u), Fraction(v)
        q = u * v
        denominator = Fraction(1)
        for m in self.denominator:
            denominator *= q**m - 1
        if not denominator or (self.q_shift < 0 and not q):
            raise ZeroDivisionError(f"{self} has a pole at u={u}, v={v}")
        return self.numerator.evaluate(u, v) * q**self.q_shift / denominator

    def series_coefficients(self, max_total_degree: int) -> Dict[Monomial, Fraction]:
        """Coefficients ``b_{i,j}``, ``i + j <= max_total_degree``, of the power-series expansion.

        Every factor ``1/((uv)^m - 1)`` is expanded as ``-sum_k (uv)^(mk)`` and
        truncated before it is multiplied in.

        Raises:
            NotAPowerSeries: when a negative exponent survives the expansion.
        """
        if max_total_degree < 0:
            raise ValueError("max_total_degree must be nonnegative")
        bound = max_total_degree - 2 * self.q_shift
        if bound < 0:
            return {}
        product = self.numerator.truncate(bound)
        if len(self.denominator) % 2:
            product = -product
        for m in self.denominator:
            geometric = BiPoly({(m * k, m * k): 1 for k in range(bound // (2 * m) + 1)})
            product = (product * geometric).truncate(bound)
        coefficients: Dict[Monomial, Fraction] = {}
        for (i, j), c in product.terms.items():
            i, j = i + self.q_shift, j + self.q_shift
            if i < 0 or j < 0:
                raise NotAPowerSeries(f"{self} has a term u^{i}*v^{j} with a negative exponent")
            if i + j <= max_total_degree:
                coefficients[(i, j)] = c
        return coefficients

    def dual_transform(self, dimension: int) -> "StringyRational":
        """``(uv)^dimension * f(1/u, 1/v)`` in closed form."""
        if self.numerator.is_zero():
            return StringyRational(BiPoly.zero(), self.denominator)
        top = self.numerator.max_exponent()
        numerator = self.numerator.reversed(top)
        if len(self.denominator) % 2:
            numerator = -numerator
        q_shift = dimension - self.q_shift + sum(self.denominator) - top
        return StringyRational(numerator, self.denominator, q_shift)

    def limit_at_one(self) -> Fraction:
        """Value of the limit ``u, v -> 1``.

        Raises:
            PoleAtOne: when the reduced denominator vanishes at ``u = v = 1``.
        """
        numerator = sum(
            (sympy.Rational(c.numerator, c.denominator) * _T**degree for degree, c in self.numerator.diagonal_coefficients().items()),
            sympy.Integer(0),
        )
        denominator = sympy.Integer(1)
        for m in self.denominator:
            denominator *= _T ** (2 * m) - 1
        reduced = sympy.cancel(numerator * _T ** (2 * self.q_shift) / denominator)
        top, bottom = sympy.fraction(reduced)
        at_one = bottom.subs(_T, 1)
        if at_one == 0:
            raise PoleAtOne(f"{self} has a pole at u = v = 1")
        value = sympy.Rational(top.subs(_T, 1)) / sympy.Rational(at_one)
        logger.debug("limit at one of %s is %s", self, value)
        return Fraction(int(value.p), int(value.q))

    def as_polynomial(self) -> Optional[BiPoly]:
        """The value as a polynomial, or ``None`` when it is not one."""
        numerator = self.numerator.shift(max(self.q_shift, 0))
        divisor = self.expanded_denominator().shift(max(-self.q_shift, 0))
        try:
            return numerator.exact_divide(divisor)
        except NonExactDivision:
            return None

    def stringy_hodge_numbers(self) -> Optional[Dict[Monomial, int]]:
        """``h^{p,q} = (-1)^(p+q) b_{p,q}`` for a polynomial value, else ``None``."""
        polynomial = self.as_polynomial()
        if polynomial is None:
            return None
        numbers: Dict[Monomial, int] = {}
        for (p, q), c in polynomial.terms.items():
            if c.denominator != 1:
                return None
            numbers[(p, q)] = (-1) ** (p + q) * c.numerator
        return numbers

    def __str__(self) -> str:
        from stringye.algebra.text import format_stringy_rational

        return format_stringy_rational(self)

    def __repr__(self) -> str:
        return f"StringyRational({self})"


def cross_equal(f: StringyRational, g: StringyRational) -> bool:
    return StringyRational.coerce(f).cross_equal(g)


def series_coefficients(f: StringyRational, max_total_degree: int) -> Dict[Monomial, Fraction]:
    return StringyRational.coerce(f).series_coefficients(max_total_degree)


def dual_transform(f: StringyRational, dimension: int) -> StringyRational:
    return StringyRational.coerce(f).dual_transform(dimension)


def limit_at_one(f: StringyRational) -> Fraction:
    return StringyRational.coerce(f).limit_at_one()
