"""Laurent polynomials in the single variable ``q = uv``."""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Union

from stringye.algebra.bipoly import BiPoly, Scalar, format_coefficient


class QPoly:
    """Immutable Laurent polynomial ``sum c_m q^m`` with rational coefficients."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Optional[Mapping[int, Scalar]] = None) -> None:
        cleaned: Dict[int, Fraction] = {}
        for exponent, coefficient in (coefficients or {}).items():
            value = cleaned.get(int(exponent), Fraction(0)) + Fraction(coefficient)
            if value:
                cleaned[int(exponent)] = value
            else:
                cleaned.pop(int(exponent), None)
        self._coefficients = cleaned

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "QPoly":
        return cls({0: value})

    @classmethod
    def q_power(cls, m: int, coefficient: Scalar = 1) -> "QPoly":
        return cls({m: coefficient})

    @classmethod
    def geometric(cls, n: int) -> "QPoly":
        """``1 + q + ... + q^(n-1)``."""
        return cls({m: 1 for m in range(n)})

    @property
    def coefficients(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coefficients)

    def coefficient(self, m: int) -> Fraction:
        return self._coefficients.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coefficients

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def min_exponent(self) -> int:
        return min(self._coefficients, default=0)

    def degree(self) -> int:
        return max(self._coefficients, default=-1)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self._coefficients.values())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __add__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        merged = dict(self._coefficients)
        for m, c in other._coefficients.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return QPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({m: -c for m, c in self._coefficients.items()})

    def __sub__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QPoly":
        return QPoly.constant(other) - self

    def __mul__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            return QPoly({m: c * other for m, c in self._coefficients.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        product: Dict[int, Fraction] = {}
        for m1, c1 in self._coefficients.items():
            for m2, c2 in other._coefficients.items():
                product[m1 + m2] = product.get(m1 + m2, Fraction(0)) + c1 * c2
        return QPoly(product)

    __rmul__ = __mul__

    def shift(self, m: int) -> "QPoly":
        return QPoly({e + m: c for e, c in self._coefficients.items()})

    def evaluate(self, q: Scalar) -> Fraction:
        q = Fraction(q)
        return sum((c * q**m for m, c in self._coefficients.items()), Fraction(0))

    def to_bipoly(self) -> BiPoly:
        """Embed via ``q^m -> u^m v^m``; only defined for ordinary polynomials."""
        if self._coefficients and self.min_exponent() < 0:
            raise ValueError(f"{self} has negative powers of q")
        return BiPoly({(m, m): c for m, c in self._coefficients.items()})

    @classmethod
    def from_bipoly(cls, poly: BiPoly) -> "QPoly":
        if not poly.is_q_polynomial():
            raise ValueError(f"{poly} is not a polynomial in uv")
        return cls({i: c for (i, _), c in poly.terms.items()})

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        pieces = []
        for m in sorted(self._coefficients, reverse=True):
            coefficient = self._coefficients[m]
            magnitude = abs(coefficient)
            if m == 0:
                body = format_coefficient(magnitude)
            else:
                power = "uv" if m == 1 else f"(uv)^{m}"
                body = power if magnitude == 1 else f"{format_coefficient(magnitude)}*{power}"
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QPoly({self})"
