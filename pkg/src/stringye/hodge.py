"""Hodge-Deligne polynomials of Fermat and quasi-homogeneous hypersurfaces."""

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache, reduce
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import sympy

from stringye.algebra import BiPoly
from stringye.errors import InvalidExponent, NonPolynomialPoincareSeries

logger = logging.getLogger(__name__)

_T = sympy.Symbol("t")


class HodgeKind(StrEnum):
    AFFINE = "affine"
    PROJECTIVE = "projective"
    TORUS = "torus"


@dataclass(frozen=True)
class HodgePolynomial:
    poly: BiPoly
    kind: HodgeKind

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class WeightSystem:
    """Weights ``w_1, ..., w_{r+1}`` of a quasi-homogeneous polynomial of degree ``degree``."""

    weights: Tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise InvalidExponent("a weight system needs at least one weight")
        if any(w < 1 for w in self.weights):
            raise InvalidExponent(f"weights must be positive, got {self.weights}")
        if any(w >= self.degree for w in self.weights):
            raise InvalidExponent(f"every weight must be smaller than the degree {self.degree}, got {self.weights}")

    @property
    def r(self) -> int:
        return len(self.weights) - 1


def binomial(n: int, m: int) -> int:
    """``C(n, m)``, zero for ``m > n``, ``m < 0`` or ``n < 0``."""
    if n < 0 or m < 0 or m > n:
        return 0
    return math.comb(n, m)


def g_number(kappa: int, lam: int, nu: int, xi: int) -> int:
    if kappa < lam:
        raise ValueError(f"g_number needs kappa >= lambda, got {kappa} < {lam}")
    return sum((-1) ** j * binomial(kappa + 1, j) * binomial(nu * (lam - j) + xi, kappa) for j in range(lam + 1))


def fermat_hodge(dimension: int, degree: int) -> HodgePolynomial:
    """Hodge-Deligne polynomial of ``x_0^l + ... + x_{d+1}^l = 0`` in projective ``(d+1)``-space."""
    if dimension < 0 or degree < 1:
        raise InvalidExponent(f"invalid Fermat hypersurface: dimension {dimension}, degree {degree}")
    sign = (-1) ** dimension
    terms = {}
    for p in range(dimension + 1):
        terms[(p, p)] = terms.get((p, p), 0) + 1
        g = g_number(dimension + 1, p + 1, degree - 1, p)
        terms[(p, dimension - p)] = terms.get((p, dimension - p), 0) + sign * g
    return HodgePolynomial(BiPoly(terms), HodgeKind.PROJECTIVE)


def milnor_dimensions(ws: WeightSystem) -> List[int]:
    """Graded dimensions of the Milnor algebra, read off its Poincaré series.

    Raises:
        NonPolynomialPoincareSeries: when the series is not a polynomial.
    """
    numerator = sympy.Poly(1, _T)
    denominator = sympy.Poly(1, _T)
    for w in ws.weights:
        numerator *= sympy.Poly(1 - _T ** (ws.degree - w), _T)
        denominator *= sympy.Poly(1 - _T**w, _T)
    quotient, remainder = sympy.div(numerator, denominator)
    if not remainder.is_zero:
        raise NonPolynomialPoincareSeries(f"the Poincaré series of {ws} is not a polynomial")
    coefficients = [int(c) for c in reversed(quotient.all_coeffs())]
    logger.debug("Milnor algebra of %s has total dimension %d", ws, sum(coefficients))
    return coefficients


def quasi_hom_hodge(ws: WeightSystem) -> HodgePolynomial:
    """Hodge-Deligne polynomial of the affine zero set of an isolated quasi-homogeneous singularity."""
    dims = milnor_dimensions(ws)
    r = ws.r
    total_weight = sum(ws.weights)

    def dim(index: int) -> int:
        return dims[index] if 0 <= index < len(dims) else 0

    link = BiPoly({(p, r - 1 - p): dim((p + 1) * ws.degree - total_weight) for p in range(r)})
    poly = BiPoly.q_power(r) + (-1) ** (r - 1) * (BiPoly.q() - 1) * link
    return HodgePolynomial(poly, HodgeKind.AFFINE)


def lcm(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


@lru_cache(maxsize=4096)
def _diagonal_face(exponents: Tuple[int, ...]) -> BiPoly:
    if len(exponents) == 1:
        return BiPoly.constant(1)
    degree = lcm(exponents)
    return quasi_hom_hodge(WeightSystem(tuple(degree // a for a in exponents), degree)).poly


def diagonal_face_hodge(exponents: Sequence[int]) -> HodgePolynomial:
    """Hodge-Deligne polynomial of ``{x_1^a_1 + ... + x_n^a_n = 0}`` in affine ``n``-space."""
    if not exponents:
        raise InvalidExponent("diagonal_face_hodge needs at least one exponent")
    if any(a < 2 for a in exponents):
        raise InvalidExponent(f"exponents must be at least 2, got {tuple(exponents)}")
    return HodgePolynomial(_diagonal_face(tuple(sorted(exponents))), HodgeKind.AFFINE)


def face_exponents(exponents: Sequence[int], subset: Iterable[int]) -> Tuple[int, ...]:
    """Exponents of the variables outside ``subset`` (1-based indices)."""
    excluded = set(subset)
    return tuple(a for index, a in enumerate(exponents, start=1) if index not in excluded)


@lru_cache(maxsize=4096)
def _torus(exponents: Tuple[int, ...], subset: FrozenSet[int]) -> BiPoly:
    free = [index for index in range(1, len(exponents) + 1) if index not in subset]
    total = BiPoly.zero()
    for size in range(len(free)):
        for extra in combinations(free, size):
            face = diagonal_face_hodge(face_exponents(exponents, subset.union(extra))).poly
            total = total + (-1) ** size * (face - 1)
    return (BiPoly.q() - 1) ** len(subset) * total


def torus_hodge(exponents: Sequence[int], subset: Iterable[int] = ()) -> HodgePolynomial:
    """Hodge-Deligne polynomial of the torus hypersurface ``N`` of the face of ``subset``.

    ``subset`` is a proper subset of the 1-based variable indices.
    """
    subset = frozenset(subset)
    if len(subset) >= len(exponents) or not subset <= set(range(1, len(exponents) + 1)):
        raise ValueError(f"{sorted(subset)} is not a proper subset of the variables of {tuple(exponents)}")
    return HodgePolynomial(_torus(tuple(exponents), subset), HodgeKind.TORUS)


def projective_cone(h: HodgePolynomial) -> HodgePolynomial:
    """``uv * h + 1``."""
    return HodgePolynomial(BiPoly.q() * h.poly + 1, HodgeKind.PROJECTIVE)


def projective_space(n: int) -> HodgePolynomial:
    return HodgePolynomial(BiPoly({(m, m): 1 for m in range(n + 1)}), HodgeKind.PROJECTIVE)


def euler_characteristic(h) -> int:
    """``H(1, 1)``, the topological Euler characteristic."""
    poly = h.poly if isinstance(h, HodgePolynomial) else h
    value = poly.evaluate(1, 1)
    if value.denominator != 1:
        raise ValueError(f"{poly} does not evaluate to an integer at u = v = 1")
    return value.numerator
