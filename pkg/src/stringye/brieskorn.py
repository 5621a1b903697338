"""Stringy contributions of Brieskorn singularities ``x_1^a_1 + ... + x_d^a_d = 0``.

Subsets of variables are frozensets of 1-based indices, so ``{1, 2}`` names
the first two variables.
"""

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache, reduce
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from stringye.algebra import BiPoly, QPoly, StringyRational
from stringye.errors import (
    DimensionLimitExceeded,
    InvalidExponent,
    NotCanonical,
    SignViolation,
)
from stringye.hodge import diagonal_face_hodge, face_exponents, lcm

logger = logging.getLogger(__name__)

DEFAULT_MAX_VARIABLES = 12

Subset = FrozenSet[int]


class Classification(StrEnum):
    NOT_CANONICAL = "NotCanonical"
    STRICTLY_CANONICAL = "StrictlyCanonical"
    CANONICAL_SIGMA_MINUS_K_AT_LEAST_2 = "CanonicalSigmaMinusKAtLeast2"


@dataclass(frozen=True)
class BrieskornData:
    exponents: Tuple[int, ...]
    k: int
    alpha: Tuple[int, ...]
    sigma: int
    classification: Classification

    @property
    def d(self) -> int:
        return len(self.exponents)

    @property
    def excess(self) -> int:
        """``Sigma - k``."""
        return self.sigma - self.k

    @property
    def is_canonical(self) -> bool:
        return self.classification is not Classification.NOT_CANONICAL


@dataclass(frozen=True)
class SubsetFamily:
    members: Tuple[Subset, ...]
    g_values: Dict[Subset, int]

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.members


@dataclass(frozen=True)
class FundamentalVector:
    subset: Subset
    l: int  # noqa: E741
    vector: Tuple[int, ...]
    sigma: int
    m: int


@dataclass(frozen=True)
class SignNormalForm:
    """``contribution = polynomial / (1 + q + ... + q^denominator_degree)``."""

    polynomial: BiPoly
    denominator_degree: int

    @property
    def denominator(self) -> QPoly:
        return QPoly.geometric(self.denominator_degree + 1)


def classify(excess: int) -> Classification:
    if excess < 1:
        return Classification.NOT_CANONICAL
    if excess == 1:
        return Classification.STRICTLY_CANONICAL
    return Classification.CANONICAL_SIGMA_MINUS_K_AT_LEAST_2


def analyze(exponents: Sequence[int], max_variables: int = DEFAULT_MAX_VARIABLES) -> BrieskornData:
    exponents = tuple(int(a) for a in exponents)
    if not exponents:
        raise InvalidExponent("at least one exponent is required")
    if any(a < 2 for a in exponents):
        raise InvalidExponent(f"all exponents must be at least 2, got {exponents}")
    if len(exponents) > max_variables:
        raise DimensionLimitExceeded(f"{len(exponents)} variables exceed the configured limit of {max_variables}")
    k = lcm(exponents)
    alpha = tuple(k // a for a in exponents)
    sigma = sum(alpha)
    data = BrieskornData(exponents, k, alpha, sigma, classify(sigma - k))
    logger.debug("exponents %s: k=%d, alpha=%s, Sigma=%d, %s", exponents, k, alpha, sigma, data.classification)
    return data


def as_brieskorn_data(value: Union[BrieskornData, Sequence[int]]) -> BrieskornData:
    """``value`` itself when already analyzed; otherwise ``analyze(value)`` under the default limit."""
    return value if isinstance(value, BrieskornData) else analyze(value)


def proper_subsets(d: int) -> Iterator[Subset]:
    """All proper subsets of ``{1, ..., d}``, by increasing size."""
    for size in range(d):
        for subset in combinations(range(1, d + 1), size):
            yield frozenset(subset)


def g_value(alpha: Sequence[int], subset: Subset) -> int:
    """``gcd{alpha_j : j not in subset}``."""
    return reduce(math.gcd, (a for index, a in enumerate(alpha, start=1) if index not in subset), 0)


def _in_family(alpha: Sequence[int], subset: Subset, g: int) -> bool:
    if not subset:
        return True
    outside = [a for index, a in enumerate(alpha, start=1) if index not in subset]
    return all(g > reduce(math.gcd, outside, alpha[j - 1]) for j in subset)


def subset_order(subset: Subset) -> Tuple[int, Tuple[int, ...]]:
    return (len(subset), tuple(sorted(subset)))


def compute_family_s(alpha: Sequence[int], max_variables: Optional[int] = None) -> SubsetFamily:
    """The members of the family and ``g_J`` for every proper subset ``J``.

    Raises:
        DimensionLimitExceeded: when ``max_variables`` is given and ``alpha`` is longer.
    """
    alpha = tuple(alpha)
    if not alpha or any(a < 1 for a in alpha):
        raise InvalidExponent(f"alpha must have positive entries, got {alpha}")
    if max_variables is not None and len(alpha) > max_variables:
        raise DimensionLimitExceeded(f"{len(alpha)} entries exceed the configured limit of {max_variables}")
    g_values = {}
    members = []
    for subset in proper_subsets(len(alpha)):
        g = g_value(alpha, subset)
        g_values[subset] = g
        if _in_family(alpha, subset, g):
            members.append(subset)
    return SubsetFamily(tuple(sorted(members, key=subset_order)), g_values)


def format_subset(subset: Subset) -> str:
    return "{" + ",".join(str(index) for index in sorted(subset)) + "}"


def format_family(family: SubsetFamily) -> str:
    return "{" + ", ".join(format_subset(subset) for subset in family.members) + "}"


def fundamental_vectors(data: BrieskornData, subset) -> List[FundamentalVector]:
    """The vectors ``delta_J^l``, ``l = 1, ..., g_J``, spanning the fundamental set of the cone of ``J``."""
    subset = frozenset(subset)
    if len(subset) >= data.d:
        raise ValueError(f"{format_subset(subset)} is not a proper subset")
    g = g_value(data.alpha, subset)
    vectors = []
    for l in range(1, g + 1):  # noqa: E741
        vector = []
        for index, a in enumerate(data.alpha, start=1):
            if index in subset:
                vector.append((l * a + g - (l * a) % g) // g)
            else:
                vector.append(l * a // g)
        vectors.append(FundamentalVector(subset, l, tuple(vector), sum(vector), data.k * l // g))
    return vectors


def fundamental_sum(data: BrieskornData, subset) -> QPoly:
    """``q^(Sigma - k + |J|) * sum_l q^(m(delta) - sigma(delta))``."""
    subset = frozenset(subset)
    total = QPoly.zero()
    for vector in fundamental_vectors(data, subset):
        total = total + QPoly.q_power(vector.m - vector.sigma)
    return total.shift(data.excess + len(subset))


@lru_cache(maxsize=256)
def _p_polynomials(data: BrieskornData) -> Tuple[Tuple[Subset, QPoly], ...]:
    values: Dict[Subset, QPoly] = {}
    for subset in proper_subsets(data.d):
        if not subset:
            values[subset] = QPoly.constant(1)
            continue
        value = fundamental_sum(data, subset)
        for size in range(len(subset)):
            for smaller in combinations(sorted(subset), size):
                value = value - values[frozenset(smaller)]
        values[subset] = value
    return tuple(values.items())


def p_polynomials(data: BrieskornData) -> Dict[Subset, QPoly]:
    if not data.is_canonical:
        raise NotCanonical(f"{data.exponents} is not canonical (Sigma - k = {data.excess})")
    return dict(_p_polynomials(data))


def contribution(exponents: Union[BrieskornData, Sequence[int]]) -> StringyRational:
    """Contribution of the singular point to the stringy E-function.

    Raises:
        NotCanonical: when ``Sigma - k < 1``.
    """
    data = as_brieskorn_data(exponents)
    p_values = p_polynomials(data)
    numerator = BiPoly.zero()
    for subset, p in p_values.items():
        if p.is_zero():
            continue
        face = diagonal_face_hodge(face_exponents(data.exponents, subset)).poly
        numerator = numerator + (face - 1) * p.to_bipoly()
    logger.info("contribution of %s computed over (uv)^%d - 1", data.exponents, data.excess)
    return StringyRational(numerator, (data.excess,))


def numerator_over(value: StringyRational, denominator: Tuple[int, ...]) -> BiPoly:
    """The numerator ``N`` with ``value = N / prod((uv)^m - 1)`` over ``denominator``."""
    top = value.numerator.shift(max(value.q_shift, 0)) * StringyRational(1, denominator).expanded_denominator()
    bottom = value.expanded_denominator().shift(max(-value.q_shift, 0))
    return top.exact_divide(bottom)


def alternating_numerator(c: StringyRational, data: BrieskornData) -> BiPoly:
    """The polynomial ``P`` with ``c = P / (1 + q + ... + q^(Sigma - k - 1))``.

    Raises:
        NonExactDivision: when ``c`` is not a contribution over ``(uv)^(Sigma - k) - 1``.
        SignViolation: when some coefficient breaks ``(-1)^(i+j) c_ij >= 0``.
    """
    if not data.is_canonical:
        raise NotCanonical(f"{data.exponents} is not canonical (Sigma - k = {data.excess})")
    polynomial = numerator_over(c, (data.excess,)).exact_divide(BiPoly.q() - 1)
    for (i, j), coefficient in polynomial.terms.items():
        if (-1) ** (i + j) * coefficient < 0:
            raise SignViolation(f"coefficient {coefficient} of u^{i}*v^{j} for {data.exponents} has the wrong sign")
    return polynomial


def sign_normal_form(exponents: Union[BrieskornData, Sequence[int]]) -> SignNormalForm:
    data = as_brieskorn_data(exponents)
    polynomial = alternating_numerator(contribution(data), data)
    return SignNormalForm(polynomial, data.excess - 1)

