"""Hodge-specialized local zeta functions and their residue at ``T = uv``."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from stringye.algebra import BiPoly, StringyRational
from stringye.algebra.bipoly import format_coefficient
from stringye.algebra.text import coefficient_to_json
from stringye.brieskorn import BrieskornData, as_brieskorn_data
from stringye.errors import HigherOrderPole, NotCanonical
from stringye.hodge import HodgePolynomial, torus_hodge
from stringye.newtonzeta.cones import SimplicialCone, SupportSet, fundamental_set_enumerate, m_value
from stringye.newtonzeta.faces import diagonal_faces

logger = logging.getLogger(__name__)

ZetaMonomial = Tuple[int, int, int]
Factor = Tuple[int, int]


def _clean(numerator: Mapping[ZetaMonomial, Union[int, Fraction]]) -> Dict[ZetaMonomial, Fraction]:
    cleaned: Dict[ZetaMonomial, Fraction] = {}
    for key, coefficient in numerator.items():
        cleaned[key] = cleaned.get(key, Fraction(0)) + Fraction(coefficient)
    return {key: c for key, c in cleaned.items() if c}


@dataclass(frozen=True)
class ZetaTerm:
    """``sum c u^i v^j T^t / prod (1 - (uv)^a T^b)``; ``i`` and ``j`` may be negative."""

    numerator: Mapping[ZetaMonomial, Fraction]
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", _clean(self.numerator))
        factors = tuple(sorted((int(a), int(b)) for a, b in self.factors))
        for a, b in factors:
            if b < 0 or (a, b) == (0, 0):
                raise ValueError(f"invalid zeta factor (1 - (uv)^{a} T^{b})")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def from_bipoly(cls, poly: BiPoly, t_power: int = 0, factors: Iterable[Factor] = ()) -> "ZetaTerm":
        return cls({(i, j, t_power): c for (i, j), c in poly.terms.items()}, tuple(factors))

    def __mul__(self, other: "ZetaTerm") -> "ZetaTerm":
        product: Dict[ZetaMonomial, Fraction] = {}
        for (i1, j1, t1), c1 in self.numerator.items():
            for (i2, j2, t2), c2 in other.numerator.items():
                key = (i1 + i2, j1 + j2, t1 + t2)
                product[key] = product.get(key, Fraction(0)) + c1 * c2
        return ZetaTerm(product, self.factors + other.factors)

    def pole_factors(self) -> List[Factor]:
        """Factors vanishing at ``T = uv``."""
        return [(a, b) for a, b in self.factors if a + b == 0]

    def numerator_at(self, s: int) -> StringyRational:
        """Numerator with ``T := (uv)^s``."""
        terms: Dict[Tuple[int, int], Fraction] = {}
        for (i, j, t), c in self.numerator.items():
            key = (i + s * t, j + s * t)
            terms[key] = terms.get(key, Fraction(0)) + c
        return StringyRational.from_laurent(terms)

    def __str__(self) -> str:
        text = format_zeta_numerator(self.numerator)
        if self.factors:
            text = f"({text}) / " + "".join(format_zeta_factor(a, b) for a, b in self.factors)
        return text


@dataclass(frozen=True)
class ZetaExpression:
    """Unmerged sum of :class:`ZetaTerm`."""

    terms: Tuple[ZetaTerm, ...] = field(default_factory=tuple)

    def __add__(self, other: "ZetaExpression") -> "ZetaExpression":
        return ZetaExpression(self.terms + other.terms)

    def __mul__(self, other: "ZetaExpression") -> "ZetaExpression":
        return ZetaExpression(tuple(left * right for left in self.terms for right in other.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "\n+ ".join(str(term) for term in self.terms)

    def to_json(self) -> List[Dict]:
        return [
            {
                "numerator": [
                    {"i": i, "j": j, "t": t, "coeff": coefficient_to_json(c)}
                    for (i, j, t), c in sorted(term.numerator.items(), key=lambda item: (item[0][2], item[0][0] + item[0][1], item[0][0]), reverse=True)
                ],
                "factors": [[a, b] for a, b in term.factors],
            }
            for term in self.terms
        ]


def _format_power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def format_zeta_numerator(numerator: Mapping[ZetaMonomial, Fraction]) -> str:
    if not numerator:
        return "0"
    pieces = []
    for (i, j, t), c in sorted(numerator.items(), key=lambda item: (item[0][2], item[0][0] + item[0][1], item[0][0]), reverse=True):
        parts = [_format_power(name, e) for name, e in (("u", i), ("v", j), ("T", t)) if e]
        magnitude = abs(c)
        if not parts:
            body = format_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(parts)
        else:
            body = "*".join([format_coefficient(magnitude), *parts])
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces)


def format_zeta_factor(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("uv" if a == 1 else f"(uv)^{a}")
    if b:
        parts.append(_format_power("T", b))
    return f"(1 - {'*'.join(parts)})"


def _inverse_one_minus(c: int) -> StringyRational:
    """``1 / (1 - (uv)^c)`` for ``c != 0``."""
    if c > 0:
        return StringyRational(-1, (c,))
    return StringyRational(1, (-c,), -c)


def s_delta_specialized(cone: SimplicialCone, support: SupportSet) -> ZetaExpression:
    """``(sum_g q^(-sigma(g)) T^m(g)) / prod_j (1 - q^(-sigma(gamma_j)) T^m(gamma_j))``."""
    if cone.dimension != support.dimension:
        raise ValueError("cone and support live in different dimensions")
    numerator: Dict[ZetaMonomial, Fraction] = {}
    for point in fundamental_set_enumerate(cone):
        sigma = sum(point)
        key = (-sigma, -sigma, m_value(point, support))
        numerator[key] = numerator.get(key, Fraction(0)) + 1
    factors = tuple((-sum(gamma), m_value(gamma, support)) for gamma in cone.generators)
    return ZetaExpression((ZetaTerm(numerator, factors),))


def l_tau_specialized(h_n: Union[HodgePolynomial, BiPoly], dimension: int) -> ZetaExpression:
    """``(q-1)^d - H(N) + (q-1) H(N) q^-1 T / (1 - q^-1 T)``."""
    poly = h_n.poly if isinstance(h_n, HodgePolynomial) else h_n
    q_minus_one = BiPoly.q() - 1
    regular = ZetaTerm.from_bipoly(q_minus_one**dimension - poly)
    polar = ZetaTerm({(i - 1, j - 1, t + 1): c for (i, j, t), c in ZetaTerm.from_bipoly(q_minus_one * poly).numerator.items()}, ((-1, 1),))
    return ZetaExpression((regular, polar))


def local_hodge_zeta_diagonal(exponents: Union[BrieskornData, Sequence[int]]) -> ZetaExpression:
    """Hodge-specialized local zeta function of ``x_1^a_1 + ... + x_d^a_d`` at the origin."""
    data = as_brieskorn_data(exponents)
    support = SupportSet.diagonal(data.exponents)
    total = ZetaExpression()
    for face in diagonal_faces(data.exponents):
        l_tau = l_tau_specialized(torus_hodge(data.exponents, face.subset), data.d)
        s_delta = s_delta_specialized(face.cone, support)
        total = total + l_tau * s_delta
    logger.debug("local zeta function of %s has %d terms", data.exponents, len(total.terms))
    return total


def substitute_t(z: ZetaExpression, s: int) -> StringyRational:
    """``z`` with ``T := (uv)^s``.

    Raises:
        ZeroDivisionError: when a factor vanishes identically.
    """
    if s < 0:
        raise ValueError("substitute_t needs s >= 0")
    total = StringyRational(0)
    for term in z.terms:
        value = term.numerator_at(s)
        for a, b in term.factors:
            if a + s * b == 0:
                raise ZeroDivisionError(f"factor {format_zeta_factor(a, b)} vanishes at T = (uv)^{s}")
            value = value * _inverse_one_minus(a + s * b)
        total = total + value
    return total


def _canonical_data(exponents: Union[BrieskornData, Sequence[int]]) -> BrieskornData:
    data = as_brieskorn_data(exponents)
    if not data.is_canonical:
        raise NotCanonical(f"{data.exponents} is not canonical (Sigma - k = {data.excess})")
    return data


def residue_at_q(z: ZetaExpression) -> StringyRational:
    """``-(1 / (q (q - 1))) * ((T - q) z)`` evaluated at ``T = q``.

    Raises:
        HigherOrderPole: when one term has two factors vanishing at ``T = q``.
    """
    total = StringyRational(0)
    for term in z.terms:
        poles = term.pole_factors()
        if not poles:
            continue
        if len(poles) > 1:
            raise HigherOrderPole(f"term {term} has a pole of order {len(poles)} at T = uv")
        _, b = poles[0]
        # (T - q) / (1 - q^a T^b) tends to -q/b, so the prefactor leaves 1 / (b (q - 1))
        value = term.numerator_at(1) * StringyRational(Fraction(1, b), (1,))
        rest = list(term.factors)
        rest.remove(poles[0])
        for a, b in rest:
            value = value * _inverse_one_minus(a + b)
        total = total + value
    return total


def face_sum_contribution(exponents: Union[BrieskornData, Sequence[int]]) -> StringyRational:
    """``sum_J H(N_J) * S_J`` with both ``uv`` and ``T`` replaced by ``q``.

    Raises:
        NotCanonical: when ``Sigma - k < 1``.
    """
    data = _canonical_data(exponents)
    support = SupportSet.diagonal(data.exponents)
    total = StringyRational(0)
    for face in diagonal_faces(data.exponents):
        h_n = torus_hodge(data.exponents, face.subset).poly
        if h_n.is_zero():
            continue
        s_tilde = substitute_t(s_delta_specialized(face.cone, support), 1)
        total = total + s_tilde * h_n
    return total


def residue_contribution(exponents: Union[BrieskornData, Sequence[int]]) -> StringyRational:
    """The contribution read off the residue of the local zeta function at ``T = uv``.

    Raises:
        NotCanonical: when ``Sigma - k < 1``.
    """
    return residue_at_q(local_hodge_zeta_diagonal(_canonical_data(exponents)))
