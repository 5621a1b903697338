"""The six-dimensional hypersurface with one singular point of type (5,5,6,6,6,6,6)
at the origin and five of type (2,2,6,6,6,6,6) at infinity.

``E_st = A + 5B + C + D`` where ``A`` and ``B`` are the singularity
contributions, ``C`` is the part at infinity minus its five singular points
and ``D`` the affine part minus the origin.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from stringye.algebra import StringyRational
from stringye.brieskorn import contribution
from stringye.hodge import WeightSystem, fermat_hodge, projective_cone, quasi_hom_hodge

logger = logging.getLogger(__name__)

ORIGIN_EXPONENTS = (5, 5, 6, 6, 6, 6, 6)
INFINITY_EXPONENTS = (2, 2, 6, 6, 6, 6, 6)
INFINITY_POINTS = 5
DIMENSION = 6


@dataclass(frozen=True)
class ExampleParts:
    a: StringyRational
    b: StringyRational
    c: StringyRational
    d: StringyRational

    @property
    def e_st(self) -> StringyRational:
        return self.a + INFINITY_POINTS * self.b + self.c + self.d


def assemble_example() -> ExampleParts:
    a = contribution(ORIGIN_EXPONENTS)
    b = contribution(INFINITY_EXPONENTS)
    # the hyperplane at infinity is a double projective cone over the Fermat threefold of degree 6
    infinity = projective_cone(projective_cone(fermat_hodge(3, 6)))
    c = StringyRational(infinity.poly - INFINITY_POINTS)
    affine = quasi_hom_hodge(WeightSystem((6, 6, 5, 5, 5, 5, 5), 30))
    d = StringyRational(affine.poly - 1)
    logger.info("assembled A, B, C and D")
    return ExampleParts(a, b, c, d)


def series_coefficient(e: StringyRational, i: int, j: int) -> Fraction:
    return e.series_coefficients(i + j).get((i, j), Fraction(0))
