"""Rational simplicial cones and their fundamental sets."""

import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

import sympy

from stringye.errors import DependentGenerators, InvalidCone

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class SupportSet:
    """Exponent vectors of the monomials of ``f``."""

    points: Tuple[Vector, ...]

    def __post_init__(self):
        points = tuple(tuple(int(x) for x in point) for point in self.points)
        if not points:
            raise InvalidCone("the support of f must be nonempty")
        if len({len(point) for point in points}) != 1:
            raise InvalidCone("support points must share one dimension")
        if any(x < 0 for point in points for x in point):
            raise InvalidCone("support points must have nonnegative coordinates")
        object.__setattr__(self, "points", points)

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    @classmethod
    def diagonal(cls, exponents: Sequence[int]) -> "SupportSet":
        d = len(exponents)
        return cls(tuple(tuple(a if i == j else 0 for j in range(d)) for i, a in enumerate(exponents)))


def m_value(k: Sequence[int], support: SupportSet) -> int:
    """Minimum of ``k . x`` over the Newton polyhedron of the support."""
    if len(k) != support.dimension:
        raise InvalidCone(f"vector {tuple(k)} does not live in dimension {support.dimension}")
    if any(x < 0 for x in k):
        raise InvalidCone(f"m_f is only defined for nonnegative vectors, got {tuple(k)}")
    return min(sum(a * b for a, b in zip(k, point)) for point in support.points)


def _primitive(vector: Vector) -> bool:
    return reduce(math.gcd, vector, 0) == 1


@dataclass(frozen=True)
class SimplicialCone:
    """Cone strictly generated by linearly independent primitive vectors."""

    generators: Tuple[Vector, ...]

    def __post_init__(self):
        generators = tuple(tuple(int(x) for x in gamma) for gamma in self.generators)
        if not generators:
            raise InvalidCone("a cone needs at least one generator")
        if len({len(gamma) for gamma in generators}) != 1:
            raise InvalidCone("generators must share one dimension")
        for gamma in generators:
            if any(x < 0 for x in gamma) or not _primitive(gamma):
                raise InvalidCone(f"generator {gamma} is not a nonnegative primitive vector")
        if len(generators) > len(generators[0]) or sympy.Matrix(generators).rank() < len(generators):
            raise DependentGenerators(f"generators {generators} are linearly dependent")
        object.__setattr__(self, "generators", generators)

    @property
    def dimension(self) -> int:
        """Dimension of the ambient space."""
        return len(self.generators[0])

    @property
    def rank(self) -> int:
        return len(self.generators)

    def completed_basis(self) -> Tuple[sympy.Matrix, sympy.Matrix]:
        """Generators as columns, completed to a basis by standard vectors, and its inverse.

        Among all completions the one with the smallest nonzero ``|det|`` is used.
        """
        return _completion(self.generators)

    def point(self, coefficients: Sequence[Fraction]) -> Vector:
        total = [Fraction(0)] * self.dimension
        for lam, gamma in zip(coefficients, self.generators):
            for i, x in enumerate(gamma):
                total[i] += lam * x
        if any(x.denominator != 1 for x in total):
            raise ArithmeticError(f"{coefficients} does not give an integer point of {self}")
        return tuple(x.numerator for x in total)


@lru_cache(maxsize=1024)
def _completion(generators: Tuple[Vector, ...]) -> Tuple[sympy.Matrix, sympy.Matrix]:
    d, e = len(generators[0]), len(generators)
    columns = [list(gamma) for gamma in generators]
    best: Optional[Tuple[int, sympy.Matrix]] = None
    for extra in combinations(range(d), d - e):
        matrix = sympy.Matrix(columns + [[1 if i == j else 0 for i in range(d)] for j in extra]).T
        det = abs(int(matrix.det()))
        if det and (best is None or det < best[0]):
            best = (det, matrix)
    return best[1], best[1].inv()


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def fundamental_set_enumerate(cone: SimplicialCone) -> List[Vector]:
    """Positive integer points ``sum lambda_i gamma_i`` with ``0 < lambda_i <= 1``.

    The points are read off the finite group of integer vectors modulo the
    lattice spanned by the completed basis; a group element lies in the span
    of the cone exactly when its completion coordinates vanish.
    """
    _, inverse = cone.completed_basis()
    d, e = cone.dimension, cone.rank
    steps = [tuple(_to_fraction(inverse[r, c]) % 1 for r in range(d)) for c in range(d)]
    origin = tuple(Fraction(0) for _ in range(d))
    seen = {origin}
    queue = deque([origin])
    while queue:
        current = queue.popleft()
        for step in steps:
            following = tuple((a + b) % 1 for a, b in zip(current, step))
            if following not in seen:
                seen.add(following)
                queue.append(following)
    points = []
    for element in seen:
        if any(element[e:]):
            continue
        coefficients = [lam if lam else Fraction(1) for lam in element[:e]]
        delta = cone.point(coefficients)
        if all(x > 0 for x in delta):
            points.append(delta)
    logger.debug("fundamental set of %s has %d points (group order %d)", cone.generators, len(points), len(seen))
    return sorted(points)


def scan_fundamental_set(cone: SimplicialCone) -> List[Vector]:
    """Box-scan version of :func:`fundamental_set_enumerate` for small cones."""
    _, inverse = cone.completed_basis()
    e = cone.rank
    bounds = [sum(gamma[i] for gamma in cone.generators) for i in range(cone.dimension)]
    points = []
    for candidate in product(*(range(1, bound + 1) for bound in bounds)):
        solution = inverse * sympy.Matrix(candidate)
        coefficients = [_to_fraction(x) for x in solution]
        if any(coefficients[e:]):
            continue
        if all(0 < lam <= 1 for lam in coefficients[:e]):
            points.append(tuple(candidate))
    return sorted(points)


def diagonal_cone(exponents: Sequence[int], subset) -> SimplicialCone:
    """Cone generated by ``alpha`` and ``e_j`` for ``j`` in ``subset`` (1-based)."""
    k = reduce(math.lcm, exponents, 1)
    alpha = tuple(k // a for a in exponents)
    d = len(exponents)
    units = [tuple(1 if i == j - 1 else 0 for i in range(d)) for j in sorted(subset)]
    return SimplicialCone((alpha, *units))
