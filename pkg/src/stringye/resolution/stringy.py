"""Stringy E-functions, singularity contributions and stringy Euler numbers from resolution data."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from stringye.algebra import BiPoly, StringyRational
from stringye.errors import (
    InconsistentEulerNumber,
    InvalidResolutionData,
    NonGorensteinUnsupported,
    NotAPowerSeries,
)
from stringye.resolution.data import (
    ResolutionData,
    ResolutionMode,
    Stratum,
    closed_from_open_strata,
    open_from_closed_strata,
)

logger = logging.getLogger(__name__)


def _require_gorenstein(r: ResolutionData) -> None:
    for component in r.components:
        if not component.is_gorenstein:
            raise NonGorensteinUnsupported(
                f"component {component.id} has non-integer discrepancy {component.discrepancy}"
            )


def _require_mode(r: ResolutionData, mode: ResolutionMode) -> None:
    if r.mode is not mode:
        raise InvalidResolutionData(f"operation needs {mode} data, got {r.mode}")


def _open_weight(r: ResolutionData, stratum: Stratum) -> StringyRational:
    """``prod_{i in J} (q - 1) / (q^(a_i + 1) - 1)``."""
    weight = StringyRational(1)
    for component_id in sorted(stratum):
        m = int(r.discrepancy(component_id)) + 1
        weight = weight * StringyRational(BiPoly.q() - 1, (m,))
    return weight


def _closed_weight(r: ResolutionData, stratum: Stratum) -> StringyRational:
    """``prod_{i in J} (q - q^(a_i + 1)) / (q^(a_i + 1) - 1)``."""
    weight = StringyRational(1)
    for component_id in sorted(stratum):
        m = int(r.discrepancy(component_id)) + 1
        weight = weight * StringyRational(BiPoly.q() - BiPoly.q_power(m), (m,))
    return weight


def closed_from_open(r: ResolutionData) -> Dict[Stratum, BiPoly]:
    return r.closed_strata()


def open_from_closed(r: ResolutionData) -> Dict[Stratum, BiPoly]:
    """Open strata recomputed from :func:`closed_from_open`; equal to ``r.open_strata``."""
    return open_from_closed_strata(closed_from_open(r))


def _sum_open(r: ResolutionData, include_empty: bool) -> StringyRational:
    _require_gorenstein(r)
    total = StringyRational(0)
    for stratum, poly in r.sorted_strata():
        if not stratum and not include_empty:
            continue
        total = total + _open_weight(r, stratum) * poly
    return total


def stringy_from_open(r: ResolutionData) -> StringyRational:
    """``E_st = sum_J H(D_J°) prod_{i in J} (q - 1) / (q^(a_i + 1) - 1)``."""
    _require_mode(r, ResolutionMode.FULL_VARIETY)
    return _sum_open(r, include_empty=True)


def stringy_from_closed(r: ResolutionData) -> StringyRational:
    """``E_st = sum_J H(D_J) prod_{i in J} (q - q^(a_i + 1)) / (q^(a_i + 1) - 1)``."""
    _require_mode(r, ResolutionMode.FULL_VARIETY)
    _require_gorenstein(r)
    total = StringyRational(0)
    for stratum, poly in closed_from_open_strata(r.open_strata).items():
        total = total + _closed_weight(r, stratum) * poly
    return total


def exceptional_contribution(r: ResolutionData) -> StringyRational:
    """Contribution of the fiber over a singular point: the open-strata sum without ``J = {}``."""
    _require_mode(r, ResolutionMode.EXCEPTIONAL_FIBER_ONLY)
    return _sum_open(r, include_empty=False)


def stringy_value(r: ResolutionData) -> StringyRational:
    if r.mode is ResolutionMode.FULL_VARIETY:
        return stringy_from_open(r)
    return exceptional_contribution(r)


def stringy_euler_direct(r: ResolutionData) -> Fraction:
    """``sum_J chi(D_J°) prod_{j in J} 1 / (a_j + 1)``; rational discrepancies are allowed."""
    total = Fraction(0)
    for stratum, poly in r.sorted_strata():
        value = poly.evaluate(1, 1)
        for component_id in stratum:
            value /= r.discrepancy(component_id) + 1
        total += value
    return total


def stringy_euler(r: ResolutionData) -> Fraction:
    """Limit of the stringy value at ``u = v = 1``, checked against :func:`stringy_euler_direct`.

    Raises:
        InconsistentEulerNumber: when the two computations disagree.
    """
    limit = stringy_value(r).limit_at_one()
    direct = stringy_euler_direct(r)
    if limit != direct:
        raise InconsistentEulerNumber(f"limit {limit} differs from the direct sum {direct}")
    logger.info("stringy Euler number %s", limit)
    return limit


@dataclass(frozen=True)
class ProjectiveReport:
    dimension: int
    duality: bool
    constant_term: Optional[Fraction]
    stringy_hodge_numbers: Optional[Dict]

    @property
    def constant_term_is_one(self) -> bool:
        return self.constant_term == 1

    @property
    def passed(self) -> bool:
        return self.duality and self.constant_term_is_one


def verify_projective_properties(e: StringyRational, dimension: int) -> ProjectiveReport:
    """Check ``E(u, v) = (uv)^d E(1/u, 1/v)`` and ``E(0, 0) = 1``."""
    duality = e.dual_transform(dimension).cross_equal(e)
    try:
        constant_term = e.series_coefficients(0).get((0, 0), Fraction(0))
    except NotAPowerSeries:
        constant_term = None
    return ProjectiveReport(dimension, duality, constant_term, e.stringy_hodge_numbers())
