"""Log-resolution stratification data."""

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple, Union

from stringye.algebra import BiPoly
from stringye.errors import InvalidResolutionData

Stratum = FrozenSet[str]


class ResolutionMode(StrEnum):
    FULL_VARIETY = "fullVariety"
    EXCEPTIONAL_FIBER_ONLY = "exceptionalFiberOnly"


class StrataKind(StrEnum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Component:
    id: str
    discrepancy: Fraction

    def __post_init__(self):
        object.__setattr__(self, "discrepancy", Fraction(self.discrepancy))
        if self.discrepancy <= -1:
            raise InvalidResolutionData(f"component {self.id} has discrepancy {self.discrepancy} <= -1")

    @property
    def is_gorenstein(self) -> bool:
        return self.discrepancy.denominator == 1


def subsets_of(stratum: Stratum) -> Iterable[Stratum]:
    items = sorted(stratum)
    for size in range(len(items) + 1):
        for subset in combinations(items, size):
            yield frozenset(subset)


def stratum_order(stratum: Stratum) -> Tuple[int, Tuple[str, ...]]:
    return (len(stratum), tuple(sorted(stratum)))


def closed_from_open_strata(open_strata: Mapping[Stratum, BiPoly], include_empty: bool = True) -> Dict[Stratum, BiPoly]:
    """``H(D_J) = sum_{J' >= J} H(D_J'°)``."""
    closed: Dict[Stratum, BiPoly] = {}
    for stratum, poly in open_strata.items():
        for subset in subsets_of(stratum):
            if subset or include_empty:
                closed[subset] = closed.get(subset, BiPoly.zero()) + poly
    return {stratum: poly for stratum, poly in closed.items() if poly}


def open_from_closed_strata(closed_strata: Mapping[Stratum, BiPoly]) -> Dict[Stratum, BiPoly]:
    """``H(D_J°) = sum_{J' >= J} (-1)^(|J'| - |J|) H(D_J')``."""
    opened: Dict[Stratum, BiPoly] = {}
    for stratum, poly in closed_strata.items():
        for subset in subsets_of(stratum):
            if subset in closed_strata:
                sign = (-1) ** (len(stratum) - len(subset))
                opened[subset] = opened.get(subset, BiPoly.zero()) + sign * poly
    return {stratum: poly for stratum, poly in opened.items() if poly}


@dataclass(frozen=True)
class ResolutionData:
    """Exceptional components with discrepancies and the Hodge-Deligne polynomials of the open strata.

    Attributes:
        components (tuple[Component, ...]): the exceptional components ``D_i``.
        open_strata (dict): ``H(D_J°)`` keyed by the frozenset of component ids; absent keys are empty strata.
        dimension (int): dimension of the variety.
        mode (ResolutionMode): whether the strata cover the whole resolution or only the fiber over a point.
    """

    components: Tuple[Component, ...]
    open_strata: Mapping[Stratum, BiPoly]
    dimension: int
    mode: ResolutionMode = ResolutionMode.FULL_VARIETY
    description: str = field(default="", compare=False)

    def __post_init__(self):
        ids = [component.id for component in self.components]
        if len(set(ids)) != len(ids):
            raise InvalidResolutionData(f"duplicate component ids in {ids}")
        if self.dimension < 0:
            raise InvalidResolutionData(f"dimension must be nonnegative, got {self.dimension}")
        known = set(ids)
        strata = {}
        for stratum, poly in self.open_strata.items():
            stratum = frozenset(stratum)
            if not stratum <= known:
                raise InvalidResolutionData(f"stratum {sorted(stratum)} names unknown components {sorted(stratum - known)}")
            if poly:
                strata[stratum] = poly
        mode = ResolutionMode(self.mode)
        if mode is ResolutionMode.FULL_VARIETY and frozenset() not in strata:
            raise InvalidResolutionData("full-variety data needs the stratum of the empty subset")
        if mode is ResolutionMode.EXCEPTIONAL_FIBER_ONLY and frozenset() in strata:
            raise InvalidResolutionData("exceptional-fiber data must not contain the empty subset")
        object.__setattr__(self, "open_strata", strata)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def from_closed(
        cls,
        components: Iterable[Component],
        closed_strata: Mapping[Stratum, BiPoly],
        dimension: int,
        mode: Union[ResolutionMode, str] = ResolutionMode.FULL_VARIETY,
        description: str = "",
    ) -> "ResolutionData":
        closed = {frozenset(stratum): poly for stratum, poly in closed_strata.items()}
        return cls(tuple(components), open_from_closed_strata(closed), dimension, ResolutionMode(mode), description)

    def discrepancy(self, component_id: str) -> Fraction:
        for component in self.components:
            if component.id == component_id:
                return component.discrepancy
        raise KeyError(component_id)

    @property
    def is_gorenstein(self) -> bool:
        return all(component.is_gorenstein for component in self.components)

    def sorted_strata(self) -> Iterable[Tuple[Stratum, BiPoly]]:
        for stratum in sorted(self.open_strata, key=stratum_order):
            yield stratum, self.open_strata[stratum]

    def closed_strata(self) -> Dict[Stratum, BiPoly]:
        return closed_from_open_strata(self.open_strata, include_empty=self.mode is ResolutionMode.FULL_VARIETY)
