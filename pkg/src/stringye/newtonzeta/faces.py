"""Compact faces of the Newton polyhedron of a diagonal polynomial."""

from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

from stringye.brieskorn import proper_subsets
from stringye.newtonzeta.cones import SimplicialCone, diagonal_cone


@dataclass(frozen=True)
class FaceData:
    """The face spanned by ``a_i e_i`` for the variables outside ``subset``."""

    exponents: Tuple[int, ...]
    subset: FrozenSet[int]

    @property
    def dimension(self) -> int:
        return len(self.exponents) - len(self.subset) - 1

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(index for index in range(1, len(self.exponents) + 1) if index not in self.subset)

    @property
    def cone(self) -> SimplicialCone:
        return diagonal_cone(self.exponents, self.subset)


def diagonal_faces(exponents: Sequence[int]) -> List[FaceData]:
    exponents = tuple(exponents)
    return [FaceData(exponents, subset) for subset in proper_subsets(len(exponents))]
