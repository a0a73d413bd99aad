# sector.py: twisted sectors of global quotients
"""
Sector and InertiaDecomposition: the inertia decomposition of [C^n/G] or
[pt/G], one sector per conjugacy class. Built by SectorCalculator.inertia().
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from model.fingroup import FiniteMatrixGroup
from model.utils.response import render_rational

GEOMETRY_POINT = 'point'
GEOMETRY_LINEAR = 'linear'
GEOMETRY_WPS = 'wps'
GEOMETRIES = (GEOMETRY_POINT, GEOMETRY_LINEAR)


@dataclass(frozen=True)
class Sector:
    """
    One twisted sector X_(g).

    Attributes:
        class_index: index into the group's conjugacy class list
        iota: degree shifting number (age)
        fixed_dim: complex dimension of the fixed locus
        inverse_sector_index: sector of the inverse class
        representative_index: canonical representative element
        word: representative written over the generators
        order: order of the representative
        class_size: number of elements in the class
    """

    class_index: int
    iota: Fraction
    fixed_dim: int
    inverse_sector_index: int
    representative_index: int
    word: str
    order: int
    class_size: int

    @property
    def is_untwisted(self) -> bool:
        return self.class_index == 0

    def to_json(self) -> dict:
        return {
            'class': self.class_index,
            'repr': self.word,
            'iota': render_rational(self.iota),
            'fixedDim': self.fixed_dim,
            'inverse': self.inverse_sector_index,
            'order': self.order,
            'classSize': self.class_size,
        }


@dataclass(frozen=True)
class InertiaDecomposition:
    group: FiniteMatrixGroup
    sectors: Tuple[Sector, ...]
    geometry_kind: str

    @property
    def complex_dimension(self) -> int:
        return 0 if self.geometry_kind == GEOMETRY_POINT else self.group.dimension

    @property
    def iotas(self) -> List[Fraction]:
        return [s.iota for s in self.sectors]

    def sector_for_element(self, element_index: int) -> Sector:
        return self.sectors[self.group.class_of(element_index)]

    def sector_by_word(self, word: str) -> Sector:
        return self.sector_for_element(self.group.element_from_word(word))

    def to_json(self) -> dict:
        return {
            'geometry': self.geometry_kind,
            'dimension': self.complex_dimension,
            'groupOrder': self.group.order,
            'sectors': [s.to_json() for s in self.sectors],
        }
