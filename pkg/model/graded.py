# graded.py: graded dimension tables, orbifold classes and ring tables
"""
Value types for orbifold cohomology:

- GradedDimensions: degree -> dimension table (the orbifold Poincare polynomial)
- OrbClass: an element of H*_orb in the sector basis e_(g)
- RingTable: pairing matrix and structure constants over the sector basis
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from model.utils.response import OrderedMap, render_rational


@dataclass(frozen=True)
class GradedDimensions:
    """entries are (degree, dimension) pairs ascending by degree, zero dimensions dropped."""

    entries: Tuple[Tuple[Fraction, int], ...]

    @classmethod
    def from_counts(cls, counts: Dict) -> 'GradedDimensions':
        return cls(tuple(
            (Fraction(degree), int(dim)) for degree, dim in sorted(counts.items(), key=lambda kv: Fraction(kv[0])) if dim
        ))

    @classmethod
    def from_degrees(cls, degrees: Iterable) -> 'GradedDimensions':
        return cls.from_counts(Counter(Fraction(d) for d in degrees))

    @property
    def total_dim(self) -> int:
        return sum(dim for _, dim in self.entries)

    @property
    def degrees(self) -> List[Fraction]:
        return [degree for degree, _ in self.entries]

    def dimension(self, degree) -> int:
        degree = Fraction(degree)
        return next((dim for d, dim in self.entries if d == degree), 0)

    def as_dict(self) -> Dict[Fraction, int]:
        return dict(self.entries)

    def duality_defect(self, top) -> Optional[Fraction]:
        """First degree d with dim H^d != dim H^(top - d), or None when the table is symmetric."""
        top = Fraction(top)
        for degree, dim in self.entries:
            if self.dimension(top - degree) != dim:
                return degree
        return None

    def evaluate_at_one(self) -> int:
        return self.total_dim

    def to_json(self) -> OrderedMap:
        return OrderedMap((render_rational(degree), dim) for degree, dim in self.entries)


@dataclass(frozen=True)
class OrbClass:
    """Finitely supported combination sum c_i e_i over sector indices (zero coefficients dropped)."""

    coefficients: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def of(cls, mapping: Dict[int, object]) -> 'OrbClass':
        return cls(tuple(
            (int(i), Fraction(c)) for i, c in sorted(mapping.items()) if Fraction(c)
        ))

    @classmethod
    def basis(cls, index: int, coefficient=1) -> 'OrbClass':
        return cls.of({index: coefficient})

    @classmethod
    def zero(cls) -> 'OrbClass':
        return cls()

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coefficients)

    def coefficient(self, index: int) -> Fraction:
        return self.as_dict().get(index, Fraction(0))

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: 'OrbClass') -> 'OrbClass':
        total = self.as_dict()
        for i, c in other.coefficients:
            total[i] = total.get(i, Fraction(0)) + c
        return OrbClass.of(total)

    def __sub__(self, other: 'OrbClass') -> 'OrbClass':
        return self + other.scale(-1)

    def scale(self, factor) -> 'OrbClass':
        factor = Fraction(factor)
        return OrbClass.of({i: c * factor for i, c in self.coefficients})

    def to_json(self) -> Dict[str, str]:
        return {str(i): render_rational(c) for i, c in self.coefficients}


@dataclass(frozen=True)
class RingTable:
    """
    Orbifold cup product and pairing on a sector basis.

    Attributes:
        basis: sectors in class order; basis[0] is the unit e_(1)
        degrees: real degree 2*iota of each basis element
        structure_constants: c[a][b][d] with e_a u e_b = sum_d c[a][b][d] e_d
        gram: pairing matrix, or None where no pairing is defined (noncompact models)
        geometry: 'point' or 'linear'
        normalization: how the basis was scaled, recorded in output metadata
    """

    basis: Tuple
    degrees: Tuple[Fraction, ...]
    structure_constants: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    gram: Optional[Tuple[Tuple[Fraction, ...], ...]]
    geometry: str
    normalization: str = ''
    metadata: Dict[str, str] = field(default_factory=dict, compare=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_product(self, a: int, b: int) -> OrbClass:
        row = self.structure_constants[a][b]
        return OrbClass.of({d: c for d, c in enumerate(row) if c})

    def multiply(self, x: OrbClass, y: OrbClass) -> OrbClass:
        """Bilinear extension of the basis products."""
        total: Dict[int, Fraction] = {}
        for a, ca in x.coefficients:
            for b, cb in y.coefficients:
                for d, c in enumerate(self.structure_constants[a][b]):
                    if c:
                        total[d] = total.get(d, Fraction(0)) + ca * cb * c
        return OrbClass.of(total)

    def pair(self, x: OrbClass, y: OrbClass) -> Fraction:
        if self.gram is None:
            raise ValueError("No pairing is defined on this ring table")
        return sum((ca * cb * self.gram[a][b] for a, ca in x.coefficients for b, cb in y.coefficients), Fraction(0))

    def sparse_constants(self) -> List[Tuple[int, int, int, Fraction]]:
        return [
            (a, b, d, c)
            for a, plane in enumerate(self.structure_constants)
            for b, row in enumerate(plane)
            for d, c in enumerate(row) if c
        ]

    def to_json(self) -> dict:
        data = {
            'geometry': self.geometry,
            'basis': [s.to_json() for s in self.basis],
            'degrees': [render_rational(d) for d in self.degrees],
            'structureConstants': [[a, b, d, render_rational(c)] for a, b, d, c in self.sparse_constants()],
            'gram': None if self.gram is None else [[render_rational(v) for v in row] for row in self.gram],
            'normalization': self.normalization,
        }
        data.update(self.metadata)
        return data


def zero_cube(rank: int) -> List[List[List[Fraction]]]:
    return [[[Fraction(0)] * rank for _ in range(rank)] for _ in range(rank)]


def freeze_cube(cube: Sequence) -> Tuple[Tuple[Tuple[Fraction, ...], ...], ...]:
    return tuple(tuple(tuple(row) for row in plane) for plane in cube)
