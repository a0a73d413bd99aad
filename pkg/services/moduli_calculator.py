# moduli_calculator.py
"""
ModuliCalculator - bookkeeping for moduli of orbifold stable maps.

Genus-zero, degree-zero maps to [pt/G] are counted exactly:

    count(C_1, ..., C_k) = (1/|G|) #{(h_1, ..., h_k) in C_1 x ... x C_k : h_1 ... h_k = 1}

The count runs as k-1 convolutions of a vector over group elements, one per
class, so the cost is k*|G|*|C| table lookups. k = 2 reproduces the pairing and
k = 3 the three-point function.

Virtual dimension of the moduli of maps of genus g with k marks in class A:

    d = c_1(TX).A + (n - 3)(1 - g) + k - iota(x),   virtual dimension 2d
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from model.fingroup import FiniteMatrixGroup
from model.graded import OrbClass
from model.utils.errors import SemanticError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SectorTuple:
    """The type x = (X_(g_1), ..., X_(g_k)) of a marked map, as class indices."""

    class_indices: Tuple[int, ...]

    def __post_init__(self):
        if not self.class_indices:
            raise SemanticError("A sector type needs at least one marked point")

    @property
    def marks(self) -> int:
        return len(self.class_indices)

    def to_json(self) -> List[int]:
        return list(self.class_indices)


@dataclass(frozen=True)
class DimensionInput:
    c1a: Fraction
    complex_dim: int
    genus: int
    marks: int
    iotas: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.complex_dim < 0:
            raise SemanticError(f"Dimension must be >= 0, got {self.complex_dim}")
        if self.genus < 0:
            raise SemanticError(f"Genus must be >= 0, got {self.genus}")
        if self.marks < 0:
            raise SemanticError(f"Number of marks must be >= 0, got {self.marks}")
        if len(self.iotas) != self.marks:
            raise SemanticError(f"Expected {self.marks} iota values, got {len(self.iotas)}")
        if any(i < 0 for i in self.iotas):
            raise SemanticError("Degree shifting numbers are nonnegative")

    @property
    def total_iota(self) -> Fraction:
        return sum(self.iotas, Fraction(0))


class ModuliCalculator:
    """Type classification, constant-map counts and the virtual dimension."""

    @staticmethod
    def _validate_classes(G: FiniteMatrixGroup, classes: Sequence[int]):
        count = len(G.conjugacy_classes)
        for c in classes:
            if not 0 <= c < count:
                raise SemanticError(f"Class index {c} out of range (group has {count} classes)")

    @staticmethod
    def classify_type(G: FiniteMatrixGroup, elements: Sequence[int]) -> SectorTuple:
        for x in elements:
            if not 0 <= x < G.order:
                raise SemanticError(f"Element index {x} out of range")
        return SectorTuple(tuple(G.class_of(x) for x in elements))

    @staticmethod
    def _reachable(G: FiniteMatrixGroup, classes: Sequence[int]) -> np.ndarray:
        """All products h_1 ... h_j with h_i in the given classes."""
        table = G.multiplication_table
        reached = np.array([0], dtype=np.int64)
        for c in classes:
            members = np.array(G.conjugacy_classes[c].member_indices, dtype=np.int64)
            reached = np.unique(table[np.ix_(reached, members)])
        return reached

    @classmethod
    def component_nonempty_ptG(cls, G: FiniteMatrixGroup, sector_type: SectorTuple) -> bool:
        """
        Some h_i in C_i multiply to 1. Meet in the middle: products of the
        first half must meet inverses of products of the second half.
        """
        classes = sector_type.class_indices
        cls._validate_classes(G, classes)
        half = len(classes) // 2
        left = cls._reachable(G, classes[:half])
        right = cls._reachable(G, classes[half:])
        return bool(np.intersect1d(left, G.inverse_table[right]).size)

    @classmethod
    def kpoint_constant_count(cls, G: FiniteMatrixGroup, sector_type: SectorTuple) -> Fraction:
        """
        Exact genus-zero degree-zero correlator of [pt/G].

        Args:
            G: enumerated group
            sector_type: k >= 2 class indices

        Returns:
            (1/|G|) * number of k-tuples from the classes whose product is 1
        """
        classes = sector_type.class_indices
        if len(classes) < 2:
            raise SemanticError("A constant-map count needs at least two marked points")
        cls._validate_classes(G, classes)
        table = G.multiplication_table
        # arbitrary precision once counts could leave int64
        dtype = object if G.order ** (len(classes) - 1) >= 2 ** 62 else np.int64
        v = np.zeros(G.order, dtype=dtype)
        for x in G.conjugacy_classes[classes[0]].member_indices:
            v[x] += 1
        for c in classes[1:]:
            w = np.zeros(G.order, dtype=dtype)
            for x in G.conjugacy_classes[c].member_indices:
                w[table[:, x]] += v
            v = w
        return Fraction(int(v[0]), G.order)

    @classmethod
    def correlator_ptG(cls, G: FiniteMatrixGroup, insertions: Sequence[OrbClass]) -> Fraction:
        """Multilinear extension of kpoint_constant_count to orbifold classes."""
        total = Fraction(0)
        for choice in itertools.product(*(x.coefficients for x in insertions)):
            weight = Fraction(1)
            for _, c in choice:
                weight *= c
            total += weight * cls.kpoint_constant_count(G, SectorTuple(tuple(i for i, _ in choice)))
        return total

    @staticmethod
    def virtual_dimension(inp: DimensionInput) -> Fraction:
        """2d with d = c1A + (n - 3)(1 - g) + k - iota(x)."""
        d = inp.c1a + (inp.complex_dim - 3) * (1 - inp.genus) + inp.marks - inp.total_iota
        return 2 * d

    @staticmethod
    def stability_check(genus: int, special_points: int) -> bool:
        """Constant components: genus 0 needs 3 special points, genus 1 needs 1."""
        if genus < 0 or special_points < 0:
            raise SemanticError("Genus and special point count are nonnegative")
        if genus == 0:
            return special_points >= 3
        if genus == 1:
            return special_points >= 1
        return True
