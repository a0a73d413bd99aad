# cohomology_calculator.py
"""
CohomologyCalculator - orbifold cohomology as graded dimension tables.

Linear and point quotients: every sector H^g/C(g) is contractible and adds
one dimension in degree 2*iota(g). This is the age-graded table the McKay
correspondence compares; no pairing is claimed for the noncompact models.

Weighted projective spaces P(w_0..w_n): the sector of q in [0, 1) is the
sub-space P(w_i : q*w_i integral), contributing one dimension in each degree
2*iota(q) + 2j for 0 <= j <= its dimension, where

    iota(q) = sum over non-fixed weights of frac(q * w_i)
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from model.graded import GradedDimensions
from model.sector import GEOMETRY_LINEAR, InertiaDecomposition
from model.utils.errors import NotSL, UnsupportedGeometry
from model.utils.response import OrderedMap, render_rational
from model.wps import WeightedProjectiveSpace, WpsSector

logger = logging.getLogger(__name__)


def _frac(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


@dataclass(frozen=True)
class McKayReport:
    class_count: int
    degrees: GradedDimensions
    age_histogram: Tuple[Tuple[Fraction, int], ...]
    junior_classes: int

    @property
    def predicted_betti_total(self) -> int:
        return self.class_count

    @property
    def bijection_holds(self) -> bool:
        return self.class_count == self.degrees.total_dim

    def to_json(self) -> dict:
        return {
            'classCount': self.class_count,
            'degrees': self.degrees.to_json(),
            'totalDim': self.degrees.total_dim,
            'predictedBettiTotal': self.predicted_betti_total,
            'ageHistogram': OrderedMap((render_rational(a), c) for a, c in self.age_histogram),
            'juniorClasses': self.junior_classes,
            'bijection': self.bijection_holds,
        }


class CohomologyCalculator:
    """Orbifold Poincare tables, Euler numbers and the McKay class-count check."""

    @staticmethod
    def orbifold_poincare_linear(dec: InertiaDecomposition) -> GradedDimensions:
        """Age-graded table: one dimension in degree 2*iota per sector."""
        return GradedDimensions.from_degrees(2 * s.iota for s in dec.sectors)

    @staticmethod
    def wps_sectors(X: WeightedProjectiveSpace) -> List[WpsSector]:
        """
        All sectors of P(w), ascending in q (q = 0 first).

        Args:
            X: weighted projective space

        Returns:
            One WpsSector per distinct q in the union of {k/w_i : 0 <= k < w_i}
        """
        values = sorted({Fraction(k, w) for w in X.weights for k in range(w)})
        sectors = []
        for q in values:
            fixed = tuple(w for w in X.weights if (q * w).denominator == 1)
            iota = sum((_frac(q * w) for w in X.weights if (q * w).denominator != 1), Fraction(0))
            sectors.append(WpsSector(q=q, fixed_weights=fixed, iota=iota))
        logger.debug(f"{X.label()}: {len(sectors)} sectors")
        return sectors

    @classmethod
    def wps_sector_involution(cls, X: WeightedProjectiveSpace) -> List[int]:
        """Index of the sector of 1 - q (mod 1) for every sector."""
        sectors = cls.wps_sectors(X)
        position = {s.q: i for i, s in enumerate(sectors)}
        return [position[_frac(1 - s.q)] for s in sectors]

    @classmethod
    def orbifold_poincare_wps(cls, X: WeightedProjectiveSpace) -> GradedDimensions:
        degrees = []
        for s in cls.wps_sectors(X):
            degrees.extend(2 * s.iota + 2 * j for j in range(s.dimension + 1))
        return GradedDimensions.from_degrees(degrees)

    @classmethod
    def orbifold_euler(cls, source: Union[InertiaDecomposition, WeightedProjectiveSpace]) -> int:
        """Sum of the Euler numbers of all sectors."""
        if isinstance(source, WeightedProjectiveSpace):
            return sum(len(s.fixed_weights) for s in cls.wps_sectors(source))
        return len(source.sectors)

    @classmethod
    def wps_euler_by_sector(cls, X: WeightedProjectiveSpace) -> List[int]:
        return [len(s.fixed_weights) for s in cls.wps_sectors(X)]

    @classmethod
    def mckay_report(cls, dec: InertiaDecomposition) -> McKayReport:
        """
        Class count against the age-graded table of an SL quotient.

        Raises:
            UnsupportedGeometry: not a linear quotient
            NotSL: some element has determinant != 1
        """
        if dec.geometry_kind != GEOMETRY_LINEAR:
            raise UnsupportedGeometry(f"mckay needs a linear quotient, got '{dec.geometry_kind}'")
        G = dec.group
        for s in dec.sectors:
            det = G.determinant(s.representative_index)
            if det != 1:
                raise NotSL(
                    f"Group is not in SL({G.dimension}): det({s.word}) = {det.to_expression()}",
                    details={'sector': s.class_index, 'determinant': det.to_expression()}
                )
        histogram = Counter(s.iota for s in dec.sectors)
        return McKayReport(
            class_count=len(dec.sectors),
            degrees=cls.orbifold_poincare_linear(dec),
            age_histogram=tuple(sorted(histogram.items())),
            junior_classes=histogram.get(Fraction(1), 0),
        )
