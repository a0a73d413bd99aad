# sector_calculator.py
"""
SectorCalculator - inertia decompositions and degree shifting numbers.

Degree shift of an element g of order m whose eigenvalues are
exp(2 pi i k/m) with multiplicity mult_k (0 <= k < m):

    iota(g) = sum_k mult_k * k / m

The nontwisted sector (identity class) always comes first, with iota 0 and
the full dimension as its fixed locus. Point quotients [pt/G] are the n = 0
case: every iota is 0 and every fixed locus is a point.

check_sector_identities() and check_wps_sector_identities() re-derive the standard sector
identities from the computed data:

- iota integral everywhere iff every element has determinant 1, and
  element-wise det(g) = zeta_m^s forces iota(g) = s/m mod 1
- iota(g) + iota(g^-1) = n - dim X_(g)
- iota >= 0, with equality only on the nontwisted sector
"""

import logging
from fractions import Fraction
from typing import Optional

from model.cyclotomic import Cyclotomic, lcm
from model.fingroup import EigenvalueProfile, FiniteMatrixGroup
from model.sector import GEOMETRIES, GEOMETRY_POINT, InertiaDecomposition, Sector
from model.utils.errors import UnsupportedGeometry
from model.verification import VerificationReport
from model.wps import WeightedProjectiveSpace

logger = logging.getLogger(__name__)


class SectorCalculator:
    """Builds sectors and checks their invariants."""

    @staticmethod
    def degree_shift(profile: EigenvalueProfile) -> Fraction:
        """
        Age of an element from its eigenvalue profile.

        Args:
            profile: multiplicities of exp(2 pi i k/m), 0 <= k < m

        Returns:
            Exact rational in [0, n)
        """
        m = profile.order
        return sum((Fraction(k * mult, m) for k, mult in enumerate(profile.multiplicities)), Fraction(0))

    @classmethod
    def inertia(cls, G: FiniteMatrixGroup, geometry: str = 'linear') -> InertiaDecomposition:
        """
        One sector per conjugacy class, in class order.

        Args:
            G: enumerated group
            geometry: 'linear' for [C^n/G], 'point' for [pt/G]

        Returns:
            InertiaDecomposition with sector 0 the nontwisted sector
        """
        if geometry not in GEOMETRIES:
            raise UnsupportedGeometry(f"Inertia decomposition needs geometry in {GEOMETRIES}, got '{geometry}'")
        classes = G.conjugacy_classes
        sectors = []
        for index, cc in enumerate(classes):
            g = cc.representative_index
            if geometry == GEOMETRY_POINT:
                iota, fixed_dim = Fraction(0), 0
            else:
                profile = G.eigenvalue_profile(g)
                iota, fixed_dim = cls.degree_shift(profile), profile.fixed_dimension
            sectors.append(Sector(
                class_index=index,
                iota=iota,
                fixed_dim=fixed_dim,
                inverse_sector_index=G.inverse_class(index),
                representative_index=g,
                word=G.word(g),
                order=cc.order,
                class_size=cc.size,
            ))
        logger.debug(f"Inertia decomposition: {len(sectors)} sectors ({geometry})")
        return InertiaDecomposition(group=G, sectors=tuple(sectors), geometry_kind=geometry)

    @staticmethod
    def determinant_exponent(G: FiniteMatrixGroup, g: int) -> Optional[int]:
        """s with det(g) = zeta_m^s (m the order of g), or None when det is no such root of unity."""
        m = G.element_order(g)
        field = lcm(G.conductor, m)
        det = G.determinant(g).embed(field)
        for s in range(m):
            if det == Cyclotomic.zeta(field, s * (field // m)):
                return s
        return None

    @classmethod
    def check_sector_identities(cls, dec: InertiaDecomposition) -> VerificationReport:
        """
        Verify the sector identities on a linear or point decomposition.

        Returns:
            VerificationReport with checks 'integrality', 'determinant_congruence',
            'complementarity', 'involution' and 'positivity'
        """
        G = dec.group
        n = dec.complex_dimension
        report = VerificationReport(subject=f"sectors of order-{G.order} group ({dec.geometry_kind})")
        point = dec.geometry_kind == GEOMETRY_POINT

        # (a) integrality <=> SL, and the element-wise congruence
        all_integral = all(s.iota.denominator == 1 for s in dec.sectors)
        if point:
            report.add('integrality', all_integral, 'point quotient: every iota is 0')
            report.add('determinant_congruence', True, 'point quotient: no local action')
        else:
            non_sl = next((s.class_index for s in dec.sectors if G.determinant(s.representative_index) != 1), None)
            all_sl = non_sl is None
            report.add(
                'integrality', all_integral == all_sl,
                f"all iota integral: {all_integral}; all determinants 1: {all_sl}",
                None if all_integral == all_sl else non_sl,
            )
            bad = None
            for s in dec.sectors:
                exponent = cls.determinant_exponent(G, s.representative_index)
                if exponent is None or (s.iota - Fraction(exponent, s.order)).denominator != 1:
                    bad = s.class_index
                    break
            report.add('determinant_congruence', bad is None,
                       'det(g) = zeta_m^s implies iota(g) = s/m mod 1', bad)

        # (b) iota(g) + iota(g^-1) = n - dim X_(g)
        bad = next((
            s.class_index for s in dec.sectors
            if s.iota + dec.sectors[s.inverse_sector_index].iota != n - s.fixed_dim
        ), None)
        report.add('complementarity', bad is None, 'iota(g) + iota(g^-1) = n - fixedDim(g)', bad)

        bad = next((
            s.class_index for s in dec.sectors
            if dec.sectors[s.inverse_sector_index].inverse_sector_index != s.class_index
            or dec.sectors[s.inverse_sector_index].fixed_dim != s.fixed_dim
        ), None)
        report.add('involution', bad is None, 'I^2 = id and I preserves fixedDim', bad)

        # (c) positivity
        if point:
            bad = next((s.class_index for s in dec.sectors if s.iota != 0), None)
            report.add('positivity', bad is None, 'point quotient: iota = 0 on every sector', bad)
        else:
            bad = next((
                s.class_index for s in dec.sectors
                if s.iota < 0 or (s.iota == 0) != s.is_untwisted
            ), None)
            report.add('positivity', bad is None, 'iota >= 0 with equality only on the nontwisted sector', bad)
        return report

    @staticmethod
    def check_wps_sector_identities(X: WeightedProjectiveSpace) -> VerificationReport:
        """Sector identities on P(w): complementarity under q -> 1-q, involution, positivity."""
        from services.cohomology_calculator import CohomologyCalculator

        sectors = CohomologyCalculator.wps_sectors(X)
        involution = CohomologyCalculator.wps_sector_involution(X)
        n = X.complex_dimension
        report = VerificationReport(subject=X.label())

        bad = next((
            i for i, s in enumerate(sectors)
            if s.iota + sectors[involution[i]].iota != n - s.dimension
        ), None)
        report.add('complementarity', bad is None, 'iota(q) + iota(1-q) = n - dim X_(q)', bad)

        bad = next((
            i for i, s in enumerate(sectors)
            if involution[involution[i]] != i or sectors[involution[i]].fixed_weights != s.fixed_weights
        ), None)
        report.add('involution', bad is None, 'q -> 1-q is an involution preserving fixed weights', bad)

        bad = next((i for i, s in enumerate(sectors) if s.iota < 0 or (s.iota == 0) != (s.q == 0)), None)
        report.add('positivity', bad is None, 'iota >= 0 with equality only at q = 0', bad)
        return report
