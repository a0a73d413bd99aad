# ring_calculator.py
"""
RingCalculator - orbifold pairing and cup product in the two exact regimes.

[pt/G] (class algebra):
    threepoint(C1, C2, C3) = (1/|G|) #{(a, b, c) in C1 x C2 x C3 : abc = 1}
    <e_C1, e_C2>           = (1/|G|) #{(a, b) in C1 x C2 : ab = 1}
                           = |C1|/|G| if C2 = C1^-1 else 0
    e_a u e_b              = sum_d threepoint(a, b, d^-1) * |G|/|C_d| e_d

With this normalization the structure constants are the class-sum
convolution constants: z_a z_b = sum_d n_ab^d z_d.

Abelian [C^n/G] (contractible sectors):
    e_g u e_h = e_gh   if iota(g) + iota(h) = iota(gh)
              = 0      otherwise
"""

import logging
from fractions import Fraction
from typing import List

import numpy as np

from model.fingroup import FiniteMatrixGroup
from model.graded import GradedDimensions, OrbClass, RingTable, freeze_cube, zero_cube
from model.linalg import rational_determinant
from model.sector import GEOMETRY_LINEAR, GEOMETRY_POINT, InertiaDecomposition
from model.utils.errors import NonAbelian, SemanticError, UnsupportedGeometry
from model.verification import VerificationReport

logger = logging.getLogger(__name__)

PTG_NORMALIZATION = "class-sum basis; <e_C, e_(C^-1)> = |C|/|G|; counting weight 1/|G|"
ABELIAN_NORMALIZATION = "age-additive product on contractible sectors; no pairing on a noncompact quotient"


class RingCalculator:
    """Pairing, three-point counts, cup products and the ring axiom suite."""

    @staticmethod
    def _class_members(G: FiniteMatrixGroup, c: int) -> np.ndarray:
        classes = G.conjugacy_classes
        if not 0 <= c < len(classes):
            raise SemanticError(f"Class index {c} out of range (group has {len(classes)} classes)")
        return np.array(classes[c].member_indices, dtype=np.int64)

    @classmethod
    def threepoint_ptG(cls, G: FiniteMatrixGroup, c1: int, c2: int, c3: int) -> Fraction:
        """
        Degree-zero three-point count on [pt/G].

        Returns:
            (1/|G|) * #{(a, b, c) in C1 x C2 x C3 : abc = 1}
        """
        a = cls._class_members(G, c1)
        b = cls._class_members(G, c2)
        cls._class_members(G, c3)
        products = G.multiplication_table[np.ix_(a, b)]
        closing = G.inverse_table[products]
        count = int(np.count_nonzero(G.class_lookup[closing] == c3))
        return Fraction(count, G.order)

    @classmethod
    def pairing_ptG(cls, G: FiniteMatrixGroup, c1: int, c2: int) -> Fraction:
        """(1/|G|) * #{(a, b) in C1 x C2 : ab = 1}."""
        a = cls._class_members(G, c1)
        b = cls._class_members(G, c2)
        products = G.multiplication_table[np.ix_(a, b)]
        return Fraction(int(np.count_nonzero(products == 0)), G.order)

    @staticmethod
    def _product_counts(G: FiniteMatrixGroup, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """counts[d] = #{(x, y) in A x B : xy in C_d}."""
        products = G.multiplication_table[np.ix_(a, b)].ravel()
        return np.bincount(G.class_lookup[products], minlength=len(G.conjugacy_classes))

    @classmethod
    def ring_table_ptG(cls, G: FiniteMatrixGroup, dec: InertiaDecomposition) -> RingTable:
        """
        Full Frobenius table of H*_orb([pt/G]).

        threepoint(a, b, d^-1) = counts[d]/|G|, so c_ab^d = counts[d]/|C_d|.
        """
        classes = G.conjugacy_classes
        k = len(classes)
        members = [np.array(cc.member_indices, dtype=np.int64) for cc in classes]
        cube = zero_cube(k)
        for a in range(k):
            for b in range(k):
                counts = cls._product_counts(G, members[a], members[b])
                for d in range(k):
                    if counts[d]:
                        cube[a][b][d] = Fraction(int(counts[d]), classes[d].size)
        gram = tuple(
            tuple(Fraction(classes[a].size, G.order) if b == G.inverse_class(a) else Fraction(0) for b in range(k))
            for a in range(k)
        )
        logger.debug(f"[pt/G] ring table of rank {k}")
        return RingTable(
            basis=dec.sectors,
            degrees=tuple(2 * s.iota for s in dec.sectors),
            structure_constants=freeze_cube(cube),
            gram=gram,
            geometry=GEOMETRY_POINT,
            normalization=PTG_NORMALIZATION,
        )

    @classmethod
    def cup_product_ptG(cls, G: FiniteMatrixGroup, x: OrbClass, y: OrbClass,
                        table: RingTable = None) -> OrbClass:
        if table is None:
            from services.sector_calculator import SectorCalculator
            table = cls.ring_table_ptG(G, SectorCalculator.inertia(G, GEOMETRY_POINT))
        return table.multiply(x, y)

    @staticmethod
    def class_sum_convolution(G: FiniteMatrixGroup) -> List[List[List[int]]]:
        """
        Brute-force class algebra: n[a][b][d] = #{(g1, g2) in C_a x C_b : g1 g2 = r_d}
        for the representative r_d of class d.
        """
        classes = G.conjugacy_classes
        k = len(classes)
        n = [[[0] * k for _ in range(k)] for _ in range(k)]
        for d, cc in enumerate(classes):
            r = cc.representative_index
            for g1 in range(G.order):
                g2 = G.multiply(G.inverse(g1), r)
                n[G.class_of(g1)][G.class_of(g2)][d] += 1
        return n

    @staticmethod
    def _check_abelian_linear(dec: InertiaDecomposition):
        if dec.geometry_kind != GEOMETRY_LINEAR:
            raise UnsupportedGeometry(f"Age-additive product needs a linear quotient, got '{dec.geometry_kind}'")
        if not dec.group.is_abelian:
            raise NonAbelian("Cup product on a non-abelian linear quotient is not determined by sector data")

    @classmethod
    def cup_product_abelian_linear(cls, dec: InertiaDecomposition, a: int, b: int) -> OrbClass:
        """e_a u e_b on an abelian [C^n/G]: e_ab when ages add, else 0."""
        cls._check_abelian_linear(dec)
        for s in (a, b):
            if not 0 <= s < len(dec.sectors):
                raise SemanticError(f"Sector index {s} out of range (there are {len(dec.sectors)} sectors)")
        G = dec.group
        product = G.multiply(dec.sectors[a].representative_index, dec.sectors[b].representative_index)
        d = G.class_of(product)
        if dec.sectors[a].iota + dec.sectors[b].iota == dec.sectors[d].iota:
            return OrbClass.basis(d)
        return OrbClass.zero()

    @classmethod
    def ring_table_abelian_linear(cls, dec: InertiaDecomposition) -> RingTable:
        cls._check_abelian_linear(dec)
        k = len(dec.sectors)
        cube = zero_cube(k)
        for a in range(k):
            for b in range(k):
                for d, c in cls.cup_product_abelian_linear(dec, a, b).coefficients:
                    cube[a][b][d] = c
        return RingTable(
            basis=dec.sectors,
            degrees=tuple(2 * s.iota for s in dec.sectors),
            structure_constants=freeze_cube(cube),
            gram=None,
            geometry=GEOMETRY_LINEAR,
            normalization=ABELIAN_NORMALIZATION,
        )

    @staticmethod
    def gram_determinant(table: RingTable) -> Fraction:
        if table.gram is None:
            raise UnsupportedGeometry("No pairing is defined on a noncompact linear quotient")
        return rational_determinant(table.gram)

    @classmethod
    def verify_ring_axioms(cls, table: RingTable, graded: GradedDimensions) -> VerificationReport:
        """
        Exhaustive checks over all basis triples.

        Returns:
            VerificationReport; a failure names the offending basis tuple
        """
        k = table.rank
        e = [OrbClass.basis(i) for i in range(k)]
        report = VerificationReport(subject=f"ring table of rank {k} ({table.geometry})")
        products = [[table.basis_product(a, b) for b in range(k)] for a in range(k)]

        bad = None
        for a in range(k):
            for b in range(k):
                left_ab = products[a][b]
                for c in range(k):
                    if table.multiply(left_ab, e[c]) != table.multiply(e[a], products[b][c]):
                        bad = [a, b, c]
                        break
                if bad:
                    break
            if bad:
                break
        report.add('associativity', bad is None, '(a u b) u c = a u (b u c)', bad)

        bad = next(([a] for a in range(k) if products[0][a] != e[a] or products[a][0] != e[a]), None)
        report.add('unit', bad is None, 'e_(1) is a two-sided unit', bad)

        integral = all(s.iota.denominator == 1 for s in table.basis)
        form = 'supercommutativity (all degrees even, signs trivial)' if integral else 'commutativity (fractional degrees)'
        bad = next(([a, b] for a in range(k) for b in range(a + 1, k) if products[a][b] != products[b][a]), None)
        report.add('commutativity', bad is None, form, bad)

        bad = next((
            [a, b, d] for a, b, d, _ in table.sparse_constants()
            if table.degrees[d] != table.degrees[a] + table.degrees[b]
        ), None)
        report.add('degree_additivity', bad is None, 'nonzero products land in deg a + deg b', bad)

        observed = GradedDimensions.from_degrees(table.degrees)
        report.add('graded_dimensions', observed == graded, 'basis degrees match the Poincare table')

        if table.gram is not None:
            bad = next(([a, b] for a in range(k) for b in range(k) if table.gram[a][b] != table.gram[b][a]), None)
            report.add('gram_symmetric', bad is None, 'pairing is symmetric', bad)
            det = cls.gram_determinant(table)
            report.add('gram_nondegenerate', det != 0, f"Gram determinant {det}")
            bad = None
            for a in range(k):
                for b in range(k):
                    for c in range(k):
                        if table.pair(products[a][b], e[c]) != table.pair(e[a], products[b][c]):
                            bad = [a, b, c]
                            break
                    if bad:
                        break
                if bad:
                    break
            report.add('frobenius', bad is None, '<a u b, c> = <a, b u c>', bad)

        if table.geometry == GEOMETRY_POINT:
            report.add('untwisted_subring', products[0][0] == e[0],
                       'nontwisted sector is the ordinary ring of the point')
        return report

    @classmethod
    def verify_against_oracle(cls, G: FiniteMatrixGroup, table: RingTable) -> VerificationReport:
        """Compare [pt/G] structure constants with the brute-force class-sum convolution."""
        oracle = cls.class_sum_convolution(G)
        k = table.rank
        bad = next((
            [a, b, d] for a in range(k) for b in range(k) for d in range(k)
            if table.structure_constants[a][b][d] != oracle[a][b][d]
        ), None)
        report = VerificationReport(subject=f"class algebra of order-{G.order} group")
        report.add('oracle', bad is None, 'three-point constants equal class-sum convolution constants', bad)
        return report
