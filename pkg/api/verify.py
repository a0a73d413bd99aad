# verify.py
"""
The verify command: every invariant suite, run on one input or on the
built-in corpus. Exit code 1 when any check fails.
"""

import itertools
from fractions import Fraction
from typing import List

from api import api_logger
from api.commands import Command, registry
from api.validators import KIND_WEIGHTED_PROJECTIVE, load_spec
from config import settings
from model import corpus
from model.fingroup import FiniteMatrixGroup, close
from model.graded import OrbClass
from model.sector import GEOMETRY_LINEAR, GEOMETRY_POINT, InertiaDecomposition
from model.utils.errors import NoLifts
from model.utils.response import ReportResponse
from model.verification import VerificationReport
from model.wps import WeightedProjectiveSpace
from services.cohomology_calculator import CohomologyCalculator
from services.goodmap_calculator import GoodMapCalculator
from services.moduli_calculator import DimensionInput, ModuliCalculator, SectorTuple
from services.ring_calculator import RingCalculator
from services.sector_calculator import SectorCalculator

EXHAUSTIVE_GROUP_ORDER = 48
ORACLE_GROUP_ORDER = 24
SYMMETRY_GROUP_ORDER = 12


class VerificationSuite:
    """Invariant suites per module, and the corpus run that aggregates them."""

    # ── fingroup ──

    @staticmethod
    def group_checks(G: FiniteMatrixGroup) -> VerificationReport:
        report = VerificationReport(subject=f"group of order {G.order}")
        classes = G.conjugacy_classes

        bad = next((i for i, cc in enumerate(classes) if cc.size * len(cc.centralizer_indices) != G.order), None)
        report.add('orbit_stabilizer', bad is None, '|class| * |centralizer| = |G|', bad)

        members = sorted(x for cc in classes for x in cc.member_indices)
        report.add('class_partition', members == list(range(G.order)), 'classes are disjoint and cover G')

        if G.order <= EXHAUSTIVE_GROUP_ORDER:
            bad = None
            for h in range(G.order):
                for i, cc in enumerate(classes):
                    image = sorted({G.conjugate_by(h, x) for x in cc.member_indices})
                    if image != list(cc.member_indices):
                        bad = [G.word(h), i]
                        break
                if bad:
                    break
            report.add('conjugation_invariance', bad is None, 'conjugation by h maps every class onto itself', bad)

            dets = [G.determinant(i) for i in range(G.order)]
            bad = next((
                [G.word(i), G.word(j)] for i in range(G.order) for j in range(G.order)
                if dets[G.multiply(i, j)] != dets[i] * dets[j]
            ), None)
            report.add('determinant_multiplicative', bad is None, 'det(gh) = det(g) det(h)', bad)

            bad = None
            for g in range(G.order):
                profile = G.eigenvalue_profile(g)
                m = profile.order
                for j in range(1, m):
                    power = G.power(g, j)
                    target = G.eigenvalue_profile(power)
                    step = m // target.order
                    pulled = [0] * target.order
                    for k, mult in enumerate(profile.multiplicities):
                        pulled[(k * j % m) // step] += mult
                    if tuple(pulled) != target.multiplicities:
                        bad = [G.word(g), j]
                        break
                if bad:
                    break
            report.add('profile_pullback', bad is None, 'profile of g^j from the profile of g', bad)
        return report

    # ── cohomology ──

    @staticmethod
    def cohomology_checks(dec: InertiaDecomposition) -> VerificationReport:
        report = VerificationReport(subject=f"cohomology ({dec.geometry_kind})")
        table = CohomologyCalculator.orbifold_poincare_linear(dec)
        n = dec.complex_dimension
        report.add('class_count', table.total_dim == len(dec.sectors), 'totalDim = number of conjugacy classes')
        report.add('euler', CohomologyCalculator.orbifold_euler(dec) == table.evaluate_at_one(),
                   'Euler number = Poincare table at t = 1')
        bad = next((d for d in table.degrees if not 0 <= d <= 2 * n), None)
        report.add('degree_range', bad is None, f'degrees within [0, {2 * n}]', None if bad is None else str(bad))
        if dec.geometry_kind == GEOMETRY_LINEAR:
            G = dec.group
            is_sl = all(G.determinant(s.representative_index) == 1 for s in dec.sectors)
            if is_sl:
                bad = next((d for d in table.degrees if d.denominator != 1 or d.numerator % 2), None)
                report.add('sl_even_degrees', bad is None, 'SL quotient: all degrees even integers',
                           None if bad is None else str(bad))
                mckay = CohomologyCalculator.mckay_report(dec)
                report.add('mckay_bijection', mckay.bijection_holds, 'class count = total dimension')
        return report

    # ── ring ──

    @staticmethod
    def ring_checks(dec: InertiaDecomposition) -> VerificationReport:
        G = dec.group
        graded = CohomologyCalculator.orbifold_poincare_linear(dec)
        report = VerificationReport(subject=f"ring ({dec.geometry_kind})")
        if dec.geometry_kind == GEOMETRY_POINT:
            table = RingCalculator.ring_table_ptG(G, dec)
            report.extend(RingCalculator.verify_ring_axioms(table, graded))
            if G.order <= ORACLE_GROUP_ORDER:
                report.extend(RingCalculator.verify_against_oracle(G, table))
            return report
        if not G.is_abelian:
            report.add('ring', True, 'not applicable: non-abelian linear quotient')
            return report
        table = RingCalculator.ring_table_abelian_linear(dec)
        report.extend(RingCalculator.verify_ring_axioms(table, graded))
        if G.dimension == 1 and len(G.generator_indices) == 1:
            # C/Z_n: e_z^k = e_(z^k) for k < n, and e_z^n = 0
            z = G.generator_indices[0]
            n = G.order
            e_z = OrbClass.basis(G.class_of(z))
            x = e_z
            bad = None
            for k in range(2, n + 1):
                x = table.multiply(x, e_z)
                expected = OrbClass.basis(G.class_of(G.power(z, k))) if k < n else OrbClass.zero()
                if x != expected:
                    bad = k
                    break
            report.add('truncation', bad is None, 'e_z^k = e_(z^k) for k < n and e_z^n = 0', bad)
        return report

    # ── moduli ──

    @staticmethod
    def counting_checks(G: FiniteMatrixGroup) -> VerificationReport:
        report = VerificationReport(subject=f"[pt/G] counts, order {G.order}")
        k = len(G.conjugacy_classes)
        counts = {}

        def count(classes):
            key = tuple(classes)
            if key not in counts:
                counts[key] = ModuliCalculator.kpoint_constant_count(G, SectorTuple(key))
            return counts[key]

        bad = next(([a, b] for a in range(k) for b in range(k)
                    if count((a, b)) != RingCalculator.pairing_ptG(G, a, b)), None)
        report.add('kpoint_pairing', bad is None, 'k = 2 count equals the pairing', bad)
        bad = next(([a, b, c] for a in range(k) for b in range(k) for c in range(k)
                    if count((a, b, c)) != RingCalculator.threepoint_ptG(G, a, b, c)), None)
        report.add('kpoint_threepoint', bad is None, 'k = 3 count equals the three-point function', bad)

        if G.order <= SYMMETRY_GROUP_ORDER:
            symmetric, vanishing = None, None
            for size in (2, 3, 4):
                for combo in itertools.combinations_with_replacement(range(k), size):
                    value = count(combo)
                    if symmetric is None and any(count(p) != value for p in itertools.permutations(combo)):
                        symmetric = list(combo)
                    nonempty = ModuliCalculator.component_nonempty_ptG(G, SectorTuple(combo))
                    if vanishing is None and (value == 0) == nonempty:
                        vanishing = list(combo)
            report.add('permutation_symmetry', symmetric is None, 'counts are symmetric in their classes', symmetric)
            report.add('vanishing', vanishing is None, 'count = 0 iff the component is empty', vanishing)
        return report

    # ── goodmaps ──

    @staticmethod
    def goodness_checks(dec: InertiaDecomposition) -> VerificationReport:
        G = dec.group
        report = VerificationReport(subject=f"goodness, order {G.order}")
        for s in dec.sectors[1:]:
            g = s.representative_index
            report.add(f'nodal[{s.class_index}]', GoodMapCalculator.nodal_check(g, G.inverse(g), G),
                       'lambda and lambda^-1 close a node')
            if s.fixed_dim >= 1:
                report.extend(GoodMapCalculator.cross_validate_goodness(G, g), prefix=f'sector[{s.class_index}]')
        return report

    # ── suites ──

    @classmethod
    def matrix_suite(cls, spec, cap: int) -> List[VerificationReport]:
        G = close(spec.generators, cap)
        dec = SectorCalculator.inertia(G, spec.geometry)
        label = spec.name or f"order-{G.order} group"
        reports = [
            cls.group_checks(G),
            SectorCalculator.check_sector_identities(dec),
            cls.cohomology_checks(dec),
            cls.ring_checks(dec),
        ]
        if dec.geometry_kind == GEOMETRY_POINT:
            reports.append(cls.counting_checks(G))
        else:
            reports.append(cls.goodness_checks(dec))
        for report in reports:
            report.subject = f"{label}: {report.subject}"
        return reports

    @staticmethod
    def wps_suite(X: WeightedProjectiveSpace) -> List[VerificationReport]:
        report = SectorCalculator.check_wps_sector_identities(X)
        table = CohomologyCalculator.orbifold_poincare_wps(X)
        n = X.complex_dimension
        defect = table.duality_defect(2 * n)
        report.add('duality', defect is None, f'dim H^d = dim H^({2 * n}-d)', None if defect is None else str(defect))
        report.add('euler', CohomologyCalculator.orbifold_euler(X) == table.evaluate_at_one(),
                   'Euler number = Poincare table at t = 1')
        bad = next((d for d in table.degrees if not 0 <= d <= 2 * n), None)
        report.add('degree_range', bad is None, f'degrees within [0, {2 * n}]', None if bad is None else str(bad))
        return [report]

    @staticmethod
    def reference_values(cap: int) -> VerificationReport:
        """Worked values that pin down conventions."""
        report = VerificationReport(subject='reference values')

        G = close(load_spec(corpus.symmetric_three('point')).generators, cap)
        dec = SectorCalculator.inertia(G, GEOMETRY_POINT)
        by_size = {s.class_size: s.class_index for s in dec.sectors}
        t, r = by_size[3], by_size[2]
        product = RingCalculator.cup_product_ptG(G, OrbClass.basis(t), OrbClass.basis(t))
        report.add('s3_cup_product', product == OrbClass.of({0: 3, r: 3}), 'e_T u e_T = 3 e_1 + 3 e_R')
        report.add('s3_threepoint', RingCalculator.threepoint_ptG(G, t, t, r) == 1
                   and RingCalculator.threepoint_ptG(G, t, t, t) == 0, 'threepoint(T,T,R) = 1, (T,T,T) = 0')
        mixed = ModuliCalculator.correlator_ptG(G, [OrbClass.of({t: 1, r: 1}), OrbClass.basis(t), OrbClass.basis(t, 2)])
        expanded = 2 * sum(ModuliCalculator.kpoint_constant_count(G, SectorTuple((c, t, t))) for c in (t, r))
        report.add('s3_correlator', mixed == expanded, 'correlator is multilinear in its insertions')

        G = close(load_spec(corpus.z4_mixed()).generators, cap)
        g = G.element_from_word('0.0')
        report.add('z4_not_good', not GoodMapCalculator.fixed_locus_goodness(G, g).is_good,
                   'diag(-1,1) in <diag(i,-1)> is not good')
        try:
            GoodMapCalculator.enumerate_equivariant_lifts(G, [1], 2, 1)
            report.add('z4_no_lifts', False, 'expected no lifts on the second axis')
        except NoLifts:
            report.add('z4_no_lifts', True, 'no order-2 lift acts by -1 on the second axis')

        G = close(load_spec(corpus.klein_four()).generators, cap)
        lifts = GoodMapCalculator.enumerate_equivariant_lifts(G, [0], 2, 1)
        report.add('klein_two_systems', len(lifts.equivalence_classes) == 2, 'two inequivalent compatible systems')

        p112 = CohomologyCalculator.orbifold_poincare_wps(WeightedProjectiveSpace((1, 1, 2)))
        report.add('p112', p112.as_dict() == {0: 1, 2: 2, 4: 1}
                   and CohomologyCalculator.orbifold_euler(WeightedProjectiveSpace((1, 1, 2))) == 4,
                   'P(1,1,2): {0:1, 2:2, 4:1}, Euler 4')
        p12 = CohomologyCalculator.orbifold_poincare_wps(WeightedProjectiveSpace((1, 2)))
        report.add('p12', p12.as_dict() == {0: 1, 1: 1, 2: 1}, 'P(1,2): {0:1, 1:1, 2:1}')

        vdims = [
            ModuliCalculator.virtual_dimension(DimensionInput(Fraction(0), 0, 0, 3, (Fraction(0),) * 3)),
            ModuliCalculator.virtual_dimension(DimensionInput(Fraction(0), 3, 0, 3, (Fraction(0),) * 3)),
            ModuliCalculator.virtual_dimension(
                DimensionInput(Fraction(0), 2, 0, 3, (Fraction(1), Fraction(1, 2), Fraction(1, 2)))),
        ]
        report.add('virtual_dimension', vdims == [0, 6, 0], 'worked inputs give 0, 6, 0')

        G = close(load_spec(corpus.quaternion()).generators, cap)
        mckay = CohomologyCalculator.mckay_report(SectorCalculator.inertia(G, GEOMETRY_LINEAR))
        report.add('q8_mckay', mckay.class_count == 5 and mckay.degrees.as_dict() == {0: 1, 2: 4},
                   'Q8: 5 classes, {0:1, 2:4}')

        G = close(load_spec(corpus.cyclic_line(3)).generators, cap)
        dec = SectorCalculator.inertia(G, GEOMETRY_LINEAR)
        report.add('z3_non_sl', sorted(dec.iotas) == [0, Fraction(1, 3), Fraction(2, 3)]
                   and G.determinant(G.generator_indices[0]) != 1,
                   'Z3 in GL(1): iota 0, 1/3, 2/3 and det != 1')
        return report

    @classmethod
    def corpus_suite(cls, cap: int) -> List[VerificationReport]:
        reports = []
        max_cyclic = settings['ORBK_VERIFY_MAX_CYCLIC']
        for entry in corpus.matrix_corpus(max_cyclic):
            reports.extend(cls.matrix_suite(load_spec(entry), cap))
        for n in range(2, max_cyclic + 1):
            reports.append(cls.cyclic_mckay(load_spec(corpus.cyclic_sl2(n)), cap))
        for X in corpus.wps_corpus(settings['ORBK_VERIFY_MAX_WEIGHT_SUM']):
            reports.extend(cls.wps_suite(X))
        reports.append(cls.reference_values(cap))
        return reports

    @staticmethod
    def cyclic_mckay(spec, cap: int) -> VerificationReport:
        """Z_n in SL(2): n sectors with ages {0, 1, ..., 1} and table {0:1, 2:n-1}."""
        G = close(spec.generators, cap)
        dec = SectorCalculator.inertia(G, GEOMETRY_LINEAR)
        n = G.order
        report = VerificationReport(subject=f"{spec.name}: McKay")
        mckay = CohomologyCalculator.mckay_report(dec)
        expected = {0: 1} if n == 1 else {0: 1, 2: n - 1}
        report.add('ages', sorted(dec.iotas) == [0] + [1] * (n - 1), 'ages {0, 1, ..., 1}')
        report.add('table', mckay.degrees.as_dict() == expected, f'table {expected}')
        return report


class VerifyAPI:

    class _VERIFY(Command):
        needs_input = False

        def run(self, spec, flags):
            """
            Run the invariant suites on the input, or on the built-in corpus when no input is given.
            """
            cap = flags.closure_cap
            if spec is None:
                reports = VerificationSuite.corpus_suite(cap)
            elif spec.kind == KIND_WEIGHTED_PROJECTIVE:
                reports = VerificationSuite.wps_suite(spec.space)
            else:
                reports = VerificationSuite.matrix_suite(spec, cap)
            for report in reports:
                api_logger.command_logger.log_verification(report)
            passed = all(r.passed for r in reports)
            data = self.header(spec, self.name)
            data.update({
                'passed': passed,
                'checks': sum(len(r.checks) for r in reports),
                'failures': sum(len(r.failures) for r in reports),
                'reports': [r.to_json() for r in reports],
            })
            return ReportResponse.verification(data, passed)

    registry.add_resource(_VERIFY, 'verify')
