# goodmap_calculator.py
"""
GoodMapCalculator - splitting obstructions and equivariant lifts in the
linear model [C^n/G].

Fixed-locus goodness: the map H^g/C(g) -> C^n/G is good iff the projection

    pi: C(g) -> Q = C(g)/K_g,   K_g = {c in C(g) : c acts trivially on H^g}

has a section that is a homomorphism. A section is the same thing as a
complement S of K_g in C(g) (|S| = |Q| and S meets K_g only in the
identity), searched by backtracking over images of coset generators.

Equivariant lifts: monomorphisms Z_m -> G whose generator preserves a
coordinate subspace W and acts on it as zeta_m^k. Two lifts are identified
when they are conjugate by an element fixing W pointwise.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from model.cyclotomic import Cyclotomic, lcm
from model.fingroup import FiniteMatrixGroup
from model.utils.errors import (
    IdentityElement, InternalInconsistency, NoLifts, OrderMismatch, SemanticError, TrivialFixedSpace,
)
from model.verification import VerificationReport

logger = logging.getLogger(__name__)

EQUIVALENCE = 'stabilizer-conjugation'


@dataclass(frozen=True)
class SplittingProblem:
    group: FiniteMatrixGroup
    element_index: int
    centralizer: Tuple[int, ...]
    kernel: Tuple[int, ...]
    cosets: Tuple[Tuple[int, ...], ...]

    @property
    def quotient_order(self) -> int:
        return len(self.centralizer) // len(self.kernel)

    def coset_of(self, c: int) -> int:
        return next(i for i, coset in enumerate(self.cosets) if c in coset)

    def to_json(self) -> dict:
        G = self.group
        return {
            'element': G.word(self.element_index),
            'centralizerOrder': len(self.centralizer),
            'kernel': [G.word(k) for k in self.kernel],
            'quotientOrder': self.quotient_order,
        }


@dataclass(frozen=True)
class GoodnessVerdict:
    problem: SplittingProblem
    splittings: Tuple[Tuple[int, ...], ...]
    classes: int
    truncated: bool = False

    @property
    def is_good(self) -> bool:
        return bool(self.splittings)

    @property
    def verdict(self) -> str:
        return 'good' if self.is_good else 'not_good'

    def to_json(self) -> dict:
        G = self.problem.group
        data = {
            'verdict': self.verdict,
            'splittings': [';'.join(G.word(x) for x in images) or 'e' for images in self.splittings],
            'classes': self.classes,
            'problem': self.problem.to_json(),
        }
        if self.truncated:
            data['truncated'] = True
        return data


@dataclass(frozen=True)
class CompatibleSystemSet:
    group: FiniteMatrixGroup
    axes: Tuple[int, ...]
    order: int
    action: int
    lifts: Tuple[int, ...]
    equivalence_classes: Tuple[Tuple[int, ...], ...] = field(default=())

    def to_json(self) -> dict:
        G = self.group
        return {
            'axes': list(self.axes),
            'order': self.order,
            'action': f"{self.action}/{self.order}",
            'lifts': [G.word(x) for x in self.lifts],
            'equivalenceClasses': [[G.word(x) for x in cls] for cls in self.equivalence_classes],
            'classes': len(self.equivalence_classes),
            'equivalence': EQUIVALENCE,
        }


class GoodMapCalculator:
    """Goodness decisions, lift enumeration and nodal checks."""

    # ── Splitting problems ──

    @staticmethod
    def _check_element(G: FiniteMatrixGroup, g: int):
        if not 0 <= g < G.order:
            raise SemanticError(f"Element index {g} out of range")
        if g == 0:
            raise IdentityElement("Goodness is asked of a twisted sector; the identity was given")
        if G.eigenvalue_profile(g).fixed_dimension == 0:
            raise TrivialFixedSpace(f"Element {G.word(g)} has no nonzero fixed vectors")

    @classmethod
    def quotient_structure(cls, G: FiniteMatrixGroup, g: int) -> SplittingProblem:
        """C(g), the kernel K_g of its action on H^g, and the cosets of K_g."""
        cls._check_element(G, g)
        centralizer = G.centralizer(g)
        fixed = G.eigenvalue_profile(g).fixed_dimension
        kernel = tuple(
            c for c in centralizer
            if G.fixed_dimension_of_subgroup(G.subgroup_closure([g, c])) == fixed
        )
        cosets = []
        seen = set()
        for c in centralizer:
            if c in seen:
                continue
            coset = tuple(sorted(G.multiply(c, k) for k in kernel))
            seen.update(coset)
            cosets.append(coset)
        return SplittingProblem(
            group=G,
            element_index=g,
            centralizer=centralizer,
            kernel=kernel,
            cosets=tuple(cosets),
        )

    @staticmethod
    def _quotient_generators(problem: SplittingProblem) -> List[int]:
        """Coset indices whose representatives generate C(g) together with K_g."""
        G = problem.group
        generators: List[int] = []
        covered = set(problem.kernel)
        for i, coset in enumerate(problem.cosets):
            if coset[0] in covered:
                continue
            generators.append(i)
            reps = [problem.cosets[j][0] for j in generators]
            covered = set(G.subgroup_closure(reps + list(problem.kernel)))
        return generators

    @classmethod
    def fixed_locus_goodness(cls, G: FiniteMatrixGroup, g: int,
                             max_splittings: Optional[int] = None) -> GoodnessVerdict:
        """
        Decide whether H^g/C(g) -> C^n/G is good.

        Args:
            G: enumerated group
            g: a non-identity element with nonzero fixed space
            max_splittings: stop after this many distinct complements

        Returns:
            GoodnessVerdict listing the complements found (as generator images)

        Raises:
            IdentityElement, TrivialFixedSpace
        """
        if max_splittings is None:
            max_splittings = settings['ORBK_MAX_SPLITTINGS']
        problem = cls.quotient_structure(G, g)
        kernel = set(problem.kernel)
        q_order = problem.quotient_order
        generators = cls._quotient_generators(problem)

        found: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        truncated = False

        def search(level: int, images: List[int]):
            nonlocal truncated
            if truncated:
                return
            subgroup = G.subgroup_closure(images)
            if len(subgroup) > q_order or any(x in kernel for x in subgroup if x != 0):
                return
            if level == len(generators):
                if len(subgroup) == q_order and subgroup not in found:
                    found[subgroup] = tuple(images)
                    if len(found) >= max_splittings:
                        truncated = True
                return
            for candidate in problem.cosets[generators[level]]:
                search(level + 1, images + [candidate])

        search(0, [])

        for subgroup in found:
            hit = sorted(problem.coset_of(x) for x in subgroup)
            if hit != list(range(len(problem.cosets))):
                raise InternalInconsistency(
                    f"Complement {[G.word(x) for x in subgroup]} does not map bijectively onto C(g)/K_g"
                )

        # complements up to conjugation inside C(g)
        orbits = set()
        for subgroup in found:
            orbit = min(
                tuple(sorted(G.conjugate_by(h, x) for x in subgroup)) for h in problem.centralizer
            )
            orbits.add(orbit)
        logger.debug(
            f"goodness of {G.word(g)}: |C(g)|={len(problem.centralizer)}, |K_g|={len(kernel)}, "
            f"{len(found)} complements"
        )
        return GoodnessVerdict(
            problem=problem,
            splittings=tuple(found[s] for s in sorted(found)),
            classes=len(orbits),
            truncated=truncated,
        )

    # ── Equivariant lifts ──

    @staticmethod
    def _acts_as_scalar(G: FiniteMatrixGroup, x: int, axes: Sequence[int], scalar: Cyclotomic) -> bool:
        """x preserves span(e_i : i in axes) and acts there as the given scalar."""
        entries = G.elements[x].entries
        inside = set(axes)
        field_conductor = scalar.conductor
        for c in axes:
            for r in range(G.dimension):
                value = entries[r][c]
                if r not in inside:
                    if not value.is_zero():
                        return False
                elif r == c:
                    if value.embed(lcm(G.conductor, field_conductor)) != scalar.embed(lcm(G.conductor, field_conductor)):
                        return False
                elif not value.is_zero():
                    return False
        return True

    @staticmethod
    def _validate_axes(G: FiniteMatrixGroup, axes: Sequence[int]) -> Tuple[int, ...]:
        axes = tuple(sorted(set(int(a) for a in axes)))
        if not axes:
            raise SemanticError("At least one axis is required")
        for a in axes:
            if not 0 <= a < G.dimension:
                raise SemanticError(f"Axis {a} out of range for dimension {G.dimension}")
        return axes

    @classmethod
    def enumerate_equivariant_lifts(cls, G: FiniteMatrixGroup, axes: Sequence[int], m: int, k: int,
                                    within: Optional[Sequence[int]] = None) -> CompatibleSystemSet:
        """
        All lifts Z_m -> G acting on W = span(e_i : i in axes) by zeta_m^k.

        Args:
            G: enumerated group
            axes: coordinate indices spanning W
            m: order of the cyclic source, at least 2
            k: exponent of the character, coprime to m
            within: restrict candidate images to these elements (a subgroup)

        Returns:
            CompatibleSystemSet with lifts partitioned by stabilizer conjugation

        Raises:
            NoLifts: no candidate exists
        """
        axes = cls._validate_axes(G, axes)
        if m < 2:
            raise SemanticError(f"Lift order must be at least 2, got {m}")
        if gcd(k, m) != 1:
            raise SemanticError(f"Character {k}/{m} is not primitive")
        scalar = Cyclotomic.zeta(m, k)
        pool = range(G.order) if within is None else sorted(set(within))
        lifts = tuple(
            x for x in pool
            if G.element_order(x) == m and cls._acts_as_scalar(G, x, axes, scalar)
        )
        if not lifts:
            raise NoLifts(
                f"No element of order {m} acts on axes {list(axes)} by zeta_{m}^{k}",
                details={'axes': list(axes), 'order': m, 'action': k}
            )

        one = Cyclotomic.one(1)
        stabilizer = [h for h in range(G.order) if cls._acts_as_scalar(G, h, axes, one)]
        lift_set = set(lifts)
        classes = []
        assigned = set()
        for x in lifts:
            if x in assigned:
                continue
            orbit = sorted({G.conjugate_by(h, x) for h in stabilizer})
            if not lift_set.issuperset(orbit):
                raise InternalInconsistency(f"Stabilizer conjugation moved lift {G.word(x)} off the lift set")
            assigned.update(orbit)
            classes.append(tuple(orbit))
        return CompatibleSystemSet(
            group=G, axes=axes, order=m, action=k % m, lifts=lifts, equivalence_classes=tuple(classes),
        )

    @classmethod
    def cross_validate_goodness(cls, G: FiniteMatrixGroup, g: int) -> VerificationReport:
        """
        Compare fixed_locus_goodness with a lift scan inside C(g) when the
        scan applies: H^g a coordinate subspace and C(g)/K_g cyclic with a
        generator acting on H^g by a scalar.
        """
        report = VerificationReport(subject=f"goodness of {G.word(g)}")
        verdict = cls.fixed_locus_goodness(G, g)
        problem = verdict.problem
        fixed = G.eigenvalue_profile(g).fixed_dimension
        entries = G.elements[g].entries
        # H^g is a coordinate subspace iff enough columns of g are unit vectors
        identity_columns = [
            c for c in range(G.dimension)
            if entries[c][c] == 1 and all(entries[r][c].is_zero() for r in range(G.dimension) if r != c)
        ]
        q_order = problem.quotient_order
        generator = None
        if len(identity_columns) == fixed and q_order >= 2:
            for coset in problem.cosets:
                if len(G.subgroup_closure([coset[0]] + list(problem.kernel))) != len(problem.centralizer):
                    continue
                for j in range(1, q_order):
                    if gcd(j, q_order) == 1 and cls._acts_as_scalar(
                            G, coset[0], identity_columns, Cyclotomic.zeta(q_order, j)):
                        generator = j
                        break
                if generator is not None:
                    break
        if generator is None:
            report.add('cross_validation', True, 'not applicable')
            return report
        try:
            lifts = cls.enumerate_equivariant_lifts(G, identity_columns, q_order, generator, within=problem.centralizer)
            scan_good = bool(lifts.lifts)
        except NoLifts:
            scan_good = False
        report.add(
            'cross_validation', scan_good == verdict.is_good,
            f"splitting search: {verdict.verdict}; lift scan: {'good' if scan_good else 'not_good'}",
            None if scan_good == verdict.is_good else G.word(g),
        )
        return report

    # ── Nodal and marked-point data ──

    @staticmethod
    def nodal_check(lam_nu: int, lam_omega: int, G: FiniteMatrixGroup) -> bool:
        """The two branch images at a node multiply to the identity."""
        if G.element_order(lam_nu) != G.element_order(lam_omega):
            raise OrderMismatch(
                f"Nodal branches have orders {G.element_order(lam_nu)} and {G.element_order(lam_omega)}"
            )
        return G.multiply(lam_nu, lam_omega) == 0

    @staticmethod
    def multiplicities(G: FiniteMatrixGroup, elements: Sequence[int]) -> List[int]:
        """Orbifold multiplicity of each marked point: the order of its local monodromy."""
        return [G.element_order(x) for x in elements]
