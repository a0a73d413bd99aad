# fingroup.py: finite matrix groups over Q(zeta_N)
"""
Finite subgroups of GL(n, C) with entries in a cyclotomic field.

close() enumerates the group generated by a list of matrices. After that the
group is immutable: every query works on element indices through the
multiplication table, and matrices are only consulted for traces.

Element order: the identity is index 0; all other elements follow in
lexicographic order of their flattened canonical coefficient vectors. Class
representatives, sector order and JSON output all inherit this order.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from model.cyclotomic import Cyclotomic, lcm
from model.linalg import bareiss_determinant
from model.utils.errors import (
    CapExceeded, ConductorMismatch, InternalInconsistency, NonEffectiveAction,
    NonInvertibleGenerator, SemanticError,
)

logger = logging.getLogger(__name__)

DEFAULT_CAP = 100000
IDENTITY_WORD = 'e'


@dataclass(frozen=True)
class Matrix:
    """Square matrix of Cyclotomic entries sharing one conductor."""

    dimension: int
    conductor: int
    entries: Tuple[Tuple[Cyclotomic, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.dimension or any(len(row) != self.dimension for row in self.entries):
            raise SemanticError(f"Matrix is not {self.dimension}x{self.dimension}")
        for row in self.entries:
            for entry in row:
                if entry.conductor != self.conductor:
                    raise ConductorMismatch(
                        f"Entry conductor {entry.conductor} differs from matrix conductor {self.conductor}"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Cyclotomic]], conductor: int) -> 'Matrix':
        return cls(len(rows), conductor, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dimension: int, conductor: int) -> 'Matrix':
        one, zero = Cyclotomic.one(conductor), Cyclotomic.zero(conductor)
        return cls(dimension, conductor, tuple(
            tuple(one if i == j else zero for j in range(dimension)) for i in range(dimension)
        ))

    @classmethod
    def diagonal(cls, values: Sequence[Cyclotomic], conductor: int) -> 'Matrix':
        zero = Cyclotomic.zero(conductor)
        n = len(values)
        return cls(n, conductor, tuple(
            tuple(values[i] if i == j else zero for j in range(n)) for i in range(n)
        ))

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if other.dimension != self.dimension:
            raise SemanticError("Matrix dimensions differ")
        if other.conductor != self.conductor:
            raise ConductorMismatch(f"Conductor mismatch: {self.conductor} vs {other.conductor}")
        n = self.dimension
        zero = Cyclotomic.zero(self.conductor)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return Matrix(n, self.conductor, tuple(rows))

    def key(self) -> Tuple[Fraction, ...]:
        """Flattened canonical coefficient vector (the sort key of group elements)."""
        return tuple(c for row in self.entries for entry in row for c in entry.coefficients)

    def trace(self) -> Cyclotomic:
        acc = Cyclotomic.zero(self.conductor)
        for i in range(self.dimension):
            acc = acc + self.entries[i][i]
        return acc

    def is_identity(self) -> bool:
        return all(
            (entry == 1) if i == j else entry.is_zero()
            for i, row in enumerate(self.entries) for j, entry in enumerate(row)
        )

    def to_json(self) -> List[List[str]]:
        return [[entry.to_expression() for entry in row] for row in self.entries]


def determinant(g: Matrix) -> Cyclotomic:
    """Exact determinant by fraction-free elimination over Q(zeta_N)."""
    return bareiss_determinant(g.entries, Cyclotomic.zero(g.conductor), Cyclotomic.one(g.conductor))


@dataclass(frozen=True)
class ConjugacyClass:
    representative_index: int
    member_indices: Tuple[int, ...]
    centralizer_indices: Tuple[int, ...]
    order: int

    @property
    def size(self) -> int:
        return len(self.member_indices)


@dataclass(frozen=True)
class EigenvalueProfile:
    """multiplicities[k] is the multiplicity of exp(2 pi i k / order)."""

    order: int
    multiplicities: Tuple[int, ...]

    @property
    def fixed_dimension(self) -> int:
        return self.multiplicities[0] if self.multiplicities else 0


class FiniteMatrixGroup:
    """
    A fully enumerated finite matrix group.

    Attributes:
        dimension: n, the size of the matrices
        conductor: N, every entry lies in Q(zeta_N)
        elements: matrices in canonical order (identity first)
        multiplication_table: numpy array, table[i, j] = index of elements[i] @ elements[j]
        inverse_table: index of the inverse of each element
        generator_indices: index of each input generator, in input order
    """

    def __init__(self, dimension: int, conductor: int, elements: Tuple[Matrix, ...],
                 multiplication_table: np.ndarray, generator_indices: Tuple[int, ...],
                 words: Tuple[Tuple[int, ...], ...]):
        self.dimension = dimension
        self.conductor = conductor
        self.elements = elements
        multiplication_table.setflags(write=False)
        self.multiplication_table = multiplication_table
        self.generator_indices = generator_indices
        self._words = words
        inverse = np.argmax(multiplication_table == 0, axis=1)
        inverse.setflags(write=False)
        self.inverse_table = inverse
        self._traces: Dict[int, Cyclotomic] = {}
        self._profiles: Dict[int, EigenvalueProfile] = {}

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    # ── Index arithmetic ──

    def multiply(self, i: int, j: int) -> int:
        return int(self.multiplication_table[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inverse_table[i])

    def conjugate_by(self, h: int, g: int) -> int:
        """Index of h g h^-1."""
        return self.multiply(self.multiply(h, g), self.inverse(h))

    def power(self, i: int, exponent: int) -> int:
        if exponent < 0:
            i, exponent = self.inverse(i), -exponent
        result = 0
        for _ in range(exponent % self.element_order(i)):
            result = self.multiply(result, i)
        return result

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        orders = []
        table = self.multiplication_table
        for i in range(self.order):
            x, k = i, 1
            while x != 0:
                x = int(table[x, i])
                k += 1
            orders.append(k)
        return tuple(orders)

    def element_order(self, i: int) -> int:
        return self.element_orders[i]

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.multiplication_table, self.multiplication_table.T))

    @cached_property
    def center(self) -> Tuple[int, ...]:
        table = self.multiplication_table
        return tuple(int(i) for i in range(self.order) if np.array_equal(table[i, :], table[:, i]))

    def subgroup_closure(self, indices: Sequence[int]) -> Tuple[int, ...]:
        """Sorted indices of the subgroup generated by the given elements."""
        generators = sorted(set(int(i) for i in indices))
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in generators:
                y = self.multiply(x, s)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    # ── Words over the generators ──

    def word(self, i: int) -> str:
        letters = self._words[i]
        return '.'.join(str(s) for s in letters) if letters else IDENTITY_WORD

    def element_from_word(self, word: str) -> int:
        """Evaluate a word like "0.1.0" (generator positions, left to right)."""
        word = (word or '').strip()
        if word in ('', IDENTITY_WORD):
            return 0
        x = 0
        for letter in word.split('.'):
            try:
                position = int(letter)
            except ValueError:
                raise SemanticError(f"Invalid word letter '{letter}' in '{word}'")
            if not 0 <= position < len(self.generator_indices):
                raise SemanticError(
                    f"Generator index {position} out of range (group has {len(self.generator_indices)} generators)"
                )
            x = self.multiply(x, self.generator_indices[position])
        return x

    # ── Classes and centralizers ──

    @cached_property
    def conjugacy_classes(self) -> Tuple[ConjugacyClass, ...]:
        table = self.multiplication_table
        inverse = self.inverse_table
        class_of = np.full(self.order, -1, dtype=np.int64)
        classes = []
        for i in range(self.order):
            if class_of[i] >= 0:
                continue
            members = np.unique(table[table[:, i], inverse])
            class_of[members] = len(classes)
            centralizer = np.nonzero(table[:, i] == table[i, :])[0]
            if len(members) * len(centralizer) != self.order:
                raise InternalInconsistency(
                    f"Orbit-stabilizer failed at element {i}: {len(members)} x {len(centralizer)} != {self.order}"
                )
            classes.append(ConjugacyClass(
                representative_index=i,
                member_indices=tuple(int(m) for m in members),
                centralizer_indices=tuple(int(c) for c in centralizer),
                order=self.element_order(i),
            ))
        class_of.setflags(write=False)
        self._class_of = class_of
        logger.debug(f"{len(classes)} conjugacy classes in a group of order {self.order}")
        return tuple(classes)

    def class_of(self, i: int) -> int:
        self.conjugacy_classes  # populates the lookup
        return int(self._class_of[i])

    @property
    def class_lookup(self) -> np.ndarray:
        self.conjugacy_classes
        return self._class_of

    def inverse_class(self, c: int) -> int:
        return self.class_of(self.inverse(self.conjugacy_classes[c].representative_index))

    def centralizer(self, i: int) -> Tuple[int, ...]:
        table = self.multiplication_table
        return tuple(int(h) for h in np.nonzero(table[:, i] == table[i, :])[0])

    # ── Traces and eigenvalues ──

    def trace(self, i: int) -> Cyclotomic:
        if i not in self._traces:
            self._traces[i] = self.elements[i].trace()
        return self._traces[i]

    def determinant(self, i: int) -> Cyclotomic:
        return determinant(self.elements[i])

    def eigenvalue_profile(self, i: int) -> EigenvalueProfile:
        """
        Eigenvalue multiplicities of element i without diagonalizing:
        mult_k = (1/m) * sum_j zeta_m^(-kj) * trace(g^j).
        """
        if i in self._profiles:
            return self._profiles[i]
        m = self.element_order(i)
        field = lcm(self.conductor, m)
        step = field // m
        traces = []
        x = 0
        for _ in range(m):
            traces.append(self.trace(x).embed(field))
            x = self.multiply(x, i)
        multiplicities = []
        for k in range(m):
            acc = Cyclotomic.zero(field)
            for j, t in enumerate(traces):
                acc = acc + Cyclotomic.zeta(field, -step * k * j) * t
            if not acc.is_rational():
                raise InternalInconsistency(f"Eigenvalue multiplicity of element {i} at k={k} is not rational")
            value = acc.to_rational() / m
            if value.denominator != 1 or value < 0:
                raise InternalInconsistency(f"Eigenvalue multiplicity {value} of element {i} at k={k} is invalid")
            multiplicities.append(int(value))
        if sum(multiplicities) != self.dimension:
            raise InternalInconsistency(
                f"Eigenvalue multiplicities of element {i} sum to {sum(multiplicities)}, expected {self.dimension}"
            )
        profile = EigenvalueProfile(order=m, multiplicities=tuple(multiplicities))
        self._profiles[i] = profile
        return profile

    def fixed_dimension_of_subgroup(self, indices: Sequence[int]) -> int:
        """dim of the common fixed space of a subgroup: the average of its traces."""
        acc = Cyclotomic.zero(self.conductor)
        for h in indices:
            acc = acc + self.trace(h)
        if not acc.is_rational():
            raise InternalInconsistency("Trace average over a subgroup is not rational")
        value = acc.to_rational() / len(indices)
        if value.denominator != 1 or value < 0:
            raise InternalInconsistency(f"Fixed-space dimension {value} is not a nonnegative integer")
        return int(value)

    def to_json(self) -> dict:
        return {
            'order': self.order,
            'dimension': self.dimension,
            'conductor': self.conductor,
            'generators': [self.word(g) for g in self.generator_indices],
        }


def close(generators: Sequence[Matrix], cap: int = DEFAULT_CAP) -> FiniteMatrixGroup:
    """
    Enumerate the group generated by the given matrices.

    Args:
        generators: Invertible square matrices of equal dimension and conductor
        cap: Largest group order accepted before giving up

    Returns:
        FiniteMatrixGroup in canonical element order

    Raises:
        CapExceeded, NonInvertibleGenerator, NonEffectiveAction, ConductorMismatch, SemanticError
    """
    if not generators:
        raise SemanticError("At least one generator is required")
    dimension = generators[0].dimension
    conductor = generators[0].conductor
    for position, g in enumerate(generators):
        if g.dimension != dimension:
            raise SemanticError(f"Generator {position} has dimension {g.dimension}, expected {dimension}")
        if g.conductor != conductor:
            raise ConductorMismatch(f"Generator {position} has conductor {g.conductor}, expected {conductor}")
        if determinant(g).is_zero():
            raise NonInvertibleGenerator(f"Generator {position} is not invertible", details={'generator': position})

    # breadth-first closure under right multiplication by generators
    identity = Matrix.identity(dimension, conductor)
    matrices = [identity]
    index_of = {identity.key(): 0}
    parents = [-1]
    letters = [-1]
    right = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = []
        for s, g in enumerate(generators):
            y = matrices[x] @ g
            key = y.key()
            j = index_of.get(key)
            if j is None:
                j = len(matrices)
                if j >= cap:
                    raise CapExceeded(
                        f"Closure exceeded the cap of {cap} elements (infinite or too large group)",
                        details={'cap': cap}
                    )
                index_of[key] = j
                matrices.append(y)
                parents.append(x)
                letters.append(s)
                queue.append(j)
            row.append(j)
        right.append(row)
    order = len(matrices)
    logger.debug(f"Closure reached {order} elements from {len(generators)} generators")

    # canonical order: identity first, then by coefficient vector
    rest = sorted(range(1, order), key=lambda i: matrices[i].key())
    bfs_to_canonical = np.empty(order, dtype=np.int64)
    bfs_to_canonical[0] = 0
    for position, i in enumerate(rest, start=1):
        bfs_to_canonical[i] = position

    dtype = np.int32 if order < 2 ** 31 else np.int64
    right_table = bfs_to_canonical[np.array(right, dtype=np.int64)]  # rows in bfs order
    right_canonical = np.empty_like(right_table)
    right_canonical[bfs_to_canonical] = right_table

    table = np.empty((order, order), dtype=dtype)
    table[:, 0] = np.arange(order)
    for j_bfs in range(1, order):  # bfs order: parents come first
        j = bfs_to_canonical[j_bfs]
        p = bfs_to_canonical[parents[j_bfs]]
        table[:, j] = right_canonical[table[:, p], letters[j_bfs]]

    words_bfs: List[Tuple[int, ...]] = [()]
    for j_bfs in range(1, order):
        words_bfs.append(words_bfs[parents[j_bfs]] + (letters[j_bfs],))
    elements: List[Optional[Matrix]] = [None] * order
    words: List[Tuple[int, ...]] = [()] * order
    for j_bfs in range(order):
        elements[bfs_to_canonical[j_bfs]] = matrices[j_bfs]
        words[bfs_to_canonical[j_bfs]] = words_bfs[j_bfs]

    for i in range(1, order):
        if elements[i].is_identity():
            raise NonEffectiveAction(f"Element {i} acts as the identity")

    generator_indices = tuple(int(bfs_to_canonical[right[0][s]]) for s in range(len(generators)))
    return FiniteMatrixGroup(
        dimension=dimension,
        conductor=conductor,
        elements=tuple(elements),
        multiplication_table=table,
        generator_indices=generator_indices,
        words=tuple(words),
    )
