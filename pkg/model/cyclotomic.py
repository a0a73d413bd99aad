# cyclotomic.py: exact arithmetic in Q(zeta_N)
"""
Exact elements of cyclotomic fields.

An element of Q(zeta_N) is stored as its coordinates in the power basis
1, z, ..., z^(phi(N)-1) of Q[x]/Phi_N(x). Coordinates are Fractions, so every
value is canonical: two elements are equal iff their coordinate tuples are.

All values are immutable and every operation returns a new element.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Tuple

from sympy import Poly, cyclotomic_poly, symbols, totient

from model.utils.errors import ConductorMismatch, SemanticError
from model.utils.response import render_rational

Rational = Fraction

_x = symbols('x')
_RATIONAL = re.compile(r'-?[0-9]+(/[0-9]+)?')


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (ASCII digits) into an exact rational; raise SemanticError otherwise."""
    text = str(text).strip()
    if not _RATIONAL.fullmatch(text):
        raise SemanticError(f"Invalid rational '{text}' - expected p or p/q")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SemanticError(f"Invalid rational '{text}' - expected p or p/q")
    return value


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n in ascending order (monic, length phi(n)+1)."""
    coeffs = Poly(cyclotomic_poly(n, _x), _x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def _power_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Row e is x^e reduced mod Phi_n, for 0 <= e < n."""
    phi = euler_phi(n)
    poly = cyclotomic_coefficients(n)
    rows = []
    current = [0] * phi
    current[0] = 1
    for _ in range(n):
        rows.append(tuple(current))
        top = current[-1]
        shifted = [0] + current[:-1]
        if top:
            for i in range(phi):
                shifted[i] -= top * poly[i]
        current = shifted
    return tuple(rows)


@lru_cache(maxsize=None)
def _units(n: int) -> Tuple[int, ...]:
    return tuple(t for t in range(1, n + 1) if gcd(t, n) == 1)


class Cyclotomic:
    """
    An exact element of Q(zeta_N).

    Build values with the classmethods (zero, one, rational, zeta) or with
    canonicalize(); the constructor expects an already reduced coordinate tuple.
    """

    __slots__ = ('conductor', 'coefficients')

    def __init__(self, conductor: int, coefficients: Iterable):
        if conductor < 1:
            raise SemanticError(f"Conductor must be >= 1, got {conductor}")
        coefficients = tuple(Fraction(c) for c in coefficients)
        if len(coefficients) != euler_phi(conductor):
            raise SemanticError(
                f"Expected {euler_phi(conductor)} coordinates for conductor {conductor}, got {len(coefficients)}"
            )
        object.__setattr__(self, 'conductor', conductor)
        object.__setattr__(self, 'coefficients', coefficients)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # ── Constructors ──

    @classmethod
    def canonicalize(cls, conductor: int, raw: Iterable[Tuple[object, int]]) -> 'Cyclotomic':
        """Reduce sum(c * z^e) to the power basis mod Phi_N. Exponents may be any integers."""
        if conductor < 1:
            raise SemanticError(f"Conductor must be >= 1, got {conductor}")
        table = _power_table(conductor)
        acc = [Fraction(0)] * euler_phi(conductor)
        for coefficient, exponent in raw:
            coefficient = Fraction(coefficient)
            if not coefficient:
                continue
            for i, v in enumerate(table[exponent % conductor]):
                if v:
                    acc[i] += coefficient * v
        return cls(conductor, acc)

    @classmethod
    def zero(cls, conductor: int) -> 'Cyclotomic':
        return cls(conductor, [0] * euler_phi(conductor))

    @classmethod
    def rational(cls, conductor: int, value) -> 'Cyclotomic':
        coefficients = [Fraction(0)] * euler_phi(conductor)
        coefficients[0] = Fraction(value)
        return cls(conductor, coefficients)

    @classmethod
    def one(cls, conductor: int) -> 'Cyclotomic':
        return cls.rational(conductor, 1)

    @classmethod
    def zeta(cls, conductor: int, exponent: int = 1) -> 'Cyclotomic':
        return cls.canonicalize(conductor, [(1, exponent)])

    # ── Predicates ──

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.to_expression()} is not rational")
        return self.coefficients[0]

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coefficients

    # ── Arithmetic ──

    def _coerce(self, other) -> 'Cyclotomic':
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"Conductor mismatch: {self.conductor} vs {other.conductor} (embed both into the lcm first)"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coefficients, other.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-a for a in self.coefficients])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.conductor, [a - b for a, b in zip(self.coefficients, other.coefficients)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero(self.conductor)
        if other.is_rational():
            scale = other.coefficients[0]
            return Cyclotomic(self.conductor, [a * scale for a in self.coefficients])
        if self.is_rational():
            scale = self.coefficients[0]
            return Cyclotomic(self.conductor, [b * scale for b in other.coefficients])
        product = {}
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    product[i + j] = product.get(i + j, 0) + a * b
        return Cyclotomic.canonicalize(self.conductor, ((c, e) for e, c in product.items()))

    __rmul__ = __mul__

    def galois(self, t: int) -> 'Cyclotomic':
        """Apply the automorphism z -> z^t (t coprime to N)."""
        if gcd(t, self.conductor) != 1:
            raise SemanticError(f"{t} is not a unit modulo {self.conductor}")
        return Cyclotomic.canonicalize(self.conductor, ((c, i * t) for i, c in enumerate(self.coefficients)))

    def conjugate(self) -> 'Cyclotomic':
        return Cyclotomic.canonicalize(self.conductor, ((c, -i) for i, c in enumerate(self.coefficients)))

    def inverse(self) -> 'Cyclotomic':
        """Multiplicative inverse: product of the other Galois conjugates over the rational norm."""
        if self.is_zero():
            raise ZeroDivisionError("Cyclotomic division by zero")
        if self.is_rational():
            return Cyclotomic.rational(self.conductor, 1 / self.coefficients[0])
        others = Cyclotomic.one(self.conductor)
        for t in _units(self.conductor):
            if t % self.conductor != 1:
                others = others * self.galois(t)
        norm = (self * others).to_rational()
        return others * (1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def trace_to_rational(self) -> Fraction:
        """Field trace to Q: the sum of the phi(N) Galois conjugates."""
        total = Cyclotomic.zero(self.conductor)
        for t in _units(self.conductor):
            total = total + self.galois(t)
        return total.to_rational()

    def minimal_conductor(self) -> int:
        """Smallest d dividing N with this value in Q(zeta_d)."""
        return _canonical_form(self.conductor, self.coefficients)[0]

    # ── Field changes ──

    def embed(self, new_conductor: int) -> 'Cyclotomic':
        """The same field element inside Q(zeta_M), M a multiple of N."""
        if new_conductor % self.conductor:
            raise ConductorMismatch(f"Cannot embed conductor {self.conductor} into {new_conductor}")
        if new_conductor == self.conductor:
            return self
        factor = new_conductor // self.conductor
        return Cyclotomic.canonicalize(new_conductor, ((c, i * factor) for i, c in enumerate(self.coefficients)))

    def project(self, conductor: int) -> 'Cyclotomic':
        """Inverse of embed: rewrite over Q(zeta_conductor) or raise ConductorMismatch."""
        from model.linalg import solve_linear_system

        if self.conductor % conductor:
            raise ConductorMismatch(f"Q(zeta_{conductor}) is not a subfield of Q(zeta_{self.conductor})")
        if conductor == self.conductor:
            return self
        columns = [Cyclotomic.zeta(conductor, j).embed(self.conductor).coefficients
                   for j in range(euler_phi(conductor))]
        rows = [[column[i] for column in columns] for i in range(euler_phi(self.conductor))]
        solution = solve_linear_system(rows, list(self.coefficients))
        if solution is None:
            raise ConductorMismatch(f"{self.to_expression()} does not lie in Q(zeta_{conductor})")
        return Cyclotomic(conductor, solution)

    # ── Comparison and rendering ──

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coefficients[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.conductor == self.conductor:
            return self.coefficients == other.coefficients
        common = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.embed(common).coefficients == other.embed(common).coefficients

    def __hash__(self):
        # equal values embed to the same element of their smallest field
        if self.is_rational():
            return hash(self.coefficients[0])
        return hash(_canonical_form(self.conductor, self.coefficients))

    def to_expression(self) -> str:
        """Render in the entry grammar, e.g. "1/2*z^3 + -1/2*z"."""
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                terms.append(render_rational(c))
            elif i == 1:
                terms.append(f"{render_rational(c)}*z")
            else:
                terms.append(f"{render_rational(c)}*z^{i}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return self.to_expression()

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {self.to_expression()!r})"


@lru_cache(maxsize=4096)
def _canonical_form(conductor: int, coefficients: Tuple[Fraction, ...]) -> Tuple[int, Tuple[Fraction, ...]]:
    value = Cyclotomic(conductor, coefficients)
    for d in range(1, conductor):
        if conductor % d == 0:
            try:
                return d, value.project(d).coefficients
            except ConductorMismatch:
                continue
    return conductor, coefficients


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
