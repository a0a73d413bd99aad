# wps.py: weighted projective spaces P(w_0, ..., w_n)
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence, Tuple

from model.utils.errors import NonEffectiveAction, SemanticError
from model.utils.response import render_rational


@dataclass(frozen=True)
class WeightedProjectiveSpace:
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) < 2:
            raise SemanticError(f"A weighted projective space needs at least 2 weights, got {len(self.weights)}")
        for w in self.weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise SemanticError(f"Weights must be positive integers, got {w!r}")
        if reduce(gcd, self.weights) > 1:
            raise NonEffectiveAction(
                f"Weights {list(self.weights)} share a common factor; the generic stabilizer is nontrivial",
                details={'gcd': reduce(gcd, self.weights)},
            )

    @classmethod
    def of(cls, weights: Sequence[int]) -> 'WeightedProjectiveSpace':
        return cls(tuple(weights))

    @property
    def complex_dimension(self) -> int:
        return len(self.weights) - 1

    def label(self) -> str:
        return "P(" + ",".join(str(w) for w in self.weights) + ")"

    def to_json(self) -> dict:
        return {'kind': 'weighted_projective', 'weights': list(self.weights)}


@dataclass(frozen=True)
class WpsSector:
    """The sector of the weighted scalar exp(2 pi i q): a sub-space P(fixed_weights)."""

    q: Fraction
    fixed_weights: Tuple[int, ...]
    iota: Fraction

    @property
    def dimension(self) -> int:
        return len(self.fixed_weights) - 1

    def to_json(self) -> dict:
        return {
            'q': render_rational(self.q),
            'fixedWeights': list(self.fixed_weights),
            'iota': render_rational(self.iota),
            'fixedDim': self.dimension,
        }
