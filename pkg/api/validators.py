# validators.py
"""
Input validation using marshmallow.
Turns an input file into an InputSpec: a matrix group (entries parsed into
exact cyclotomic values) or a weighted projective space.
"""

import json
from dataclasses import dataclass
from typing import Optional, Tuple

from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load, validate, validates_schema

from model.expression import parse_expression
from model.fingroup import Matrix
from model.utils.errors import ExpressionSyntaxError, SemanticError
from model.wps import WeightedProjectiveSpace

KIND_MATRIX_GROUP = 'matrix_group'
KIND_WEIGHTED_PROJECTIVE = 'weighted_projective'


@dataclass(frozen=True)
class InputSpec:
    """A validated input file."""

    kind: str
    name: Optional[str] = None
    dimension: Optional[int] = None
    conductor: Optional[int] = None
    geometry: Optional[str] = None
    generators: Tuple[Matrix, ...] = ()
    weights: Tuple[int, ...] = ()

    @property
    def space(self) -> WeightedProjectiveSpace:
        return WeightedProjectiveSpace(self.weights)

    def to_json(self) -> dict:
        """Serialize back to the input format (entries in canonical expression form)."""
        if self.kind == KIND_WEIGHTED_PROJECTIVE:
            data = {'kind': self.kind, 'weights': list(self.weights)}
        else:
            data = {
                'kind': self.kind,
                'dimension': self.dimension,
                'conductor': self.conductor,
                'geometry': self.geometry,
                'generators': [g.to_json() for g in self.generators],
            }
        if self.name:
            data['name'] = self.name
        return data


class MatrixGroupSchema(Schema):
    """Schema for a finite matrix group over Q(zeta_N)"""

    class Meta:
        unknown = EXCLUDE

    kind = fields.String(
        required=True,
        validate=validate.Equal(KIND_MATRIX_GROUP),
        error_messages={'required': 'Input kind is required'}
    )
    name = fields.String(allow_none=True, load_default=None)
    dimension = fields.Integer(
        required=True,
        strict=True,
        validate=validate.Range(min=1),
        error_messages={'required': 'Matrix dimension is required'}
    )
    conductor = fields.Integer(
        required=True,
        strict=True,
        validate=validate.Range(min=1),
        error_messages={'required': 'Conductor is required and must be >= 1'}
    )
    geometry = fields.String(
        load_default='linear',
        validate=validate.OneOf(['point', 'linear'])
    )
    generators = fields.List(
        fields.List(fields.List(fields.String())),
        required=True,
        validate=validate.Length(min=1),
        error_messages={'required': 'At least one generator is required'}
    )

    @validates_schema
    def validate_shapes(self, data, **kwargs):
        """Every generator must be dimension x dimension"""
        n = data.get('dimension')
        if n is None:
            return
        for g, rows in enumerate(data.get('generators', [])):
            if len(rows) != n:
                raise ValidationError(f'Generator {g} has {len(rows)} rows, expected {n}', 'generators')
            for r, row in enumerate(rows):
                if len(row) != n:
                    raise ValidationError(
                        f'Generator {g} row {r} has {len(row)} entries, expected {n}', 'generators'
                    )

    @post_load
    def make_spec(self, data, **kwargs):
        conductor = data['conductor']
        matrices = []
        for g, rows in enumerate(data['generators']):
            parsed = [
                [parse_expression(text, conductor, path=f'generators[{g}][{r}][{c}]') for c, text in enumerate(row)]
                for r, row in enumerate(rows)
            ]
            matrices.append(Matrix.from_rows(parsed, conductor))
        return InputSpec(
            kind=KIND_MATRIX_GROUP,
            name=data.get('name'),
            dimension=data['dimension'],
            conductor=conductor,
            geometry=data['geometry'],
            generators=tuple(matrices),
        )


class WeightedProjectiveSchema(Schema):
    """Schema for P(w_0, ..., w_n)"""

    class Meta:
        unknown = EXCLUDE

    kind = fields.String(required=True, validate=validate.Equal(KIND_WEIGHTED_PROJECTIVE))
    name = fields.String(allow_none=True, load_default=None)
    weights = fields.List(
        fields.Integer(strict=True, validate=validate.Range(min=1, error='Weights must be >= 1')),
        required=True,
        validate=validate.Length(min=2, error='At least two weights are required'),
        error_messages={'required': 'Weights are required'}
    )

    @post_load
    def make_spec(self, data, **kwargs):
        # raises NonEffectiveAction when the weights share a factor
        weights = WeightedProjectiveSpace.of(data['weights']).weights
        return InputSpec(kind=KIND_WEIGHTED_PROJECTIVE, name=data.get('name'), weights=weights)


SCHEMAS = {
    KIND_MATRIX_GROUP: MatrixGroupSchema,
    KIND_WEIGHTED_PROJECTIVE: WeightedProjectiveSchema,
}


def validate_request_data(schema_class, data):
    """
    Validate input data against schema

    Args:
        schema_class: Marshmallow schema class
        data: Data to validate

    Returns:
        Tuple: (validated_data, errors)
        errors is a dict, empty if no errors
    """
    try:
        schema = schema_class()
        validated = schema.load(data)
        return validated, {}
    except ValidationError as err:
        return None, err.messages


def load_spec(data, path: Optional[str] = None) -> InputSpec:
    """Validate an already decoded input document."""
    if not isinstance(data, dict):
        raise SemanticError('Input must be a JSON object', details={'path': path} if path else None)
    kind = data.get('kind')
    if kind not in SCHEMAS:
        raise SemanticError(
            f"Unknown input kind {kind!r}; expected one of {sorted(SCHEMAS)}",
            details={'kind': kind}
        )
    spec, errors = validate_request_data(SCHEMAS[kind], data)
    if errors:
        raise SemanticError('Invalid input', details={'errors': errors, **({'path': path} if path else {})})
    return spec


def parse_input(text: str, path: Optional[str] = None) -> InputSpec:
    """
    Parse an input file.

    Raises:
        ExpressionSyntaxError: malformed JSON or entry expression (with line/column)
        SemanticError: well-formed input describing an invalid object
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ExpressionSyntaxError(f'Invalid JSON: {err.msg}', line=err.lineno, column=err.colno, path=path)
    except ValueError as err:
        # e.g. an integer literal past the interpreter's digit limit
        raise ExpressionSyntaxError(f'Invalid JSON: {err}', path=path)
    return load_spec(data, path)
