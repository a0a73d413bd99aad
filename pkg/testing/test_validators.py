"""
Unit tests for input parsing and marshmallow validation.

Run from project root:
    python -m pytest testing/test_validators.py -v
"""

import sys
import os
import json
import pytest

# Ensure project root is on the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from api.validators import (  # noqa: E402
    KIND_MATRIX_GROUP, KIND_WEIGHTED_PROJECTIVE, MatrixGroupSchema, load_spec, parse_input,
    validate_request_data,
)
from model import corpus  # noqa: E402
from model.cyclotomic import Cyclotomic  # noqa: E402
from model.utils.errors import ExpressionSyntaxError, NonEffectiveAction, SemanticError  # noqa: E402

DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'data'))


# ──────────────────────────────────────────────────
# 1. Matrix groups
# ──────────────────────────────────────────────────
def test_matrix_group_loads():
    spec = load_spec(corpus.quaternion())
    assert spec.kind == KIND_MATRIX_GROUP
    assert spec.dimension == 2 and spec.conductor == 4
    assert spec.geometry == 'linear'
    assert spec.generators[0].entries[1][1] == -Cyclotomic.zeta(4)


def test_geometry_defaults_to_linear():
    entry = corpus.klein_four()
    del entry['geometry']
    assert load_spec(entry).geometry == 'linear'


def test_unknown_keys_ignored():
    entry = corpus.klein_four()
    entry['comment'] = 'ignored'
    assert load_spec(entry).name == entry['name']


def test_round_trip_through_to_json():
    spec = load_spec(corpus.z4_mixed())
    again = load_spec(spec.to_json())
    assert again.generators == spec.generators
    assert again.name == spec.name


@pytest.mark.parametrize('mutate', [
    lambda d: d.pop('dimension'),
    lambda d: d.update(conductor=0),
    lambda d: d.update(dimension='2'),
    lambda d: d.update(geometry='orbifold'),
    lambda d: d.update(generators=[]),
    lambda d: d.update(generators=[[['1', '0']]]),
    lambda d: d.update(generators=[[['1', '0'], ['0']]]),
])
def test_invalid_matrix_groups(mutate):
    entry = corpus.klein_four()
    mutate(entry)
    with pytest.raises(SemanticError):
        load_spec(entry)


def test_bad_entry_reports_path():
    entry = corpus.klein_four()
    entry['generators'][1][0][1] = '1 +'
    with pytest.raises(ExpressionSyntaxError) as err:
        load_spec(entry)
    assert err.value.details['path'] == 'generators[1][0][1]'


def test_validate_request_data_returns_errors():
    data, errors = validate_request_data(MatrixGroupSchema, {'kind': 'matrix_group'})
    assert data is None
    assert 'dimension' in errors and 'generators' in errors


# ──────────────────────────────────────────────────
# 2. Weighted projective spaces and documents
# ──────────────────────────────────────────────────
def test_weighted_projective_loads():
    spec = load_spec({'kind': 'weighted_projective', 'weights': [1, 1, 2]})
    assert spec.kind == KIND_WEIGHTED_PROJECTIVE
    assert spec.space.weights == (1, 1, 2)


@pytest.mark.parametrize('weights', [[1], [1, 0], [1, 'x'], [1.5, 2]])
def test_invalid_weights(weights):
    with pytest.raises(SemanticError):
        load_spec({'kind': 'weighted_projective', 'weights': weights})


def test_weights_with_common_factor_rejected_on_load():
    with pytest.raises(NonEffectiveAction):
        load_spec({'kind': 'weighted_projective', 'weights': [2, 4, 6]})


def test_unknown_kind():
    with pytest.raises(SemanticError):
        load_spec({'kind': 'torus'})


def test_non_object_document():
    with pytest.raises(SemanticError):
        parse_input('[1, 2]')


def test_malformed_json_has_position():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_input('{\n  "kind": }', path='broken.json')
    assert err.value.line == 2
    assert err.value.details['path'] == 'broken.json'


def test_shipped_examples_parse():
    names = sorted(n for n in os.listdir(DATA_DIR) if n.endswith('.json'))
    assert names
    for name in names:
        with open(os.path.join(DATA_DIR, name), encoding='utf-8') as handle:
            spec = parse_input(handle.read(), path=name)
        assert spec.kind in (KIND_MATRIX_GROUP, KIND_WEIGHTED_PROJECTIVE)


def test_example_document_round_trips_as_json():
    spec = load_spec(corpus.cyclic_sl2(5))
    assert parse_input(json.dumps(spec.to_json())).generators == spec.generators
