"""
End-to-end tests for the orbk command line: report shapes, exit codes and
deterministic output.

Run from project root:
    python -m pytest testing/test_cli.py -v
"""

import sys
import os
import json
import pytest
from click.testing import CliRunner

# Ensure project root is on the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from config import settings  # noqa: E402
from main import cli  # noqa: E402

DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'data'))


def data(name):
    return os.path.join(DATA_DIR, name)


def run(*args, stdin=None):
    """Invoke orbk with logging silenced; return (exit code, parsed report, raw stdout)."""
    result = CliRunner().invoke(cli, list(args) + ['--log-level', 'CRITICAL'], input=stdin)
    return result.exit_code, json.loads(result.output), result.output


def class_by_size(path):
    _, report, _ = run('sectors', path)
    return {s['classSize']: s['class'] for s in report['sectors']}


# ──────────────────────────────────────────────────
# 1. Sector and cohomology commands
# ──────────────────────────────────────────────────
def test_sectors_z4():
    code, report, _ = run('sectors', data('z4_mixed.json'))
    assert code == 0
    assert report['command'] == 'sectors'
    assert report['groupOrder'] == 4
    iotas = {s['repr']: s['iota'] for s in report['sectors']}
    assert iotas == {'e': '0', '0': '3/4', '0.0': '1/2', '0.0.0': '5/4'}


def test_sectors_wps():
    code, report, _ = run('sectors', data('p112.json'))
    assert code == 0
    assert [s['q'] for s in report['sectors']] == ['0', '1/2']
    assert report['sectors'][1]['fixedWeights'] == [2]


def test_poincare_p112_keeps_degree_order():
    code, report, raw = run('poincare', data('p112.json'))
    assert code == 0
    assert list(report['degrees'].items()) == [('0', 1), ('2', 2), ('4', 1)]
    assert report['totalDim'] == 4
    assert raw.endswith('\n')


def test_poincare_linear_is_labelled_as_age_table():
    code, report, _ = run('poincare', data('line_z3.json'))
    assert code == 0
    assert report['label'] == 'age-graded dimension table'
    assert list(report['degrees']) == ['0', '2/3', '4/3']


def test_euler():
    assert run('euler', data('p112.json'))[1]['euler'] == 4
    assert run('euler', data('s3_point.json'))[1]['euler'] == 3


def test_mckay_quaternion():
    code, report, _ = run('mckay', data('q8_su2.json'))
    assert code == 0
    assert report['classCount'] == 5
    assert report['degrees'] == {'0': 1, '2': 4}
    assert report['bijection'] is True


def test_mckay_non_sl_is_an_input_error():
    code, report, _ = run('mckay', data('line_z3.json'))
    assert code == 2
    assert report['success'] is False
    assert report['error'] == 'NOT_SL'


def test_rotation_over_zeta8():
    code, report, _ = run('mckay', data('cyclotomic8.json'))
    assert code == 0
    assert report['classCount'] == 8
    assert report['degrees'] == {'0': 1, '2': 7}


def test_cyclic_sl2_file():
    code, report, _ = run('euler', data('z5_sl2.json'))
    assert code == 0
    assert report['euler'] == 5


# ──────────────────────────────────────────────────
# 2. Ring, pairing and counts
# ──────────────────────────────────────────────────
def test_ring_single_product_s3():
    sizes = class_by_size(data('s3_point.json'))
    t, r = sizes[3], sizes[2]
    code, report, _ = run('ring', data('s3_point.json'), '--sector', str(t), '--sector', str(t))
    assert code == 0
    assert report['product'] == {'0': '3', str(r): '3'}


def test_ring_full_table_s3():
    code, report, _ = run('ring', data('s3_point.json'))
    assert code == 0
    assert report['geometry'] == 'point'
    assert report['gramDeterminant'] == '1/36'
    assert report['normalization']


def test_ring_on_non_abelian_linear_quotient_rejected():
    code, report, _ = run('ring', data('q8_su2.json'))
    assert code == 2
    assert report['error'] == 'UNSUPPORTED_GEOMETRY'


def test_ring_abelian_linear_has_no_gram():
    code, report, _ = run('ring', data('line_z3.json'))
    assert code == 0
    assert report['gram'] is None


def test_pairing_and_threepoint():
    sizes = class_by_size(data('s3_point.json'))
    t, r = sizes[3], sizes[2]
    assert run('pairing', data('s3_point.json'), '--class', str(t), '--class', str(t))[1]['pairing'] == '1/2'
    code, report, _ = run('threepoint', data('s3_point.json'), '--class', str(t), '--class', str(t),
                          '--class', str(r))
    assert code == 0
    assert report['threepoint'] == '1'


def test_pairing_needs_two_classes():
    code, report, _ = run('pairing', data('s3_point.json'), '--class', '0')
    assert code == 2
    assert report['error'] == 'SEMANTIC_ERROR'


def test_kpoint_sign_obstruction():
    t = class_by_size(data('s3_point.json'))[3]
    code, report, _ = run('kpoint', data('s3_point.json'), '--class', str(t), '--class', str(t),
                          '--class', str(t))
    assert code == 0
    assert report['count'] == '0'
    assert report['nonempty'] is False
    assert report['multiplicities'] == [2, 2, 2]


def test_vdim_without_input():
    code, report, _ = run('vdim', '--dim', '3', '--marks', '3')
    assert code == 0
    assert report['virtual_dimension'] == '6'
    assert report['d'] == '3'
    assert report['stable'] is True


def test_vdim_reports_unstable_constant_component():
    code, report, _ = run('vdim', '--dim', '1', '--marks', '2')
    assert code == 0
    assert report['stable'] is False
    assert report['virtual_dimension'] == '0'


def test_vdim_with_twisted_marks():
    code, report, _ = run('vdim', '--dim', '2', '--iota', '1', '--iota', '1/2', '--iota', '1/2')
    assert code == 0
    assert report['virtual_dimension'] == '0'
    assert report['iota'] == '2'


def test_vdim_bad_rational():
    code, report, _ = run('vdim', '--dim', '2', '--c1a', 'two')
    assert code == 2
    assert report['error'] == 'SEMANTIC_ERROR'


# ──────────────────────────────────────────────────
# 3. Good maps and lifts
# ──────────────────────────────────────────────────
def test_goodmap_z4_not_good():
    code, report, _ = run('goodmap', data('z4_mixed.json'), '--element', '0.0')
    assert code == 0
    assert report['verdict'] == 'not_good'
    assert report['crossValidation']['passed'] is True


def test_goodmap_on_point_geometry_rejected():
    code, report, _ = run('goodmap', data('s3_point.json'), '--element', '0')
    assert code == 2
    assert report['error'] == 'UNSUPPORTED_GEOMETRY'


def test_lifts_klein_two_classes():
    code, report, _ = run('lifts', data('klein_four.json'), '--axis', '0', '--order', '2', '--action', '1')
    assert code == 0
    assert report['classes'] == 2
    assert report['verdict'] == 'good'


def test_lifts_z4_none_is_a_verdict():
    code, report, _ = run('lifts', data('z4_mixed.json'), '--axis', '1', '--order', '2', '--action', '1')
    assert code == 0
    assert report['verdict'] == 'not_good'
    assert report['lifts'] == []


# ──────────────────────────────────────────────────
# 4. Verification
# ──────────────────────────────────────────────────
@pytest.mark.parametrize('name', ['s3_point.json', 'z4_mixed.json', 'klein_four.json', 'p12.json'])
def test_verify_input(name):
    code, report, _ = run('verify', data(name))
    assert code == 0, report
    assert report['passed'] is True
    assert report['failures'] == 0


def test_verify_small_corpus(monkeypatch):
    monkeypatch.setitem(settings, 'ORBK_VERIFY_MAX_CYCLIC', 4)
    monkeypatch.setitem(settings, 'ORBK_VERIFY_MAX_WEIGHT_SUM', 5)
    code, report, _ = run('verify')
    assert code == 0, [r for r in report['reports'] if not r['passed']]
    assert report['checks'] > 0


# ──────────────────────────────────────────────────
# 5. Input handling and errors
# ──────────────────────────────────────────────────
def test_stdin_input():
    with open(data('p12.json'), encoding='utf-8') as handle:
        text = handle.read()
    code, report, _ = run('poincare', stdin=text)
    assert code == 0
    assert report['degrees'] == {'0': 1, '1': 1, '2': 1}


def test_syntax_error_on_stdin():
    code, report, _ = run('sectors', '-', stdin='{"kind": "matrix_group",')
    assert code == 2
    assert report['error'] == 'SYNTAX_ERROR'
    assert report['details']['path'] == '<stdin>'


def test_missing_file():
    code, report, _ = run('sectors', data('does_not_exist.json'))
    assert code == 2
    assert report['error'] == 'SEMANTIC_ERROR'


def test_unknown_command():
    code, report, _ = run('frobnicate', data('p12.json'))
    assert code == 2
    assert report['error'] == 'UNKNOWN_COMMAND'


def test_wrong_input_kind():
    code, report, _ = run('mckay', data('p112.json'))
    assert code == 2
    assert report['error'] == 'UNSUPPORTED_GEOMETRY'


def test_cap_exceeded():
    code, report, _ = run('sectors', data('q8_su2.json'), '--cap', '4')
    assert code == 2
    assert report['error'] == 'CAP_EXCEEDED'


def test_output_is_deterministic():
    first = run('ring', data('s3_point.json'))[2]
    second = run('ring', data('s3_point.json'))[2]
    assert first == second


@pytest.mark.parametrize('entry', ['z^²', '١'])
def test_non_ascii_entry_is_a_syntax_error(entry):
    document = json.dumps({'kind': 'matrix_group', 'dimension': 1, 'conductor': 4, 'generators': [[[entry]]]})
    code, report, _ = run('sectors', '-', stdin=document)
    assert code == 2
    assert report['error'] == 'SYNTAX_ERROR'
    assert report['details']['path'] == 'generators[0][0][0]'


@pytest.mark.skipif(not getattr(sys, 'get_int_max_str_digits', lambda: 0)(), reason='no integer digit limit')
def test_overlong_json_integer_is_a_syntax_error():
    digits = '1' * (sys.get_int_max_str_digits() + 1)
    code, report, _ = run('sectors', '-', stdin='{"kind": "weighted_projective", "weights": [1, ' + digits + ']}')
    assert code == 2
    assert report['error'] == 'SYNTAX_ERROR'


def test_weights_with_common_factor():
    code, report, _ = run('sectors', '-', stdin='{"kind": "weighted_projective", "weights": [2, 2]}')
    assert code == 2
    assert report['error'] == 'NON_EFFECTIVE_ACTION'


# ──────────────────────────────────────────────────
# 6. Default corpus
# ──────────────────────────────────────────────────
def test_verify_default_corpus():
    code, report, _ = run('verify')
    assert code == 0, [r['subject'] for r in report['reports'] if not r['passed']]
    assert report['passed'] is True
    assert report['failures'] == 0
    reference = next(r for r in report['reports'] if r['subject'] == 'reference values')
    assert {c['name']: c['passed'] for c in reference['checks']}['s3_correlator'] is True
