import hashlib
import json

import pytest

from entwine import cli
from entwine.commands import registered_commands
from entwine.errors import EntwineError
from entwine.utils import SEED_ENV, VERSION

from conftest import fixture_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_commands_are_registered():
    assert registered_commands() == ['frobenius', 'galois', 'sep', 'verify']


@pytest.mark.parametrize('name', ['c1', 'cg2', 'da2', 'da2_collapse', 'cd2', 'dh2', 'cg2_trivial',
                                  'ck4', 'dk'])
def test_verify_accepts_fixtures(capsys, name):
    code, out, _ = run(capsys, 'verify', fixture_path(name))
    assert code == 0
    report = json.loads(out)
    assert report['ok']
    assert report['results']['failed_blocks'] == []


def test_report_layout(capsys):
    path = fixture_path('dh2')
    code, out, _ = run(capsys, 'verify', path)
    report = json.loads(out)
    assert set(report) == {'command', 'instance', 'ok', 'verdicts', 'results', 'witnesses',
                           'probabilistic', 'timings'}
    assert report['command'] == 'verify'
    with open(path, 'rb') as f:
        assert report['instance'] == hashlib.sha256(f.read()).hexdigest()
    entwining = [v for v in report['verdicts'] if v.get('kind') == 'entwining']
    assert entwining[0]['failed_axioms'] == []


def test_reports_are_deterministic(capsys):
    reports = []
    for _ in range(2):
        _, out, _ = run(capsys, 'frobenius', '--seed', '3', fixture_path('cg2'))
        report = json.loads(out)
        report.pop('timings')
        reports.append(report)
    assert reports[0] == reports[1]


def test_text_format(capsys):
    code, out, _ = run(capsys, 'verify', '--format', 'text', fixture_path('c1'))
    assert code == 0
    assert out.startswith('verify: ok')


def test_separability_exit_codes(capsys):
    code, out, _ = run(capsys, 'sep', fixture_path('cd2'))
    assert code == 1
    results = json.loads(out)['results']
    assert results['F_separable'] is False
    assert results['G_separable'] is True
    code, out, _ = run(capsys, 'sep', '--functor', 'G', fixture_path('cd2'))
    assert code == 0
    assert 'eta' in json.loads(out)['witnesses']


def test_frobenius_exit_codes(capsys):
    code, out, _ = run(capsys, 'frobenius', fixture_path('cg2'))
    assert code == 0
    report = json.loads(out)
    assert report['results']['frobenius'] is True
    assert set(report['witnesses']) == {'phi', 'phi_inverse', 'theta', 'eta'}
    code, out, _ = run(capsys, 'frobenius', fixture_path('da2_collapse'))
    assert code == 1
    assert json.loads(out)['results']['deterministic'] is True
    code, out, _ = run(capsys, 'frobenius', fixture_path('dk'))
    assert code == 1
    results = json.loads(out)['results']
    assert results['deterministic'] is True
    assert results['parameters'] == 0
    assert results['search'] == 'zero space'


def test_galois_exit_codes(capsys):
    code, out, _ = run(capsys, 'galois', fixture_path('dh2'))
    assert code == 0
    results = json.loads(out)['results']
    assert results['galois'] is True
    assert results['coinvariant_dims'] == {'pt,pt': 1}
    assert results['criteria'] == {'galois': True, 'entwining': True, 'coinvariance': True,
                                   'agree': True}
    code, out, _ = run(capsys, 'galois', fixture_path('cg2_trivial'))
    assert code == 1
    results = json.loads(out)['results']
    assert results['galois'] is False
    assert results['criteria']['agree'] is True


def test_parse_error_is_located(capsys, tmp_path):
    path = tmp_path / 'broken.ent'
    path.write_text('field rationals;\ncoalgebra C dim 1 {\n    basis: e $;\n}\n')
    code, out, err = run(capsys, 'verify', str(path))
    assert code == 2
    assert out == ''
    assert f'{path}:3:14: error: [lexical]' in err


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, 'verify', str(tmp_path / 'missing.ent'))
    assert code == 2
    assert err.startswith('entwine: ')
    code, _, _ = run(capsys, 'nonsense', fixture_path('c1'))
    assert code == 2


def test_version(capsys):
    code, out, _ = run(capsys, '--version')
    assert code == 0
    assert out.strip() == f'entwine {VERSION}'


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(SEED_ENV, 'not-a-number')
    code, _, err = run(capsys, 'frobenius', fixture_path('c1'))
    assert code == 2
    assert SEED_ENV in err
    # an explicit seed wins
    code, _, _ = run(capsys, 'frobenius', '--seed', '1', fixture_path('c1'))
    assert code == 0


def test_resolve_seed():
    assert cli.resolve_seed(None, {}) == 0
    assert cli.resolve_seed(None, {SEED_ENV: ' 5 '}) == 5
    assert cli.resolve_seed(3, {SEED_ENV: '5'}) == 3
    with pytest.raises(EntwineError):
        cli.resolve_seed(None, {SEED_ENV: '1.5'})
