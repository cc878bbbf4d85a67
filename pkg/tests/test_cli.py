import json

import pytest
from click.testing import CliRunner

from app import cli
from persistence.registry import row_by_id
from services.errors import ClassificationError
from services.factorization import Direction, hurwitz_move
from utils.codec import dumps, factorization_to_dict


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    return runner.invoke(cli, list(args), obj={}, **kwargs)


def test_verify_table(runner):
    result = invoke(runner, '--format', 'text', 'verify-table')
    assert result.exit_code == 0
    assert result.output.splitlines() == [f"row {k}: OK" for k in range(1, 15)]


def test_verify_table_json(runner):
    result = invoke(runner, '--format', 'json', 'verify-table')
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert [r['row'] for r in rows] == list(range(1, 15))
    assert rows[0]['target'] == {'mat': [[1, 0], [-9, 1]], 'ab': 3}


def test_auroux_count(runner):
    result = invoke(runner, 'auroux', 'count', '5')
    assert result.exit_code == 0
    assert result.output.strip() == '3'


def test_auroux_count_table(runner):
    result = invoke(runner, '--format', 'text', 'auroux', 'count', '--table', '5')
    assert result.exit_code == 0
    assert result.output.splitlines() == ['1\t1', '2\t1', '3\t1', '4\t1', '5\t3']


def test_auroux_invariant_and_equiv(runner):
    result = invoke(runner, '--format', 'json', 'auroux', 'invariant', '[0,1]', '[5,2]')
    assert json.loads(result.output) == {'n': 5, 'k': 2}
    result = invoke(runner, '--format', 'json', 'auroux', 'equiv', '[0,1]', '[5,1]', '[0,1]', '[5,4]')
    data = json.loads(result.output)
    assert data['equivalent'] is True
    assert data['witness']['braid_moves'] == 1
    result = invoke(runner, 'auroux', 'invariant', '[5,2]', '[0,1]')
    assert result.exit_code == 2


def test_format_env_var(runner, monkeypatch):
    monkeypatch.setenv('TORUS_MONODROMY_FORMAT', 'json')
    result = invoke(runner, 'auroux', 'count', '5')
    assert json.loads(result.output) == {'n': 5, 'count': 3}


def test_classify_from_stdin(runner):
    f = hurwitz_move(row_by_id(7).factorization(), 1, Direction.FORWARD)
    result = invoke(runner, '--format', 'json', 'classify', '-', input=dumps(factorization_to_dict(f)))
    assert result.exit_code == 0
    cert = json.loads(result.output)
    assert cert['row'] == 7
    assert cert['word'] == [3]


def test_classify_then_replay_certificate(runner, tmp_path):
    f = hurwitz_move(row_by_id(3).factorization(), 2, Direction.INVERSE)
    source = tmp_path / 'f.json'
    source.write_text(dumps(factorization_to_dict(f)))
    result = invoke(runner, '--format', 'json', 'classify', str(source))
    assert result.exit_code == 0
    cert_path = tmp_path / 'cert.json'
    cert_path.write_text(result.output)

    result = invoke(runner, '--format', 'text', 'classify', str(source), '--certificate', str(cert_path))
    assert result.exit_code == 0
    assert result.output.strip() == 'row 3: OK'

    cert = json.loads(cert_path.read_text())
    cert['row'] = 4
    cert_path.write_text(json.dumps(cert))
    result = invoke(runner, 'classify', str(source), '--certificate', str(cert_path))
    assert result.exit_code == 1


def test_classify_malformed_json(runner):
    result = invoke(runner, 'classify', '-', input='{"factors": [')
    assert result.exit_code == 2
    result = invoke(runner, 'classify', '-', input='{"factors": [{"cycle": [2, 2], "power": 1}]}')
    assert result.exit_code == 2


def test_classify_reports_stage(runner, mocker):
    mocker.patch('api.classify.classify', side_effect=ClassificationError('orient', 'no admissible sign'))
    f = row_by_id(1).factorization()
    result = invoke(runner, 'classify', '-', input=dumps(factorization_to_dict(f)))
    assert result.exit_code == 1
    assert '[orient]' in result.output


def test_classify_non_extremal_exits_one(runner):
    payload = {'factors': [{'cycle': [1, 0], 'power': 1}], 'boundary': [0, 1]}
    result = invoke(runner, 'classify', '-', input=json.dumps(payload))
    assert result.exit_code == 1
    assert '[identity]' in result.output


def test_classify_inline_json(runner):
    f = hurwitz_move(row_by_id(7).factorization(), 1, Direction.FORWARD)
    result = invoke(runner, '--format', 'json', 'classify', json.dumps(factorization_to_dict(f)))
    assert result.exit_code == 0
    assert json.loads(result.output)['row'] == 7


def test_classify_missing_file(runner, tmp_path):
    result = invoke(runner, 'classify', str(tmp_path / 'missing.json'))
    assert result.exit_code == 2


def test_certificate_without_digest_is_malformed(runner, tmp_path):
    f = hurwitz_move(row_by_id(2).factorization(), 1, Direction.FORWARD)
    source = json.dumps(factorization_to_dict(f))
    cert = json.loads(invoke(runner, '--format', 'json', 'classify', source).output)
    del cert['digest']
    cert_path = tmp_path / 'cert.json'
    cert_path.write_text(json.dumps(cert))
    result = invoke(runner, 'classify', source, '--certificate', str(cert_path))
    assert result.exit_code == 2


def test_markov_commands(runner):
    result = invoke(runner, '--format', 'json', 'markov', 'solve', '--powers', '1', '1', '1', '--bound', '2')
    assert json.loads(result.output)['solutions'] == [[1, 1, 1], [1, 1, 2], [1, 2, 1], [2, 1, 1]]
    result = invoke(runner, '--format', 'json', 'markov', 'reduce', '2', '5', '29', '--powers', '1', '1', '1')
    assert json.loads(result.output) == {'minimum': [1, 1, 1], 'powers': [1, 1, 1], 'word': [1, 1, 3]}
    result = invoke(runner, '--format', 'json', 'markov', 'orbit', '1', '1', '1', '--powers', '3', '3', '3',
                    '--depth', '1')
    assert len(json.loads(result.output)) == 3
    result = invoke(runner, 'markov', 'reduce', '1', '2', '3', '--powers', '1', '1', '1')
    assert result.exit_code == 2
    result = invoke(runner, 'markov', 'solve', '--powers', '2', '2', '8')
    assert result.exit_code == 2


def test_fuzz_command(runner):
    result = invoke(runner, '--format', 'json', 'fuzz', '--type', '6', '--trials', '3', '--seed', '9')
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['seed'] == 9
    assert data['rows'] == [{'row': 6, 'trials': 3, 'verified': 3, 'failures': []}]


def test_fuzz_output_is_reproducible(runner):
    first = invoke(runner, '--format', 'json', 'fuzz', '--type', '12', '--trials', '4', '--seed', '2')
    second = invoke(runner, '--format', 'json', 'fuzz', '--type', '12', '--trials', '4', '--seed', '2')
    assert first.output == second.output


def test_fuzz_failure_exits_one(runner, mocker):
    mocker.patch('services.fuzz.verify_certificate', return_value=False)
    result = invoke(runner, '--format', 'text', 'fuzz', '--type', '1', '--trials', '2', '--seed', '4')
    assert result.exit_code == 1
    assert 'row 1: 0/2 verified' in result.output
    assert '--seed' in result.output


def test_fuzz_unexpected_error_exits_one(runner, mocker):
    mocker.patch('services.fuzz.classify', side_effect=ValueError('boom'))
    result = invoke(runner, '--format', 'text', 'fuzz', '--type', '3', '--trials', '1', '--seed', '0')
    assert result.exit_code == 1
    assert '[internal] ValueError: boom' in result.output


def test_registry_dump(runner):
    result = invoke(runner, '--format', 'json', 'registry', 'dump')
    rows = json.loads(result.output)
    assert len(rows) == 14
    assert rows[11]['powers'] == [1, 2, 8]
    assert rows[11]['minimum'] == [4, 2, 1]


def test_unknown_verb(runner):
    result = invoke(runner, 'frobnicate')
    assert result.exit_code == 2
