import json
import sys

import pytest

from permpattern_utils import cli, __version__
from permpattern_utils.numbers import IntPolynomial

from conftest import TEST_DATA


WORKED_EXAMPLES = TEST_DATA['bijections']


def run_cli(monkeypatch, *args):
    monkeypatch.setattr(sys, 'argv', ['permpattern-utils'] + list(args))
    cli.main()


def test_version(monkeypatch, capsys):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, '--version')
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_count(monkeypatch, capsys):
    run_cli(monkeypatch, 'count', 'abc', '1324')
    assert capsys.readouterr().out == "2\n"


def test_count_csv(monkeypatch, capsys):
    run_cli(monkeypatch, 'count', 'abc', '1324', '--format', 'csv')
    assert capsys.readouterr().out.splitlines() == ["pattern,perm,count", "abc,1324,2"]


def test_count_positions_json(monkeypatch, capsys):
    run_cli(monkeypatch, 'count', 'abc', '1324', '--positions', '--format', 'json')
    payload = json.loads(capsys.readouterr().out)
    assert payload['perm'] == "1324"
    assert payload['count'] == 2


def test_count_bad_pattern(monkeypatch):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'count', 'a--bc', '1324')
    assert excinfo.value.code.startswith("Error: 'a--bc'")


def test_avoiders_count(monkeypatch, capsys):
    run_cli(monkeypatch, 'avoiders', '-p', 'a-bc', '-n', '4', '--count')
    assert capsys.readouterr().out == "15\n"


def test_avoiders_list(monkeypatch, capsys):
    run_cli(monkeypatch, 'avoiders', '-p', 'a-bc', '-p', 'a-cb', '-n', '3', '--list')
    assert capsys.readouterr().out.split() == ["213", "231", "312", "321"]


def test_avoiders_cap(monkeypatch):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'avoiders', '-p', 'a-bc', '-n', '6', '--max-n', '5')
    assert "exceeds the enumeration cap (6 > 5)" in excinfo.value.code


def test_avoiders_config_file(monkeypatch, tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text("max_n: -1\n")
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'avoiders', '-n', '3', '--config', str(config))
    assert excinfo.value.code.startswith("Error: -1 is less than the minimum of 0")


@pytest.mark.parametrize('args,expect', [
    (['dyck', '321'], "uuuddd"),
    (['dyck', 'ududud', '--inverse'], "123"),
    (['abc-partition', '1,3,5/2,6,9/4,7/8'], "847296153"),
    (['phi', '1/2/3'], "1/2/3"),
], ids=['dyck', 'dyck_inverse', 'abc_partition', 'phi'])
def test_biject(monkeypatch, capsys, args, expect):
    run_cli(monkeypatch, 'biject', *args)
    assert capsys.readouterr().out == expect + "\n"


def test_biject_json(monkeypatch, capsys):
    run_cli(monkeypatch, 'biject', 'motzkin', '1', '--format', 'json')
    payload = json.loads(capsys.readouterr().out)
    assert payload['direction'] == "forward"
    assert payload['text'] == "l"


def test_biject_domain_error(monkeypatch):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'biject', 'dyck', '213')
    assert "does not avoid b-ac" in excinfo.value.code


def test_sequence(monkeypatch, capsys):
    run_cli(monkeypatch, 'sequence', 'bell', '6')
    assert capsys.readouterr().out == "1,1,2,5,15,52,203\n"


def test_sequence_triangle(monkeypatch, capsys):
    run_cli(monkeypatch, 'sequence', 'stirling2', '2')
    assert capsys.readouterr().out.splitlines() == ["0: 1", "1: 0 1", "2: 0 1 1"]


def test_sequence_unknown(monkeypatch):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'sequence', 'fibonacci', '3')
    assert "unknown sequence 'fibonacci'" in excinfo.value.code


def test_poly(monkeypatch, capsys):
    run_cli(monkeypatch, 'poly', 'bessel', '2')
    assert capsys.readouterr().out == "1 + 3x + 3x^2\n"


def test_poly_json(monkeypatch, capsys):
    run_cli(monkeypatch, 'poly', 'bessel', '3', '--method', 'explicit', '--format', 'json')
    payload = json.loads(capsys.readouterr().out)
    assert payload['coefficients'] == [1, 6, 15, 15]


def test_verify_list_claims(monkeypatch, capsys):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'verify', '--list-claims', '--claim', 'table.*')
    assert excinfo.value.code == 0
    out = capsys.readouterr().out
    assert "table.bell1" in out
    assert "lemma2" not in out


def test_verify_json(monkeypatch, capsys):
    run_cli(monkeypatch, 'verify', '--claim', 'table.bell1', '--n', '5', '--format', 'json')
    payload = json.loads(capsys.readouterr().out)
    assert payload['passed']
    assert payload['n_max'] == 5
    assert [result['claim_id'] for result in payload['results']] == ['table.bell1']


def test_verify_cap(monkeypatch):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(monkeypatch, 'verify', '--claim', 'table.bell1', '--n', '6', '--max-n', '5')
    assert excinfo.value.code.startswith("Error:")


def cli_output(monkeypatch, capsys, *args):
    run_cli(monkeypatch, *args)
    return capsys.readouterr().out


@pytest.mark.parametrize('case', WORKED_EXAMPLES, ids=[case['name'] for case in WORKED_EXAMPLES])
def test_biject_inverse_restores_input(monkeypatch, capsys, case):
    image = cli_output(monkeypatch, capsys, 'biject', case['map'], case['input'])
    assert image == case['output'] + "\n"
    restored = cli_output(monkeypatch, capsys, 'biject', case['map'], image.strip(), '--inverse')
    assert restored == case['input'] + "\n"


def test_count_worked_example(monkeypatch, capsys):
    assert cli_output(monkeypatch, capsys, 'count', 'a-bc', '491273865') == "3\n"


def test_avoiders_motzkin_class(monkeypatch, capsys):
    out = cli_output(monkeypatch, capsys, 'avoiders', '-p', 'a-bc', '-p', 'ac-b', '-n', '6',
                     '--count')
    assert out == "51\n"


@pytest.mark.parametrize('args,key', [
    (['count', 'a-bc', '491273865'], 'count'),
    (['avoiders', '-p', 'b-ac', '-n', '5', '--count'], 'count'),
], ids=['count', 'avoiders'])
def test_json_matches_text_count(monkeypatch, capsys, args, key):
    text = cli_output(monkeypatch, capsys, *args)
    payload = json.loads(cli_output(monkeypatch, capsys, *args, '--format', 'json'))
    assert int(text) == payload[key]


def test_json_matches_text_sequence(monkeypatch, capsys):
    text = cli_output(monkeypatch, capsys, 'sequence', 'motzkin', '8')
    payload = json.loads(cli_output(monkeypatch, capsys, 'sequence', 'motzkin', '8',
                                    '--format', 'json'))
    assert [int(value) for value in text.strip().split(',')] == payload['values']


@pytest.mark.parametrize('family,n', [('bessel', 4), ('eulerian-avoid', 6)])
def test_json_matches_text_poly(monkeypatch, capsys, family, n):
    text = cli_output(monkeypatch, capsys, 'poly', family, str(n))
    payload = json.loads(cli_output(monkeypatch, capsys, 'poly', family, str(n),
                                    '--format', 'json'))
    assert text.strip() == payload['text']
    assert str(IntPolynomial(payload['coefficients'])) == payload['text']


@pytest.mark.parametrize('args', [
    ['count', 'abc', '1234'],
    ['biject', 'dyck', '321'],
], ids=['count', 'biject'])
def test_max_n_accepted_everywhere(monkeypatch, capsys, args):
    assert cli_output(monkeypatch, capsys, *args, '--max-n', '4')
