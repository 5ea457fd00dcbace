import importlib
import json

from fractions import Fraction

import pytest

from floorpoly import __version__
from floorpoly.cli import build_parser, main
from floorpoly.cli.run_config import RunConfig
from floorpoly.exceptions import VerificationError
from floorpoly.lemma import f_kl


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_expand_two(capsys):
    assert main(['expand', '2']) == 0
    assert capsys.readouterr().out.strip() == 'x0*fl(x1) + x1*fl(x0) - fl(x0)*fl(x1) + fr(x0)*fr(x1)'


def test_expand_one(capsys):
    assert main(['expand', '1']) == 0
    assert capsys.readouterr().out.strip() == 'x0'


def test_expand_with_certificate(capsys):
    assert main(['expand', '3', '--certify']) == 0
    output = capsys.readouterr().out
    assert 'all residual coefficients zero' in output
    assert 'fails (' in output


def test_expand_json(capsys):
    assert main(['expand', '2', '--certify', '--format', 'json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert len(document['terms']) == 4
    assert document['certificate']['holds'] is True


@pytest.mark.parametrize('argv', [['expand', '21'], ['expand', '0'], ['expand', '10', '--certify']])
def test_expand_size_guards(argv):
    assert main(argv) == 2


@pytest.mark.parametrize('argv', [
    ['verify', 'identity', '--n', '4', '--trials', '100', '--seed', '1'],
    ['verify', 'partition', '--n', '12', '--trials', '100'],
    ['verify', 'lemma1', '--k', '3', '--l', '2', '--trials', '50'],
])
def test_verify_suites(argv, capsys):
    assert main(argv) == 0
    assert 'passed' in capsys.readouterr().out


def test_verify_reports_failures(monkeypatch):
    def failing_suite(*args, **kwargs):
        raise VerificationError('Expected Verification Error || injected', (1, 2))

    monkeypatch.setattr(importlib.import_module('floorpoly.cli.main'), 'run_suite', failing_suite)
    assert main(['verify', 'identity']) == 1


def test_verify_rejects_zero_trials():
    assert main(['verify', 'identity', '--trials', '0']) == 2


def test_fkl(capsys):
    assert main(['fkl', '--k', '2', '--l', '3', '--y', '1/12']) == 0
    assert capsys.readouterr().out.strip() == 'f_{2,3}(1/12) = 1/24'


def test_fkl_json(capsys):
    assert main(['fkl', '--k', '3', '--l', '1', '--y', '1/2,1/3', '--format', 'json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert len(document['a_bar']) == 2
    assert document['value'] == str(f_kl(3, 1, [Fraction(1, 2), Fraction(1, 3)]))


@pytest.mark.parametrize('y', ['3/2', '1/2,1/2', '0.5'])
def test_fkl_rejects_bad_points(y):
    assert main(['fkl', '--k', '2', '--l', '1', '--y', y]) == 2


def test_dist_rational_alpha(capsys):
    assert main(['dist', '--alpha', 'rat:3', '--k', '2', '--n', '100']) == 0
    assert 'consistent-nonuniform' in capsys.readouterr().out


def test_dist_text_run_writes_default_report(workdir):
    assert main(['dist', '--alpha', 'rat:3', '--k', '2', '--n', '100']) == 0
    document = json.loads((workdir / 'floorpoly-dist.json').read_text())
    assert document['report']['verdict'] == 'consistent-nonuniform'
    assert document['run_config']['command'] == 'dist'


def test_pilot_writes_anchors_and_thresholds(workdir):
    code = main(['pilot', '--n', '1000', '--margin', '1.2', '--format', 'json', '--output', 'pilot.json'])
    document = json.loads((workdir / 'pilot.json').read_text())
    report = document['report']
    assert code == (0 if report['separated'] else 1)
    assert report['N'] == 1000
    assert report['margin'] == 1.2
    assert len(report['anchors']) == 5
    assert document['run_config']['command'] == 'pilot'


def test_dist_output_is_reproducible(tmp_path):
    target = str(tmp_path / 'report.json')
    argv = ['dist', '--variant', 'theorem-combination', '--alpha', 'root:2,2', '--k', '2', '--n', '500',
            '--format', 'json', '--output', target]

    assert main(argv) == 0
    first = (tmp_path / 'report.json').read_bytes()
    assert main(argv) == 0
    assert (tmp_path / 'report.json').read_bytes() == first

    document = json.loads(first)
    assert document['floorpoly_version'] == __version__
    assert document['run_config']['command'] == 'dist'
    assert sum(document['report']['histogram']) == 500


def test_dist_csv(tmp_path):
    target = tmp_path / 'values.csv'
    assert main(['dist', '--variant', 'nested-alpha', '--alpha', 'rat:1/2', '--alpha', 'rat:3', '--n', '4',
                 '--format', 'csv', '--output', str(target)]) == 0
    assert target.read_text().splitlines() == ['0.5', '0', '0.5', '0']


@pytest.mark.parametrize('argv', [
    ['dist', '--alpha', 'e', '--k', '2', '--n', '10'],
    ['dist', '--k', '2', '--n', '10'],
    ['dist', '--alpha', 'pi', '--k', '0', '--n', '10'],
])
def test_dist_usage_errors(argv):
    assert main(argv) == 2


def test_dist_precision_failure():
    assert main(['dist', '--alpha', 'pi', '--k', '3', '--n', '50', '--precision-cap', '64']) == 3


def test_corollary(capsys):
    assert main(['corollary', '--alpha', 'rat:3', '--k', '2', '--n', '100']) == 0
    output = capsys.readouterr().out
    assert 'power-chain' in output and 'theorem-combination' in output


def test_witness(capsys):
    assert main(['witness', '--k', '3', '--samples', '200000', '--seed', '1']) == 0
    assert '-> nonuniform' in capsys.readouterr().out


def test_witness_json(capsys):
    assert main(['witness', '--k', '3', '--samples', '100000', '--statistic', 'uniform', '--format', 'json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['witness']['statistic'] == 'uniform'
    assert document['run_config']['seed'] == 0


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv('FLOORPOLY_JOBS', 'many')
    assert main(['expand', '2']) == 2


def test_precision_cap_below_start_is_rejected():
    assert main(['dist', '--alpha', 'pi', '--k', '2', '--n', '10', '--precision-cap', '32']) == 2


def test_run_config_from_arguments():
    args = build_parser().parse_args(['dist', '--alpha', 'pi', '--k', '3', '--seed', '5', '--format', 'json'])
    config = RunConfig.from_namespace(args).to_dict()
    assert config['command'] == 'dist'
    assert config['seed'] == 5
    assert config['format'] == 'json'
    assert config['parameters']['alpha'] == ['pi']
    assert 'handler' not in config['parameters']


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(['--version'])
    assert exit_info.value.code == 0
    assert __version__ in capsys.readouterr().out
