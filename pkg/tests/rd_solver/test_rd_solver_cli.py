import pandas as pd
import pytest
from click.testing import CliRunner
from lectl.cli import cli
from lectl.rd_solver.functions import binary_rd


runner = CliRunner()
CONFIG = 'tests/data/binary_hamming.ini'


def read_rows(path):
    return pd.read_csv(path, comment='#')


def test_rd_curve_configured_distortions(tmpdir):
    outfile = '{0}/pytest.tmp.csv'.format(tmpdir)
    result = runner.invoke(cli, ['--config', CONFIG, 'rd-curve', '--out', outfile])

    assert result.exit_code == 0

    with open(outfile) as infile:
        header = infile.readline()
    assert header == '# lectl rd-curve v1 columns=slope,D,R,iterations,converged,master_seed,seed\n'

    rows = read_rows(outfile)
    assert len(rows) == 4
    for target, (_, row) in zip([0.05, 0.11, 0.2, 0.3], rows.iterrows()):
        assert abs(row['R'] - binary_rd(target)) < 1e-3
        assert row['master_seed'] == 7


def test_rd_curve_target_d(tmpdir):
    outfile = '{0}/pytest.tmp.csv'.format(tmpdir)
    result = runner.invoke(cli, ['-c', CONFIG, 'rd-curve', '--target-d', '0.2', '-o', outfile])

    assert result.exit_code == 0
    rows = read_rows(outfile)
    assert rows['R'][0] == pytest.approx(0.27807, abs=1e-3)


def test_rd_curve_slopes(tmpdir):
    outfile = '{0}/pytest.tmp.csv'.format(tmpdir)
    result = runner.invoke(cli, ['-c', CONFIG, 'rd-curve', '--slope', '1', '--slope', '2', '--slope', '0',
                                 '-o', outfile])

    assert result.exit_code == 0
    rows = read_rows(outfile)
    assert list(rows['slope']) == [1.0, 2.0, 0.0]
    assert rows['R'][2] == 0.0
    assert rows['D'][2] == 0.5


def test_rd_curve_is_deterministic(tmpdir):
    first = '{0}/first.csv'.format(tmpdir)
    second = '{0}/second.csv'.format(tmpdir)

    runner.invoke(cli, ['-c', 'tests/data/rate_distortion.ini', 'rd-curve', '-o', first])
    runner.invoke(cli, ['-c', 'tests/data/rate_distortion.ini', '--jobs', '2', 'rd-curve', '-o', second])

    with open(first, 'rb') as first_file, open(second, 'rb') as second_file:
        assert first_file.read() == second_file.read()


def test_rd_curve_mutually_exclusive_options():
    result = runner.invoke(cli, ['-c', CONFIG, 'rd-curve', '--slope', '1', '--target-d', '0.2'])

    assert result.exit_code == 2
    assert 'mutually exclusive' in result.output


def test_rd_curve_target_below_minimum():
    result = runner.invoke(cli, ['-c', CONFIG, 'rd-curve', '--target-d=-0.1'])

    assert result.exit_code == 1
    assert 'below the minimal achievable distortion' in result.output
