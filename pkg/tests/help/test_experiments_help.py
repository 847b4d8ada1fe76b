from click.testing import CliRunner
from lectl.cli import cli


runner = CliRunner()


def test_rd_curve_command():
    result = runner.invoke(cli, ['rd-curve', '--help'])

    assert result.exit_code == 0
    assert '--slope FLOAT' in result.output
    assert '--target-d FLOAT' in result.output
    assert '-o, --out PATH' in result.output
    assert 'Conflicts' in result.output


def test_soft_cover_command():
    result = runner.invoke(cli, ['soft-cover', '--help'])

    assert result.exit_code == 0
    assert '--per-trial' in result.output
    assert '-o, --out PATH' in result.output


def test_distortion_command():
    result = runner.invoke(cli, ['distortion', '--help'])

    assert result.exit_code == 0
    assert '--summary' in result.output
    assert '--codebook FILE' in result.output


def test_proof_check_command():
    result = runner.invoke(cli, ['proof-check', '--help'])

    assert result.exit_code == 0
    assert '--codebook FILE' in result.output


def test_codebook_command():
    result = runner.invoke(cli, ['codebook', '--help'])

    assert result.exit_code == 0
    assert '-n, --blocklength INTEGER RANGE' in result.output
    assert '-r, --rate FLOAT RANGE' in result.output
    assert '-o, --out PATH' in result.output
