from click.testing import CliRunner
from lectl.cli import cli
from lectl.config.operations import load_config, parse_config


runner = CliRunner()


def test_config_missing_subcommand():
    result = runner.invoke(cli, ['config'])

    # Note: Need to match for 'cli' instead of 'lectl' because of how the runner invokes the cli.
    assert 'Usage: cli config [OPTIONS] COMMAND [ARGS]...' in result.output


def test_config_validate():
    result = runner.invoke(cli, ['-c', 'tests/data/forward_channel.ini', 'config', 'validate'])

    assert result.exit_code == 0
    assert 'Configuration OK: tests/data/forward_channel.ini' in result.output


def test_config_validate_invalid(tmpdir):
    path = '{0}/pytest.tmp.ini'.format(tmpdir)
    with open(path, 'w') as outfile:
        outfile.write('[source]\nprobs = 0.5 0.4\n')

    result = runner.invoke(cli, ['-c', path, 'config', 'validate'])

    assert result.exit_code == 1
    assert '{0}:2: [source] probs:'.format(path) in result.output


def test_config_show_applies_overrides():
    result = runner.invoke(cli, ['-c', 'tests/data/binary_hamming.ini', '--seed', '5', '--trials', '9', 'config', 'show'])

    assert result.exit_code == 0
    shown = parse_config(result.output)
    expected = load_config('tests/data/binary_hamming.ini', seed=5, trials=9)
    assert shown == expected
    assert 'master_seed = 5' in result.output
