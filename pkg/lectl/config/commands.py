# pylint: disable=C0111
import click
from lectl.config.operations import dump_config


@click.command('show', short_help='Print the normalized configuration')
@click.pass_obj
def show_config(program_state):
    """
    Print the configuration as it was parsed, with every value written out
    exactly and command line overrides (--seed, --trials) applied
    """
    click.echo(dump_config(program_state.get_config()))


@click.command('validate', short_help='Validate the configuration file')
@click.pass_obj
def validate_config(program_state):
    """Parse and validate the configuration, resolving the test channel"""
    program_state.get_setup()
    click.echo('Configuration OK: {0}'.format(program_state.get_config_file()))
