"""lectl initialization"""
import logging
import click
from lectl import __version__
from lectl.analysis import commands as analysis_commands
from lectl.codec import commands as codec_commands
from lectl.config import commands as config_commands
from lectl.config.operations import DEFAULT_CONFIG_FILE
from lectl.rd_solver import commands as rd_solver_commands
from lectl.utils.clickutils import LectlGroup
from lectl.utils.seeding import MASK_64
from lectl.utils.state import ProgramState

LOG_FORMAT = '%(levelname)s: %(name)s: %(message)s'


@click.group(cls=LectlGroup)
@click.version_option(__version__, '-v', '--version', message='%(version)s')
@click.option('--config', '-c', 'config_file', help='Location of the experiment configuration file',
              default=DEFAULT_CONFIG_FILE, show_default=True)
@click.option('--seed', '-s', type=click.IntRange(0, MASK_64), help='Master seed. Overrides [experiment] master_seed')
@click.option('--trials', '-t', type=click.IntRange(min=1), help='Trials per sweep point. Overrides [experiment] trials')
@click.option('--jobs', '-j', type=click.IntRange(min=1), default=1, show_default=True,
              help='Worker processes for independent sweep points and trials')
@click.option('--debug', '-d', help='Show debug output', is_flag=True, default=False)
@click.pass_context
def cli(ctx, config_file, seed, trials, jobs, debug):
    """Likelihood Encoder Command Line Interface"""
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger().setLevel(logging.DEBUG if debug else logging.WARNING)

    ctx.obj = ProgramState(config_file, seed=seed, trials=trials, jobs=jobs, debug=debug)


@cli.group(cls=LectlGroup)
def config():
    """Manage the experiment configuration"""


cli.add_command(rd_solver_commands.rd_curve_command)
cli.add_command(codec_commands.codebook_command)
cli.add_command(analysis_commands.soft_cover)
cli.add_command(analysis_commands.distortion)
cli.add_command(analysis_commands.proof_check_command)

config.add_command(config_commands.show_config)
config.add_command(config_commands.validate_config)
