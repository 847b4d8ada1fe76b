# pylint: disable=C0111
import click
import numpy as np
from lectl.rd_solver.functions import rd_curve
from lectl.utils.clickutils import OptionMutex
from lectl.utils.output import process_output

DEFAULT_SLOPES = tuple(float(slope) for slope in np.arange(0.5, 10.01, 0.5))


@click.command('rd-curve', short_help='Sweep the rate-distortion curve of the configured source')
@click.option('--slope', 'slopes', type=click.FloatRange(min=0.0), multiple=True, cls=OptionMutex,
              exclusive_with=['target_ds'], help='Lagrangian slope in nats per distortion unit (option reusable)')
@click.option('--target-d', 'target_ds', type=click.FLOAT, multiple=True, cls=OptionMutex,
              exclusive_with=['slopes'], help='Target expected distortion (option reusable)')
@click.option('--out', '-o', 'outfile', help='Full path to the output CSV file.', type=click.Path())
@click.pass_obj
def rd_curve_command(program_state, slopes, target_ds, outfile):
    """
    Sweep the rate-distortion curve of the configured source and distortion measure.

    \b
    The sweep is taken from, in order of precedence:
        --slope / --target-d          Command line values
        [rd_curve] slopes/distortions Configuration values
        0.5, 1.0, ..., 10.0           Default slopes
    """
    config = program_state.get_config()

    if slopes:
        points = rd_curve(config.source, config.distortion, slopes=list(slopes), jobs=program_state.jobs)
    elif target_ds:
        points = rd_curve(config.source, config.distortion, distortions=list(target_ds), jobs=program_state.jobs)
    elif config.rd_distortions is not None:
        points = rd_curve(config.source, config.distortion, distortions=list(config.rd_distortions),
                          jobs=program_state.jobs)
    else:
        sweep = config.rd_slopes if config.rd_slopes is not None else DEFAULT_SLOPES
        points = rd_curve(config.source, config.distortion, slopes=list(sweep), jobs=program_state.jobs)

    # the solver is deterministic: master_seed and seed are carried for replayability only
    rows = [dict(point.as_row(), master_seed=config.master_seed, seed=config.master_seed) for point in points]
    process_output(rows, outfile or config.output, 'rd-curve')
