# pylint: disable=C0111
# pylint: disable=R0801
import itertools
import logging
import click
from lectl.analysis.experiments import DEFAULT_DISTORTION_TRIALS, DEFAULT_TV_TRIALS, distortion_experiment, \
    expected_soft_cover_tv
from lectl.analysis.functions import proof_check
from lectl.codec.codebook_file import read_codebook
from lectl.codec.functions import generate_codebook
from lectl.utils.output import process_output
from lectl.utils.seeding import derive_seed

log = logging.getLogger(__name__)


def _sweep(config):
    points = list(itertools.product(config.n_list, config.rate_list))
    for count, (n, rate) in enumerate(points, start=1):
        yield n, rate
        log.debug('%d out of %d points (%d%%) done', count, len(points), round(count / len(points) * 100))


@click.command('soft-cover', short_help='Ensemble soft-covering TV over n_list x rate_list')
@click.option('--per-trial', is_flag=True, default=False, show_default=True,
              help='Write one row per codebook instead of one row per sweep point')
@click.option('--out', '-o', 'outfile', help='Full path to the output CSV file.', type=click.Path())
@click.pass_obj
def soft_cover(program_state, per_trial, outfile):
    """
    Total variation between the output distribution induced by a random codebook
    and the i.i.d. source, averaged over independently generated codebooks.
    """
    config = program_state.get_config()
    setup = program_state.get_setup()
    trials = program_state.get_trials(DEFAULT_TV_TRIALS)

    rows = []
    for n, rate in _sweep(config):
        report = expected_soft_cover_tv(setup.output_pmf, setup.test_channel, setup.source, n, rate,
                                        trials=trials, master_seed=config.master_seed, jobs=program_state.jobs)
        click.echo('n={0} R={1:g} M={2}: TV {3:.6g} +/- {4:.2g} (I(X;Y) = {5:.6g} bits)'.format(
            n, rate, report.size, report.tv_mean, report.tv_stderr, report.mutual_information), err=True)
        rows.extend(report.trial_rows() if per_trial else [report.as_row()])

    process_output(rows, outfile or config.output, 'soft-cover')


@click.command('distortion', short_help='End-to-end likelihood-encoder distortion over n_list x rate_list')
@click.option('--summary', is_flag=True, default=False, show_default=True,
              help='Write one summary row per sweep point instead of one row per trial')
@click.option('--codebook', 'codebook_file', type=click.Path(exists=True, dir_okay=False),
              help='Encode with this LECB codebook in every trial instead of sweeping')
@click.option('--out', '-o', 'outfile', help='Full path to the output CSV file.', type=click.Path())
@click.pass_obj
def distortion(program_state, summary, codebook_file, outfile):
    """
    Draw a codebook and a source sequence, likelihood-encode, decode and measure
    the per-letter distortion, repeated for every trial of every sweep point.
    """
    config = program_state.get_config()
    setup = program_state.get_setup()
    trials = program_state.get_trials(DEFAULT_DISTORTION_TRIALS)

    codebook = read_codebook(codebook_file) if codebook_file else None
    points = [(codebook.n, codebook.rate)] if codebook else _sweep(config)

    rows = []
    for n, rate in points:
        report = distortion_experiment(setup.source, setup.output_pmf, setup.test_channel, setup.distortion, n, rate,
                                       trials=trials, master_seed=config.master_seed, codebook=codebook,
                                       jobs=program_state.jobs)
        click.echo('n={0} R={1:g} M={2}: distortion {3:.6g} +/- {4:.2g} ({5} of {6} trials failed)'.format(
            report.n, report.rate, report.size, report.mean, report.stderr, report.failures, trials), err=True)
        rows.extend([report.as_row()] if summary else report.trial_rows())

    process_output(rows, outfile or config.output, 'distortion')


@click.command('proof-check', short_help='Exact check of every step of the achievability argument')
@click.option('--codebook', 'codebook_file', type=click.Path(exists=True, dir_okay=False),
              help='Check this LECB codebook instead of generating one per sweep point')
@click.option('--out', '-o', 'outfile', help='Full path to the output CSV file.', type=click.Path())
@click.pass_obj
def proof_check_command(program_state, codebook_file, outfile):
    """
    Compute, exactly and for one codebook per sweep point, the total variation
    between the encoder joint and the idealized joint, the posterior identity
    gap and both distortion bounds. Sweep point i uses the codebook seed derived
    from the master seed with index i.
    """
    config = program_state.get_config()
    setup = program_state.get_setup()

    if codebook_file:
        codebooks = [read_codebook(codebook_file)]
    else:
        codebooks = (generate_codebook(setup.output_pmf, n, rate, derive_seed(config.master_seed, index))
                     for index, (n, rate) in enumerate(_sweep(config)))

    rows = []
    for codebook in codebooks:
        report = proof_check(codebook, setup.test_channel, setup.source, setup.distortion)
        rows.append(dict(report.as_row(), master_seed=config.master_seed, seed=codebook.seed))

    process_output(rows, outfile or config.output, 'proof-check')
