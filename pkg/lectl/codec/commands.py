# pylint: disable=C0111
import click
from lectl.codec.codebook_file import write_codebook
from lectl.codec.functions import generate_codebook
from lectl.utils.seeding import derive_seed


@click.command('codebook', short_help='Generate a random codebook and write it as an LECB file')
@click.option('--blocklength', '-n', type=click.IntRange(min=1),
              help='Blocklength. Defaults to the first entry of n_list')
@click.option('--rate', '-r', type=click.FloatRange(min=0.0), help='Rate in bits per symbol. '
                                                                 'Defaults to the first entry of rate_list')
@click.option('--out', '-o', 'outfile', required=True, help='Full path to the output LECB file.',
              type=click.Path())
@click.pass_obj
def codebook_command(program_state, blocklength, rate, outfile):
    """
    Generate a codebook of ceil(2^(nR)) codewords drawn i.i.d. from the codeword
    distribution of the configuration and write it in the LECB binary format.
    The codebook seed is the first seed derived from the master seed, the same
    codebook proof-check generates for its first sweep point.
    """
    config = program_state.get_config()
    setup = program_state.get_setup()

    blocklength = blocklength if blocklength is not None else config.n_list[0]
    rate = rate if rate is not None else config.rate_list[0]

    codebook = generate_codebook(setup.output_pmf, blocklength, rate, derive_seed(config.master_seed, 0))
    write_codebook(codebook, outfile)

    click.echo('Wrote codebook n={0} R={1:g} M={2} seed={3} to {4}'.format(
        codebook.n, codebook.rate, codebook.size, codebook.seed, outfile), err=True)
