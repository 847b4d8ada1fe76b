"""Monte Carlo ensembles over random codebooks"""
import logging
from dataclasses import dataclass
from functools import partial
from typing import Tuple
import numpy as np
from lectl.analysis.functions import soft_cover_tv, letter_joint
from lectl.codec.functions import EncoderSpec, generate_codebook, codebook_size, likelihood_encode, decode, \
    avg_distortion, draw_source_sequence
from lectl.finite_prob.functions import mutual_information
from lectl.utils.errors import AllZeroLikelihood, ShapeMismatchError, ValidationError
from lectl.utils.parallel import ordered_map
from lectl.utils.seeding import derive_seed, trial_seeds

log = logging.getLogger(__name__)

DEFAULT_TV_TRIALS = 20
DEFAULT_DISTORTION_TRIALS = 200
# stream index, under a trial seed, of the source and encoder randomness
ENCODER_STREAM = 0


def mean_and_stderr(values):
    """
    Mean and standard error, summed in index order

    :param values: Sample values
    :type values: List
    :return: Tuple (mean, stderr). stderr is 0 for fewer than two values, both are nan for none
    :rtype: Tuple
    """
    samples = np.asarray(values, dtype=float)
    if samples.size == 0:
        return float('nan'), float('nan')
    mean = float(samples.mean())
    if samples.size < 2:
        return mean, 0.0
    return mean, float(samples.std(ddof=1) / np.sqrt(samples.size))


@dataclass(frozen=True)
class SoftCoverReport:
    """Ensemble soft-covering TV over independently generated codebooks"""
    n: int
    rate: float
    size: int
    trials: int
    master_seed: int
    tv_mean: float
    tv_stderr: float
    mutual_information: float
    tvs: Tuple[float, ...]
    seeds: Tuple[int, ...]

    def as_row(self):
        return {
            'n': self.n,
            'R': self.rate,
            'M': self.size,
            'trials': self.trials,
            'tv_mean': self.tv_mean,
            'tv_stderr': self.tv_stderr,
            'I_XY': self.mutual_information,
            'master_seed': self.master_seed,
            'seed': self.seeds[0]
        }

    def trial_rows(self):
        return [{
            'n': self.n,
            'R': self.rate,
            'M': self.size,
            'trial': trial,
            'tv': tv,
            'master_seed': self.master_seed,
            'seed': seed
        } for trial, (tv, seed) in enumerate(zip(self.tvs, self.seeds))]


def _soft_cover_trial(output_pmf, test_channel, source, n, rate, seed):
    codebook = generate_codebook(output_pmf, n, rate, seed)
    return soft_cover_tv(codebook, test_channel, source)


def expected_soft_cover_tv(output_pmf, test_channel, source, n, rate, trials=DEFAULT_TV_TRIALS, master_seed=0,
                           jobs=1):
    """
    Mean and standard error of soft_cover_tv over ``trials`` codebooks.
    Trial t uses the codebook seed derive_seed(master_seed, t).

    :param output_pmf: Codeword symbol distribution P_Y
    :param test_channel: P_{X|Y}
    :param source: P_X the induced distribution is compared against
    :param n: Blocklength
    :param rate: Rate in bits per symbol
    :param trials: Number of codebooks (>= 2)
    :param master_seed: Master seed
    :param jobs: Worker processes
    :rtype: SoftCoverReport
    """
    if trials < 2:
        raise ValidationError('Soft covering ensembles need at least 2 trials, got {0}'.format(trials))

    seeds = trial_seeds(master_seed, trials)
    worker = partial(_soft_cover_trial, output_pmf, test_channel, source, n, rate)
    tvs = ordered_map(worker, seeds, jobs)
    tv_mean, tv_stderr = mean_and_stderr(tvs)

    return SoftCoverReport(
        n=n,
        rate=float(rate),
        size=codebook_size(n, rate),
        trials=trials,
        master_seed=master_seed,
        tv_mean=tv_mean,
        tv_stderr=tv_stderr,
        mutual_information=mutual_information(letter_joint(output_pmf, test_channel)),
        tvs=tuple(float(tv) for tv in tvs),
        seeds=tuple(seeds)
    )


@dataclass(frozen=True)
class DistortionReport:
    """Per-trial results of the end-to-end experiment and their summary"""
    n: int
    rate: float
    size: int
    trials: int
    master_seed: int
    rows: Tuple[dict, ...]
    mean: float
    stderr: float
    failures: int

    def as_row(self):
        return {
            'n': self.n,
            'R': self.rate,
            'M': self.size,
            'trials': self.trials,
            'mean': self.mean,
            'stderr': self.stderr,
            'failures': self.failures,
            'master_seed': self.master_seed,
            'seed': self.rows[0]['seed']
        }

    def trial_rows(self):
        return list(self.rows)


def _distortion_trial(source, output_pmf, test_channel, distortion, n, rate, codebook, master_seed, trial_seed):
    trial, seed = trial_seed
    if codebook is None:
        codebook = generate_codebook(output_pmf, n, rate, seed)

    rng = np.random.default_rng(derive_seed(seed, ENCODER_STREAM))
    sequence = draw_source_sequence(source, codebook.n, rng)
    spec = EncoderSpec(test_channel, codebook)

    row = {
        'n': codebook.n,
        'R': codebook.rate,
        'M': codebook.size,
        'trial': trial,
        'distortion': float('nan'),
        'index': 0,
        'all_zero': 0,
        'master_seed': master_seed,
        'seed': seed
    }
    try:
        index = likelihood_encode(sequence, spec, rng)
    except AllZeroLikelihood:
        row['all_zero'] = 1
        return row

    row['index'] = index
    row['distortion'] = avg_distortion(sequence, decode(index, codebook), distortion)
    return row


def distortion_experiment(source, output_pmf, test_channel, distortion, n, rate,
                          trials=DEFAULT_DISTORTION_TRIALS, master_seed=0, codebook=None, jobs=1):
    """
    End-to-end lossy coding trials: codebook, i.i.d. source sequence, likelihood encoding,
    decoding and per-letter distortion. Every trial draws a fresh codebook unless a
    fixed codebook is given.

    :param source: P_X
    :param output_pmf: Codeword symbol distribution P_Y
    :param test_channel: P_{X|Y}
    :param distortion: Distortion measure
    :param n: Blocklength (ignored in favour of the codebook's when a codebook is given)
    :param rate: Rate (ignored in favour of the codebook's when a codebook is given)
    :param trials: Number of trials (>= 1)
    :param master_seed: Master seed
    :param codebook: Optional fixed codebook
    :param jobs: Worker processes
    :rtype: DistortionReport
    """
    if trials < 1:
        raise ValidationError('Distortion experiments need at least 1 trial, got {0}'.format(trials))
    if distortion.source_size != source.alphabet_size or distortion.output_size != test_channel.input_size:
        raise ShapeMismatchError('Distortion table shape {0} does not match alphabets ({1}, {2})'.format(
            distortion.table.shape, source.alphabet_size, test_channel.input_size))

    if codebook is not None:
        n, rate = codebook.n, codebook.rate

    seeds = trial_seeds(master_seed, trials)
    worker = partial(_distortion_trial, source, output_pmf, test_channel, distortion, n, rate, codebook,
                     master_seed)
    rows = ordered_map(worker, list(enumerate(seeds)), jobs)

    failures = sum(row['all_zero'] for row in rows)
    if failures:
        log.warning('%d of %d trials at n=%d, R=%g had all-zero likelihoods and are excluded from the mean',
                    failures, trials, n, rate)

    mean, stderr = mean_and_stderr([row['distortion'] for row in rows if not row['all_zero']])
    return DistortionReport(
        n=n,
        rate=float(rate),
        size=rows[0]['M'],
        trials=trials,
        master_seed=master_seed,
        rows=tuple(rows),
        mean=mean,
        stderr=stderr,
        failures=failures
    )
