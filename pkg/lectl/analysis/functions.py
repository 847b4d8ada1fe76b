"""Exact instrumentation of soft covering and of the likelihood-encoder achievability argument"""
import itertools
import logging
from dataclasses import dataclass
from functools import reduce
import numpy as np
from lectl.finite_prob.distributions import JointPmf, SequenceDist, SequenceJoint, check_sequence_space, \
    enumeration_cap
from lectl.finite_prob.functions import product_extension, total_variation, index_sequence
from lectl.utils.errors import AllZeroLikelihood, EnumerationCapError, ShapeMismatchError

log = logging.getLogger(__name__)

# bound on the temporary (codewords x sequences) block summed at once in induced_marginal
CHUNK_STATES = 2 ** 22
# codebooks enumerated per vectorized step in codebook_expectation_q
CODEBOOK_BATCH = 2 ** 14


@dataclass(frozen=True)
class ProofCheckReport:
    """Exact quantities of every step of the achievability argument for one codebook"""
    n: int
    rate: float
    size: int
    tv_joint: float
    tv_marginal: float
    conditional_max_gap: float
    expected_q_distortion: float
    distortion_bound_rhs: float
    distortion_bound_rhs_tight: float
    empirical_distortion: float
    repeated_codewords: bool

    def as_row(self):
        return {
            'n': self.n,
            'R': self.rate,
            'M': self.size,
            'tv_joint': self.tv_joint,
            'tv_marginal': self.tv_marginal,
            'conditional_max_gap': self.conditional_max_gap,
            'expected_q_distortion': self.expected_q_distortion,
            'distortion_bound_rhs': self.distortion_bound_rhs,
            'distortion_bound_rhs_tight': self.distortion_bound_rhs_tight,
            'empirical_distortion': self.empirical_distortion,
            'repeated_codewords': int(self.repeated_codewords)
        }


def _check_channel(codebook, test_channel):
    if test_channel.input_size != codebook.alphabet_size:
        raise ShapeMismatchError('Test channel input size {0} does not match codebook alphabet size {1}'.format(
            test_channel.input_size, codebook.alphabet_size))


def _check_source(test_channel, source):
    if source.alphabet_size != test_channel.output_size:
        raise ShapeMismatchError('Source alphabet size {0} does not match test channel output size {1}'.format(
            source.alphabet_size, test_channel.output_size))


def _sequence_table(words, per_letter, ufunc):
    """
    table[m, x^n] = ufunc-reduction over t of per_letter[y_t(m), x_t], x^n lexicographic

    :param words: Codeword table (M x n)
    :param per_letter: Matrix indexed [y, x]
    :param ufunc: numpy.multiply for likelihoods, numpy.add for log-likelihoods or distortion sums
    :rtype: numpy.ndarray
    """
    size = words.shape[0]
    table = per_letter[words[:, 0]]
    for position in range(1, words.shape[1]):
        table = ufunc(table[:, :, None], per_letter[words[:, position]][:, None, :]).reshape(size, -1)
    return table


def _check_joint_space(codebook, test_channel, what):
    states = check_sequence_space(test_channel.output_size, codebook.n, what)
    cap = enumeration_cap()
    if states * codebook.size > cap:
        raise EnumerationCapError(what, states * codebook.size, cap, n=codebook.n,
                                  alphabet=test_channel.output_size)
    return states


def induced_marginal(codebook, test_channel):
    """
    Output distribution of a uniformly chosen codeword passed through the memoryless test channel:
    P(x^n) = (1/M) sum_m prod_t P_{X|Y}(x_t | y_t(m))

    :param codebook: The codebook
    :type codebook: Codebook
    :param test_channel: P_{X|Y}
    :type test_channel: Channel
    :return: Exact induced distribution over X^n
    :rtype: SequenceDist
    """
    _check_channel(codebook, test_channel)
    states = check_sequence_space(test_channel.output_size, codebook.n, 'induced_marginal')

    chunk = max(1, CHUNK_STATES // states)
    total = np.zeros(states)
    for start in range(0, codebook.size, chunk):
        block = _sequence_table(codebook.words[start:start + chunk], test_channel.matrix, np.multiply)
        total += block.sum(axis=0)

    return SequenceDist(test_channel.output_size, codebook.n, total / codebook.size)


def soft_cover_tv(codebook, test_channel, source):
    """
    Total variation between the induced output distribution and the i.i.d. source product

    :param codebook: The codebook
    :param test_channel: P_{X|Y}
    :param source: P_X
    :type source: Pmf
    :return: TV distance
    :rtype: Float
    """
    _check_source(test_channel, source)
    return total_variation(induced_marginal(codebook, test_channel), product_extension(source, codebook.n))


def ideal_joint_q(codebook, test_channel):
    """
    Idealized joint Q(x^n, m) = (1/M) prod_t P_{X|Y}(x_t | y_t(m)): uniform index through the test channel

    :param codebook: The codebook
    :param test_channel: P_{X|Y}
    :return: Joint over (x^n, codeword index); column m - 1 is index m
    :rtype: SequenceJoint
    """
    _check_channel(codebook, test_channel)
    _check_joint_space(codebook, test_channel, 'ideal_joint_q')
    table = _sequence_table(codebook.words, test_channel.matrix, np.multiply)
    return SequenceJoint(test_channel.output_size, codebook.n, table.T / codebook.size)


def _encoder_posterior_table(codebook, test_channel, source):
    """Posterior P(m | x^n) for every x^n (rows) and the source product prior"""
    prior = product_extension(source, codebook.n).probs
    with np.errstate(divide='ignore'):
        log_matrix = np.log(test_channel.matrix)
    log_table = _sequence_table(codebook.words, log_matrix, np.add).T

    reachable = np.isfinite(log_table).any(axis=1)
    unencodable = np.flatnonzero(~reachable & (prior > 0))
    if unencodable.size:
        sequence = index_sequence(int(unencodable[0]), test_channel.output_size, codebook.n)
        raise AllZeroLikelihood('Every codeword has zero likelihood for source sequence {0} ({1} such sequences)'.format(
            ''.join(str(symbol) for symbol in sequence), unencodable.size))

    shift = np.where(reachable, log_table.max(axis=1), 0.0)
    weights = np.exp(log_table - shift[:, None])
    sums = weights.sum(axis=1)
    posterior = weights / np.where(sums > 0, sums, 1.0)[:, None]
    return posterior, prior


def encoder_joint_p(codebook, test_channel, source):
    """
    Joint of the true system P(x^n, m) = prod_t P_X(x_t) * P_{M|X^n}(m | x^n)

    :param codebook: The codebook
    :param test_channel: P_{X|Y}
    :param source: P_X
    :return: Joint over (x^n, codeword index); column m - 1 is index m
    :rtype: SequenceJoint
    """
    _check_channel(codebook, test_channel)
    _check_source(test_channel, source)
    _check_joint_space(codebook, test_channel, 'encoder_joint_p')
    posterior, prior = _encoder_posterior_table(codebook, test_channel, source)
    return SequenceJoint(source.alphabet_size, codebook.n, posterior * prior[:, None])


def distortion_table(codebook, distortion):
    """
    Per-letter average distortion d(x^n, y^n(m)) for every source sequence (rows) and codeword (columns)

    :rtype: numpy.ndarray
    """
    return _sequence_table(codebook.words, distortion.table.T, np.add).T / codebook.n


def proof_check(codebook, test_channel, source, distortion):
    """
    Evaluate every step of the achievability argument exactly on one codebook

    :param codebook: The codebook
    :param test_channel: P_{X|Y}
    :param source: P_X
    :param distortion: Distortion measure
    :type distortion: DistortionMeasure
    :rtype: ProofCheckReport
    """
    _check_channel(codebook, test_channel)
    _check_source(test_channel, source)
    _check_joint_space(codebook, test_channel, 'proof_check')

    posterior, prior = _encoder_posterior_table(codebook, test_channel, source)
    p_joint = SequenceJoint(source.alphabet_size, codebook.n, posterior * prior[:, None])

    likelihoods = _sequence_table(codebook.words, test_channel.matrix, np.multiply).T
    q_joint = SequenceJoint(source.alphabet_size, codebook.n, likelihoods / codebook.size)

    tv_joint = total_variation(p_joint, q_joint)
    tv_marginal = total_variation(p_joint.marginal_sequence(), q_joint.marginal_sequence())

    q_norms = likelihoods.sum(axis=1)
    supported = prior > 0
    q_conditional = likelihoods[supported] / q_norms[supported][:, None]
    conditional_max_gap = float(np.abs(posterior[supported] - q_conditional).max())

    costs = distortion_table(codebook, distortion)
    expected_q = float((q_joint.probs * costs).sum())
    empirical = float((p_joint.probs * costs).sum())

    repeated = codebook.has_repeated_codewords
    if repeated:
        log.warning('Codebook has repeated codewords; TV over (x^n, m) refines TV over (x^n, y^n)')

    return ProofCheckReport(
        n=codebook.n,
        rate=codebook.rate,
        size=codebook.size,
        tv_joint=tv_joint,
        tv_marginal=tv_marginal,
        conditional_max_gap=conditional_max_gap,
        expected_q_distortion=expected_q,
        distortion_bound_rhs=expected_q + 2.0 * distortion.d_max * tv_joint,
        distortion_bound_rhs_tight=expected_q + distortion.d_max * tv_joint,
        empirical_distortion=empirical,
        repeated_codewords=repeated
    )


def letter_joint(output_pmf, test_channel):
    """
    Per-letter joint P_{X,Y}(x, y) = P_Y(y) P_{X|Y}(x | y), laid out [x, y]

    :rtype: JointPmf
    """
    if output_pmf.alphabet_size != test_channel.input_size:
        raise ShapeMismatchError('Output pmf size {0} does not match test channel input size {1}'.format(
            output_pmf.alphabet_size, test_channel.input_size))
    return JointPmf((output_pmf.probs[:, None] * test_channel.matrix).T)


def codebook_expectation_q(output_pmf, test_channel, n, size):
    """
    Average of the idealized joint Q over every codebook of M = size codewords,
    weighted by the probability of generating it. Exhaustive, for tiny instances.

    :param output_pmf: Codeword symbol distribution P_Y
    :param test_channel: P_{X|Y}
    :param n: Blocklength
    :param size: Number of codewords M
    :return: Joint over (x^n, y^n), both lexicographic
    :rtype: SequenceJoint
    """
    if output_pmf.alphabet_size != test_channel.input_size:
        raise ShapeMismatchError('Output pmf size {0} does not match test channel input size {1}'.format(
            output_pmf.alphabet_size, test_channel.input_size))

    output_states = check_sequence_space(output_pmf.alphabet_size, n, 'codebook_expectation_q')
    check_sequence_space(test_channel.output_size * output_pmf.alphabet_size, n, 'codebook_expectation_q')
    cap = enumeration_cap()
    codebooks = output_states ** size
    if codebooks > cap:
        raise EnumerationCapError('codebook_expectation_q codebooks', codebooks, cap,
                                  n=n * size, alphabet=output_pmf.alphabet_size)

    codeword_probs = product_extension(output_pmf, n).probs
    occupancy = np.zeros(output_states)
    codebook_rows = itertools.product(range(output_states), repeat=size)
    while True:
        batch = np.array(list(itertools.islice(codebook_rows, CODEBOOK_BATCH)), dtype=np.int64).reshape(-1, size)
        if batch.shape[0] == 0:
            break
        weights = codeword_probs[batch].prod(axis=1) / size
        np.add.at(occupancy, batch.ravel(), np.repeat(weights, size))

    channel_n = reduce(np.kron, [test_channel.matrix] * n)
    return SequenceJoint(test_channel.output_size, n, (channel_n * occupancy[:, None]).T)
