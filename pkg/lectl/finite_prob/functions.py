"""Exact information measures and constructions over finite alphabets"""
import logging
from functools import reduce
import numpy as np
from scipy.special import entr, rel_entr
from lectl.finite_prob.distributions import Pmf, Channel, JointPmf, SequenceDist, SequenceJoint, \
    check_sequence_space
from lectl.utils.errors import ShapeMismatchError, ValidationError

log = logging.getLogger(__name__)

LN2 = np.log(2.0)


def entropy(pmf):
    """
    Shannon entropy in bits. 0 log 0 is taken as 0.

    :param pmf: Distribution
    :type pmf: Pmf
    :return: H(pmf) in bits
    :rtype: Float
    """
    return float(entr(pmf.probs).sum() / LN2)


def kl_divergence(p, q):
    """
    Relative entropy D(p || q) in bits; infinite when p is not absolutely continuous w.r.t. q

    :param p: Distribution
    :param q: Reference distribution of the same shape
    :return: D(p || q) in bits
    :rtype: Float
    """
    _check_same_shape(p, q)
    return float(rel_entr(p.probs, q.probs).sum() / LN2)


def mutual_information(joint):
    """
    I(X;Y) in bits from a joint pmf and its marginals

    :param joint: Joint distribution of X and Y
    :type joint: JointPmf
    :return: Mutual information in bits
    :rtype: Float
    """
    product = np.outer(joint.probs.sum(axis=1), joint.probs.sum(axis=0))
    value = rel_entr(joint.probs, product).sum() / LN2
    # clamp rounding noise below zero
    return float(max(value, 0.0))


def total_variation(p, q):
    """
    Half the L1 distance between two distributions of identical shape

    :param p: Pmf, SequenceDist or SequenceJoint
    :param q: Same type and shape as p
    :return: TV distance in [0, 1]
    :rtype: Float
    """
    _check_same_shape(p, q)
    distance = 0.5 * np.abs(p.probs - q.probs).sum()
    return float(min(distance, 1.0))


def _check_same_shape(p, q):
    for attribute in ('alphabet_size', 'n'):
        if getattr(p, attribute, None) != getattr(q, attribute, None):
            raise ShapeMismatchError('Distributions differ in {0}: {1} != {2}'.format(
                attribute, getattr(p, attribute, None), getattr(q, attribute, None)))
    if p.probs.shape != q.probs.shape:
        raise ShapeMismatchError('Distributions differ in shape: {0} != {1}'.format(p.probs.shape, q.probs.shape))


def joint_from(source, channel):
    """
    Joint pmf P(a, b) = source(a) * channel(b | a)

    :param source: Input distribution
    :type source: Pmf
    :param channel: Channel from the input alphabet
    :type channel: Channel
    :return: The joint distribution
    :rtype: JointPmf
    """
    if channel.input_size != source.alphabet_size:
        raise ShapeMismatchError('Channel input size {0} does not match pmf alphabet size {1}'.format(
            channel.input_size, source.alphabet_size))
    return JointPmf(source.probs[:, None] * channel.matrix)


def reverse_channel(joint):
    """
    Bayes inversion of a joint pmf into (P_Y, P_{X|Y}).
    Rows for zero-probability Y symbols are set to uniform and listed in
    Channel.degenerate_rows.

    :param joint: Joint distribution of X and Y
    :type joint: JointPmf
    :return: Tuple of the Y marginal and the channel giving X given Y
    :rtype: Tuple
    """
    output = joint.probs.sum(axis=0)
    matrix = np.empty((joint.size_y, joint.size_x))
    degenerate = []
    for symbol in range(joint.size_y):
        if output[symbol] > 0:
            column = joint.probs[:, symbol] / output[symbol]
            matrix[symbol] = column / column.sum()
        else:
            matrix[symbol] = 1.0 / joint.size_x
            degenerate.append(symbol)

    if degenerate:
        log.warning('Reverse channel rows %s have zero probability; set to uniform', degenerate)

    return Pmf(output), Channel(matrix, degenerate_rows=tuple(degenerate))


def product_extension(pmf, n):
    """
    i.i.d. product distribution over X^n in lexicographic order

    :param pmf: Per-letter distribution
    :type pmf: Pmf
    :param n: Blocklength
    :type n: Int
    :return: The product distribution
    :rtype: SequenceDist
    """
    if n < 1:
        raise ValidationError('Blocklength must be at least 1, got {0}'.format(n))
    check_sequence_space(pmf.alphabet_size, n, 'product_extension')
    probs = reduce(np.kron, [pmf.probs] * n)
    return SequenceDist(pmf.alphabet_size, n, probs)


def product_joint(joint, n):
    """
    i.i.d. product of a joint pmf laid out over (x^n, y^n), both lexicographic

    :param joint: Per-letter joint distribution
    :type joint: JointPmf
    :param n: Blocklength
    :type n: Int
    :return: The product joint
    :rtype: SequenceJoint
    """
    check_sequence_space(joint.size_x * joint.size_y, n, 'product_joint')
    probs = reduce(np.kron, [joint.probs] * n)
    return SequenceJoint(joint.size_x, n, probs)


def sequence_index(sequence, alphabet_size):
    """
    Lexicographic index of a sequence, first symbol most significant

    :param sequence: Symbols
    :type sequence: Iterable
    :param alphabet_size: Alphabet size
    :return: Index
    :rtype: Int
    """
    index = 0
    for symbol in sequence:
        index = index * alphabet_size + int(symbol)
    return index


def index_sequence(index, alphabet_size, n):
    """
    Inverse of sequence_index

    :return: Sequence of length n
    :rtype: numpy.ndarray
    """
    sequence = np.zeros(n, dtype=np.int64)
    for position in range(n - 1, -1, -1):
        index, sequence[position] = divmod(index, alphabet_size)
    return sequence


def all_sequences(alphabet_size, n):
    """
    All sequences of X^n as rows of an (alphabet_size^n, n) array, lexicographic order

    :rtype: numpy.ndarray
    """
    check_sequence_space(alphabet_size, n, 'all_sequences', factor=n)
    grids = np.indices((alphabet_size,) * n)
    return grids.reshape(n, -1).T
