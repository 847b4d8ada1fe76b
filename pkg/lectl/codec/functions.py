"""Random codebooks, the likelihood encoder and the codeword-lookup decoder"""
import math
from dataclasses import dataclass, field
import numpy as np
from lectl.finite_prob.distributions import Channel, Pmf, enumeration_cap
from lectl.utils.errors import AllZeroLikelihood, EnumerationCapError, ShapeMismatchError, ValidationError
from lectl.utils.seeding import MASK_64

# n * R closer than this to an integer is treated as that integer before taking 2^{nR}
EXPONENT_SNAP = 1e-9
FLOAT_EXPONENT_LIMIT = 1000


@dataclass(frozen=True)
class Codebook:
    """
    M x n table of reproduction symbols. Codeword m (1-based) is row m - 1 of words.
    Symbols are stored one byte each for alphabets up to 256.
    """
    n: int
    rate: float
    words: np.ndarray
    seed: int
    alphabet_size: int

    def __post_init__(self):
        words = np.array(self.words)
        if words.ndim != 2 or words.shape[1] != self.n or words.shape[0] < 1:
            raise ValidationError('Codebook words must be an M x {0} table, got shape {1}'.format(
                self.n, words.shape))
        if words.size and (words.min() < 0 or words.max() >= self.alphabet_size):
            raise ValidationError('Codebook symbols must lie in [0, {0})'.format(self.alphabet_size))
        words = words.astype(symbol_dtype(self.alphabet_size))
        words.setflags(write=False)
        object.__setattr__(self, 'words', words)

    @property
    def size(self):
        return self.words.shape[0]

    @property
    def has_repeated_codewords(self):
        return np.unique(self.words, axis=0).shape[0] < self.size

    def __eq__(self, other):
        return isinstance(other, Codebook) and self.n == other.n and self.rate == other.rate \
            and self.seed == other.seed and self.alphabet_size == other.alphabet_size \
            and np.array_equal(self.words, other.words)

    def __hash__(self):
        return hash((self.n, self.rate, self.seed, self.alphabet_size, self.words.tobytes()))


@dataclass(frozen=True)
class EncoderSpec:
    """Likelihood encoder: a test channel P_{X|Y} together with a codebook"""
    test_channel: Channel
    codebook: Codebook
    log_matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.test_channel.input_size != self.codebook.alphabet_size:
            raise ShapeMismatchError('Test channel input size {0} does not match codebook alphabet size {1}'.format(
                self.test_channel.input_size, self.codebook.alphabet_size))
        with np.errstate(divide='ignore'):
            log_matrix = np.log(self.test_channel.matrix)
        log_matrix.setflags(write=False)
        object.__setattr__(self, 'log_matrix', log_matrix)


def symbol_dtype(alphabet_size):
    return np.uint8 if alphabet_size <= 256 else np.uint16


def codebook_size(n, rate):
    """
    Number of codewords ceil(2^{nR})

    :param n: Blocklength
    :param rate: Rate in bits per symbol
    :return: M
    :rtype: Int
    """
    exponent = n * rate
    if abs(exponent - round(exponent)) < EXPONENT_SNAP:
        return 1 << int(round(exponent))
    whole = int(math.floor(exponent))
    if whole < FLOAT_EXPONENT_LIMIT:
        return int(math.ceil(2.0 ** exponent))
    # 2^{nR} is past the float range: scale a 53-bit mantissa by an integer shift
    return int(math.ceil(2.0 ** (exponent - whole + 52))) << (whole - 52)


def generate_codebook(output_pmf, n, rate, seed):
    """
    Draw ceil(2^{nR}) codewords with i.i.d. symbols from output_pmf

    :param output_pmf: Codeword symbol distribution P_Y
    :type output_pmf: Pmf
    :param n: Blocklength (>= 1)
    :type n: Int
    :param rate: Rate in bits per symbol (>= 0)
    :type rate: Float
    :param seed: Unsigned 64-bit seed of the generator
    :type seed: Int
    :return: The codebook. Identical arguments give an identical codebook
    :rtype: Codebook
    """
    if n < 1:
        raise ValidationError('Blocklength must be at least 1, got {0}'.format(n))
    if not rate >= 0:
        raise ValidationError('Rate must be nonnegative, got {0}'.format(rate))
    if seed < 0 or seed > MASK_64:
        raise ValidationError('Seed must be an unsigned 64-bit integer, got {0}'.format(seed))

    size = codebook_size(n, rate)
    cap = enumeration_cap()
    if size * n > cap:
        raise EnumerationCapError('codebook', size * n, cap, n=n, alphabet=output_pmf.alphabet_size)

    rng = np.random.default_rng(seed)
    words = rng.choice(output_pmf.alphabet_size, size=(size, n), p=output_pmf.probs)
    return Codebook(n=n, rate=float(rate), words=words, seed=int(seed), alphabet_size=output_pmf.alphabet_size)


def _as_sequence(x, spec):
    sequence = np.asarray(x, dtype=np.int64)
    if sequence.ndim != 1 or sequence.shape[0] != spec.codebook.n:
        raise ShapeMismatchError('Source sequence must have length {0}, got shape {1}'.format(
            spec.codebook.n, sequence.shape))
    if sequence.min() < 0 or sequence.max() >= spec.test_channel.output_size:
        raise ValidationError('Source symbols must lie in [0, {0})'.format(spec.test_channel.output_size))
    return sequence


def log_likelihoods(x, spec):
    """
    Natural-log likelihood of x under every codeword passed through the test channel.
    Entries are -inf where the likelihood is zero.

    :param x: Source sequence
    :param spec: Encoder specification
    :type spec: EncoderSpec
    :return: Array of M log-weights, entry m - 1 for codeword m
    :rtype: numpy.ndarray
    """
    sequence = _as_sequence(x, spec)
    return spec.log_matrix[spec.codebook.words, sequence[None, :]].sum(axis=1)


def _checked_log_likelihoods(x, spec):
    weights = log_likelihoods(x, spec)
    if not np.any(np.isfinite(weights)):
        raise AllZeroLikelihood('Every codeword has zero likelihood for source sequence {0}'.format(
            ''.join(str(symbol) for symbol in np.asarray(x))))
    return weights


def posterior_from_log_weights(weights):
    """
    Max-shifted normalization of log-weights

    :rtype: numpy.ndarray
    """
    shifted = np.exp(weights - weights.max())
    return shifted / shifted.sum()


def encoder_posterior(x, spec):
    """
    P_{M|X^n}(. | x), proportional to the product likelihood of every codeword

    :param x: Source sequence
    :param spec: Encoder specification
    :type spec: EncoderSpec
    :return: Pmf over codeword indices; entry m - 1 is index m
    :rtype: Pmf
    """
    return Pmf(posterior_from_log_weights(_checked_log_likelihoods(x, spec)))


def likelihood_encode(x, spec, rng):
    """
    Sample an index from encoder_posterior with the Gumbel-max rule

    :param x: Source sequence
    :param spec: Encoder specification
    :type spec: EncoderSpec
    :param rng: Generator owning the random stream
    :type rng: numpy.random.Generator
    :return: Codeword index in 1..M
    :rtype: Int
    """
    weights = _checked_log_likelihoods(x, spec)
    noise = rng.gumbel(size=weights.shape[0])
    return int(np.argmax(weights + noise)) + 1


def sample_indices(x, spec, rng, size):
    """
    ``size`` independent likelihood_encode draws at once. Row i consumes the stream
    exactly as the i-th sequential call would.

    :return: Array of indices in 1..M
    :rtype: numpy.ndarray
    """
    weights = _checked_log_likelihoods(x, spec)
    noise = rng.gumbel(size=(size, weights.shape[0]))
    return np.argmax(weights[None, :] + noise, axis=1) + 1


def map_encode(x, spec):
    """
    Deterministic maximum-likelihood index, lowest index on ties

    :return: Codeword index in 1..M
    :rtype: Int
    """
    return int(np.argmax(_checked_log_likelihoods(x, spec))) + 1


def decode(index, codebook):
    """
    Codeword lookup

    :param index: Codeword index in 1..M
    :type index: Int
    :param codebook: The shared codebook
    :type codebook: Codebook
    :return: The codeword y^n(index)
    :rtype: numpy.ndarray
    """
    if not 1 <= index <= codebook.size:
        raise ValidationError('Codeword index {0} out of range 1..{1}'.format(index, codebook.size))
    return codebook.words[index - 1].copy()


def avg_distortion(x, y, distortion):
    """
    Per-letter average distortion (1/n) sum_i d(x_i, y_i)

    :param x: Source sequence
    :param y: Reproduction sequence
    :param distortion: Distortion measure
    :type distortion: DistortionMeasure
    :rtype: Float
    """
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape or x.ndim != 1:
        raise ShapeMismatchError('Sequences differ in length: {0} != {1}'.format(x.shape, y.shape))
    return float(distortion.table[x, y].mean())


def draw_source_sequence(source, n, rng):
    """
    i.i.d. source sequence of length n

    :rtype: numpy.ndarray
    """
    return rng.choice(source.alphabet_size, size=n, p=source.probs)
