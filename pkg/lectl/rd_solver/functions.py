"""Rate-distortion function by alternating minimization (Blahut-Arimoto)"""
import logging
from dataclasses import dataclass
from functools import partial
import numpy as np
from scipy.special import logsumexp, rel_entr
from lectl.finite_prob.distributions import Channel
from lectl.finite_prob.functions import entropy
from lectl.utils.errors import ShapeMismatchError, ValidationError
from lectl.utils.parallel import ordered_map

log = logging.getLogger(__name__)

LN2 = np.log(2.0)
DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITERS = 10000
DEFAULT_DISTORTION_TOL = 1e-7
MAX_BISECTION_STEPS = 200
MAX_SLOPE = 2.0 ** 40


@dataclass(frozen=True)
class RdPoint:
    """A point on the rate-distortion curve and the forward channel achieving it"""
    distortion: float
    rate: float
    channel: Channel
    iterations: int
    converged: bool
    slope: float

    def as_row(self):
        return {
            'slope': self.slope,
            'D': self.distortion,
            'R': self.rate,
            'iterations': self.iterations,
            'converged': int(self.converged)
        }


def _check_sizes(source, distortion):
    if distortion.source_size != source.alphabet_size:
        raise ShapeMismatchError('Distortion table has {0} rows but the source alphabet has {1} symbols'.format(
            distortion.source_size, source.alphabet_size))


def _rate_and_distortion(source_probs, channel, table):
    joint = source_probs[:, None] * channel
    output = joint.sum(axis=0)
    rate = rel_entr(joint, source_probs[:, None] * output[None, :]).sum() / LN2
    return max(float(rate), 0.0), float((joint * table).sum())


def _alternate(source_probs, log_kernel, table, slope, tol, max_iters):
    """
    Alternating minimization of I(X;Y) + slope * E[d] over channels whose
    unnormalized log-form is log q(y) + log_kernel[x, y].

    :return: Tuple (channel matrix, rate, distortion, iterations, converged)
    """
    size_y = log_kernel.shape[1]
    with np.errstate(divide='ignore'):
        log_px = np.log(source_probs)
    log_channel = np.full(log_kernel.shape, -np.log(size_y))

    objective = np.inf
    rate = None
    distortion = None
    converged = False
    iteration = 0

    while iteration < max_iters:
        iteration += 1
        log_output = logsumexp(log_px[:, None] + log_channel, axis=0)
        unnormalized = log_output[None, :] + log_kernel
        norms = logsumexp(unnormalized, axis=1, keepdims=True)
        # rows that lost all support can only belong to zero-probability source symbols
        unnormalized = np.where(np.isfinite(norms), unnormalized, log_kernel)
        log_channel = unnormalized - logsumexp(unnormalized, axis=1, keepdims=True)

        channel = np.exp(log_channel)
        channel /= channel.sum(axis=1, keepdims=True)
        new_rate, distortion = _rate_and_distortion(source_probs, channel, table)

        new_objective = new_rate * LN2 + slope * distortion
        assert new_objective <= objective + 1e-12 * max(1.0, abs(new_objective)), \
            'Lagrangian increased from {0} to {1}'.format(objective, new_objective)
        objective = new_objective

        if rate is not None and abs(new_rate - rate) < tol:
            rate = new_rate
            converged = True
            break
        rate = new_rate

    return channel, rate, distortion, iteration, converged


def _zero_rate_point(source, distortion):
    expected = source.probs @ distortion.table
    # argmin takes the lowest index among ties
    best = int(np.argmin(expected))
    matrix = np.zeros((source.alphabet_size, distortion.output_size))
    matrix[:, best] = 1.0
    return RdPoint(distortion=float(expected[best]), rate=0.0, channel=Channel(matrix),
                   iterations=0, converged=True, slope=0.0)


def blahut_arimoto(source, distortion, slope, tol=DEFAULT_TOL, max_iters=DEFAULT_MAX_ITERS):
    """
    Point on the rate-distortion curve at Lagrangian slope ``slope`` (nats per
    distortion unit). Starts from the uniform channel.

    :param source: Source distribution
    :type source: Pmf
    :param distortion: Distortion measure
    :type distortion: DistortionMeasure
    :param slope: Nonnegative Lagrangian slope. 0 gives the zero-rate point
    :type slope: Float
    :param tol: Convergence tolerance on successive rate iterates (bits)
    :type tol: Float
    :param max_iters: Iteration limit. On exhaustion the last iterate is returned with converged=False
    :type max_iters: Int
    :return: The (D, R) point and its forward channel P_{Y|X}
    :rtype: RdPoint
    """
    _check_sizes(source, distortion)
    if not slope >= 0:
        raise ValidationError('Slope must be nonnegative, got {0}'.format(slope))
    if slope == 0:
        return _zero_rate_point(source, distortion)

    channel, rate, expected, iterations, converged = _alternate(
        source.probs, -slope * distortion.table, distortion.table, slope, tol, max_iters)

    if not converged:
        log.warning('Blahut-Arimoto did not converge within %d iterations at slope %g', max_iters, slope)

    return RdPoint(distortion=expected, rate=rate, channel=Channel(channel), iterations=iterations,
                   converged=converged, slope=float(slope))


def achievable_distortion_range(source, distortion):
    """
    Smallest achievable expected distortion and the distortion reached at rate zero

    :return: Tuple (D_min, D_zero_rate)
    :rtype: Tuple
    """
    _check_sizes(source, distortion)
    d_min = float(source.probs @ distortion.table.min(axis=1))
    d_zero_rate = float((source.probs @ distortion.table).min())
    return d_min, d_zero_rate


def zero_distortion_point(source, distortion, tol=DEFAULT_TOL, max_iters=DEFAULT_MAX_ITERS):
    """
    Minimum-rate point at D_min: alternating minimization of I(X;Y) restricted to
    channels that only use each source symbol's minimal-distortion reproductions.

    :rtype: RdPoint
    """
    _check_sizes(source, distortion)
    table = distortion.table
    allowed = np.isclose(table, table.min(axis=1, keepdims=True), rtol=0.0, atol=1e-15)
    log_kernel = np.where(allowed, 0.0, -np.inf)

    channel, rate, expected, iterations, converged = _alternate(
        source.probs, log_kernel, table, 0.0, tol, max_iters)

    if not converged:
        log.warning('Zero-distortion alternating minimization did not converge within %d iterations', max_iters)

    return RdPoint(distortion=expected, rate=min(rate, entropy(source)), channel=Channel(channel),
                   iterations=iterations, converged=converged, slope=float('inf'))


def rd_point_at_distortion(source, distortion, target_distortion, tol=DEFAULT_DISTORTION_TOL,
                           ba_tol=DEFAULT_TOL, max_iters=DEFAULT_MAX_ITERS):
    """
    Bisection over the slope until the expected distortion is within tol of the
    target from below

    :param source: Source distribution
    :type source: Pmf
    :param distortion: Distortion measure
    :type distortion: DistortionMeasure
    :param target_distortion: Target expected distortion
    :type target_distortion: Float
    :param tol: Accepted gap target - D
    :type tol: Float
    :return: Point whose channel satisfies E[d] <= target_distortion
    :rtype: RdPoint
    """
    d_min, d_zero_rate = achievable_distortion_range(source, distortion)

    if target_distortion < d_min:
        raise ValidationError('Target distortion {0} is below the minimal achievable distortion {1}'.format(
            target_distortion, d_min))

    if target_distortion >= d_zero_rate:
        return _zero_rate_point(source, distortion)

    if target_distortion - d_min <= tol:
        return zero_distortion_point(source, distortion, ba_tol, max_iters)

    low = 0.0
    high = 1.0
    high_point = blahut_arimoto(source, distortion, high, ba_tol, max_iters)
    while high_point.distortion > target_distortion:
        low = high
        high *= 2.0
        if high > MAX_SLOPE:
            log.warning('Slope bracket exceeded %g; using the zero-distortion point', MAX_SLOPE)
            return zero_distortion_point(source, distortion, ba_tol, max_iters)
        high_point = blahut_arimoto(source, distortion, high, ba_tol, max_iters)

    for _ in range(MAX_BISECTION_STEPS):
        if target_distortion - high_point.distortion < tol:
            return high_point
        middle = 0.5 * (low + high)
        point = blahut_arimoto(source, distortion, middle, ba_tol, max_iters)
        if point.distortion > target_distortion:
            low = middle
        else:
            high = middle
            high_point = point

    log.warning('Bisection stopped after %d steps with D = %g for target %g',
                MAX_BISECTION_STEPS, high_point.distortion, target_distortion)
    return high_point


def rd_curve(source, distortion, slopes=None, distortions=None, tol=DEFAULT_TOL,
             max_iters=DEFAULT_MAX_ITERS, jobs=1):
    """
    Sweep the rate-distortion curve either over Lagrangian slopes or over target distortions

    :param slopes: Slopes to evaluate
    :type slopes: List or None
    :param distortions: Target distortions to evaluate
    :type distortions: List or None
    :param jobs: Worker processes
    :return: One RdPoint per sweep value, in sweep order
    :rtype: List
    """
    if (slopes is None) == (distortions is None):
        raise ValidationError('Specify exactly one of slopes or distortions')

    if slopes is not None:
        worker = partial(_point_at_slope, source, distortion, tol, max_iters)
        return ordered_map(worker, slopes, jobs)

    worker = partial(_point_at_target, source, distortion, tol, max_iters)
    return ordered_map(worker, distortions, jobs)


def _point_at_slope(source, distortion, tol, max_iters, slope):
    return blahut_arimoto(source, distortion, slope, tol, max_iters)


def _point_at_target(source, distortion, tol, max_iters, target):
    return rd_point_at_distortion(source, distortion, target, ba_tol=tol, max_iters=max_iters)


def binary_entropy(prob):
    """
    h2(p) in bits

    :rtype: Float
    """
    if prob <= 0.0 or prob >= 1.0:
        return 0.0
    return float(-prob * np.log2(prob) - (1.0 - prob) * np.log2(1.0 - prob))


def binary_rd(distortion):
    """
    Closed-form R(D) = 1 - h2(D) of the uniform binary source under Hamming distortion

    :rtype: Float
    """
    if distortion >= 0.5:
        return 0.0
    return 1.0 - binary_entropy(distortion)
