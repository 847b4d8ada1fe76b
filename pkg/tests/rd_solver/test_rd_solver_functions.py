import numpy as np
import pytest
from scipy.special import entr
from lectl.finite_prob.distributions import Pmf
from lectl.finite_prob.functions import entropy
from lectl.rd_solver.distortion import DistortionMeasure
from lectl.rd_solver.functions import blahut_arimoto, rd_point_at_distortion, zero_distortion_point, \
    achievable_distortion_range, rd_curve, binary_rd, binary_entropy
from lectl.utils.errors import ShapeMismatchError, ValidationError


@pytest.fixture
def hamming():
    return DistortionMeasure.hamming(2)


@pytest.mark.parametrize('target', [0.05, 0.11, 0.2, 0.3])
def test_uniform_binary_matches_closed_form(hamming, target):
    point = rd_point_at_distortion(Pmf.uniform(2), hamming, target)

    assert point.distortion <= target
    assert point.distortion == pytest.approx(target, abs=1e-6)
    assert abs(point.rate - binary_rd(target)) < 1e-3


def test_nonuniform_binary_source(hamming):
    source = Pmf([0.3, 0.7])
    point = rd_point_at_distortion(source, hamming, 0.2)

    assert abs(point.rate - (binary_entropy(0.3) - binary_entropy(0.2))) < 1e-3
    assert abs(point.rate - 0.15936) < 1e-3
    assert point.converged


def test_slope_sweep_is_monotone(hamming):
    points = rd_curve(Pmf([0.3, 0.7]), hamming, slopes=[0.5, 1.0, 2.0, 4.0, 8.0])

    distortions = [point.distortion for point in points]
    rates = [point.rate for point in points]
    assert distortions == sorted(distortions, reverse=True)
    assert rates == sorted(rates)
    assert [point.slope for point in points] == [0.5, 1.0, 2.0, 4.0, 8.0]


def test_zero_slope_is_zero_rate_point(hamming):
    point = blahut_arimoto(Pmf([0.3, 0.7]), hamming, 0.0)

    assert point.rate == 0.0
    assert point.distortion == pytest.approx(0.3)
    # every source symbol is reproduced by the most likely symbol
    assert np.array_equal(point.channel.matrix, [[0.0, 1.0], [0.0, 1.0]])


def test_zero_rate_ties_take_lowest_index(hamming):
    point = blahut_arimoto(Pmf.uniform(2), hamming, 0.0)

    assert np.array_equal(point.channel.matrix[:, 0], [1.0, 1.0])


def test_targets_outside_the_curve(hamming):
    source = Pmf([0.3, 0.7])

    assert achievable_distortion_range(source, hamming) == (0.0, pytest.approx(0.3))
    assert rd_point_at_distortion(source, hamming, 0.45).rate == 0.0

    with pytest.raises(ValidationError):
        rd_point_at_distortion(source, hamming, -0.1)


def test_zero_distortion_point(hamming):
    source = Pmf([0.3, 0.7])

    point = zero_distortion_point(source, hamming)
    assert point.distortion == 0.0
    assert point.rate == pytest.approx(entropy(source), abs=1e-9)

    assert rd_point_at_distortion(source, hamming, 0.0).rate == pytest.approx(entropy(source), abs=1e-9)


def test_general_distortion_table():
    # ternary source with an erasure-like reproduction symbol
    source = Pmf([0.2, 0.3, 0.5])
    distortion = DistortionMeasure([[0.0, 1.0, 0.4], [1.0, 0.0, 0.4], [0.5, 0.5, 0.0]])

    point = rd_point_at_distortion(source, distortion, 0.15)

    assert point.distortion <= 0.15
    assert 0.0 < point.rate < entropy(source)
    assert np.allclose(point.channel.matrix.sum(axis=1), 1.0)


def test_non_convergence_is_reported(hamming, caplog):
    point = blahut_arimoto(Pmf([0.3, 0.7]), hamming, 2.0, max_iters=1)

    assert not point.converged
    assert point.iterations == 1
    assert 'did not converge' in caplog.text


def test_invalid_arguments(hamming):
    with pytest.raises(ValidationError):
        blahut_arimoto(Pmf.uniform(2), hamming, -1.0)
    with pytest.raises(ShapeMismatchError):
        blahut_arimoto(Pmf.uniform(3), hamming, 1.0)
    with pytest.raises(ValidationError):
        rd_curve(Pmf.uniform(2), hamming, slopes=[1.0], distortions=[0.1])
    with pytest.raises(ValidationError):
        rd_curve(Pmf.uniform(2), hamming)


def test_binary_rd():
    assert binary_rd(0.5) == 0.0
    assert binary_rd(0.0) == 1.0
    assert binary_rd(0.2) == pytest.approx(0.27807, abs=1e-5)
    assert binary_rd(0.11) == pytest.approx(0.5, abs=1e-3)


def test_large_slope_reaches_lossless_point(hamming):
    source = Pmf([0.3, 0.7])
    point = blahut_arimoto(source, hamming, 30.0)

    assert point.converged
    assert point.distortion < 1e-9
    assert point.rate == pytest.approx(entropy(source), abs=1e-6)


def _grid_rate(source, target, step=1e-3):
    """Minimum I(X;Y) over all binary channels on a grid with Hamming distortion at most target"""
    grid = np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)
    flip0, flip1 = np.meshgrid(grid, grid, indexing='ij')
    p0, p1 = source.probs
    distortion = p0 * flip0 + p1 * flip1
    one = p0 * flip0 + p1 * (1.0 - flip1)
    output_entropy = entr(one) + entr(1.0 - one)
    noise_entropy = p0 * (entr(flip0) + entr(1.0 - flip0)) + p1 * (entr(flip1) + entr(1.0 - flip1))
    rates = (output_entropy - noise_entropy) / np.log(2.0)
    return float(rates[distortion <= target + 1e-12].min())


@pytest.mark.parametrize('probs, target', [([0.5, 0.5], 0.11), ([0.3, 0.7], 0.2), ([0.4, 0.6], 0.1)])
def test_matches_grid_search_over_binary_channels(hamming, probs, target):
    source = Pmf(probs)
    point = rd_point_at_distortion(source, hamming, target)

    assert abs(point.rate - _grid_rate(source, target)) < 1e-3
