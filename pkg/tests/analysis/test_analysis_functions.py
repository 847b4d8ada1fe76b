import numpy as np
import pytest
from lectl.analysis.functions import induced_marginal, soft_cover_tv, ideal_joint_q, encoder_joint_p, \
    distortion_table, proof_check, letter_joint, codebook_expectation_q
from lectl.codec.functions import Codebook, generate_codebook
from lectl.finite_prob.distributions import Pmf, Channel
from lectl.finite_prob.functions import product_extension, product_joint
from lectl.rd_solver.distortion import DistortionMeasure
from lectl.utils.errors import AllZeroLikelihood, EnumerationCapError, ShapeMismatchError


def random_setup(rng):
    output_pmf = Pmf(rng.dirichlet([1.0, 1.0]))
    test_channel = Channel(rng.dirichlet([1.0, 1.0], size=2))
    source = Pmf(output_pmf.probs @ test_channel.matrix)
    return output_pmf, test_channel, source


def test_induced_marginal():
    codebook = Codebook(n=2, rate=0.5, words=[[0, 1], [1, 1]], seed=0, alphabet_size=2)

    marginal = induced_marginal(codebook, Channel.identity(2))

    assert np.array_equal(marginal.probs, [0.0, 0.5, 0.0, 0.5])


def test_induced_marginal_chunks(monkeypatch):
    codebook = generate_codebook(Pmf.uniform(2), 5, 0.8, seed=3)
    whole = induced_marginal(codebook, Channel.bsc(0.1))

    monkeypatch.setattr('lectl.analysis.functions.CHUNK_STATES', 4)
    chunked = induced_marginal(codebook, Channel.bsc(0.1))

    assert np.allclose(whole.probs, chunked.probs, rtol=0.0, atol=1e-15)


def test_soft_cover_tv_without_channel_dependence():
    source = Pmf([0.3, 0.7])
    codebook = generate_codebook(Pmf.uniform(2), 4, 0.5, seed=1)

    assert soft_cover_tv(codebook, Channel.constant(2, source), source) < 1e-12


def test_soft_cover_tv_noiseless_channel():
    codebook = Codebook(n=1, rate=0.0, words=[[0]], seed=0, alphabet_size=2)

    assert soft_cover_tv(codebook, Channel.identity(2), Pmf.uniform(2)) == pytest.approx(0.5)

    with pytest.raises(ShapeMismatchError):
        soft_cover_tv(codebook, Channel.identity(2), Pmf.uniform(3))


def test_joints_are_normalized():
    output_pmf, test_channel, source = random_setup(np.random.default_rng(8))
    codebook = generate_codebook(output_pmf, 3, 0.7, seed=8)

    q_joint = ideal_joint_q(codebook, test_channel)
    p_joint = encoder_joint_p(codebook, test_channel, source)

    assert q_joint.probs.shape == (8, codebook.size)
    assert q_joint.probs.sum() == pytest.approx(1.0)
    assert p_joint.probs.sum() == pytest.approx(1.0)
    assert np.allclose(q_joint.marginal_sequence().probs, induced_marginal(codebook, test_channel).probs)
    assert np.allclose(p_joint.marginal_sequence().probs, product_extension(source, 3).probs)


def test_proof_step_identities_on_random_configurations():
    rng = np.random.default_rng(20)

    for trial in range(50):
        output_pmf, test_channel, source = random_setup(rng)
        n = int(rng.integers(1, 7))
        codebook = generate_codebook(output_pmf, n, rng.uniform(0.0, 4.0 / n), seed=trial)
        assert codebook.size <= 16

        report = proof_check(codebook, test_channel, source, DistortionMeasure.hamming(2))

        assert report.conditional_max_gap < 1e-12
        assert abs(report.tv_joint - report.tv_marginal) < 1e-12
        assert report.empirical_distortion <= report.distortion_bound_rhs_tight + 1e-12
        assert report.distortion_bound_rhs_tight <= report.distortion_bound_rhs


def test_proof_check_report():
    codebook = Codebook(n=2, rate=1.0, words=[[0, 0], [1, 1], [0, 0], [1, 0]], seed=4, alphabet_size=2)
    hamming = DistortionMeasure.hamming(2)

    report = proof_check(codebook, Channel.bsc(0.2), Pmf.uniform(2), hamming)
    row = report.as_row()

    assert report.repeated_codewords
    assert row['repeated_codewords'] == 1
    assert row['M'] == 4
    assert report.distortion_bound_rhs == pytest.approx(report.expected_q_distortion + 2.0 * report.tv_joint)
    expected_q = (ideal_joint_q(codebook, Channel.bsc(0.2)).probs * distortion_table(codebook, hamming)).sum()
    assert report.expected_q_distortion == pytest.approx(expected_q)


def test_distortion_table():
    codebook = Codebook(n=2, rate=0.5, words=[[0, 1], [1, 1]], seed=0, alphabet_size=2)

    table = distortion_table(codebook, DistortionMeasure.hamming(2))

    # rows x^n = 00, 01, 10, 11
    assert np.array_equal(table, [[0.5, 1.0], [0.0, 0.5], [1.0, 0.5], [0.5, 0.0]])


def test_proof_check_unencodable_sequences():
    codebook = Codebook(n=1, rate=0.0, words=[[0]], seed=0, alphabet_size=2)

    with pytest.raises(AllZeroLikelihood):
        proof_check(codebook, Channel.identity(2), Pmf.uniform(2), DistortionMeasure.hamming(2))


def test_proof_check_enumeration_cap(monkeypatch):
    codebook = generate_codebook(Pmf.uniform(2), 4, 0.5, seed=1)
    monkeypatch.setenv('LEL_ENUM_CAP', '16')

    with pytest.raises(EnumerationCapError) as error:
        proof_check(codebook, Channel.bsc(0.1), Pmf.uniform(2), DistortionMeasure.hamming(2))

    assert 'n=4' in str(error.value)


@pytest.mark.parametrize('n,size', [(1, 2), (2, 1)])
def test_codebook_expectation_equals_product_joint(n, size):
    rng = np.random.default_rng(n * 10 + size)
    output_pmf, test_channel, _ = random_setup(rng)

    expectation = codebook_expectation_q(output_pmf, test_channel, n, size)
    reference = product_joint(letter_joint(output_pmf, test_channel), n)

    assert expectation.probs.shape == reference.probs.shape
    assert np.abs(expectation.probs - reference.probs).max() < 1e-12


@pytest.mark.parametrize('n,size', [(1, 3), (2, 2)])
def test_codebook_expectation_across_batches(monkeypatch, n, size):
    monkeypatch.setattr('lectl.analysis.functions.CODEBOOK_BATCH', 5)
    rng = np.random.default_rng(n * 100 + size)
    output_pmf, test_channel, _ = random_setup(rng)

    expectation = codebook_expectation_q(output_pmf, test_channel, n, size)
    reference = product_joint(letter_joint(output_pmf, test_channel), n)

    assert np.abs(expectation.probs - reference.probs).max() < 1e-12


def test_codebook_expectation_cap(monkeypatch):
    monkeypatch.setenv('LEL_ENUM_CAP', '64')

    with pytest.raises(EnumerationCapError):
        codebook_expectation_q(Pmf.uniform(2), Channel.bsc(0.1), 2, 4)
