import struct
import pytest
from lectl.codec.codebook_file import HEADER, codebook_to_bytes, codebook_from_bytes, write_codebook, read_codebook
from lectl.codec.functions import Codebook, generate_codebook
from lectl.finite_prob.distributions import Pmf
from lectl.utils.errors import CodebookFormatError


@pytest.fixture
def codebook():
    return generate_codebook(Pmf([0.2, 0.3, 0.5]), 6, 0.7, seed=2 ** 63 + 5)


def test_codebook_file(tmpdir, codebook):
    path = '{0}/pytest.tmp.lecb'.format(tmpdir)

    write_codebook(codebook, path)

    assert read_codebook(path) == codebook


def test_codebook_layout(codebook):
    data = codebook_to_bytes(codebook)

    assert HEADER.size == 32
    assert data[:4] == b'LECB'
    assert len(data) == 32 + codebook.size * codebook.n
    assert struct.unpack_from('<H', data, 4)[0] == 1
    assert data[32:32 + codebook.n] == bytes(codebook.words[0])


def test_malformed_codebooks(codebook):
    data = codebook_to_bytes(codebook)

    with pytest.raises(CodebookFormatError):
        codebook_from_bytes(data[:20])
    with pytest.raises(CodebookFormatError):
        codebook_from_bytes(b'XXXX' + data[4:])
    with pytest.raises(CodebookFormatError):
        codebook_from_bytes(data[:4] + struct.pack('<H', 2) + data[6:])
    with pytest.raises(CodebookFormatError):
        codebook_from_bytes(data[:-1])


def test_large_alphabets_are_rejected():
    codebook = Codebook(n=1, rate=0.0, words=[[300]], seed=0, alphabet_size=400)

    with pytest.raises(CodebookFormatError):
        codebook_to_bytes(codebook)
