"""LECB binary codebook format"""
import struct
import numpy as np
from lectl.codec.functions import Codebook
from lectl.utils.errors import CodebookFormatError

MAGIC = b'LECB'
VERSION = 1
# magic, version, n, M, R, alphabet size, seed
HEADER = struct.Struct('<4sHIIdHQ')
MAX_ALPHABET = 256


def codebook_to_bytes(codebook):
    """
    Serialize a codebook: little-endian header followed by row-major codeword bytes

    :param codebook: Codebook to serialize
    :type codebook: Codebook
    :return: Serialized codebook
    :rtype: Bytes
    """
    if codebook.alphabet_size > MAX_ALPHABET:
        raise CodebookFormatError('LECB version {0} supports alphabets up to {1} symbols, got {2}'.format(
            VERSION, MAX_ALPHABET, codebook.alphabet_size))
    header = HEADER.pack(MAGIC, VERSION, codebook.n, codebook.size, codebook.rate,
                         codebook.alphabet_size, codebook.seed)
    return header + codebook.words.astype(np.uint8).tobytes(order='C')


def codebook_from_bytes(data):
    """
    Parse a serialized codebook

    :param data: Serialized codebook
    :type data: Bytes
    :return: The codebook
    :rtype: Codebook
    """
    if len(data) < HEADER.size:
        raise CodebookFormatError('Truncated LECB header: {0} bytes'.format(len(data)))

    magic, version, n, size, rate, alphabet_size, seed = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CodebookFormatError('Not an LECB codebook (magic {0!r})'.format(magic))
    if version != VERSION:
        raise CodebookFormatError('Unsupported LECB version {0}'.format(version))

    body = data[HEADER.size:]
    if len(body) != n * size:
        raise CodebookFormatError('LECB body holds {0} bytes, header announces {1} x {2}'.format(len(body), size, n))

    words = np.frombuffer(body, dtype=np.uint8).reshape(size, n)
    return Codebook(n=n, rate=rate, words=words, seed=seed, alphabet_size=alphabet_size)


def write_codebook(codebook, path):
    """
    Write a codebook to an LECB file

    :param codebook: Codebook to write
    :param path: Output path
    :return: None
    """
    with open(path, 'wb') as outfile:
        outfile.write(codebook_to_bytes(codebook))


def read_codebook(path):
    """
    Read a codebook from an LECB file

    :param path: Path to the file
    :return: The codebook
    :rtype: Codebook
    """
    with open(path, 'rb') as infile:
        return codebook_from_bytes(infile.read())
