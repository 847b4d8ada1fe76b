"""Immutable finite-alphabet distribution types"""
import os
from dataclasses import dataclass, field
from typing import Tuple
import numpy as np
from lectl.utils.errors import ValidationError, EnumerationCapError

PMF_TOL = 1e-12
SEQUENCE_TOL = 1e-9
DEFAULT_ENUM_CAP = 2 ** 24
ENUM_CAP_ENV = 'LEL_ENUM_CAP'


def enumeration_cap():
    """
    Maximum number of states any exact enumeration may hold.
    Read from the LEL_ENUM_CAP environment variable when set.

    :return: The enumeration cap
    :rtype: Int
    """
    value = os.environ.get(ENUM_CAP_ENV)
    if not value:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ValidationError('{0} must be a positive integer, got "{1}"'.format(ENUM_CAP_ENV, value))
    if cap < 1:
        raise ValidationError('{0} must be a positive integer, got "{1}"'.format(ENUM_CAP_ENV, value))
    return cap


def check_sequence_space(alphabet_size, n, what='sequence space', factor=1):
    """
    Raise EnumerationCapError when alphabet_size^n * factor exceeds the cap

    :return: Number of states alphabet_size^n
    :rtype: Int
    """
    cap = enumeration_cap()
    states = alphabet_size ** n
    if states * factor > cap:
        raise EnumerationCapError(what, states * factor, cap, n=n, alphabet=alphabet_size)
    return states


def _frozen_array(values, ndim, name):
    array = np.array(values, dtype=float)
    if array.ndim != ndim:
        raise ValidationError('{0} must be {1}-dimensional, got shape {2}'.format(name, ndim, array.shape))
    if array.size == 0:
        raise ValidationError('{0} must not be empty'.format(name))
    if not np.all(np.isfinite(array)):
        raise ValidationError('{0} contains non-finite entries'.format(name))
    if np.any(array < 0):
        raise ValidationError('{0} contains negative entries'.format(name))
    array.setflags(write=False)
    return array


def _check_total(array, tol, name):
    total = array.sum()
    if abs(total - 1.0) > tol:
        raise ValidationError('{0} sums to {1!r}, expected 1 within {2}'.format(name, float(total), tol))


@dataclass(frozen=True)
class Pmf:
    """Probability mass function over {0, ..., alphabet_size - 1}"""
    probs: np.ndarray

    def __post_init__(self):
        array = _frozen_array(self.probs, 1, 'Pmf')
        _check_total(array, PMF_TOL, 'Pmf')
        object.__setattr__(self, 'probs', array)

    @property
    def alphabet_size(self):
        return self.probs.shape[0]

    @classmethod
    def uniform(cls, size):
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def point_mass(cls, size, symbol):
        probs = np.zeros(size)
        probs[symbol] = 1.0
        return cls(probs)

    @classmethod
    def bernoulli(cls, one_prob):
        return cls([1.0 - one_prob, one_prob])

    def __eq__(self, other):
        return isinstance(other, Pmf) and np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash(self.probs.tobytes())


@dataclass(frozen=True)
class Channel:
    """
    Conditional pmf stored as a row-stochastic matrix: matrix[a, b] = W(b | a).

    degenerate_rows lists input symbols whose row was filled in by convention
    (zero-probability conditioning events in reverse_channel).
    """
    matrix: np.ndarray
    degenerate_rows: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        array = _frozen_array(self.matrix, 2, 'Channel')
        for row_nr, row in enumerate(array):
            _check_total(row, PMF_TOL, 'Channel row {0}'.format(row_nr))
        object.__setattr__(self, 'matrix', array)
        object.__setattr__(self, 'degenerate_rows', tuple(int(row) for row in self.degenerate_rows))

    @property
    def input_size(self):
        return self.matrix.shape[0]

    @property
    def output_size(self):
        return self.matrix.shape[1]

    @property
    def rows(self):
        return [Pmf(row) for row in self.matrix]

    def row(self, symbol):
        return Pmf(self.matrix[symbol])

    @classmethod
    def from_rows(cls, rows):
        return cls(np.vstack([row.probs for row in rows]))

    @classmethod
    def identity(cls, size):
        return cls(np.eye(size))

    @classmethod
    def bsc(cls, crossover):
        return cls([[1.0 - crossover, crossover], [crossover, 1.0 - crossover]])

    @classmethod
    def constant(cls, input_size, output):
        """Every input maps to the same output pmf"""
        return cls(np.tile(output.probs, (input_size, 1)))

    def __eq__(self, other):
        return isinstance(other, Channel) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())


@dataclass(frozen=True)
class JointPmf:
    """Joint pmf over X x Y: probs[a, b] = P(X = a, Y = b)"""
    probs: np.ndarray

    def __post_init__(self):
        array = _frozen_array(self.probs, 2, 'JointPmf')
        _check_total(array, PMF_TOL, 'JointPmf')
        object.__setattr__(self, 'probs', array)

    @property
    def size_x(self):
        return self.probs.shape[0]

    @property
    def size_y(self):
        return self.probs.shape[1]

    def marginal_x(self):
        return Pmf(self.probs.sum(axis=1))

    def marginal_y(self):
        return Pmf(self.probs.sum(axis=0))

    def __eq__(self, other):
        return isinstance(other, JointPmf) and np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash(self.probs.tobytes())


@dataclass(frozen=True)
class SequenceDist:
    """Pmf over X^n, lexicographically indexed (first symbol most significant)"""
    alphabet_size: int
    n: int
    probs: np.ndarray

    def __post_init__(self):
        array = _frozen_array(self.probs, 1, 'SequenceDist')
        if array.shape[0] != self.alphabet_size ** self.n:
            raise ValidationError('SequenceDist needs {0}^{1} entries, got {2}'.format(
                self.alphabet_size, self.n, array.shape[0]))
        _check_total(array, SEQUENCE_TOL, 'SequenceDist')
        object.__setattr__(self, 'probs', array)

    def __eq__(self, other):
        return isinstance(other, SequenceDist) and self.alphabet_size == other.alphabet_size \
            and self.n == other.n and np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash((self.alphabet_size, self.n, self.probs.tobytes()))


@dataclass(frozen=True)
class SequenceJoint:
    """
    Joint pmf over (x^n, s) where x^n is lexicographically indexed and s is
    either a codeword index (column m - 1) or a lexicographically indexed y^n.
    """
    alphabet_size: int
    n: int
    probs: np.ndarray

    def __post_init__(self):
        array = _frozen_array(self.probs, 2, 'SequenceJoint')
        if array.shape[0] != self.alphabet_size ** self.n:
            raise ValidationError('SequenceJoint needs {0}^{1} rows, got {2}'.format(
                self.alphabet_size, self.n, array.shape[0]))
        _check_total(array, SEQUENCE_TOL, 'SequenceJoint')
        object.__setattr__(self, 'probs', array)

    @property
    def second_size(self):
        return self.probs.shape[1]

    def marginal_sequence(self):
        return SequenceDist(self.alphabet_size, self.n, self.probs.sum(axis=1))

    def __eq__(self, other):
        return isinstance(other, SequenceJoint) and self.alphabet_size == other.alphabet_size \
            and self.n == other.n and np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash((self.alphabet_size, self.n, self.probs.tobytes()))
