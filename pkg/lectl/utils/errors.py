"""Exceptions raised by lectl library code"""


class LectlError(Exception):
    """Base class for lectl errors. Maps to exit code 2 on the command line"""


class ValidationError(LectlError, ValueError):
    """Invalid input or configuration. Maps to exit code 1 on the command line"""


class ConfigError(ValidationError):
    """Configuration file could not be parsed or validated"""


class ShapeMismatchError(ValidationError):
    """Two objects that must share alphabet sizes or blocklengths do not"""


class EnumerationCapError(ValidationError):
    """An exact enumeration would exceed the configured number of states"""

    def __init__(self, what, states, cap, n=None, alphabet=None):
        self.states = states
        self.cap = cap
        self.n = n
        self.alphabet = alphabet
        if n is not None and alphabet is not None:
            msg = 'Enumeration cap exceeded for {0} (n={1}, alphabet={2}): {3} states > cap {4}'.format(
                what, n, alphabet, states, cap)
        else:
            msg = 'Enumeration cap exceeded for {0}: {1} states > cap {2}'.format(what, states, cap)
        super().__init__(msg)


class CodebookFormatError(ValidationError):
    """Serialized codebook is malformed"""


class AllZeroLikelihood(LectlError):
    """Every codeword assigns zero likelihood to the source sequence"""
