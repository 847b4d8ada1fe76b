"""Per-letter distortion measures"""
from dataclasses import dataclass
import numpy as np
from lectl.utils.errors import ValidationError


@dataclass(frozen=True)
class DistortionMeasure:
    """Nonnegative per-letter distortion table: table[x, y] = d(x, y)"""
    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table, dtype=float)
        if table.ndim != 2 or table.size == 0:
            raise ValidationError('Distortion table must be a non-empty matrix, got shape {0}'.format(table.shape))
        if not np.all(np.isfinite(table)):
            raise ValidationError('Distortion table contains non-finite entries')
        if np.any(table < 0):
            raise ValidationError('Distortion table contains negative entries')
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)

    @property
    def d_max(self):
        return float(self.table.max())

    @property
    def source_size(self):
        return self.table.shape[0]

    @property
    def output_size(self):
        return self.table.shape[1]

    @classmethod
    def hamming(cls, size):
        return cls(1.0 - np.eye(size))

    def __eq__(self, other):
        return isinstance(other, DistortionMeasure) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())
