"""Non-crossing partitions of types A and B, Cayley-graph intervals, boxed
convolution and type-B free cumulants, all in exact rational arithmetic."""

from .errors import DomainError, NotInvertibleError, PreconditionError, StructureError
from .partitions import (
    NCPartitionA,
    NCPartitionB,
    abs_fiber,
    abs_map,
    enumerate_nca,
    enumerate_ncb,
    kreweras,
    parse_partition,
)
from .cayley import Permutation, SignedPermutation, parse_permutation
from .series import DualScalar, SeriesA, SeriesB, boxconv_a, boxconv_a_dual, boxconv_b

__version__ = "0.1.0"
