"""Finite sequences of integers expressible as sums of two squares.

Thin wrapper around the compiled extension: certificate constructions
(triple, consecutive_triple, quad_n124, quint/ap Pell generators), the
two-squares oracle (factorize, is_sum_of_two_squares,
two_square_decompositions) and the certificate document format.
"""

from ._tss import *  # noqa: F401,F403
from ._tss import __doc__ as _core_doc  # noqa: F401
