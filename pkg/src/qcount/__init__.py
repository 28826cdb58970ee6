"""Exact Gaussian binomial and q-multinomial coefficients.

Every coefficient can be computed several independent ways (product
formula, partitions in a box, inversions of permutations, counting subspaces
and flags over prime fields), and the :mod:`qcount.verify` harness checks
that they agree.
"""

from .errors import (
    BudgetExceeded,
    DescentViolation,
    DivisionByZero,
    DomainViolation,
    NegativeCoefficient,
    NonExactDivision,
    QCountError,
    ShapeMismatch,
)
from .qpoly import QPolynomial
from .partitions import BoxBound, Partition
from .perms import DescentSpec, LatticePath, Permutation
from .ffield import FMatrix, PrimeField
from .qcoeff import (
    classical_multinomial,
    qbinom,
    qbinom_partitions,
    qbinom_permutations,
    qbinom_product,
    qmultinom,
    qmultinom_chain,
    qmultinom_permutations,
    structure_report,
)
from .inclexcl import descent_exact_count, descent_exact_polynomial

__version__ = "0.1.0"
