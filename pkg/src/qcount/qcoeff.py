"""Gaussian binomial and q-multinomial coefficients by several routes.

``qbinom_product`` and ``qmultinom_chain`` are the fast defaults; the
partition and permutation routes exist to be compared against them.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import factorial
from typing import Iterable

from .budget import check_perm_degree
from .partitions import count_partitions
from .perms import DescentSpec, _inv_count, _descent_tuples
from .qpoly import QPolynomial, div_exact, is_palindromic, is_unimodal


def _check_nk(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def q_factorial(j: int) -> QPolynomial:
    """``[1]_q [2]_q ... [j]_q`` with ``[i]_q = 1 + q + ... + q^(i-1)``."""
    out = QPolynomial.constant(1)
    for i in range(1, j + 1):
        out = out * QPolynomial.q_integer(i)
    return out


def product_formula_terms(n: int, k: int) -> tuple[QPolynomial, QPolynomial]:
    """``(q^n - 1)(q^n - q)...(q^n - q^(k-1))`` and the same with ``n -> k``."""
    _check_nk(n, k)
    num = den = QPolynomial.constant(1)
    for i in range(k):
        num = num * (QPolynomial.monomial(n) - QPolynomial.monomial(i))
        den = den * (QPolynomial.monomial(k) - QPolynomial.monomial(i))
    return num, den


def qbinom_product(n: int, k: int) -> QPolynomial:
    """``[n]_q! / ([k]_q! [n-k]_q!)``, both divisions checked exact."""
    _check_nk(n, k)
    top = q_factorial(n)
    return div_exact(div_exact(top, q_factorial(k)), q_factorial(n - k))


def qbinom_partitions(n: int, k: int) -> QPolynomial:
    _check_nk(n, k)
    rows, cols = k, n - k
    return QPolynomial(count_partitions(r, rows, cols) for r in range(rows * cols + 1))


def _inv_generating(spec: DescentSpec) -> QPolynomial:
    counts: dict[int, int] = {}
    for w in _descent_tuples(spec.n, spec.parts):
        d = _inv_count(w)
        counts[d] = counts.get(d, 0) + 1
    if not counts:
        return QPolynomial()
    top = max(counts)
    return QPolynomial(counts.get(i, 0) for i in range(top + 1))


def qbinom_permutations(n: int, k: int, max_n: int | None = None) -> QPolynomial:
    """Sum of ``q^inv(pi)`` over permutations with descents inside ``{k}``."""
    _check_nk(n, k)
    check_perm_degree(n, max_n)
    return _inv_generating(DescentSpec.for_binomial(n, k))


def _as_spec(n: int, spec: DescentSpec | Iterable[int]) -> DescentSpec:
    if not isinstance(spec, DescentSpec):
        spec = DescentSpec(n, tuple(spec))
    if spec.n != n:
        raise ValueError(f"spec is for n={spec.n}, asked about n={n}")
    return spec


def qmultinom_chain(n: int, spec: DescentSpec | Iterable[int]) -> QPolynomial:
    """``[s_2 s_1]_q [s_3 s_2]_q ... [n s_{m-1}]_q``."""
    spec = _as_spec(n, spec)
    dims = spec.cuts + (n,)
    out = QPolynomial.constant(1)
    for lo, hi in zip(dims, dims[1:]):
        out = out * qbinom_product(hi, lo)
    return out


def qmultinom_permutations(n: int, spec: DescentSpec | Iterable[int], max_n: int | None = None) -> QPolynomial:
    spec = _as_spec(n, spec)
    check_perm_degree(n, max_n)
    return _inv_generating(spec)


def classical_multinomial(spec: DescentSpec) -> int:
    out = factorial(spec.n)
    for part in spec.parts:
        out //= factorial(part)
    return out


def expected_degree(spec: DescentSpec) -> int:
    """``sum_{i<j} k_i k_j`` over the composition parts."""
    parts = spec.parts
    total = sum(parts)
    return (total * total - sum(p * p for p in parts)) // 2


@dataclass(frozen=True)
class StructureReport:
    monic: bool
    degree: int | None
    expected_degree: int
    palindromic: bool
    unimodal: bool
    all_positive: bool

    def as_dict(self) -> dict:
        return asdict(self)

    @property
    def ok(self) -> bool:
        return (
            self.monic
            and self.degree == self.expected_degree
            and self.palindromic
            and self.unimodal
            and self.all_positive
        )


def structure_report(p: QPolynomial, n: int, spec: DescentSpec | Iterable[int]) -> StructureReport:
    spec = _as_spec(n, spec)
    zero = p.is_zero()
    return StructureReport(
        monic=not zero and p.leading == 1,
        degree=None if zero else p.degree,
        expected_degree=expected_degree(spec),
        palindromic=is_palindromic(p),
        unimodal=is_unimodal(p),
        all_positive=not zero and all(c > 0 for c in p.coeffs),
    )


BINOMIAL_METHODS = {
    "product": qbinom_product,
    "partitions": qbinom_partitions,
    "permutations": qbinom_permutations,
}

MULTINOMIAL_METHODS = {
    "chain": qmultinom_chain,
    "permutations": qmultinom_permutations,
}


def qbinom(n: int, k: int, method: str = "product") -> QPolynomial:
    try:
        fn = BINOMIAL_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(BINOMIAL_METHODS)}") from None
    return fn(n, k)


def qmultinom(n: int, spec: DescentSpec | Iterable[int], method: str = "chain") -> QPolynomial:
    try:
        fn = MULTINOMIAL_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(MULTINOMIAL_METHODS)}") from None
    return fn(n, spec)
