from functools import lru_cache
from itertools import permutations
from math import comb

import pytest

from conftest import P
from oracles import inversions
from qcount.errors import BudgetExceeded
from qcount.perms import DescentSpec
from qcount.qcoeff import (
    classical_multinomial,
    expected_degree,
    product_formula_terms,
    q_factorial,
    qbinom,
    qbinom_partitions,
    qbinom_permutations,
    qbinom_product,
    qmultinom,
    qmultinom_chain,
    qmultinom_permutations,
    structure_report,
)
from qcount.qpoly import QPolynomial, div_exact, eval_int


@lru_cache(maxsize=None)
def pascal(n, k):
    """q-Pascal recurrence, ``[n k] = [n-1 k-1] + q^k [n-1 k]``."""
    if k < 0 or k > n:
        return QPolynomial()
    if k == 0 or k == n:
        return QPolynomial.constant(1)
    return pascal(n - 1, k - 1) + QPolynomial.monomial(k) * pascal(n - 1, k)


def word_inversions(n, k):
    """Inversion generating function of the 0/1 words with ``k`` ones."""
    counts = {}
    for w in set(permutations([0] * (n - k) + [1] * k)):
        d = inversions(w)
        counts[d] = counts.get(d, 0) + 1
    return QPolynomial(counts.get(i, 0) for i in range(k * (n - k) + 1))


def test_small_examples():
    assert qbinom_product(3, 1) == P(1, 1, 1)
    assert qbinom_product(4, 2) == P(1, 1, 2, 1, 1)
    assert qbinom_product(5, 2) == P(1, 1, 2, 2, 2, 1, 1)
    assert eval_int(qbinom_product(4, 2), 2) == 35
    assert qbinom_product(0, 0) == P(1)
    assert q_factorial(3) == P(1, 2, 2, 1)


def test_product_formula_terms_divide():
    num, den = product_formula_terms(4, 2)
    assert div_exact(num, den) == qbinom_product(4, 2)
    num, den = product_formula_terms(5, 0)
    assert num == den == P(1)


@pytest.mark.parametrize("n", range(0, 11))
def test_four_routes_agree_with_oracles(n):
    for k in range(n + 1):
        p = qbinom_product(n, k)
        assert p == pascal(n, k)
        assert p == qbinom_partitions(n, k)
        assert p == qbinom_permutations(n, k)
        if n <= 8:
            assert p == word_inversions(n, k)


@pytest.mark.parametrize("n", range(0, 13))
def test_symmetry_and_limits(n):
    for k in range(n + 1):
        p = qbinom_product(n, k)
        assert p == qbinom_product(n, n - k)
        assert eval_int(p, 1) == comb(n, k)
        assert p.degree == k * (n - k)


def test_out_of_range():
    for n, k in [(3, 5), (3, -1), (-1, 0)]:
        with pytest.raises(ValueError):
            qbinom_product(n, k)
        with pytest.raises(ValueError):
            qbinom_partitions(n, k)


def test_permutation_route_cap():
    with pytest.raises(BudgetExceeded):
        qbinom_permutations(15, 2)
    with pytest.raises(BudgetExceeded):
        qbinom_permutations(6, 2, max_n=5)


def test_multinomial_examples():
    assert qmultinom_chain(3, (1, 2)) == P(1, 2, 2, 1)
    assert qmultinom_chain(3, DescentSpec(3, (1,))) == P(1, 1, 1)
    assert qmultinom_chain(4, ()) == P(1)
    assert qmultinom(5, (2, 4)) == qbinom_product(4, 2) * qbinom_product(5, 4)
    with pytest.raises(ValueError):
        qmultinom_chain(3, (2, 1))
    with pytest.raises(ValueError):
        qmultinom_chain(4, DescentSpec(3, (1,)))


@pytest.mark.parametrize("n", range(0, 8))
def test_multinomial_two_routes(n):
    for spec in DescentSpec.all_specs(n):
        a = qmultinom_chain(n, spec)
        assert a == qmultinom_permutations(n, spec)
        assert eval_int(a, 1) == classical_multinomial(spec)


def test_multinomial_vs_filtered_permutations():
    n = 6
    for spec in DescentSpec.all_specs(n):
        allowed = spec.cut_set
        counts = {}
        for w in permutations(range(1, n + 1)):
            d = frozenset(i for i in range(1, n) if w[i - 1] > w[i])
            if d <= allowed:
                c = inversions(w)
                counts[c] = counts.get(c, 0) + 1
        top = max(counts)
        assert qmultinom_chain(n, spec) == QPolynomial(counts.get(i, 0) for i in range(top + 1))


def test_expected_degree():
    assert expected_degree(DescentSpec(3, (1, 2))) == 3
    assert expected_degree(DescentSpec.for_binomial(5, 2)) == 6
    assert expected_degree(DescentSpec(4, ())) == 0


def test_structure_report_examples():
    rep = structure_report(qmultinom_chain(3, (1, 2)), 3, (1, 2))
    assert rep.ok and rep.degree == 3 == rep.expected_degree
    bad = structure_report(P(1, 0, 1), 2, (1,))
    assert not bad.ok and not bad.unimodal and not bad.all_positive
    zero = structure_report(QPolynomial(), 2, (1,))
    assert not zero.ok and zero.degree is None
    assert set(rep.as_dict()) == {"monic", "degree", "expected_degree", "palindromic", "unimodal", "all_positive"}


@pytest.mark.parametrize("n", range(0, 13))
def test_structure_holds(n):
    for k in range(n + 1):
        assert structure_report(qbinom_product(n, k), n, DescentSpec.for_binomial(n, k)).ok
    if n <= 9:
        for spec in DescentSpec.all_specs(n):
            p = qmultinom_chain(n, spec)
            rep = structure_report(p, n, spec)
            assert rep.monic and rep.palindromic and rep.all_positive
            assert rep.degree == expected_degree(spec)


def test_dispatchers():
    assert qbinom(5, 2, "partitions") == qbinom(5, 2)
    assert qmultinom(4, (1, 3), "permutations") == qmultinom(4, (1, 3))
    with pytest.raises(ValueError):
        qbinom(5, 2, "abacus")
    with pytest.raises(ValueError):
        qmultinom(5, (2,), "abacus")
