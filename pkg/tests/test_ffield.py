import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qcount.errors import DivisionByZero
from qcount.ffield import (
    FMatrix,
    PrimeField,
    all_vectors,
    field_inv,
    is_rref,
    leading_columns,
    matmul,
    rank,
    rref_reduce,
)

F2, F3, F5, F7 = (PrimeField(p) for p in (2, 3, 5, 7))
WORKED_RREF = "0 1 1 0 0 1 2; 0 0 0 1 0 2 0; 0 0 0 0 1 0 1"


def independent_by_combinations(field, vectors):
    """No nontrivial combination vanishes, checked over every coefficient vector."""
    n = len(vectors[0]) if vectors else 0
    for coeffs in product(range(field.p), repeat=len(vectors)):
        if not any(coeffs):
            continue
        if all(sum(c * v[j] for c, v in zip(coeffs, vectors)) % field.p == 0 for j in range(n)):
            return False
    return True


def random_matrix(rng, field, rows, cols):
    return FMatrix.from_rows(field, [[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)], cols)


def random_invertible(rng, field, k):
    while True:
        a = random_matrix(rng, field, k, k)
        if rank(a) == k:
            return a


def row_space(m):
    p = m.field.p
    out = set()
    for coeffs in product(range(p), repeat=m.rows):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, m.entries)) % p for j in range(m.cols)))
    return out


def test_prime_field_validation():
    assert PrimeField(2).order == 2
    for bad in (0, 1, 4, 9, 15, 1 << 16):
        with pytest.raises(ValueError):
            PrimeField(bad)
    assert PrimeField(65521).p == 65521


def test_field_inv_examples():
    assert field_inv(F7, 3) == 5
    assert field_inv(F2, 1) == 1
    with pytest.raises(DivisionByZero):
        field_inv(F5, 0)
    with pytest.raises(ZeroDivisionError):
        field_inv(F5, 10)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_field_inv_by_scan(p):
    field = PrimeField(p)
    for x in range(1, p):
        scan = next(y for y in range(1, p) if x * y % p == 1)
        assert field_inv(field, x) == scan


def test_text_form_round_trip():
    m = FMatrix.parse(F3, WORKED_RREF)
    assert (m.rows, m.cols) == (3, 7)
    assert str(m) == WORKED_RREF
    assert str(FMatrix.parse(F2, "0 1 1; 0 0 1")) == "0 1 1; 0 0 1"


def test_matrix_validation():
    with pytest.raises(ValueError):
        FMatrix(F3, 1, 2, ((1, 3),))
    with pytest.raises(ValueError):
        FMatrix(F3, 2, 2, ((1, 0),))
    assert FMatrix.from_rows(F3, [[4, -1]]).entries == ((1, 2),)


def test_worked_example_is_rref():
    m = FMatrix.parse(F3, WORKED_RREF)
    assert is_rref(m)
    reduced, r, piv = rref_reduce(m)
    assert reduced == m and r == 3 and piv == (2, 4, 5)
    assert leading_columns(m) == [2, 4, 5]


def test_is_rref_negative_cases():
    assert not is_rref(FMatrix.parse(F3, "0 2 1; 0 0 1"))
    assert not is_rref(FMatrix.parse(F3, "1 1 0; 0 1 0"))
    assert not is_rref(FMatrix.parse(F3, "0 1 0; 1 0 0"))
    assert not is_rref(FMatrix.parse(F3, "0 0 0; 1 0 0"))
    assert is_rref(FMatrix.parse(F3, "1 0 2; 0 0 0"))
    assert is_rref(FMatrix.zeros(F3, 2, 3))


def test_rref_example_f2():
    m = FMatrix.parse(F2, "1 1 0; 1 0 1")
    reduced, r, piv = rref_reduce(m)
    assert str(reduced) == "1 0 1; 0 1 1" and r == 2 and piv == (1, 2)


def test_rank_examples():
    assert rank(FMatrix.parse(F2, "1 1; 1 1")) == 1
    assert rank(FMatrix.parse(F3, "1 1; 1 2")) == 2
    assert rank(FMatrix.identity(F5, 4)) == 4
    assert rank(FMatrix.zeros(F5, 3, 2)) == 0


@pytest.mark.parametrize("seed", range(20))
def test_rref_properties(seed):
    rng = random.Random(seed)
    field = rng.choice([F2, F3, F5])
    rows, cols = rng.randint(1, 4), rng.randint(1, 5)
    m = random_matrix(rng, field, rows, cols)
    reduced, r, piv = rref_reduce(m)
    assert is_rref(reduced)
    assert rref_reduce(reduced)[0] == reduced
    assert all(not any(row) for row in reduced.entries[r:])
    assert row_space(reduced) == row_space(m)
    if rows > 1:
        assert rref_reduce(m.swap_rows(0, rows - 1))[0] == reduced
    a = random_invertible(rng, field, rows)
    assert rref_reduce(matmul(a, m))[0] == reduced
    assert len(row_space(m)) == field.p**r


@pytest.mark.parametrize("n", range(1, 5))
def test_independent_tuple_counts_q2(n):
    vecs = list(all_vectors(F2, n))
    for k in range(n + 1):
        expected = 1
        for i in range(k):
            expected *= 2**n - 2**i
        brute = 0
        by_rank = 0
        for tup in product(vecs, repeat=k):
            ind = independent_by_combinations(F2, list(tup))
            brute += ind
            if k:
                by_rank += rank(FMatrix.from_rows(F2, tup, n)) == k
            else:
                by_rank += 1
            assert ind == (k == 0 or rank(FMatrix.from_rows(F2, tup, n)) == k)
        assert brute == by_rank == expected


def test_matmul_identity_and_shape():
    m = FMatrix.parse(F5, "1 2 3; 4 0 1")
    assert matmul(FMatrix.identity(F5, 2), m) == m
    assert matmul(m, FMatrix.identity(F5, 3)) == m
    with pytest.raises(ValueError):
        matmul(m, m)


@settings(max_examples=50)
@given(st.integers(0, 3), st.integers(1, 4), st.randoms(use_true_random=False))
def test_vstack_rank_monotone(extra, cols, rng):
    a = random_matrix(rng, F3, 2, cols)
    b = random_matrix(rng, F3, extra, cols)
    r = rank(a.vstack(b))
    assert rank(a) <= r <= rank(a) + extra
