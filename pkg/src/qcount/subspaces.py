"""Subspaces and flags of ``F_p^n`` named by their reduced row echelon bases.

Each rank-``k`` RREF matrix corresponds to a Ferrers diagram in the
``k x (n-k)`` box (its free entries) plus a filling of the stars by field
elements.  Enumerating pivot sets and fillings therefore lists every
``k``-dimensional subspace exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .budget import check_count
from .errors import ShapeMismatch
from .ffield import FMatrix, PrimeField, is_rref, rank, rref_reduce
from .partitions import BoxBound, Partition, fits_in_box
from .perms import DescentSpec


@dataclass(frozen=True)
class RrefMatrix:
    matrix: FMatrix
    pivots: tuple[int, ...]

    def __post_init__(self):
        m = self.matrix
        object.__setattr__(self, "pivots", tuple(self.pivots))
        if not is_rref(m):
            raise ValueError(f"not in reduced row echelon form: {m}")
        _, r, piv = rref_reduce(m)
        if r != m.rows:
            raise ValueError(f"matrix has rank {r} < {m.rows} rows")
        if piv != self.pivots:
            raise ValueError(f"pivots {self.pivots} do not match leading ones {piv}")

    @classmethod
    def _trusted(cls, matrix: FMatrix, pivots: tuple[int, ...]) -> RrefMatrix:
        obj = object.__new__(cls)
        object.__setattr__(obj, "matrix", matrix)
        object.__setattr__(obj, "pivots", pivots)
        return obj

    @classmethod
    def from_matrix(cls, m: FMatrix) -> RrefMatrix:
        """Canonical basis of the row space of ``m`` (zero rows dropped)."""
        r, k, piv = rref_reduce(m)
        reduced = FMatrix._trusted(m.field, k, m.cols, r.entries[:k])
        return cls._trusted(reduced, piv)

    @property
    def k(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def field(self) -> PrimeField:
        return self.matrix.field

    def free_columns(self, row: int) -> list[int]:
        """1-based columns right of row ``row``'s pivot that hold no pivot."""
        piv = set(self.pivots)
        return [c for c in range(self.pivots[row] + 1, self.n + 1) if c not in piv]

    def __str__(self) -> str:
        return str(self.matrix)


@dataclass(frozen=True)
class StarFilling:
    shape: Partition
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.shape.weight:
            raise ShapeMismatch(
                f"{len(self.values)} values for a shape of weight {self.shape.weight}"
            )


@dataclass(frozen=True)
class FlagChain:
    field: PrimeField
    n: int
    subspaces: tuple[RrefMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "subspaces", tuple(self.subspaces))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(v.k for v in self.subspaces)

    def is_valid(self) -> bool:
        dims = self.dims
        if any(a >= b for a, b in zip(dims, dims[1:])):
            return False
        if any(v.n != self.n or v.field != self.field for v in self.subspaces):
            return False
        return all(is_contained(a, b) for a, b in zip(self.subspaces, self.subspaces[1:]))


def is_contained(a: RrefMatrix, b: RrefMatrix) -> bool:
    """Row space of ``a`` inside that of ``b``."""
    return rank(b.matrix.vstack(a.matrix)) == b.k


def matrix_to_diagram(r: RrefMatrix) -> Partition:
    return Partition(len(r.free_columns(i)) for i in range(r.k))


def extract_filling(r: RrefMatrix) -> StarFilling:
    values = [r.matrix.entries[i][c - 1] for i in range(r.k) for c in r.free_columns(i)]
    return StarFilling(matrix_to_diagram(r), tuple(values))


def pivots_of_shape(shape: Partition, b: BoxBound) -> tuple[int, ...]:
    return tuple(b.cols - shape.part(i - 1) + i for i in range(1, b.rows + 1))


def shape_of_pivots(n: int, pivots: Sequence[int]) -> Partition:
    k = len(pivots)
    return Partition((n - p) - (k - i) for i, p in enumerate(pivots, start=1))


def _assemble(field: PrimeField, n: int, pivots: tuple[int, ...], free: list[list[int]], values) -> RrefMatrix:
    rows = []
    it = iter(values)
    for i, p in enumerate(pivots):
        row = [0] * n
        row[p - 1] = 1
        for c in free[i]:
            row[c - 1] = next(it)
        rows.append(tuple(row))
    return RrefMatrix._trusted(FMatrix._trusted(field, len(pivots), n, tuple(rows)), pivots)


def _free_layout(n: int, pivots: tuple[int, ...]) -> list[list[int]]:
    piv = set(pivots)
    return [[c for c in range(p + 1, n + 1) if c not in piv] for p in pivots]


def build_rref(shape: Partition, b: BoxBound, filling: StarFilling, field: PrimeField) -> RrefMatrix:
    """The RREF matrix whose diagram is ``shape`` and whose stars read ``filling``.

    Pivot ``i`` lands left of the stars of row ``i`` and of every later pivot,
    so the pivot columns are ``cols - shape_i + i``.
    """
    if not fits_in_box(shape, b):
        raise ValueError(f"{shape} does not fit in {b}")
    if filling.shape != shape or len(filling.values) != shape.weight:
        raise ShapeMismatch(f"filling for {filling.shape} given with shape {shape}")
    if any(not 0 <= v < field.p for v in filling.values):
        raise ValueError(f"filling values must be residues mod {field.p}")
    n = b.rows + b.cols
    pivots = pivots_of_shape(shape, b)
    return _assemble(field, n, pivots, _free_layout(n, pivots), filling.values)


def predicted_subspace_count(n: int, k: int, q: int) -> int:
    """Integer form of the product formula, used only for budget checks."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return num // den


def pivot_sets(n: int, k: int) -> list[tuple[int, ...]]:
    """``k``-subsets of ``1..n`` in colexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])


def enumerate_rref(n: int, k: int, field: PrimeField, budget: int | None = None) -> Iterator[RrefMatrix]:
    """Every rank-``k`` ``k x n`` RREF matrix over ``field`` exactly once.

    Grouped by pivot set in colex order; fillings within a group run
    lexicographically.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    check_count(predicted_subspace_count(n, k, field.p), budget, f"RREF matrices ({n},{k}) over F_{field.p}")
    return _enumerate_rref(n, k, field)


def _enumerate_rref(n: int, k: int, field: PrimeField) -> Iterator[RrefMatrix]:
    for pivots in pivot_sets(n, k):
        free = _free_layout(n, pivots)
        weight = sum(len(f) for f in free)
        for values in product(range(field.p), repeat=weight):
            yield _assemble(field, n, pivots, free, values)


def count_subspaces(n: int, k: int, field: PrimeField, budget: int | None = None) -> int:
    return sum(1 for _ in enumerate_rref(n, k, field, budget))


def predicted_flag_count(spec: DescentSpec, q: int) -> int:
    dims = spec.cuts + (spec.n,)
    total = 1
    for lo, hi in zip(dims, dims[1:]):
        total *= predicted_subspace_count(hi, lo, q)
    return total


def enumerate_flags(spec: DescentSpec, field: PrimeField, budget: int | None = None) -> Iterator[FlagChain]:
    """Chains ``V_1 < ... < V_{m-1}`` in ``F^n`` with ``dim V_i = cuts[i]``.

    The top space is enumerated directly; each lower space is chosen in the
    coordinates of the one above it and carried over through that space's
    RREF basis.
    """
    check_count(predicted_flag_count(spec, field.p), budget, f"flags {spec} over F_{field.p}")
    return _enumerate_flags(spec, field)


def _lift(w: RrefMatrix, basis: RrefMatrix, cols=None) -> RrefMatrix:
    # w * basis is already reduced: basis carries an identity block on its pivots
    p = basis.field.p
    if cols is None:
        cols = list(zip(*basis.matrix.entries))
    rows = []
    for wrow in w.matrix.entries:
        # only the nonzero coordinates of wrow contribute
        terms = [(c, j) for j, c in enumerate(wrow) if c]
        rows.append(tuple(sum(c * col[j] for c, j in terms) % p for col in cols))
    pivots = tuple(basis.pivots[j - 1] for j in w.pivots)
    return RrefMatrix._trusted(FMatrix._trusted(basis.field, w.k, basis.n, tuple(rows)), pivots)


def _enumerate_flags(spec: DescentSpec, field: PrimeField) -> Iterator[FlagChain]:
    dims = spec.cuts
    if not dims:
        yield FlagChain(field, spec.n, ())
        return
    # subspaces of F^hi in RREF, listed once per (hi, lo) and reused under every parent
    local = {(hi, lo): list(_enumerate_rref(hi, lo, field)) for lo, hi in zip(dims, dims[1:])}

    def below(i: int, parent: RrefMatrix, chain: tuple) -> Iterator[FlagChain]:
        # chain holds V_{i+1} .. V_{m-1}; pick V_i inside parent = V_{i+1}
        if i < 0:
            yield FlagChain(field, spec.n, chain)
            return
        cols = list(zip(*parent.matrix.entries))
        for w in local[(dims[i + 1], dims[i])]:
            v = _lift(w, parent, cols)
            yield from below(i - 1, v, (v,) + chain)

    for top in _enumerate_rref(spec.n, dims[-1], field):
        yield from below(len(dims) - 2, top, (top,))


def count_flags(n: int, spec: DescentSpec, field: PrimeField, budget: int | None = None) -> int:
    if spec.n != n:
        raise ValueError(f"spec is for n={spec.n}, asked about n={n}")
    return sum(1 for _ in enumerate_flags(spec, field, budget))
