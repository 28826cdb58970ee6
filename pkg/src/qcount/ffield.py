"""Prime fields and dense matrices over them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import DivisionByZero

MAX_PRIME = 1 << 16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"field order must be prime, got {self.p!r}")
        if self.p >= MAX_PRIME:
            raise ValueError(f"field order must be below {MAX_PRIME}, got {self.p}")

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> range:
        return range(self.p)


def field_inv(field: PrimeField, x: int) -> int:
    x %= field.p
    if x == 0:
        raise DivisionByZero(f"0 has no inverse mod {field.p}")
    return pow(x, -1, field.p)


@dataclass(frozen=True)
class FMatrix:
    """Row-major ``rows x cols`` matrix with entries in ``0..p-1``."""

    field: PrimeField
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ents = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(ents) != self.rows or any(len(r) != self.cols for r in ents):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        p = self.field.p
        if any(not 0 <= x < p for r in ents for x in r):
            raise ValueError(f"entries must be residues in 0..{p - 1}")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def _trusted(cls, field: PrimeField, rows: int, cols: int, entries) -> FMatrix:
        obj = object.__new__(cls)
        for name, value in (("field", field), ("rows", rows), ("cols", cols), ("entries", entries)):
            object.__setattr__(obj, name, value)
        return obj

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]], cols: int | None = None) -> FMatrix:
        p = field.p
        ents = tuple(tuple(int(x) % p for x in r) for r in rows)
        if cols is None:
            cols = len(ents[0]) if ents else 0
        return cls(field, len(ents), cols, ents)

    @classmethod
    def identity(cls, field: PrimeField, k: int) -> FMatrix:
        return cls(field, k, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> FMatrix:
        return cls(field, rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __str__(self) -> str:
        return "; ".join(" ".join(str(x) for x in r) for r in self.entries)

    @classmethod
    def parse(cls, field: PrimeField, text: str) -> FMatrix:
        rows = [r.split() for r in text.split(";") if r.strip()]
        return cls.from_rows(field, [[int(x) for x in r] for r in rows])

    def swap_rows(self, i: int, j: int) -> FMatrix:
        ents = list(self.entries)
        ents[i], ents[j] = ents[j], ents[i]
        return FMatrix(self.field, self.rows, self.cols, tuple(ents))

    def vstack(self, other: FMatrix) -> FMatrix:
        if other.field != self.field or other.cols != self.cols:
            raise ValueError("vstack needs matching field and column count")
        return FMatrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def nonzero_rows(self) -> FMatrix:
        ents = tuple(r for r in self.entries if any(r))
        return FMatrix(self.field, len(ents), self.cols, ents)


def matmul(a: FMatrix, b: FMatrix) -> FMatrix:
    if a.field != b.field or a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    p = a.field.p
    bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
    ents = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt) for row in a.entries
    )
    return FMatrix(a.field, a.rows, b.cols, ents)


def rref_reduce(m: FMatrix) -> tuple[FMatrix, int, tuple[int, ...]]:
    """Gauss-Jordan elimination by elementary row operations.

    Returns the reduced matrix, its rank and the 1-based pivot columns.  Zero
    rows end up at the bottom.
    """
    p = m.field.p
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        src = next((i for i in range(r, m.rows) if a[i][c]), None)
        if src is None:
            continue
        a[r], a[src] = a[src], a[r]
        scale = pow(a[r][c], -1, p)
        a[r] = [x * scale % p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c + 1)
        r += 1
    return FMatrix(m.field, m.rows, m.cols, tuple(map(tuple, a))), r, tuple(pivots)


def rank(m: FMatrix) -> int:
    return rref_reduce(m)[1]


def leading_columns(m: FMatrix) -> list[int | None]:
    """1-based column of each row's first nonzero entry, None for zero rows."""
    out: list[int | None] = []
    for row in m.entries:
        out.append(next((j + 1 for j, x in enumerate(row) if x), None))
    return out


def is_rref(m: FMatrix) -> bool:
    leads = leading_columns(m)
    seen_zero = False
    prev = 0
    for i, lead in enumerate(leads):
        if lead is None:
            seen_zero = True
            continue
        if seen_zero:
            return False
        if m.entries[i][lead - 1] != 1:
            return False
        if lead <= prev:
            return False
        prev = lead
        if any(m.entries[r][lead - 1] for r in range(m.rows) if r != i):
            return False
    return True


def all_vectors(field: PrimeField, n: int) -> Iterable[tuple[int, ...]]:
    return product(range(field.p), repeat=n)
