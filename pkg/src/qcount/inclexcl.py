"""Inclusion-exclusion on the Boolean lattice of an ordered ground set.

Subsets are bit patterns: bit ``i`` stands for ``ground[i]``.  Values only
need ``+`` and ``-``, so integers and :class:`QPolynomial` both work.  Integer
tables that cannot overflow 64 bits take a vectorized path; values may also
be held as a numpy ``int64`` array for large ground sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .errors import NegativeCoefficient
from .perms import DescentSpec
from .qcoeff import classical_multinomial, qmultinom_chain
from .qpoly import QPolynomial

MAX_GROUND = 20


@dataclass(frozen=True, eq=False)
class SubsetFunction:
    ground: tuple
    values: tuple | np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(self.ground))
        if isinstance(self.values, np.ndarray):
            if self.values.dtype != np.int64 or self.values.ndim != 1:
                raise ValueError("array values must be a flat int64 array")
            arr = self.values.copy()
            arr.flags.writeable = False
            object.__setattr__(self, "values", arr)
        else:
            object.__setattr__(self, "values", tuple(self.values))
        if len(self.ground) > MAX_GROUND:
            raise ValueError(f"ground set limited to {MAX_GROUND} elements, got {len(self.ground)}")
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground set has repeated elements")
        if len(self.values) != 1 << len(self.ground):
            raise ValueError(f"need {1 << len(self.ground)} values, got {len(self.values)}")

    @classmethod
    def from_callable(cls, ground: Sequence, fn: Callable[[frozenset], Any]) -> SubsetFunction:
        ground = tuple(ground)
        return cls(ground, tuple(fn(subset_of_mask(ground, m)) for m in range(1 << len(ground))))

    def mask_of(self, subset: Iterable) -> int:
        index = {g: i for i, g in enumerate(self.ground)}
        mask = 0
        for x in subset:
            mask |= 1 << index[x]
        return mask

    def __getitem__(self, subset) -> Any:
        if isinstance(subset, int):
            v = self.values[subset]
        else:
            v = self.values[self.mask_of(subset)]
        return int(v) if isinstance(v, np.integer) else v

    def __eq__(self, other):
        if not isinstance(other, SubsetFunction):
            return NotImplemented
        if self.ground != other.ground:
            return False
        a, b = self.values, other.values
        if isinstance(a, np.ndarray) and isinstance(b, np.ndarray):
            return bool(np.array_equal(a, b))
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            return len(a) == len(b) and all(x == y for x, y in zip(a, b))
        return a == b

    __hash__ = None


def subset_of_mask(ground: Sequence, mask: int) -> frozenset:
    return frozenset(g for i, g in enumerate(ground) if mask >> i & 1)


def _int64_table(f: SubsetFunction) -> np.ndarray | None:
    """The values as int64 if no partial sum can overflow, else None.

    Every intermediate of either transform is bounded by ``2^r max|v|``.
    """
    r = len(f.ground)
    limit = 1 << (62 - r)
    if isinstance(f.values, np.ndarray):
        arr = f.values
        if arr.size and int(np.abs(arr).max()) >= limit:
            return None
        return arr.copy()
    if not all(type(v) is int and -limit < v < limit for v in f.values):
        return None
    return np.array(f.values, dtype=np.int64)


def _transform(f: SubsetFunction, sign: int) -> SubsetFunction:
    r = len(f.ground)
    arr = _int64_table(f)
    if arr is not None:
        for i in range(r):
            view = arr.reshape(-1, 2, 1 << i)
            if sign > 0:
                view[:, 1, :] += view[:, 0, :]
            else:
                view[:, 1, :] -= view[:, 0, :]
        if isinstance(f.values, np.ndarray):
            return SubsetFunction(f.ground, arr)
        return SubsetFunction(f.ground, tuple(arr.tolist()))
    vals = list(f.values)
    size = len(vals)
    for i in range(r):
        bit = 1 << i
        for mask in range(size):
            if mask & bit:
                if sign > 0:
                    vals[mask] = vals[mask] + vals[mask ^ bit]
                else:
                    vals[mask] = vals[mask] - vals[mask ^ bit]
    return SubsetFunction(f.ground, vals)


def zeta_transform(alpha: SubsetFunction) -> SubsetFunction:
    """``beta(T) = sum_{S <= T} alpha(S)``, in ``O(2^r r)`` additions."""
    return _transform(alpha, +1)


def mobius_transform(beta: SubsetFunction) -> SubsetFunction:
    """``alpha(T) = sum_{S <= T} (-1)^{|T - S|} beta(S)``; inverse of :func:`zeta_transform`."""
    return _transform(beta, -1)


def _check_descent_target(n: int, T: Iterable[int]) -> tuple[int, ...]:
    target = tuple(sorted(set(T)))
    if any(not 1 <= t <= n - 1 for t in target):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {target}")
    return target


def _alternating_sum(n: int, T: Iterable[int], value: Callable[[DescentSpec], Any]):
    target = _check_descent_target(n, T)
    beta = SubsetFunction.from_callable(target, lambda S: value(DescentSpec(n, tuple(sorted(S)))))
    return mobius_transform(beta).values[-1]


def descent_exact_count(n: int, T: Iterable[int]) -> int:
    """Number of permutations of ``1..n`` whose descent set is exactly ``T``."""
    return _alternating_sum(n, T, classical_multinomial)


def descent_exact_polynomial(n: int, T: Iterable[int]) -> QPolynomial:
    """``sum_{S <= T} (-1)^{|T-S|} [n S]_q``, which must have nonnegative coefficients."""
    out = _alternating_sum(n, T, lambda spec: qmultinom_chain(n, spec))
    if any(c < 0 for c in out.coeffs):
        raise NegativeCoefficient(f"negative coefficient in descent polynomial for n={n}, T={tuple(T)}: {out}")
    return out
