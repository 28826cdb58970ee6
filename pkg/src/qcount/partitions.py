"""Ferrers diagrams inside a rectangular box.

A :class:`Partition` stores its parts without trailing zeros; the box it is
viewed in is a separate :class:`BoxBound`.  Rows are listed top to bottom, the
top row being the longest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        seq = tuple(int(x) for x in parts)
        while seq and seq[-1] == 0:
            seq = seq[:-1]
        for a, b in zip(seq, seq[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {seq}")
        if seq and seq[-1] < 0:
            raise ValueError(f"parts must be positive: {seq}")
        object.__setattr__(self, "parts", seq)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Length of row ``i`` (0-based); zero past the last part."""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, rows: int) -> tuple[int, ...]:
        if len(self.parts) > rows:
            raise ValueError(f"{self} has more than {rows} parts")
        return self.parts + (0,) * (rows - len(self.parts))

    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def complement(self, box: BoxBound) -> Partition:
        """Cells of ``box`` not in ``self``, rotated by 180 degrees."""
        if not fits_in_box(self, box):
            raise ValueError(f"{self} does not fit in {box}")
        return Partition(box.cols - self.part(i) for i in reversed(range(box.rows)))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @classmethod
    def parse(cls, text: str) -> Partition:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"not a partition literal: {text!r}")
        body = body[1:-1].strip()
        return cls(int(x) for x in body.split(",")) if body else cls()


@dataclass(frozen=True)
class BoxBound:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"box dimensions must be nonnegative: {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def transpose(self) -> BoxBound:
        return BoxBound(self.cols, self.rows)

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols}"


def fits_in_box(lam: Partition, b: BoxBound) -> bool:
    return len(lam.parts) <= b.rows and all(p <= b.cols for p in lam.parts)


def enumerate_in_box(b: BoxBound) -> Iterator[Partition]:
    """Every partition in ``b`` once, ascending lexicographically on the
    zero-padded part sequence: for 2x3 that is (), (1), (1,1), (2), ..."""

    def rec(prefix: list[int], bound: int, remaining: int):
        if remaining == 0:
            yield Partition(prefix)
            return
        for v in range(0, bound + 1):
            prefix.append(v)
            yield from rec(prefix, v, remaining - 1)
            prefix.pop()

    if b.rows == 0:
        yield Partition()
        return
    yield from rec([], b.cols, b.rows)


@lru_cache(maxsize=None)
def _count(r: int, max_parts: int, max_part: int) -> int:
    if r == 0:
        return 1
    if r < 0 or max_parts == 0 or max_part == 0 or r > max_parts * max_part:
        return 0
    # either no part equals max_part, or strip one part of size max_part
    return _count(r, max_parts, max_part - 1) + _count(r - max_part, max_parts - 1, max_part)


def count_partitions(r: int, max_parts: int, max_part: int) -> int:
    """Partitions of ``r`` into at most ``max_parts`` parts, each at most ``max_part``."""
    if r < 0 or max_parts < 0 or max_part < 0:
        raise ValueError("arguments must be nonnegative")
    return _count(r, max_parts, max_part)
