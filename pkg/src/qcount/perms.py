"""Lattice paths, permutations and their statistics.

Conventions:

* Path segments are indexed ``1..n`` from the top-left corner; a diagram's
  path goes down at the top-left corner of every starred square, right
  otherwise.  Paths are strings over ``"H"`` and ``"V"``.
* Permutations are 1-based one-line tuples; ``(s * t)(i) = s(t(i))``.
* A :class:`DescentSpec` ``cuts = (s_1, ..., s_{m-1})`` corresponds to the
  composition with parts ``s_i - s_{i-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DescentViolation, DomainViolation
from .partitions import BoxBound, Partition, fits_in_box

HORIZONTAL = "H"
VERTICAL = "V"


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {HORIZONTAL, VERTICAL}:
            raise ValueError(f"steps must be over H/V: {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def verticals(self) -> int:
        return self.steps.count(VERTICAL)

    @property
    def horizontals(self) -> int:
        return self.steps.count(HORIZONTAL)

    def __str__(self) -> str:
        return self.steps

    @classmethod
    def from_subset(cls, n: int, verticals: Iterable[int]) -> LatticePath:
        vs = set(verticals)
        if any(not 1 <= v <= n for v in vs):
            raise ValueError(f"vertical positions must lie in 1..{n}")
        return cls("".join(VERTICAL if i in vs else HORIZONTAL for i in range(1, n + 1)))


def diagram_to_path(lam: Partition, b: BoxBound) -> LatticePath:
    if not fits_in_box(lam, b):
        raise ValueError(f"{lam} does not fit in {b}")
    n = b.rows + b.cols
    # row i's down-step comes after cols - lam_i right-steps
    verticals = {b.cols - lam.part(i - 1) + i for i in range(1, b.rows + 1)}
    return LatticePath.from_subset(n, verticals)


def path_to_diagram(p: LatticePath) -> tuple[Partition, BoxBound]:
    cols = p.horizontals
    parts = []
    seen_h = 0
    for s in p.steps:
        if s == HORIZONTAL:
            seen_h += 1
        else:
            parts.append(cols - seen_h)
    return Partition(parts), BoxBound(p.verticals, cols)


def path_to_subset(p: LatticePath) -> frozenset[int]:
    return frozenset(i for i, s in enumerate(p.steps, start=1) if s == VERTICAL)


def format_subset(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


class Permutation:
    """A bijection of ``{1..n}`` in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(1, n + 1)))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.images})"

    def __str__(self):
        if self.n <= 9:
            return "(" + "".join(str(x) for x in self.images) + ")"
        return "(" + ",".join(str(x) for x in self.images) + ")"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        body = text.strip().strip("()").strip()
        if "," in body:
            return cls(int(x) for x in body.split(","))
        return cls(int(ch) for ch in body)

    def padded(self, n: int) -> Permutation:
        if n < self.n:
            raise ValueError(f"cannot pad degree {self.n} to {n}")
        return Permutation._trusted(self.images + tuple(range(self.n + 1, n + 1)))

    def compose(self, other: Permutation) -> Permutation:
        """``self(other(i))``; the shorter one is padded with fixed points."""
        n = max(self.n, other.n)
        a, b = self.padded(n).images, other.padded(n).images
        return Permutation._trusted(tuple(a[b[i] - 1] for i in range(n)))

    __mul__ = compose

    def inverse(self) -> Permutation:
        out = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            out[v - 1] = i
        return Permutation._trusted(tuple(out))

    def support_max(self) -> int:
        """Largest moved point, 0 for the identity."""
        for i in range(self.n, 0, -1):
            if self.images[i - 1] != i:
                return i
        return 0


def _inv_count(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inversions(pi: Permutation) -> tuple[int, frozenset[tuple[int, int]]]:
    w = pi.images
    n = len(w)
    pairs = frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return len(pairs), pairs


def inv(pi: Permutation) -> int:
    return _inv_count(pi.images)


def descent_set(pi: Permutation) -> frozenset[int]:
    w = pi.images
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def pullback_inversions(tau: Permutation, sigma: Permutation) -> frozenset[tuple[int, int]]:
    """Pairs ``i < j`` whose image under ``tau`` is an inversion of ``sigma``
    (read as an unordered pair)."""
    n = max(tau.n, sigma.n)
    t = tau.padded(n)
    _, inv_sigma = inversions(sigma.padded(n))
    out = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = t(i), t(j)
            if (min(a, b), max(a, b)) in inv_sigma:
                out.add((i, j))
    return frozenset(out)


def diagram_to_permutation(lam: Partition, b: BoxBound) -> Permutation:
    """Horizontal step indices ascending, then vertical ones ascending."""
    return path_to_permutation(diagram_to_path(lam, b))


@dataclass(frozen=True)
class DescentSpec:
    n: int
    cuts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cuts", tuple(int(c) for c in self.cuts))
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        for a, b in zip(self.cuts, self.cuts[1:]):
            if a >= b:
                raise ValueError(f"cuts must be strictly increasing: {self.cuts}")
        if any(not 1 <= c <= self.n - 1 for c in self.cuts):
            raise ValueError(f"cuts must lie in 1..{self.n - 1}: {self.cuts}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> DescentSpec:
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {tuple(parts)}")
        cuts, acc = [], 0
        for p in parts[:-1]:
            acc += p
            cuts.append(acc)
        return cls(sum(parts), tuple(cuts))

    @classmethod
    def for_binomial(cls, n: int, k: int) -> DescentSpec:
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
        return cls(n, () if k in (0, n) else (k,))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> DescentSpec:
        """Cut ``i`` is present iff bit ``i - 1`` of ``mask`` is set."""
        return cls(n, tuple(i for i in range(1, n) if mask >> (i - 1) & 1))

    @classmethod
    def all_specs(cls, n: int) -> Iterator[DescentSpec]:
        for mask in range(1 << max(n - 1, 0)):
            yield cls.from_mask(n, mask)

    @property
    def parts(self) -> tuple[int, ...]:
        if self.n == 0:
            return ()
        bounds = (0,) + self.cuts + (self.n,)
        return tuple(b - a for a, b in zip(bounds, bounds[1:]))

    @property
    def cut_set(self) -> frozenset[int]:
        return frozenset(self.cuts)

    def outer(self) -> DescentSpec:
        """The one-cut spec ``{s_{m-1}}`` on ``n`` points."""
        return DescentSpec(self.n, self.cuts[-1:])

    def inner(self) -> DescentSpec:
        """``{s_1..s_{m-2}}`` on ``s_{m-1}`` points."""
        if not self.cuts:
            return DescentSpec(0, ())
        return DescentSpec(self.cuts[-1], self.cuts[:-1])

    def __str__(self) -> str:
        return f"n={self.n} cuts={format_subset(self.cuts)}"


def _descent_tuples(n: int, parts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # choose the value set of each increasing block; combinations() is lex-ordered
    def rec(available: tuple[int, ...], idx: int, prefix: tuple[int, ...]):
        if idx == len(parts) - 1:
            yield prefix + available
            return
        for block in combinations(available, parts[idx]):
            chosen = set(block)
            rest = tuple(v for v in available if v not in chosen)
            yield from rec(rest, idx + 1, prefix + block)

    if n == 0:
        yield ()
        return
    yield from rec(tuple(range(1, n + 1)), 0, ())


def enumerate_with_descents_in(spec: DescentSpec) -> Iterator[Permutation]:
    """Permutations with descent set inside ``spec.cuts``, lexicographically."""
    for w in _descent_tuples(spec.n, spec.parts):
        yield Permutation._trusted(w)


def compose_phi(outer: Permutation, inner: Permutation, degree: int | None = None) -> Permutation:
    """``outer(inner(.))`` with ``inner`` embedded as fixing points above its degree.

    ``degree`` defaults to ``inner.n``; :class:`DomainViolation` is raised if
    ``inner`` moves a point above it or if it exceeds ``outer``'s degree.
    """
    deg = inner.n if degree is None else degree
    if inner.support_max() > deg:
        raise DomainViolation(f"{inner} moves a point above degree {deg}")
    if deg > outer.n or inner.support_max() > outer.n:
        raise DomainViolation(f"inner degree {deg} exceeds outer degree {outer.n}")
    return outer.compose(inner)


def factor_phi(pi: Permutation, spec: DescentSpec) -> tuple[Permutation, Permutation]:
    """Split ``pi`` into ``(inner, outer)`` with ``compose_phi(outer, inner) == pi``.

    ``outer`` has descents only at the last cut and sends the first block of
    ``s = cuts[-1]`` points onto ``pi({1..s})`` in increasing order; ``inner``
    is ``outer^-1 * pi`` restricted to ``1..s``.
    """
    if pi.n != spec.n:
        raise ValueError(f"degree mismatch: {pi.n} vs spec n={spec.n}")
    if not descent_set(pi) <= spec.cut_set:
        raise DescentViolation(
            f"{pi} has descents {format_subset(descent_set(pi))} outside {format_subset(spec.cuts)}"
        )
    if not spec.cuts:
        return Permutation.identity(0), Permutation.identity(pi.n)
    s = spec.cuts[-1]
    head = sorted(pi.images[:s])
    tail = sorted(pi.images[s:])
    outer = Permutation._trusted(tuple(head + tail))
    inner_full = outer.inverse().compose(pi)
    inner = Permutation._trusted(inner_full.images[:s])
    return inner, outer


def enumerate_paths(n: int, k: int) -> Iterator[LatticePath]:
    """Paths with ``k`` vertical steps out of ``n``, colex on the horizontal index set.

    For ``n=5, k=2`` this starts ``HHHVV, HHVHV, HVHHV, VHHHV, HHVVH``.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    for hs in sorted(combinations(range(1, n + 1), n - k), key=lambda c: c[::-1]):
        h = set(hs)
        yield LatticePath("".join(HORIZONTAL if i in h else VERTICAL for i in range(1, n + 1)))


def path_to_permutation(p: LatticePath) -> Permutation:
    hs = [i for i, s in enumerate(p.steps, start=1) if s == HORIZONTAL]
    vs = [i for i, s in enumerate(p.steps, start=1) if s == VERTICAL]
    return Permutation._trusted(tuple(hs + vs))
