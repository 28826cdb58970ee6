"""Dense univariate polynomials in ``q`` with exact integer coefficients.

Coefficients are stored low-to-high in a tuple; the zero polynomial is the
empty tuple.  Python ints carry the arbitrary precision.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import NonExactDivision

__all__ = [
    "QPolynomial",
    "add",
    "sub",
    "mul",
    "div_exact",
    "eval_int",
    "is_unimodal",
    "is_palindromic",
]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    seq = [int(c) for c in coeffs]
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


class QPolynomial:
    """Immutable polynomial ``c0 + c1*q + c2*q^2 + ...``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "_coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> QPolynomial:
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [c])

    @classmethod
    def q_integer(cls, i: int) -> QPolynomial:
        """``1 + q + ... + q^(i-1)``; zero for ``i == 0``."""
        return cls([1] * i)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self._coeffs) - 1

    @property
    def leading(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _normalize((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("QPolynomial", self._coeffs))

    def __repr__(self):
        return f"QPolynomial({list(self._coeffs)!r})"

    def __str__(self):
        return self.to_text()

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return sub(other, self)

    def __neg__(self):
        return QPolynomial(-c for c in self._coeffs)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def to_text(self) -> str:
        """Canonical rendering, e.g. ``1 + q + 2*q^2``; zero terms omitted."""
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "q" if i == 1 else f"q^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json_list(self) -> list[str]:
        """Decimal coefficient strings, low-to-high."""
        return [str(c) for c in self._coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list())

    @classmethod
    def from_json_list(cls, items: Sequence[str]) -> QPolynomial:
        return cls(int(s) for s in items)

    @classmethod
    def from_json(cls, text: str) -> QPolynomial:
        return cls.from_json_list(json.loads(text))


def _coerce(x) -> QPolynomial | None:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial.constant(x)
    return None


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return QPolynomial(out)


def sub(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    out = list(a.coeffs) + [0] * max(0, len(b.coeffs) - len(a.coeffs))
    for i, c in enumerate(b.coeffs):
        out[i] -= c
    return QPolynomial(out)


def mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return QPolynomial()
    out = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        if x == 0:
            continue
        for j, y in enumerate(cb):
            out[i + j] += x * y
    return QPolynomial(out)


def div_exact(num: QPolynomial, den: QPolynomial) -> QPolynomial:
    """Return ``r`` with ``r * den == num``.

    Raises :class:`NonExactDivision` if the long division leaves a remainder
    or produces a non-integral quotient coefficient.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return QPolynomial()
    rem = list(num.coeffs)
    d = den.coeffs
    lead = d[-1]
    shift_max = len(rem) - len(d)
    if shift_max < 0:
        raise NonExactDivision(f"({num}) / ({den}): divisor has higher degree")
    quot = [0] * (shift_max + 1)
    for shift in range(shift_max, -1, -1):
        top = rem[shift + len(d) - 1]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise NonExactDivision(f"({num}) / ({den}): non-integral coefficient")
        quot[shift] = c
        for j, dj in enumerate(d):
            rem[shift + j] -= c * dj
    if any(rem):
        raise NonExactDivision(f"({num}) / ({den}): nonzero remainder")
    return QPolynomial(quot)


def eval_int(p: QPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def is_unimodal(p: QPolynomial) -> bool:
    """Coefficients weakly rise, then weakly fall."""
    falling = False
    c = p.coeffs
    for prev, cur in zip(c, c[1:]):
        if cur < prev:
            falling = True
        elif cur > prev and falling:
            return False
    return True


def is_palindromic(p: QPolynomial) -> bool:
    return p.coeffs == p.coeffs[::-1]
