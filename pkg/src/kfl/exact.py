"""Exact scalars: canonical rationals and elements of Q(sqrt(D)).

Rationals are plain :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator after every operation. ``BigRat`` is
an alias so signatures read in the vocabulary of the rest of the package.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import BadArgument, DivisionByZero, RadicandMismatch

BigRat = Fraction
RatLike = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat(x: RatLike) -> Fraction:
    """Coerce an int or Fraction (or "p/q" string) to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise BadArgument(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise BadArgument(f"not a rational: {x!r}")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string. Decimals are rejected."""
    m = _RAT_RE.match(text)
    if m is None:
        raise BadArgument(f"cannot parse rational {text!r}; expected p/q or an integer")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(x: RatLike) -> str:
    """Serialize as ``"num/den"``, omitting the denominator when it is 1."""
    return str(rat(x))


def is_canonical(x: Fraction) -> bool:
    return x.denominator > 0 and math.gcd(abs(x.numerator), x.denominator) == 1


def rat_arith(op: str, u: RatLike, v: RatLike) -> Fraction:
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise BadArgument(f"unknown rational operation {op!r}") from None
    u, v = rat(u), rat(v)
    if op == "div" and v == 0:
        raise DivisionByZero("division by zero")
    return fn(u, v)


def rational_sqrt(q: RatLike) -> Optional[Fraction]:
    """Return the nonnegative rational square root of ``q``, or None.

    ``p/d`` (lowest terms) is a rational square iff ``p*d`` is a perfect square,
    in which case the root is ``isqrt(p*d)/d``.
    """
    q = rat(q)
    if q < 0:
        return None
    prod = q.numerator * q.denominator
    s = math.isqrt(prod)
    if s * s != prod:
        return None
    return Fraction(s, q.denominator)


@dataclass(frozen=True, eq=False)
class QuadExt:
    """The number ``rational + radical*sqrt(radicand)``.

    Arithmetic never collapses a square radicand; :func:`qx_is_rational` is
    the one place that does. Equality compares values, so ``1 + 2*sqrt(25/4)``
    equals ``6 + 0*sqrt(25/4)``.
    """

    rational: Fraction
    radical: Fraction
    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rational", rat(self.rational))
        object.__setattr__(self, "radical", rat(self.radical))
        object.__setattr__(self, "radicand", rat(self.radicand))

    @classmethod
    def of(cls, x: RatLike, radicand: RatLike) -> "QuadExt":
        return cls(rat(x), Fraction(0), rat(radicand))

    @classmethod
    def sqrt_of(cls, radicand: RatLike) -> "QuadExt":
        return cls(Fraction(0), Fraction(1), rat(radicand))

    def _check(self, other: "QuadExt") -> None:
        if self.radicand != other.radicand:
            raise RadicandMismatch(
                f"radicands differ: {self.radicand} vs {other.radicand}"
            )

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            self._check(other)
            return other
        return QuadExt.of(rat(other), self.radicand)

    def __add__(self, other):
        o = self._lift(other)
        return QuadExt(self.rational + o.rational, self.radical + o.radical, self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return QuadExt(self.rational - o.rational, self.radical - o.radical, self.radicand)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return QuadExt(-self.rational, -self.radical, self.radicand)

    def __mul__(self, other):
        o = self._lift(other)
        x1, y1, x2, y2 = self.rational, self.radical, o.rational, o.radical
        return QuadExt(x1 * x2 + self.radicand * y1 * y2, x1 * y2 + x2 * y1, self.radicand)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadExt":
        if n < 0:
            raise BadArgument("negative powers are not supported")
        result = QuadExt.of(1, self.radicand)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.rational, -self.radical, self.radicand)

    def norm(self) -> Fraction:
        return self.rational ** 2 - self.radicand * self.radical ** 2

    def div_by_sqrt(self) -> "QuadExt":
        """Divide by ``sqrt(radicand)``: (x + y*sqrt(D))/sqrt(D) = y + (x/D)*sqrt(D)."""
        if self.radicand == 0:
            raise DivisionByZero("sqrt of a zero radicand")
        return QuadExt(self.radical, self.rational / self.radicand, self.radicand)

    def _collapsed(self) -> Optional[Fraction]:
        return qx_is_rational(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExt.of(other, self.radicand)
        if not isinstance(other, QuadExt):
            return NotImplemented
        if self.radicand != other.radicand:
            return False
        if self.rational == other.rational and self.radical == other.radical:
            return True
        a, b = self._collapsed(), other._collapsed()
        return a is not None and a == b

    def __hash__(self):
        c = self._collapsed()
        if c is not None:
            return hash(c)
        return hash((self.rational, self.radical, self.radicand))

    def __repr__(self):
        return f"QuadExt({self.rational} + {self.radical}*sqrt({self.radicand}))"


def qx_arith(op: str, u: QuadExt, v: QuadExt) -> QuadExt:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise BadArgument(f"unknown quadratic-extension operation {op!r}")


def qx_is_rational(u: QuadExt) -> Optional[Fraction]:
    """The rational value of ``u`` if it has one, else None."""
    if u.radical == 0:
        return u.rational
    s = rational_sqrt(u.radicand)
    if s is None:
        return None
    return u.rational + u.radical * s
