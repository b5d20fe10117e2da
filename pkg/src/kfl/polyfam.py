"""Integer polynomials in T, the coefficient families of k-FL sequences, and
exact real-root isolation.

``f_n, g_n`` express a term through its parameters, ``S[n] = f_n(k) a + g_n(k) b``.
The consecutive sums and differences give four more families::

    S[n+1] - S[n] = F_n(k) a + G_n(k) b
    S[n+1] + S[n] = P_n(k) a + Q_n(k) b

The exceptional sets A_n, B_n, C_n are the real zeros of the denominators that
appear in the singular-pair formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import BadArgument, BadIndex, ZeroPolynomial
from .exact import RatLike, rat

DEFAULT_PRECISION = Fraction(1, 2 ** 32)


class IntPoly:
    """Dense polynomial with integer coefficients; ``coeffs[i]`` multiplies T^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPoly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, m: int = 1) -> "IntPoly":
        """Multiply by T^m."""
        if self.is_zero():
            return self
        return IntPoly([0] * m + list(self.coeffs))

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "T" if i == 1 else f"T^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


T = IntPoly((0, 1))


def poly_arith(op: str, p: IntPoly, q=None):
    """Named dispatch over the IntPoly operations.

    ``add``, ``sub`` and ``mul`` take a second polynomial, ``shift_mul_T`` an
    optional power (default 1) and ``eval_at`` a rational point.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "shift_mul_T":
        return p.shift(1 if q is None else q)
    if op == "eval_at":
        return p(q)
    raise BadArgument(f"unknown polynomial operation {op!r}")


# Arithmetic over Q on coefficient lists (low degree first), used for gcds and
# Sturm chains. Lists are kept trimmed.

def _qtrim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qdivmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lb
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        r.pop()
        _qtrim(r)
    return _qtrim(q), r


def _to_q(p: IntPoly) -> List[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_q(p: Sequence[Fraction]) -> IntPoly:
    """Scale a rational polynomial to a primitive integer one."""
    if not p:
        return IntPoly()
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return IntPoly(int(c * den) for c in p).primitive()


def _qgcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    return a


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    return _from_q(_qgcd(_to_q(p), _to_q(q)))


def exact_quotient(p: IntPoly, d: IntPoly) -> IntPoly:
    """``p / d`` as a primitive integer polynomial; ``d`` must divide ``p`` over Q."""
    q, r = _qdivmod(_to_q(p), _to_q(d))
    if r:
        raise BadArgument(f"{d} does not divide {p}")
    return _from_q(q)


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.degree < 1:
        return p.primitive()
    return exact_quotient(p, poly_gcd(p, p.derivative()))


def poly_lcm(p: IntPoly, q: IntPoly) -> IntPoly:
    return exact_quotient(p * q, poly_gcd(p, q))


# Coefficient families.

def _fg_seq(n: int):
    if n < 0:
        raise BadIndex(f"index must be nonnegative, got {n}")
    f_prev, f_cur = IntPoly(), IntPoly.const(1)          # f_0, f_1
    g_prev, g_cur = IntPoly.const(2), T                   # g_0, g_1
    if n == 0:
        return f_prev, g_prev, f_cur, g_cur
    for _ in range(1, n):
        f_prev, f_cur = f_cur, T * f_cur + f_prev
        g_prev, g_cur = g_cur, T * g_cur + g_prev
    return f_cur, g_cur, T * f_cur + f_prev, T * g_cur + g_prev


def fg_pair(n: int) -> Tuple[IntPoly, IntPoly]:
    """``(f_n, g_n)`` with ``S[n] = f_n(k) a + g_n(k) b``; n = 0 gives (0, 2)."""
    f, g, _, _ = _fg_seq(n)
    return f, g


class PolyQuad(NamedTuple):
    F: IntPoly
    G: IntPoly
    P: IntPoly
    Q: IntPoly


def fgpq(n: int) -> PolyQuad:
    f_n, g_n, f_next, g_next = _fg_seq(n)
    return PolyQuad(f_next - f_n, g_next - g_n, f_next + f_n, g_next + g_n)


FAMILIES = ("f", "g", "F", "G", "P", "Q")


def family(name: str, n: int) -> IntPoly:
    if name == "f":
        return fg_pair(n)[0]
    if name == "g":
        return fg_pair(n)[1]
    if name in ("F", "G", "P", "Q"):
        return getattr(fgpq(n), name)
    raise BadArgument(f"unknown polynomial family {name!r}")


# Real roots.

class IsolatingInterval(NamedTuple):
    """Open interval ``(lo, hi)`` holding one simple root of ``witness``.

    ``witness`` is square-free and changes sign across the interval.
    """

    lo: Fraction
    hi: Fraction
    witness: IntPoly

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_pair(self):
        return [str(self.lo), str(self.hi)]


@dataclass(frozen=True)
class RootSet:
    rational_roots: Tuple[Fraction, ...]
    irrational_roots: Tuple[IsolatingInterval, ...]
    source_polys: Tuple[IntPoly, ...] = field(default=())

    def __len__(self):
        return len(self.rational_roots) + len(self.irrational_roots)

    def to_dict(self):
        return {
            "rational_roots": [str(r) for r in self.rational_roots],
            "irrational_roots": [iv.to_pair() for iv in self.irrational_roots],
            "cardinality": len(self),
            "source_polys": [[str(c) for c in p.coeffs] for p in self.source_polys],
        }


def _divisors(m: int) -> List[int]:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: IntPoly) -> List[Tuple[Fraction, int]]:
    """Distinct rational roots of ``p`` with multiplicities, ascending."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has every number as a root")
    found = []
    cs = list(p.coeffs)
    zeros = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        zeros += 1
    if zeros:
        found.append((Fraction(0), zeros))
    q = IntPoly(cs)
    if q.degree >= 1:
        cands = set()
        for num in _divisors(q.coeffs[0]):
            for den in _divisors(q.lc):
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
        for c in sorted(cands):
            mult = 0
            lin = IntPoly((-c.numerator, c.denominator))
            while q.degree >= 1 and q(c) == 0:
                q = exact_quotient(q, lin)
                mult += 1
            if mult:
                found.append((c, mult))
    return sorted(found)


def _deflate(p: IntPoly, roots) -> IntPoly:
    for c, mult in roots:
        lin = IntPoly((-c.numerator, c.denominator))
        for _ in range(mult):
            p = exact_quotient(p, lin)
    return p


def _sturm_chain(p: IntPoly) -> List[List[Fraction]]:
    chain = [_to_q(p), _to_q(p.derivative())]
    while chain[-1]:
        _, r = _qdivmod(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _qeval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_changes(chain, x: Fraction) -> int:
    prev = 0
    changes = 0
    for poly in chain:
        v = _qeval(poly, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _root_bound(p: IntPoly) -> Fraction:
    """Power of two strictly exceeding every root's modulus (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((Fraction(abs(c), lc) for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def _pull_in(s: IntPoly, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Shrink ``(lo, hi)`` so both new endpoints lie strictly inside it.

    ``s`` has exactly one simple root in the interval and is nonzero at both
    ends. Each probe either moves the far endpoint past the root or tightens
    the near one, so the loop terminates.
    """
    s_hi = _sgn(s(hi))
    new_lo, new_hi = lo, hi
    delta = (hi - lo) / 4
    while True:
        x = hi - delta
        if _sgn(s(x)) == s_hi:
            new_hi = x
            break
        new_lo = x
        delta /= 2
    if new_lo > lo:
        return new_lo, new_hi
    s_lo = _sgn(s(lo))
    delta = (new_hi - lo) / 4
    while True:
        x = lo + delta
        if _sgn(s(x)) == s_lo:
            new_lo = x
            break
        new_hi = x
        delta /= 2
    return new_lo, new_hi


def _bisect_to(s: IntPoly, lo: Fraction, hi: Fraction, width: Fraction):
    s_lo = _sgn(s(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _sgn(s(mid))
        if sm == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def isolate_irrational(s: IntPoly, precision: Fraction, avoid: Sequence[Fraction] = ()):
    """Isolate all real roots of a square-free ``s`` that has no rational roots."""
    if s.degree < 1:
        return []
    chain = _sturm_chain(s)
    B = _root_bound(s)
    pending = [(-B, B, _sign_changes(chain, -B) - _sign_changes(chain, B))]
    found = []
    while pending:
        lo, hi, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        v_mid = _sign_changes(chain, mid)
        pending.append((lo, mid, _sign_changes(chain, lo) - v_mid))
        pending.append((mid, hi, v_mid - _sign_changes(chain, hi)))
    out = []
    for lo, hi in sorted(found):
        lo, hi = _bisect_to(s, lo, hi, precision)
        lo, hi = _pull_in(s, lo, hi)
        changed = True
        while changed:
            changed = False
            for r in avoid:
                if lo <= r <= hi:
                    if _sgn(s(r)) == _sgn(s(lo)):
                        lo = r
                    else:
                        hi = r
                    lo, hi = _pull_in(s, lo, hi)
                    changed = True
        out.append(IsolatingInterval(lo, hi, s))
    return out


def _check_precision(precision) -> Fraction:
    precision = rat(precision)
    if precision <= 0:
        raise BadArgument("precision must be positive")
    return precision


def real_roots(p: IntPoly, precision: RatLike = DEFAULT_PRECISION) -> RootSet:
    """Exact rational roots plus isolating intervals for the irrational real roots."""
    precision = _check_precision(precision)
    rr = rational_roots(p)
    rest = squarefree_part(_deflate(p, rr))
    rats = tuple(c for c, _ in rr)
    intervals = isolate_irrational(rest, precision, rats)
    return RootSet(rats, tuple(intervals), (p,))


class SetKind(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"


def defining_polys(kind, n: int) -> Tuple[IntPoly, IntPoly]:
    kind = SetKind(kind)
    if n < 1:
        raise BadIndex(f"exceptional sets are indexed by n >= 1, got {n}")
    quad = fgpq(n)
    if kind is SetKind.A:
        return quad.F + 1, quad.G + T - 2
    if kind is SetKind.B:
        return quad.F - 1, quad.G - T + 2
    return quad.P - 1, quad.Q - T - 2


def exceptional_set(kind, n: int, precision: RatLike = DEFAULT_PRECISION) -> RootSet:
    precision = _check_precision(precision)
    p1, p2 = defining_polys(kind, n)
    union = real_roots(poly_lcm(p1, p2), precision)
    w1, w2 = squarefree_part(p1), squarefree_part(p2)
    intervals = []
    for iv in union.irrational_roots:
        w = w1 if _sgn(w1(iv.lo)) * _sgn(w1(iv.hi)) < 0 else w2
        intervals.append(IsolatingInterval(iv.lo, iv.hi, w))
    return RootSet(union.rational_roots, tuple(intervals), (p1, p2))


def member(kind, n: int, k: RatLike) -> bool:
    p1, p2 = defining_polys(kind, n)
    k = rat(k)
    return p1(k) == 0 or p2(k) == 0
