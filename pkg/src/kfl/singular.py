"""Singular k-FL pairs and the rank structure of the matrices they produce.

A pair of a given type and level ``n`` is the unique nonzero ``(a, b)`` that
makes the cubic ``y^2 = x^3 + a x + b`` singular (``4a^3 + 27b^2 = 0``) and
satisfies a linear relation ``u a + v b = 0`` with ``u, v`` polynomial in k:

====  ==================  ===================
type  u                   v
====  ==================  ===================
1     F_n(k) + 1          G_n(k) + k - 2
2     F_n(k) - 1          G_n(k) - k + 2
3     P_n(k) - 1          Q_n(k) - k - 2
====  ==================  ===================

Solving gives ``a = -27 u^2 / (4 v^2)`` and ``b = 27 u^3 / (4 v^3)``.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import circulant, polyfam
from .circulant import MatrixKind
from .errors import (
    BadArgument,
    BadIndex,
    BadShape,
    BadSlope,
    ExceptionalK,
    InternalInconsistency,
    KflError,
    ZeroK,
)
from .exact import RatLike, rat
from .polyfam import DEFAULT_PRECISION, RootSet, SetKind, T
from .sequences import KflParams


class PairType(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3


_EXCLUDED_SET = {PairType.TYPE1: SetKind.A, PairType.TYPE2: SetKind.B, PairType.TYPE3: SetKind.C}


def parse_pair_type(value) -> PairType:
    try:
        return PairType(int(value))
    except (ValueError, TypeError):
        raise BadArgument(f"pair type must be 1, 2 or 3, got {value!r}") from None


@dataclass(frozen=True)
class SingularPair:
    pair_type: PairType
    level: int
    k: Fraction
    a: Fraction
    b: Fraction

    @property
    def discriminant(self) -> Fraction:
        return cubic_discriminant(self.a, self.b)

    def params(self) -> KflParams:
        return KflParams(self.k, self.a, self.b)

    def to_dict(self):
        return {
            "type": int(self.pair_type),
            "n": self.level,
            "k": str(self.k),
            "a": str(self.a),
            "b": str(self.b),
            "discriminant": str(self.discriminant),
        }


def cubic_discriminant(a: RatLike, b: RatLike) -> Fraction:
    """``4a^3 + 27b^2``; zero exactly when ``y^2 = x^3 + ax + b`` is singular."""
    a, b = rat(a), rat(b)
    return 4 * a ** 3 + 27 * b ** 2


def relation_coefficients(pair_type, n: int, k: RatLike) -> Tuple[Fraction, Fraction]:
    """The ``(u, v)`` of the linear relation ``u a + v b = 0``, evaluated at k."""
    pair_type = parse_pair_type(pair_type)
    if n < 1:
        raise BadIndex(f"level must be >= 1, got {n}")
    u_poly, v_poly = polyfam.defining_polys(_EXCLUDED_SET[pair_type], n)
    k = rat(k)
    return u_poly(k), v_poly(k)


def _require_admissible(pair_type: PairType, n: int, k: Fraction) -> None:
    s = _EXCLUDED_SET[pair_type]
    if polyfam.member(s, n, k):
        raise ExceptionalK(f"k = {k} lies in the exceptional set {s.value}_{n}", set=s.value)


def singular_pair(pair_type, n: int, k: RatLike) -> SingularPair:
    pair_type = parse_pair_type(pair_type)
    if n < 1:
        raise BadIndex(f"level must be >= 1, got {n}")
    k = rat(k)
    _require_admissible(pair_type, n, k)
    u, v = relation_coefficients(pair_type, n, k)
    ratio = u / v
    a = Fraction(-27, 4) * ratio ** 2
    b = Fraction(27, 4) * ratio ** 3
    if cubic_discriminant(a, b) != 0 or u * a + v * b != 0 or (a == 0 and b == 0):
        raise InternalInconsistency(f"pair invariants fail at type {int(pair_type)}, n={n}, k={k}")
    return SingularPair(pair_type, n, k, a, b)


def rationality_ratio(pair_type, n: int, k: RatLike) -> Fraction:
    """``u/v`` for the pair; the pair is rational iff this ratio is."""
    pair_type = parse_pair_type(pair_type)
    k = rat(k)
    if n < 1:
        raise BadIndex(f"level must be >= 1, got {n}")
    _require_admissible(pair_type, n, k)
    u, v = relation_coefficients(pair_type, n, k)
    return u / v


def slope_polynomial(n: int, p: int, q: int) -> polyfam.IntPoly:
    """``q G_n - p F_n - q T + (2q + p)``: its roots are the k with ratio q/p."""
    quad = polyfam.fgpq(n)
    return q * quad.G - p * quad.F - q * T + (2 * q + p)


def s2_slope_roots(n: int, p: int, q: int, precision: RatLike = DEFAULT_PRECISION) -> RootSet:
    if n < 1:
        raise BadIndex(f"level must be >= 1, got {n}")
    if math.gcd(p, q) != 1:
        raise BadSlope(f"(p, q) = ({p}, {q}) is not a coprime pair")
    rs = polyfam.real_roots(slope_polynomial(n, p, q), precision)
    if len(rs) > n + 1:
        raise InternalInconsistency(f"{len(rs)} roots exceed the degree bound {n + 1}")
    return rs


@dataclass(frozen=True)
class VarietyPoint:
    k: Fraction
    a: Fraction
    b: Fraction
    matrix_kind: MatrixKind
    n: int
    rank: int
    pair_type: PairType

    def to_dict(self):
        return {
            "k": str(self.k),
            "a": str(self.a),
            "b": str(self.b),
            "kind": self.matrix_kind.value,
            "n": self.n,
            "type": int(self.pair_type),
            "rank": self.rank,
        }


def pair_types_for(kind, n: int) -> Tuple[PairType, ...]:
    """Pair types whose matrices fill the rank-(n-1) locus for this kind and parity."""
    kind = circulant.parse_kind(kind)
    if kind is MatrixKind.SKEW and n >= 3 and n % 2 == 1:
        return (PairType.TYPE1,)
    if kind is MatrixKind.CIRC and n >= 3 and n % 2 == 1:
        return (PairType.TYPE3,)
    if kind is MatrixKind.CIRC and n >= 2 and n % 2 == 0:
        return (PairType.TYPE2, PairType.TYPE3)
    raise BadShape(f"no rank theorem for kind={kind.value}, n={n}")


def variety_classify(kind, n: int, k: RatLike) -> List[VarietyPoint]:
    """Construct the singular pair(s) at k, build the matrix and record its rank.

    Even-size circulants return one point per pair type (Type 2 and Type 3).
    """
    kind = circulant.parse_kind(kind)
    types = pair_types_for(kind, n)
    k = rat(k)
    if k == 0:
        raise ZeroK("the rank theorems assume k != 0")
    for t in types:
        _require_admissible(t, n, k)
    points = []
    for t in types:
        pair = singular_pair(t, n, k)
        m = circulant.build(kind, pair.params(), n)
        rank = circulant.rank_exact(m)
        if rank > n - 1:
            raise InternalInconsistency(f"singular pair gave a full-rank matrix: {pair}")
        points.append(VarietyPoint(k, pair.a, pair.b, kind, n, rank, t))
    return points


@dataclass
class VarietyScan:
    kind: MatrixKind
    n: int
    histogram: Dict[int, int] = field(default_factory=dict)
    flagged: List[VarietyPoint] = field(default_factory=list)
    skipped: List[Tuple[Fraction, str]] = field(default_factory=list)

    @property
    def points(self) -> int:
        return sum(self.histogram.values())

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "n": self.n,
            "histogram": {str(r): c for r, c in sorted(self.histogram.items())},
            "flagged": [p.to_dict() for p in self.flagged],
            "skipped": [{"k": str(k), "error_code": code} for k, code in self.skipped],
        }


def variety_scan(kind, n: int, k_values: Sequence[RatLike]) -> VarietyScan:
    """Rank histogram over many k; points below rank n-1 are flagged."""
    kind = circulant.parse_kind(kind)
    pair_types_for(kind, n)
    hist: Counter = Counter()
    scan = VarietyScan(kind, n)
    for k in k_values:
        k = rat(k)
        try:
            points = variety_classify(kind, n, k)
        except KflError as exc:
            if exc.internal:
                raise
            scan.skipped.append((k, exc.code))
            continue
        for p in points:
            hist[p.rank] += 1
            if p.rank < n - 1:
                scan.flagged.append(p)
    scan.histogram = dict(sorted(hist.items()))
    return scan
