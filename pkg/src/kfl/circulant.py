"""Skew-circulant and circulant matrices attached to a k-FL sequence.

Both matrices have first row ``S[1..n]``; each later row is the previous one
rotated right, with the wrapped entry negated in the skew case. Determinant and
rank are exact (fraction-free elimination); the invertibility predicates read
only ``S[n]`` and ``S[n+1]``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import List, Sequence, Tuple

from .errors import BadArgument, BadIndex, InternalInconsistency, ZeroK
from .sequences import KflParams, kfl_terms


class MatrixKind(str, enum.Enum):
    SKEW = "skew"
    CIRC = "circ"


class Verdict(str, enum.Enum):
    INVERTIBLE = "invertible"
    SINGULAR = "singular"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class InvertibilityVerdict:
    verdict: Verdict
    reason: str

    def to_dict(self):
        return {"verdict": self.verdict.value, "reason": self.reason}


@dataclass(frozen=True)
class KflMatrix:
    kind: MatrixKind
    n: int
    params: KflParams
    first_row: Tuple[Fraction, ...]

    def entry(self, i: int, j: int) -> Fraction:
        c = j - i
        if c >= 0:
            return self.first_row[c]
        v = self.first_row[c + self.n]
        return -v if self.kind is MatrixKind.SKEW else v

    def rows(self) -> List[List[Fraction]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]


def parse_kind(name) -> MatrixKind:
    try:
        return MatrixKind(name)
    except ValueError:
        raise BadArgument(f"unknown matrix kind {name!r}") from None


def build(kind, params: KflParams, n: int) -> KflMatrix:
    kind = parse_kind(kind)
    if n < 1:
        raise BadIndex(f"matrix size must be >= 1, got {n}")
    S = kfl_terms(params, n)
    return KflMatrix(kind, n, params, tuple(S[1 : n + 1]))


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], int]:
    """Scale by the lcm of all denominators; returns (integer rows, scale)."""
    scale = 1
    for row in rows:
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return [[int(x * scale) for x in row] for row in rows], scale


def bareiss_det(a: List[List[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination with row pivoting."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def bareiss_rank(a: List[List[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination with full pivoting."""
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    rank = 0
    for k in range(min(rows, cols)):
        piv = next(
            ((i, j) for i in range(k, rows) for j in range(k, cols) if m[i][j] != 0),
            None,
        )
        if piv is None:
            break
        i, j = piv
        m[k], m[i] = m[i], m[k]
        for r in m:
            r[k], r[j] = r[j], r[k]
        pivot = m[k][k]
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
        rank += 1
    return rank


def det_cofactor(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Leibniz expansion; only sensible for tiny matrices."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(
            1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y]
        )
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= rows[i][j]
            if prod == 0:
                break
        total += -prod if inversions % 2 else prod
    return total


def det_of_rows(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    ints, scale = _integer_rows(rows)
    return Fraction(bareiss_det(ints), scale ** len(rows))


def det_exact(m: KflMatrix) -> Fraction:
    rows = m.rows()
    d = det_of_rows(rows)
    if m.n <= 4 and d != det_cofactor(rows):
        raise InternalInconsistency(f"Bareiss and cofactor determinants differ for {m}")
    return d


def rank_exact(m: KflMatrix) -> int:
    ints, _ = _integer_rows(m.rows())
    return bareiss_rank(ints)


def theorem_verdict(m: KflMatrix) -> InvertibilityVerdict:
    """Decide invertibility from S[n], S[n+1] alone (requires k != 0)."""
    p = m.params
    k, a, b, n = p.k, p.a, p.b, m.n
    if k == 0:
        raise ZeroK("the invertibility criteria assume k != 0")
    S = kfl_terms(p, n + 1)
    diff = S[n + 1] - S[n]
    tot = S[n + 1] + S[n]
    odd = n % 2 == 1
    if m.kind is MatrixKind.SKEW:
        target = -b * k + 2 * b - a
        if diff != target:
            clause = "skew, odd n" if odd else "skew, even n (sufficient condition)"
            return InvertibilityVerdict(
                Verdict.INVERTIBLE, f"{clause}: S[n+1]-S[n] != -bk+2b-a"
            )
        if odd:
            return InvertibilityVerdict(
                Verdict.SINGULAR, "skew, odd n: S[n+1]-S[n] == -bk+2b-a"
            )
        return InvertibilityVerdict(
            Verdict.INCONCLUSIVE,
            "skew, even n: S[n+1]-S[n] == -bk+2b-a and the criterion has no converse",
        )
    sum_hit = tot == b * k + 2 * b + a
    if odd:
        if sum_hit:
            return InvertibilityVerdict(
                Verdict.SINGULAR, "circulant, odd n: S[n+1]+S[n] == bk+2b+a"
            )
        return InvertibilityVerdict(
            Verdict.INVERTIBLE, "circulant, odd n: S[n+1]+S[n] != bk+2b+a"
        )
    diff_hit = diff == b * k - 2 * b + a
    if diff_hit or sum_hit:
        which = []
        if diff_hit:
            which.append("S[n+1]-S[n] == bk-2b+a")
        if sum_hit:
            which.append("S[n+1]+S[n] == bk+2b+a")
        return InvertibilityVerdict(
            Verdict.SINGULAR, "circulant, even n: " + " and ".join(which)
        )
    return InvertibilityVerdict(
        Verdict.INVERTIBLE,
        "circulant, even n: S[n+1]-S[n] != bk-2b+a and S[n+1]+S[n] != bk+2b+a",
    )


def spectral_values(m: KflMatrix) -> List[complex]:
    """Eigenvalues ``f(w^j eta)`` (skew) or ``f(w^j)`` (circulant), in floating point."""
    n = m.n
    coeffs = [float(x) for x in m.first_row]
    shift = cmath.pi / n if m.kind is MatrixKind.SKEW else 0.0
    out = []
    for j in range(n):
        x = cmath.exp(1j * (2 * cmath.pi * j / n + shift))
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * x + c
        out.append(acc)
    return out


def spectral_check(m: KflMatrix, tol: float = 1e-9) -> bool:
    """Advisory float probe: True iff every eigenvalue exceeds ``tol`` relative to
    the max-norm of the first row. The exact determinant is authoritative."""
    if tol <= 0:
        raise BadArgument("tol must be positive")
    scale = max((abs(float(x)) for x in m.first_row), default=0.0)
    if scale == 0.0:
        return False
    return min(abs(v) for v in spectral_values(m)) / scale > tol
