"""Exact numeric verification of the closed-form identities for k-FL sequences.

Every check returns an :class:`IdentityReport` with both sides so failures can
be inspected; ``residual`` is ``lhs - rhs`` and must be exactly zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BadIndex, BadP, InternalInconsistency, ZeroK
from .exact import RatLike, rat
from .sequences import KflParams, kfib_terms, kfl_terms


class IdentityId(str, enum.Enum):
    CATALAN = "catalan"
    CASSINI = "cassini"
    DOCAGNE = "docagne"
    SUM_ALL = "sum-all"
    SUM_EVEN = "sum-even"
    SUM_ODD = "sum-odd"
    SUM_ALTERNATING = "sum-alternating"
    BINOMIAL = "binomial"
    LIVIO = "livio"
    GEOMETRIC = "geometric"


class SumKind(str, enum.Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"
    ALTERNATING = "alternating"


_SUM_IDS = {
    SumKind.ALL: IdentityId.SUM_ALL,
    SumKind.EVEN: IdentityId.SUM_EVEN,
    SumKind.ODD: IdentityId.SUM_ODD,
    SumKind.ALTERNATING: IdentityId.SUM_ALTERNATING,
}


@dataclass(frozen=True)
class IdentityReport:
    identity_id: IdentityId
    lhs: Fraction
    rhs: Fraction

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.residual == 0

    def to_dict(self):
        return {
            "id": self.identity_id.value,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "residual": str(self.residual),
            "holds": self.holds,
        }


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def check_catalan(params: KflParams, n: int, r: int) -> IdentityReport:
    if not n >= r >= 0:
        raise BadIndex(f"Catalan needs n >= r >= 0, got n={n}, r={r}")
    S = kfl_terms(params, n + r)
    F = kfib_terms(params.k, r)
    lhs = S[n - r] * S[n + r] - S[n] ** 2
    rhs = _sign(n - r + 1) * params.cassini_constant * F[r] ** 2
    return IdentityReport(IdentityId.CATALAN, lhs, rhs)


def check_cassini(params: KflParams, n: int) -> IdentityReport:
    if n < 1:
        raise BadIndex(f"Cassini needs n >= 1, got {n}")
    S = kfl_terms(params, n + 1)
    lhs = S[n - 1] * S[n + 1] - S[n] ** 2
    rhs = _sign(n) * params.cassini_constant
    return IdentityReport(IdentityId.CASSINI, lhs, rhs)


def check_docagne(params: KflParams, m: int, n: int) -> IdentityReport:
    if not m >= n >= 0:
        raise BadIndex(f"d'Ocagne needs m >= n >= 0, got m={m}, n={n}")
    S = kfl_terms(params, m + 1)
    F = kfib_terms(params.k, m - n)
    lhs = S[m] * S[n + 1] - S[m + 1] * S[n]
    rhs = _sign(n) * params.cassini_constant * F[m - n]
    return IdentityReport(IdentityId.DOCAGNE, lhs, rhs)


def check_sum(kind, params: KflParams, n: int) -> IdentityReport:
    kind = SumKind(kind)
    if n < 1:
        raise BadIndex(f"sum identities need n >= 1, got {n}")
    k, a, b = params.k, params.a, params.b
    if k == 0:
        raise ZeroK("sum identities divide by k")
    S = kfl_terms(params, 2 * n + 1)
    if kind is SumKind.ALL:
        lhs = sum(S[1 : n + 1], Fraction(0))
        rhs = (S[n + 1] + S[n]) / k - b - (a + 2 * b) / k
    elif kind is SumKind.EVEN:
        lhs = sum((S[2 * i] for i in range(1, n + 1)), Fraction(0))
        rhs = S[2 * n + 1] / k - b - a / k
    elif kind is SumKind.ODD:
        lhs = sum((S[2 * i - 1] for i in range(1, n + 1)), Fraction(0))
        rhs = S[2 * n] / k - 2 * b / k
    else:
        r = n // 2
        lhs = sum((_sign(i) * S[i] for i in range(1, n + 1)), Fraction(0))
        rhs = (2 * S[2 * r + 1] - S[n + 1] - S[n]) / k - b - (a - 2 * b) / k
    return IdentityReport(_SUM_IDS[kind], lhs, rhs)


def check_binomial(params: KflParams, n: int) -> IdentityReport:
    if n < 0:
        raise BadIndex(f"binomial identity needs n >= 0, got {n}")
    S = kfl_terms(params, 2 * n)
    k = params.k
    lhs = sum((comb(n, i) * k ** i * S[i] for i in range(n + 1)), Fraction(0))
    return IdentityReport(IdentityId.BINOMIAL, lhs, S[2 * n])


def check_livio(params: KflParams, p: RatLike, n: int) -> IdentityReport:
    """Weighted sum of S[i]/p^i. ``p`` must avoid 0 and the roots of x^2 - kx - 1."""
    p = rat(p)
    if n < 1:
        raise BadIndex(f"Livio's formula needs n >= 1, got {n}")
    k, a, b = params.k, params.a, params.b
    if p == 0:
        raise BadP("p must be nonzero")
    q = p * p - p * k - 1
    if q == 0:
        raise BadP(f"p = {p} is a root of x^2 - kx - 1")
    S = kfl_terms(params, n + 1)
    lhs = sum((S[i] / p ** i for i in range(1, n + 1)), Fraction(0))
    rhs = (-S[n] - p * S[n + 1] + p ** (n + 1) * (a + b * k) + 2 * b * p ** n) / (q * p ** n)
    return IdentityReport(IdentityId.LIVIO, lhs, rhs)


def geometric_report(params: KflParams) -> IdentityReport:
    """Compare ``a^2`` with ``(k^2+4) b^2``; equality is the geometric criterion."""
    return IdentityReport(
        IdentityId.GEOMETRIC, params.a ** 2, params.radicand * params.b ** 2
    )


def check_geometric(params: KflParams, horizon: int = 20) -> bool:
    """Whether the sequence is geometric; a positive answer is confirmed on the terms."""
    verdict = geometric_report(params).holds
    S = kfl_terms(params, horizon + 1)
    if verdict and any(S):
        ratio = S[1] / S[0]
        if any(S[i + 1] != ratio * S[i] for i in range(horizon + 1)):
            raise InternalInconsistency(f"criterion holds but {params} is not geometric")
    if not verdict:
        nonzero = all(S)
        if nonzero and len({S[i + 1] / S[i] for i in range(horizon + 1)}) == 1:
            raise InternalInconsistency(f"criterion fails but {params} looks geometric")
    return verdict
