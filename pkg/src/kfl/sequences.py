"""k-Fibonacci, k-Lucas and generalized k-FL sequences.

All three satisfy ``S[n] = k*S[n-1] + S[n-2]``; only the seeds differ:

* k-Fibonacci: ``(0, 1)``
* k-Lucas: ``(2, k)``
* generalized k-FL with parameters ``(a, b)``: ``(2b, bk + a)``, which is
  ``a*F[k,n] + b*L[k,n]`` term by term.

Parameters may be any rationals, including zero or negative ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import BadArgument, BadIndex, InternalInconsistency
from .exact import QuadExt, RatLike, qx_is_rational, rat


class SeqKind(str, enum.Enum):
    KFIB = "kfib"
    KLUCAS = "klucas"
    KFL = "kfl"


@dataclass(frozen=True)
class KflParams:
    k: Fraction
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("k", "a", "b"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @property
    def radicand(self) -> Fraction:
        """``k^2 + 4``, the discriminant of ``x^2 - k*x - 1``."""
        return self.k * self.k + 4

    @property
    def cassini_constant(self) -> Fraction:
        """``a^2 - (k^2 + 4) b^2``, the product X*Y of the Binet coefficients."""
        return self.a * self.a - self.radicand * self.b * self.b

    def to_dict(self):
        return {"k": str(self.k), "a": str(self.a), "b": str(self.b)}


@dataclass(frozen=True)
class SeqPrefix:
    params: KflParams
    kind: SeqKind
    terms: Tuple[Fraction, ...]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n):
        return self.terms[n]


def seeds(params: KflParams, kind=SeqKind.KFL) -> Tuple[Fraction, Fraction]:
    kind = SeqKind(kind)
    if kind is SeqKind.KFIB:
        return Fraction(0), Fraction(1)
    if kind is SeqKind.KLUCAS:
        return Fraction(2), params.k
    return 2 * params.b, params.b * params.k + params.a


def recurrence_terms(k: RatLike, s0: RatLike, s1: RatLike, n_max: int) -> List[Fraction]:
    """Terms ``0..n_max`` of ``S[n] = k S[n-1] + S[n-2]`` from the given seeds."""
    if n_max < 0:
        raise BadIndex(f"n_max must be nonnegative, got {n_max}")
    k, s0, s1 = rat(k), rat(s0), rat(s1)
    out = [s0, s1]
    for _ in range(2, n_max + 1):
        out.append(k * out[-1] + out[-2])
    return out[: n_max + 1]


def gen_prefix(params: KflParams, kind=SeqKind.KFL, n_max: int = 10) -> SeqPrefix:
    kind = SeqKind(kind)
    s0, s1 = seeds(params, kind)
    return SeqPrefix(params, kind, tuple(recurrence_terms(params.k, s0, s1, n_max)))


def kfl_terms(params: KflParams, n_max: int) -> List[Fraction]:
    return list(gen_prefix(params, SeqKind.KFL, n_max).terms)


def kfib_terms(k: RatLike, n_max: int) -> List[Fraction]:
    return recurrence_terms(k, 0, 1, n_max)


def klucas_terms(k: RatLike, n_max: int) -> List[Fraction]:
    k = rat(k)
    return recurrence_terms(k, 2, k, n_max)


def term(params: KflParams, n: int) -> Fraction:
    return kfl_terms(params, n)[n]


def binet_eval(params: KflParams, n: int) -> Fraction:
    """Evaluate ``(X alpha^n - Y beta^n) / sqrt(k^2+4)`` exactly.

    ``alpha, beta = (k +- sqrt(D))/2`` and ``X, Y = a +- sqrt(D) b`` live in
    Q(sqrt(D)); the two halves are conjugates, so the quotient is rational.
    """
    if n < 0:
        raise BadIndex(f"n must be nonnegative, got {n}")
    D = params.radicand
    root = QuadExt.sqrt_of(D)
    half = Fraction(1, 2)
    alpha = (root + params.k) * half
    beta = (params.k - root) * half
    X = root * params.b + params.a
    Y = params.a - root * params.b
    numer = X * alpha ** n - Y * beta ** n
    value = qx_is_rational(numer.div_by_sqrt())
    if value is None:
        raise InternalInconsistency(f"Binet value not rational for {params}, n={n}")
    return value


def decompose_check(params: KflParams, n: int) -> Tuple[Fraction, Fraction, bool]:
    """Return ``(F[k,n], L[k,n], S[n] == a F[k,n] + b L[k,n])``."""
    if n < 0:
        raise BadIndex(f"n must be nonnegative, got {n}")
    f = kfib_terms(params.k, n)[n]
    l = klucas_terms(params.k, n)[n]
    s = term(params, n)
    return f, l, s == params.a * f + params.b * l


def parse_kind(name: str) -> SeqKind:
    try:
        return SeqKind(name)
    except ValueError:
        raise BadArgument(f"unknown sequence kind {name!r}") from None
