"""Primitive prime divisors, Zsigmondy sets, and sequences with large ones.

Membership in the Zsigmondy set is decided without factoring. Every prime
shared with an earlier nonzero term is stripped from ``|a_n|`` by repeated gcds,
and ``n`` belongs to the set iff nothing is left. Factorizations are only needed
for the per-index report. Those use a bounded search (trial division, then
Pollard-Brent with a fixed seed schedule), so a cofactor that resists splitting
is reported as unfactored instead of stalling the run. :func:`factorize` itself
has no budget.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    BadArgument,
    BadIndex,
    ConstructionFailure,
    InternalInconsistency,
    NonIntegerTerm,
    NotFactorable,
)
from .sequences import KflParams, kfib_terms, kfl_terms, klucas_terms

TRIAL_LIMIT = 10 ** 6
# Pollard-Brent: polynomial x^2 + c for c in the schedule, starting point 2.
RHO_SEEDS = (1, 3, 5, 7, 11, 13)
RHO_ITERATIONS = 200_000
_MR_DETERMINISTIC = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@lru_cache(maxsize=None)
def _small_primes(limit: int = TRIAL_LIMIT) -> Tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, fixed-witness probable prime above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    bases = _MR_BASES if n < _MR_DETERMINISTIC else _MR_BASES + _MR_EXTRA_BASES
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, c: int, max_iter: Optional[int]) -> Optional[int]:
    """A nontrivial factor of composite odd ``n``, or None if the budget runs out."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
            steps += m
            if max_iter is not None and steps >= max_iter and g == 1:
                return None
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def _split(n: int, max_iter: Optional[int]) -> Optional[int]:
    r = math.isqrt(n)
    if r * r == n:
        return r
    seeds = RHO_SEEDS if max_iter is not None else _all_seeds()
    for c in seeds:
        g = _pollard_brent(n, c, max_iter)
        if g is not None:
            return g
    return None


def _all_seeds():
    c = 1
    while True:
        yield c
        c += 2


def _trial_divide(m: int) -> Tuple[List[int], int]:
    """Strip primes up to the trial limit; the cofactor has no factor below it."""
    out = []
    for p in _small_primes():
        if p * p > m:
            break
        while m % p == 0:
            out.append(p)
            m //= p
    else:
        if m < TRIAL_LIMIT ** 2:
            return out + ([m] if m > 1 else []), 1
        return out, m
    return out + ([m] if m > 1 else []), 1


def _factor_rest(m: int, max_iter: Optional[int]) -> Tuple[List[int], List[int]]:
    """Split a cofactor with no small factors; returns (primes, unsplit composites)."""
    primes: List[int] = []
    stuck: List[int] = []
    stack = [m]
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            primes.append(x)
            continue
        g = _split(x, max_iter)
        if g is None:
            stuck.append(x)
        else:
            stack.extend((g, x // g))
    return sorted(primes), sorted(stuck)


def factorize(m: int) -> List[int]:
    """Sorted prime factors of ``|m|`` with multiplicity."""
    m = abs(int(m))
    if m <= 1:
        raise NotFactorable(f"{m} has no prime factorization")
    small, rest = _trial_divide(m)
    big, stuck = _factor_rest(rest, None)
    if stuck:
        raise InternalInconsistency(f"unbounded factorization left {stuck}")
    return sorted(small + big)


@dataclass(frozen=True)
class PartialFactorization:
    primes: Tuple[int, ...]
    unfactored: Tuple[int, ...]

    @property
    def complete(self) -> bool:
        return not self.unfactored


def partial_factor(m: int, max_iter: int = RHO_ITERATIONS) -> PartialFactorization:
    """Factor ``|m|`` within the Pollard-Brent budget; leftovers are composite."""
    m = abs(int(m))
    if m <= 1:
        return PartialFactorization((), ())
    small, rest = _trial_divide(m)
    big, stuck = _factor_rest(rest, max_iter)
    return PartialFactorization(tuple(sorted(small + big)), tuple(stuck))


def sigma0(r: int) -> int:
    if r < 1:
        raise BadArgument(f"sigma0 needs r >= 1, got {r}")
    if r == 1:
        return 1
    count = 1
    primes = factorize(r)
    for p in set(primes):
        count *= primes.count(p) + 1
    return count


def divisors(r: int) -> List[int]:
    if r < 1:
        raise BadArgument(f"divisors needs r >= 1, got {r}")
    out = {1}
    if r > 1:
        for p in factorize(r):
            out |= {d * p for d in out}
    return sorted(d for d in out if r % d == 0)


@dataclass(frozen=True)
class IntSeqPrefix:
    terms: Tuple[int, ...]
    label: str = ""
    # k^2 + 4 for k-Fibonacci-type sequences; used by the Carmichael convention.
    discriminant: Optional[int] = None

    def __post_init__(self):
        for i, t in enumerate(self.terms):
            if isinstance(t, bool) or not isinstance(t, int):
                raise NonIntegerTerm(f"term {i} is not an integer: {t!r}")

    def __len__(self):
        return len(self.terms)

    @classmethod
    def from_rationals(cls, values: Iterable, label: str = "", discriminant=None):
        out = []
        for i, v in enumerate(values):
            v = Fraction(v)
            if v.denominator != 1:
                raise NonIntegerTerm(f"term {i} = {v} is not an integer")
            out.append(int(v))
        return cls(tuple(out), label, discriminant)


def fibonacci_prefix(n_max: int) -> IntSeqPrefix:
    return kfib_prefix(1, n_max)


def kfib_prefix(k: int, n_max: int) -> IntSeqPrefix:
    return IntSeqPrefix.from_rationals(kfib_terms(k, n_max), f"kfib:{k}", k * k + 4)


def klucas_prefix(k: int, n_max: int) -> IntSeqPrefix:
    return IntSeqPrefix.from_rationals(klucas_terms(k, n_max), f"klucas:{k}", k * k + 4)


def power_difference_prefix(u: int, v: int, n_max: int) -> IntSeqPrefix:
    """``u^n - v^n`` for ``n = 0..n_max``."""
    if n_max < 0:
        raise BadIndex(f"n_max must be nonnegative, got {n_max}")
    return IntSeqPrefix(tuple(u ** n - v ** n for n in range(n_max + 1)), f"pow:{u}-{v}")


def read_prefix_file(path) -> IntSeqPrefix:
    """One integer per line, index 0 first; blank lines are ignored."""
    try:
        lines = Path(path).read_text().split("\n")
    except OSError as exc:
        raise BadArgument(f"cannot read sequence file {path}: {exc.strerror}") from None
    terms = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            terms.append(int(line))
        except ValueError:
            raise NonIntegerTerm(f"{path}:{lineno}: not an integer: {line!r}") from None
    return IntSeqPrefix(tuple(terms), f"file:{path}")


class Convention(str, enum.Enum):
    PLAIN = "plain"
    CARMICHAEL = "carmichael"


def _strip_common(r: int, other: int) -> int:
    """Remove from ``r`` every prime that divides ``other``."""
    g = math.gcd(r, other)
    while g > 1:
        r //= g
        g = math.gcd(r, g)
    return r


def primitive_part(seq: IntSeqPrefix, n: int, convention=Convention.PLAIN) -> int:
    """The largest divisor of ``|a_n|`` coprime to every earlier nonzero term."""
    convention = Convention(convention)
    if not 0 <= n < len(seq):
        raise BadIndex(f"index {n} outside the prefix of length {len(seq)}")
    r = abs(seq.terms[n])
    if r == 0:
        raise BadArgument(f"term {n} is zero")
    for m in range(n):
        if r == 1:
            break
        if seq.terms[m] != 0:
            r = _strip_common(r, seq.terms[m])
    if convention is Convention.CARMICHAEL:
        if seq.discriminant is None:
            raise BadArgument(f"sequence {seq.label!r} has no discriminant for the Carmichael convention")
        r = _strip_common(r, seq.discriminant)
    return r


def primitive_primes(seq: IntSeqPrefix, n: int, convention=Convention.PLAIN) -> List[int]:
    r = primitive_part(seq, n, convention)
    return sorted(set(factorize(r))) if r > 1 else []


@dataclass(frozen=True)
class IndexAnalysis:
    index: int
    term: int
    prime_factors: Tuple[int, ...]
    primitive_primes: Tuple[int, ...]
    in_z: bool
    zero_term: bool
    unfactored: Tuple[int, ...] = ()

    def to_dict(self):
        return {
            "index": self.index,
            "term": str(self.term),
            "prime_factors": [str(p) for p in self.prime_factors],
            "primitive_primes": [str(p) for p in self.primitive_primes],
            "in_z": self.in_z,
            "zero_term": self.zero_term,
            "unfactored": [str(c) for c in self.unfactored],
        }


@dataclass(frozen=True)
class ZsigmondyReport:
    bound: int
    per_index: Tuple[IndexAnalysis, ...]
    label: str = ""
    convention: Convention = Convention.PLAIN

    @property
    def z_set(self) -> List[int]:
        return [a.index for a in self.per_index if a.in_z]

    def to_dict(self):
        return {
            "label": self.label,
            "bound": self.bound,
            "convention": self.convention.value,
            "z_set": self.z_set,
            "per_index": [a.to_dict() for a in self.per_index],
        }


def zsigmondy_set(
    seq: IntSeqPrefix, bound: int, convention=Convention.PLAIN, factor_budget: int = RHO_ITERATIONS
) -> ZsigmondyReport:
    convention = Convention(convention)
    if not 0 <= bound < len(seq):
        raise BadIndex(f"bound {bound} needs a prefix longer than {len(seq)}")
    rows = []
    known_primes: Dict[int, None] = {}
    for n in range(bound + 1):
        t = seq.terms[n]
        if t == 0:
            rows.append(IndexAnalysis(n, t, (), (), False, True))
            continue
        prim = primitive_part(seq, n, convention)
        # The non-primitive part only holds primes seen earlier (or of D).
        shared = abs(t) // prim
        shared_primes = []
        for p in known_primes:
            if shared % p == 0:
                shared_primes.append(p)
                while shared % p == 0:
                    shared //= p
        pf_shared = partial_factor(shared, factor_budget)
        pf_prim = partial_factor(prim, factor_budget)
        primitive = sorted(set(pf_prim.primes))
        factors = sorted(set(shared_primes) | set(pf_shared.primes) | set(primitive))
        for p in factors:
            known_primes.setdefault(p)
        rows.append(
            IndexAnalysis(
                n,
                t,
                tuple(factors),
                tuple(primitive),
                prim == 1,
                False,
                pf_shared.unfactored + pf_prim.unfactored,
            )
        )
    return ZsigmondyReport(bound, tuple(rows), seq.label, convention)


@dataclass(frozen=True)
class HighZConstruction:
    k: int
    N: int
    r: int
    a: Fraction
    b: Fraction
    sigma0_r: int

    def params(self) -> KflParams:
        return KflParams(self.k, self.a, self.b)

    def to_dict(self):
        return {
            "k": self.k,
            "N": self.N,
            "r": self.r,
            "a": str(self.a),
            "b": str(self.b),
            "sigma0_r": self.sigma0_r,
        }


def piecewise_value(k: int, r: int, n: int) -> int:
    """``(-1)^(r+1-n) F[k, r-n]`` for ``n <= r`` and ``F[k, n-r]`` beyond."""
    if n <= r:
        f = int(kfib_terms(k, r - n)[r - n])
        return -f if (r + 1 - n) % 2 else f
    return int(kfib_terms(k, n - r)[n - r])


def _check_piecewise(c: HighZConstruction, terms: Sequence[Fraction]) -> List[int]:
    return [n for n in range(2 * c.r + 1) if terms[n] != piecewise_value(c.k, c.r, n)]


def construct_high_z(k: int, N: int, r: Optional[int] = None) -> HighZConstruction:
    """Parameters ``(a, b)`` whose k-FL sequence has ``|Z| >= N``.

    The sequence is the k-Fibonacci sequence shifted right by ``r`` and extended
    backward, so every divisor ``d`` of ``r`` puts ``r - d`` and ``r + d`` on terms
    equal to ``+-F[k, d]``. ``r`` defaults to the least value with enough divisors.
    """
    if k < 1 or N < 1:
        raise BadArgument(f"construction needs k >= 1 and N >= 1, got k={k}, N={N}")
    need = N // 2 + 1
    if r is None:
        r = 1
        while sigma0(r) < need:
            r += 1
    elif r < 1 or sigma0(r) < need:
        raise BadArgument(f"r = {r} has fewer than {need} divisors")
    F = kfib_terms(k, r)
    sign = -1 if r % 2 else 1
    a = sign * (F[r - 1] + k * F[r] / 2)
    b = -sign * F[r] / 2
    c = HighZConstruction(k, N, r, a, b, sigma0(r))
    terms = kfl_terms(c.params(), 2 * r)
    if any(t.denominator != 1 for t in terms):
        raise InternalInconsistency(f"non-integer term in construction {c}")
    bad = _check_piecewise(c, terms)
    if bad:
        raise InternalInconsistency(f"piecewise law fails at n = {bad} for {c}")
    return c


@dataclass(frozen=True)
class HighZVerification:
    construction: HighZConstruction
    report: ZsigmondyReport
    predicted: Tuple[int, ...]
    landed: Tuple[int, ...]
    missed: Tuple[int, ...]
    piecewise_ok: bool

    @property
    def z_count(self) -> int:
        return len(self.report.z_set)

    @property
    def passed(self) -> bool:
        return self.z_count >= self.construction.N and self.piecewise_ok

    def to_dict(self):
        notes = []
        if 0 in self.missed:
            notes.append(
                "index 0 (d = r) has no earlier terms, so it is in Z only when |S_0| <= 1"
            )
        return {
            "construction": self.construction.to_dict(),
            "z_count": self.z_count,
            "required": self.construction.N,
            "passed": self.passed,
            "piecewise_ok": self.piecewise_ok,
            "predicted": list(self.predicted),
            "landed": list(self.landed),
            "missed": list(self.missed),
            "notes": notes,
            "report": self.report.to_dict(),
        }


def verify_high_z(c: HighZConstruction, bound: Optional[int] = None) -> HighZVerification:
    if bound is None:
        bound = 2 * c.r
    if bound < 2 * c.r:
        raise BadIndex(f"bound {bound} is below 2r = {2 * c.r}")
    terms = kfl_terms(c.params(), bound)
    seq = IntSeqPrefix.from_rationals(terms, f"construct:k={c.k},r={c.r}")
    report = zsigmondy_set(seq, bound)
    ds = divisors(c.r)
    predicted = sorted({c.r - d for d in ds} | {c.r + d for d in ds})
    z = set(report.z_set)
    landed = tuple(i for i in predicted if i in z)
    missed = tuple(i for i in predicted if i not in z)
    result = HighZVerification(
        c, report, tuple(predicted), landed, missed, not _check_piecewise(c, terms)
    )
    if not result.passed:
        raise ConstructionFailure(
            f"|Z| = {result.z_count} < N = {c.N} for {c}", report=result
        )
    return result
