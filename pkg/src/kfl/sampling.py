"""Reproducible rational sampling for parameter scans.

The generator is the 64-bit LCG ``x -> (A*x + C) mod 2^64`` with Knuth's MMIX
constants. Each draw keeps the top 24 bits, so a sample on ``[lo, hi)`` is
``lo + (hi - lo) * (x >> 40) / 2^24``, an exact rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, List

from .errors import BadArgument
from .exact import RatLike, parse_rat, rat

LCG_A = 6364136223846793005
LCG_C = 1442695040888963407
_MASK = (1 << 64) - 1
_TOP_BITS = 24


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (LCG_A * self.state + LCG_C) & _MASK
        return self.state

    def unit(self) -> Fraction:
        """A dyadic rational in ``[0, 1)``."""
        return Fraction(self.next_u64() >> (64 - _TOP_BITS), 1 << _TOP_BITS)

    def uniform(self, lo: Fraction, hi: Fraction) -> Fraction:
        return lo + (hi - lo) * self.unit()

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.next_u64()


def grid_sample(lo: RatLike, hi: RatLike, count: int, seed: int) -> List[Fraction]:
    lo, hi = rat(lo), rat(hi)
    if count < 0:
        raise BadArgument(f"count must be nonnegative, got {count}")
    if hi < lo:
        raise BadArgument(f"empty range [{lo}, {hi}]")
    gen = Lcg64(seed)
    return [gen.uniform(lo, hi) for _ in range(count)]


def parse_grid(spec: str):
    """Parse ``lo:hi:count``; lo and hi are rational strings."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise BadArgument(f"grid must be lo:hi:count, got {spec!r}")
    lo, hi = parse_rat(parts[0]), parse_rat(parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise BadArgument(f"grid count must be an integer, got {parts[2]!r}") from None
    return lo, hi, count
