"""Exact arithmetic for k-Fibonacci, k-Lucas and generalized k-FL sequences.

Submodules:

* ``exact``: rationals and the quadratic field Q(sqrt(D))
* ``sequences``: terms, seeds and Binet evaluation
* ``identities``: closed-form identity checks
* ``polyfam``: the polynomial families f, g, F, G, P, Q and exceptional sets
* ``circulant``: skew-circulant and circulant matrices
* ``singular``: singular pairs and rank scans
* ``zsigmondy``: primitive prime divisors and Zsigmondy sets
* ``cli``: the ``kfl`` command
"""

from .errors import KflError
from .exact import BigRat, QuadExt, parse_rat
from .sequences import KflParams, SeqKind, binet_eval, gen_prefix

__version__ = "0.1.0"

__all__ = [
    "BigRat",
    "KflError",
    "KflParams",
    "QuadExt",
    "SeqKind",
    "binet_eval",
    "gen_prefix",
    "parse_rat",
]
