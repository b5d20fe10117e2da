from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rationals
from kfl.circulant import (
    MatrixKind,
    Verdict,
    bareiss_det,
    bareiss_rank,
    build,
    det_cofactor,
    det_exact,
    rank_exact,
    spectral_check,
    spectral_values,
    theorem_verdict,
)
from kfl.errors import BadArgument, BadIndex, ZeroK
from kfl.sequences import KflParams
from kfl.singular import singular_pair


def sym(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.rows()])


def test_build_examples(classic):
    assert build("circ", classic, 3).first_row == (2, 4, 6)
    assert build("skew", classic, 3).rows() == [[2, 4, 6], [-6, 2, 4], [-4, -6, 2]]
    assert build("circ", classic, 3).rows() == [[2, 4, 6], [6, 2, 4], [4, 6, 2]]
    for kind in ("skew", "circ"):
        zero = build(kind, KflParams(Fraction(7, 3)), 4)
        assert all(x == 0 for row in zero.rows() for x in row)
        assert det_exact(zero) == 0 and rank_exact(zero) == 0
    with pytest.raises(BadIndex):
        build("circ", classic, 0)
    with pytest.raises(BadArgument):
        build("band", classic, 3)


def test_det_examples(classic):
    assert det_exact(build("circ", classic, 3)) == 144
    assert det_exact(build("skew", classic, 3)) == 304
    assert det_exact(build("circ", classic, 1)) == 2


def test_rank_of_type1_pair():
    m = build("skew", KflParams(2, Fraction(-27, 25), Fraction(54, 125)), 3)
    assert rank_exact(m) == 2
    assert det_exact(m) == 0


def test_bareiss_handles_zero_pivots():
    a = [[0, 2, 1], [0, 0, 3], [4, 1, 1]]
    assert bareiss_det(a) == 24
    assert bareiss_rank([[0, 0], [0, 5]]) == 1
    assert bareiss_rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert bareiss_det([]) == 1


int_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(int_matrices)
def test_bareiss_matches_sympy(a):
    M = sympy.Matrix(a)
    assert bareiss_det(a) == M.det()
    assert bareiss_rank(a) == M.rank()


@given(st.sampled_from(["skew", "circ"]), rationals(), rationals(), rationals(), st.integers(1, 4))
def test_det_matches_cofactor_and_sympy(kind, k, a, b, n):
    m = build(kind, KflParams(k, a, b), n)
    d = det_exact(m)
    assert d == det_cofactor(m.rows()) == sym(m).det()
    assert rank_exact(m) == sym(m).rank()


def test_verdict_examples(classic):
    v = theorem_verdict(build("circ", classic, 3))
    assert v.verdict is Verdict.INVERTIBLE
    pair = singular_pair(1, 3, 2)
    assert theorem_verdict(build("skew", pair.params(), 3)).verdict is Verdict.SINGULAR
    assert theorem_verdict(build("skew", classic, 2)).verdict is Verdict.INVERTIBLE
    with pytest.raises(ZeroK):
        theorem_verdict(build("circ", KflParams(0, 1, 1), 3))


def test_skew_even_can_be_inconclusive():
    # k = b = 1, a = 0: S3 - S2 = 1 = -bk + 2b - a, yet the matrix is invertible.
    p = KflParams(1, 0, 1)
    m = build("skew", p, 2)
    assert theorem_verdict(m).verdict is Verdict.INCONCLUSIVE
    assert det_exact(m) != 0


@given(
    st.sampled_from(list(MatrixKind)),
    rationals(nonzero=True),
    rationals(),
    rationals(),
    st.integers(1, 8),
)
def test_verdict_agrees_with_det(kind, k, a, b, n):
    m = build(kind, KflParams(k, a, b), n)
    v = theorem_verdict(m).verdict
    d = det_exact(m)
    if v is Verdict.INVERTIBLE:
        assert d != 0
    elif v is Verdict.SINGULAR:
        assert d == 0


@pytest.mark.parametrize("kind,n,t", [("skew", 3, 1), ("skew", 5, 1), ("circ", 3, 3), ("circ", 4, 2), ("circ", 4, 3)])
def test_singular_verdicts_on_pairs(kind, n, t):
    for k in (Fraction(2), Fraction(-3, 2), Fraction(5, 7)):
        m = build(kind, singular_pair(t, n, k).params(), n)
        assert theorem_verdict(m).verdict is Verdict.SINGULAR
        assert det_exact(m) == 0


def test_spectral_check(classic):
    assert spectral_check(build("circ", classic, 3))
    assert not spectral_check(build("skew", KflParams(3), 3))
    with pytest.raises(BadArgument):
        spectral_check(build("circ", classic, 3), tol=0)


@given(st.sampled_from(["skew", "circ"]), rationals(5), rationals(5), rationals(5), st.integers(1, 6))
def test_spectral_product_approximates_det(kind, k, a, b, n):
    m = build(kind, KflParams(k, a, b), n)
    prod = complex(1)
    for z in spectral_values(m):
        prod *= z
    d = float(det_exact(m))
    assert abs(prod.real - d) <= 1e-6 * max(1.0, abs(d))
    assert abs(prod.imag) <= 1e-6 * max(1.0, abs(d))
