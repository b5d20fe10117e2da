from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rationals
from kfl.errors import BadArgument, DivisionByZero, RadicandMismatch
from kfl.exact import (
    QuadExt,
    is_canonical,
    parse_rat,
    qx_arith,
    qx_is_rational,
    rat,
    rat_arith,
    rat_str,
    rational_sqrt,
)


def test_rat_arith_examples():
    assert rat_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rat_arith("mul", 0, Fraction(7, 3)) == 0
    with pytest.raises(DivisionByZero):
        rat_arith("div", 1, 0)
    with pytest.raises(BadArgument):
        rat_arith("pow", 1, 2)


@pytest.mark.parametrize(
    "text,value",
    [("3/4", Fraction(3, 4)), ("-6/8", Fraction(-3, 4)), ("7", Fraction(7)), ("+2/1", Fraction(2))],
)
def test_parse_rat_accepts_fractions_and_integers(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/", "/2", "abc", "1/-2", "", "1e3"])
def test_parse_rat_rejects_malformed(text):
    with pytest.raises(BadArgument):
        parse_rat(text)


def test_parse_rat_zero_denominator():
    with pytest.raises(DivisionByZero):
        parse_rat("3/0")


def test_rat_rejects_bool_and_float():
    with pytest.raises(BadArgument):
        rat(True)
    with pytest.raises(BadArgument):
        rat(0.5)


def test_rat_str_omits_unit_denominator():
    assert rat_str(Fraction(4, 2)) == "2"
    assert rat_str(Fraction(-3, 6)) == "-1/2"


@given(rationals(), rationals(), rationals())
def test_field_axioms(u, v, w):
    assert rat_arith("add", rat_arith("add", u, v), w) == rat_arith("add", u, rat_arith("add", v, w))
    assert rat_arith("mul", u, rat_arith("add", v, w)) == u * v + u * w
    for op in ("add", "sub", "mul"):
        assert is_canonical(rat_arith(op, u, v))


@given(rationals(), rationals(nonzero=True))
def test_division_matches_sympy(u, v):
    got = rat_arith("div", u, v)
    ref = sympy.Rational(u.numerator, u.denominator) / sympy.Rational(v.numerator, v.denominator)
    assert (got.numerator, got.denominator) == (ref.p, ref.q)


def test_quadext_examples():
    r5 = QuadExt.sqrt_of(5)
    prod = qx_arith("mul", 1 + r5, 1 - r5)
    assert (prod.rational, prod.radical) == (-4, 0)
    sq = qx_arith("mul", r5, r5)
    assert (sq.rational, sq.radical) == (5, 0)
    with pytest.raises(RadicandMismatch):
        qx_arith("add", r5, QuadExt.sqrt_of(8))


def test_qx_is_rational_examples():
    assert qx_is_rational(QuadExt(Fraction(3, 2), 0, 5)) == Fraction(3, 2)
    assert qx_is_rational(QuadExt(1, 2, Fraction(25, 4))) == 6
    assert qx_is_rational(QuadExt(1, 1, 5)) is None


def test_square_radicand_is_not_collapsed_by_arithmetic():
    u = QuadExt(1, 2, Fraction(25, 4)) * QuadExt(0, 1, Fraction(25, 4))
    assert u.radical != 0
    assert u == QuadExt.of(15, Fraction(25, 4))
    assert hash(u) == hash(QuadExt.of(15, Fraction(25, 4)))


@given(rationals(), rationals(), st.integers(1, 40))
def test_conjugate_product_is_norm(x, y, d):
    u = QuadExt(x, y, d)
    p = u * u.conjugate()
    assert p.radical == 0
    assert p.rational == x * x - d * y * y == u.norm()


@given(rationals(5), rationals(5), rationals(5), rationals(5), st.integers(2, 30))
def test_quadext_product_matches_sympy(x1, y1, x2, y2, d):
    if sympy.sqrt(d).is_Rational:
        return
    got = QuadExt(x1, y1, d) * QuadExt(x2, y2, d)
    S = lambda f: sympy.Rational(f.numerator, f.denominator)
    ref = sympy.expand((S(x1) + S(y1) * sympy.sqrt(d)) * (S(x2) + S(y2) * sympy.sqrt(d)))
    assert sympy.simplify(ref - (S(got.rational) + S(got.radical) * sympy.sqrt(d))) == 0


@given(rationals(50))
def test_rational_sqrt(q):
    s = rational_sqrt(q)
    if s is None:
        assert q < 0 or not sympy.sqrt(sympy.Rational(q.numerator, q.denominator)).is_Rational
    else:
        assert s >= 0 and s * s == q


def test_quadext_power_by_squaring():
    phi = (QuadExt.sqrt_of(5) + 1) * Fraction(1, 2)
    # phi^10 = (L_10 + F_10 sqrt 5) / 2 = (123 + 55 sqrt 5)/2
    p = phi ** 10
    assert (p.rational, p.radical) == (Fraction(123, 2), Fraction(55, 2))
    assert phi ** 0 == 1
    with pytest.raises(BadArgument):
        phi ** -1
