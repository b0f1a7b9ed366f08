from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qglk.poly import Monomial, Poly


def small_polys(nvars=3, max_terms=5):
    exps = st.tuples(*([st.integers(-3, 3)] * nvars))
    return st.dictionaries(exps, st.integers(-9, 9), max_size=max_terms).map(
        lambda d: Poly(nvars, d)
    )


class TestBasics:
    def test_zero_terms_dropped(self):
        p = Poly(2, {(1, 0): 0, (0, 1): 3})
        assert p.terms == {(0, 1): 3}

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            Poly(2, {(1, 2, 3): 1})

    def test_constructors(self):
        assert Poly.x(3, 1) * Poly.x(3, 2) == Poly(3, {(1, 1, 0): 1})
        assert Poly.q(3, -2) == Poly(3, {(0, 0, -2): 1})
        assert Poly.one(2).is_one()
        with pytest.raises(ValueError):
            Poly.x(3, 3)  # last slot is q, not an x variable

    def test_str(self):
        p = Poly.x(2, 1) ** 2 - 3 * Poly.q(2) + Poly.one(2)
        assert str(p) == "x1^2 - 3*q + 1"
        assert str(Poly.zero(2)) == "0"
        assert str(Poly.monomial(2, (-1, 0))) == "x1^-1"


class TestArithmetic:
    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + Poly.zero(3) == a
        assert a * Poly.one(3) == a
        assert a - a == Poly.zero(3)

    def test_pow(self):
        x = Poly.x(2, 1)
        assert (x + Poly.one(2)) ** 3 == Poly(
            2, {(3, 0): 1, (2, 0): 3, (1, 0): 3, (0, 0): 1}
        )
        assert (x ** 0).is_one()

    @given(small_polys(), small_polys())
    @settings(max_examples=40, deadline=None)
    def test_evaluate_is_homomorphism(self, a, b):
        pt = (Fraction(3, 2), Fraction(-5, 7), Fraction(2, 3))
        assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
        assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


class TestUnitsAndDivision:
    def test_extract_unit(self):
        p = Poly(2, {(-1, 2): -6, (0, 2): -4})
        canon, shift, sign, content = p.extract_unit()
        assert shift == (-1, 2)
        assert sign == -1
        assert content == 2
        assert canon == Poly(2, {(0, 0): 3, (1, 0): 2})
        rebuilt = canon.shift_exps(shift) * (sign * content)
        assert rebuilt == p

    def test_extract_unit_monomial(self):
        canon, shift, sign, content = Poly.monomial(2, (2, -1), -5).extract_unit()
        assert canon.is_one() and shift == (2, -1) and sign == -1 and content == 5

    @given(small_polys(), small_polys())
    @settings(max_examples=80, deadline=None)
    def test_exact_div_roundtrip(self, a, b):
        if b.is_zero():
            return
        q = (a * b).exact_div(b)
        assert q is not None
        assert q == a

    def test_exact_div_failure(self):
        x, q = Poly.x(2, 1), Poly.q(2)
        assert (x + q).exact_div(x - q) is None
        assert (2 * x).exact_div(Poly.const(2, 3)) is None

    def test_exact_div_laurent(self):
        # monomial units never obstruct division in the Laurent ring
        x = Poly.x(2, 1)
        p = Poly.one(2) - Poly.monomial(2, (-1, 2))
        assert (p * x).exact_div(p) == x
        assert Poly.one(2).exact_div(x) == Poly.monomial(2, (-1, 0))

    def test_content(self):
        assert (6 * Poly.x(2, 1) + 4 * Poly.q(2)).content() == 2
        assert Poly.zero(2).content() == 0


class TestMonomial:
    def test_roundtrip(self):
        m = Monomial((1, -2), 3)
        assert Monomial.from_exps(m.exps()) == m
        assert m.mul(m.inverse()).is_trivial()
        assert m.power(2) == Monomial((2, -4), 6)
        assert m.to_poly(-2) == Poly(3, {(1, -2, 3): -2})
