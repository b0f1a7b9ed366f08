from math import comb

import pytest

from qglk.grassmann import (
    Character,
    NonIsolatedFixedPointError,
    Space,
    det_tau_restrict,
    euler_class_rf,
    fixed_points,
    hom_fiber,
    schur_rectangular,
    tangent_gr,
    weight_monomial,
)
from qglk.poly import Monomial, Poly
from qglk.ratfunc import RationalFunction, parse


class TestCharacter:
    def test_multiset_arithmetic(self):
        w1 = weight_monomial(2, (1,), (2,))
        w2 = weight_monomial(2, (2,), (1,))
        a = Character.from_monomials([w1, w1, w2])
        assert a.rank() == 3
        assert (a - Character.line(w1)).weights == {w1: 1, w2: 1}
        assert (a - a).rank() == 0
        virt = Character.line(w1) - Character.line(w2)
        assert not virt.is_genuine()
        with pytest.raises(ValueError):
            virt.monomial_list()

    def test_tensor_and_dual(self):
        w1 = weight_monomial(2, (1,))
        w2 = weight_monomial(2, (2,))
        v = Character.from_monomials([w1, w2])
        sq = v * v
        assert sq.rank() == 4
        assert sq.weights[w1.mul(w2)] == 2
        assert v.dual().weights == {w1.inverse(): 1, w2.inverse(): 1}

    def test_det_and_exterior(self):
        ws = [weight_monomial(3, (i,)) for i in (1, 2, 3)]
        v = Character.from_monomials(ws)
        assert v.det() == weight_monomial(3, (1, 2, 3))
        e2 = v.exterior_power(2)
        assert e2.rank() == 3
        assert e2.weights[weight_monomial(3, (1, 2))] == 1
        assert v.exterior_power(0).rank() == 1
        assert v.exterior_power(3) == Character.line(v.det())
        allp = v.all_exterior_powers()
        assert [c.rank() for c in allp] == [comb(3, j) for j in range(4)]


class TestTangentData:
    def test_fixed_points_lex(self):
        assert fixed_points(3, 2) == [(1, 2), (1, 3), (2, 3)]
        assert fixed_points(2, 0) == [()]
        assert fixed_points(2, 3) == []
        assert fixed_points(2, -1) == []

    def test_tangent_gr(self):
        t = tangent_gr(3, (1,))
        assert t.rank() == 2
        assert t.weights[weight_monomial(3, (2,), (1,))] == 1
        assert t.weights[weight_monomial(3, (3,), (1,))] == 1

    def test_hom_fiber_has_weight_two_scaling(self):
        f = hom_fiber(2, (1,))
        assert f.rank() == 2
        assert f.weights[weight_monomial(2, (), (), 2)] == 1  # x1/x1 * q^2
        assert f.weights[weight_monomial(2, (1,), (2,), 2)] == 1

    def test_tangent_dimensions(self):
        sp = Space(4, 2, with_fiber=True)
        for S in sp.points:
            assert sp.tangent(S).rank() == 2 * 2 + 2 * 4
        base = Space(4, 2, with_fiber=False)
        for S in base.points:
            assert base.tangent(S).rank() == 4


class TestEulerClasses:
    def test_single_weight(self):
        c = Character.line(weight_monomial(1, (1,), (), 2))  # q^2 x1
        e = euler_class_rf(c, 2)
        assert e == parse("1 - q^-2*x1^-1", 2)

    def test_invert_builds_factored_denominator(self):
        c = Character.from_monomials(
            [weight_monomial(2, (1,), (2,)), weight_monomial(2, (2,), (1,))]
        )
        inv = euler_class_rf(c, 3, invert=True)
        assert inv.num.is_monomial()
        assert len(inv.den_factors) >= 1
        direct = euler_class_rf(c, 3)
        assert inv * direct == RationalFunction.one(3)

    def test_virtual_character_divides(self):
        a = Character.line(weight_monomial(1, (1,)))
        b = Character.line(weight_monomial(1, (1,), (), 2))
        e = euler_class_rf(a - b, 2)
        assert e == parse("(1 - x1^-1)/(1 - q^-2*x1^-1)", 2)

    def test_trivial_weight_rejected(self):
        with pytest.raises(NonIsolatedFixedPointError):
            euler_class_rf(Character.line(Monomial((0,), 0)), 2)


class TestPushforwards:
    def test_p1_structure_sheaf(self):
        # chi(P^1, O) = 1
        sp = Space(2, 1, with_fiber=False)
        assert sp.pushforward_det_tau_power(0) == RationalFunction.one(3)

    def test_p1_tautological(self):
        # chi(P^1, O(-1)) = 0
        sp = Space(2, 1, with_fiber=False)
        assert sp.pushforward_det_tau_power(1).is_zero()

    def test_p1_canonical(self):
        # chi(P^1, O(-2)) = -x1*x2 by Serre duality
        sp = Space(2, 1, with_fiber=False)
        expected = -RationalFunction.x(3, 1) * RationalFunction.x(3, 2)
        assert sp.pushforward_det_tau_power(2) == expected

    @pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (6, 3)])
    def test_structure_sheaf_all_grassmannians(self, n, k):
        sp = Space(n, k, with_fiber=False)
        assert sp.pushforward_det_tau_power(0) == RationalFunction.one(n + 1)

    @pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 2)])
    @pytest.mark.parametrize("m", [-3, -2, -1, 1, 2, 3])
    def test_det_tau_powers_are_laurent(self, n, k, m):
        sp = Space(n, k, with_fiber=False)
        val = sp.pushforward_det_tau_power(m)
        assert val.is_polynomial(), f"n={n} k={k} m={m}: {val}"

    @pytest.mark.parametrize("n,k,m", [(2, 1, 1), (3, 1, 2), (3, 2, 1), (4, 2, 2)])
    def test_dual_det_powers_match_schur_oracle(self, n, k, m):
        # chi(Gr, (det tau^dual)^m) = s_{(m^k)} in the inverted variables
        sp = Space(n, k, with_fiber=False)
        val = sp.pushforward_det_tau_power(-m)
        oracle = schur_rectangular(n, k, m)
        inverted = Poly(n + 1, {tuple(-e for e in ex): c for ex, c in oracle.terms.items()})
        assert val == RationalFunction.from_poly(inverted)

    def test_det_tau_restrict(self):
        assert det_tau_restrict(3, (1, 3), 2) == Monomial((2, 0, 2), 0)
        assert det_tau_restrict(3, (), 5) == Monomial((0, 0, 0), 0)


class TestSchurOracle:
    def test_known_values(self):
        # s_(1)(x1,x2) = x1 + x2
        assert schur_rectangular(2, 1, 1) == Poly.x(3, 1) + Poly.x(3, 2)
        # s_(1,1)(x1,x2) = x1*x2
        assert schur_rectangular(2, 2, 1) == Poly.x(3, 1) * Poly.x(3, 2)
        # s_(2)(x1,x2) = x1^2 + x1 x2 + x2^2
        expect = Poly(3, {(2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1})
        assert schur_rectangular(2, 1, 2) == expect
        assert schur_rectangular(3, 0, 2).is_one()
        assert schur_rectangular(2, 3, 1).is_zero()

    def test_dimension_count(self):
        # number of SSYT of the 2x2 rectangle with entries in [3] is 6
        val = schur_rectangular(3, 2, 2)
        assert sum(val.terms.values()) == 6
