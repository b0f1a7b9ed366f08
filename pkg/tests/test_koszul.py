from itertools import combinations

import pytest

from qglk.grassmann import Character, euler_class_rf
from qglk.koszul import (
    GradedComplex,
    cone_class,
    d_of,
    generalized_koszul,
    generic_bundle_data,
    iterated_cone_classes,
    iterated_cone_report,
    koszul_complex,
    proposition_check,
    proposition_source,
)
from qglk.poly import Monomial
from qglk.ratfunc import RationalFunction


def mono(n_x, q_exp=0, **xs):
    exps = [0] * n_x
    for name, e in xs.items():
        exps[int(name[1:]) - 1] = e
    return Monomial(tuple(exps), q_exp)


class TestDOf:
    def test_examples(self):
        assert d_of({1, 2}, 3) == 2
        assert d_of(set(), 7) == 0
        assert d_of({2, 5}, 4) == 1
        assert d_of({1, 2, 3}, 0) == 0


class TestGradedComplex:
    def test_merge_and_shift(self):
        w = mono(1, x1=1)
        a = GradedComplex({0: Character.line(w)})
        b = a.shift(2)
        assert b.degrees() == [-2]
        assert a.shift(1).shift(1) == a.shift(2)
        merged = a.merge(a)
        assert merged.term(0).weights == {w: 2}

    def test_shift_sign(self):
        w = mono(1, x1=1)
        a = GradedComplex({0: Character.line(w), -1: Character.line(w.power(2))})
        assert a.shift(1).total_class() == -a.total_class()
        assert a.shift(3).total_class() == a.shift(1).shift(2).total_class()

    def test_cone_of_identity_map_has_zero_class(self):
        a = GradedComplex({0: Character.line(mono(1, x1=1))})
        assert cone_class(a, a).total_class() == Character.zero()

    def test_q_twist_folding(self):
        w = mono(1, x1=-1)
        c = GradedComplex.from_triples([(-1, 2, Character.line(w))])
        assert c.term(-1).weights == {mono(1, q_exp=2, x1=-1): 1}


class TestKoszulComplex:
    def test_rank_one(self):
        w = mono(1, x1=1)
        c = koszul_complex(Character.line(w))
        assert c.degrees() == [-1, 0]
        assert c.term(0).weights == {mono(1): 1}
        assert c.term(-1).weights == {w.inverse(): 1}

    def test_rank_two_top_term(self):
        V = Character.from_monomials([mono(2, x1=1), mono(2, x2=1)])
        c = koszul_complex(V)
        assert c.term(-2).weights == {mono(2, x1=-1, x2=-1): 1}
        assert c.term(-1).rank() == 2

    @pytest.mark.parametrize("qw", [0, 2])
    def test_total_class_is_euler_class(self, qw):
        V = Character.from_monomials(
            [mono(3, x1=1), mono(3, x2=1), mono(3, x3=1, q_exp=1)]
        )
        c = koszul_complex(V, section_q_weight=qw)
        nvars = 4
        # twisting every weight down by q^qw matches the per-term q^(qw j)
        shifted = V.twist(mono(3, q_exp=-qw))
        total = RationalFunction.from_poly(c.total_class_poly(nvars))
        assert total == euler_class_rf(shifted, nvars)


class TestGeneralizedKoszul:
    def test_empty_index_set_is_plain(self):
        V, L = generic_bundle_data(3)
        assert generalized_koszul([], L, V) == koszul_complex(V)

    def test_full_index_set_twists_by_line(self):
        V, L = generic_bundle_data(3)
        VL = Character({w.mul(L): m for w, m in V.items()})
        assert generalized_koszul([1, 2, 3], L, V) == koszul_complex(VL)
        assert generalized_koszul([1, 2, 3], L, V, 2) == koszul_complex(VL, 2)

    def test_middle_index_set(self):
        V, L = generic_bundle_data(2)
        c = generalized_koszul({2}, L, V)
        plain = koszul_complex(V)
        assert c.term(0) == plain.term(0)
        assert c.term(-1) == plain.term(-1)
        assert c.term(-2) == plain.term(-2).twist(L.inverse())


class TestProposition:
    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    @pytest.mark.parametrize("qw", [0, 2])
    def test_all_valid_moves(self, rank, qw):
        V, L = generic_bundle_data(rank)
        universe = range(1, rank + 1)
        for size in range(rank + 1):
            for I in combinations(universe, size):
                for i in I:
                    if i + 1 in I:
                        continue
                    ok, lhs, rhs = proposition_check(I, i, L, V, qw)
                    assert ok, f"I={I} i={i}: {lhs} != {rhs}"

    def test_invalid_moves_rejected(self):
        V, L = generic_bundle_data(3)
        with pytest.raises(ValueError):
            proposition_source([1, 2], 3, L, V)
        with pytest.raises(ValueError):
            proposition_source([1, 2], 1, L, V)

    def test_source_terms(self):
        V, L = generic_bundle_data(2)
        src = proposition_source([1], 1, L, V)
        # d(1) = 1: degree -1 holds Lambda^1 V^dual (L^dual), degree 0 the untwisted copy
        assert src.degrees() == [-1, 0]
        assert src.term(-1) == V.dual().exterior_power(1).twist(L.inverse())
        assert src.term(0) == V.dual().exterior_power(1)


class TestIteratedCones:
    @pytest.mark.parametrize("N", [1, 2, 3, 4])
    @pytest.mark.parametrize("qw", [0, 2])
    def test_both_routes_all_k(self, N, qw):
        V, L = generic_bundle_data(N)
        for k in range(N + 1):
            res = iterated_cone_classes(N, k, L, V, qw)
            assert res.minus_matches(), f"N={N} k={k} qw={qw} descending"
            assert res.plus_matches(), f"N={N} k={k} qw={qw} ascending"

    def test_degenerate_ends(self):
        V, L = generic_bundle_data(3)
        res = iterated_cone_classes(3, 3, L, V)
        assert res.plus_indices == []  # nothing to inject when the target is plain
        assert len(res.minus_indices) == 6
        res = iterated_cone_classes(3, 0, L, V)
        assert res.minus_indices == []  # seed already equals the target
        assert len(res.plus_indices) == 6

    def test_index_ranges(self):
        V, L = generic_bundle_data(4)
        res = iterated_cone_classes(4, 2, L, V)
        k, N = 2, 4
        assert res.minus_indices == [
            (a, p) for a in range(1, k + 1) for p in range(N - k + a, N + 1)
        ]
        P = N - k
        assert res.plus_indices == [
            (a, j) for a in range(1, P + 1) for j in range(1, P - a + 2)
        ]

    def test_report(self):
        rep = iterated_cone_report(3, 1)
        assert rep.passed
        assert any("descending indices" in n for n in rep.notes)

    def test_bad_arguments(self):
        V, L = generic_bundle_data(2)
        with pytest.raises(ValueError):
            iterated_cone_classes(2, 5, L, V)
        with pytest.raises(ValueError):
            iterated_cone_classes(3, 1, L, V)  # rank mismatch
