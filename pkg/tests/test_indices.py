import pytest
from mpmath import mp

from esombor.enumeration import EnumerationConfig, enumerate_chemical_trees
from esombor.errors import OrderTooSmallError
from esombor.indices import (
    check_structural_identities,
    coefficient_table,
    exp_reduced_sombor,
    exp_reduced_sombor_decomposed,
    exp_reduced_sombor_float,
    f,
    reduced_sombor,
)
from esombor.scalars import agreement_digits
from esombor.trees import EDGE_TYPES, edge_type_counts, tree_from_edge_list

from conftest import mp_f


class TestF:
    def test_f11_is_one(self):
        s = f(1, 1, 30)
        assert s.midpoint == 1 and s.radius == 0

    def test_f14_value(self):
        # e^3, frozen from the independent mp oracle
        assert f(1, 4, 50).midpoint_str(25) == "20.08553692318766774092853"

    def test_f44_value(self):
        # e^(3*sqrt(2))
        assert f(4, 4, 50).midpoint_str(25) == "69.59137847064172561269462"

    @pytest.mark.parametrize("x,y", EDGE_TYPES)
    def test_against_mp_oracle(self, x, y):
        s = f(x, y, 40)
        truth = mp_f(x, y, 60)
        assert s.lo <= truth <= s.hi

    def test_symmetry(self):
        for x in range(1, 5):
            for y in range(1, 5):
                a, b = f(x, y, 30), f(y, x, 30)
                assert a.lo == b.lo and a.hi == b.hi

    def test_domain(self):
        with pytest.raises(ValueError):
            f(0, 3, 30)


class TestIndexValues:
    def test_p2_both_zero_and_one(self):
        t = tree_from_edge_list(2, [(0, 1)])
        assert reduced_sombor(t).midpoint == 0
        assert exp_reduced_sombor(t).midpoint == 1

    def test_star_reduced(self, k14):
        assert reduced_sombor(k14).midpoint == 12

    def test_star_exponential(self, k14):
        v = exp_reduced_sombor(k14, 50)
        four_e3 = 4 * f(1, 4, 50)
        assert v.lo == four_e3.lo and v.hi == four_e3.hi

    def test_p5_reduced(self, p5):
        # 2 + 2*sqrt(2), frozen from the mp oracle
        assert reduced_sombor(p5, 50).midpoint_str(20) == "4.8284271247461900976"

    def test_p5_exponential(self, p5):
        # 2e + 2e^sqrt(2)
        assert exp_reduced_sombor(p5, 50).midpoint_str(20) == "13.663064414483945505"

    def test_float_fast_path(self, p5):
        et = edge_type_counts(p5)
        assert exp_reduced_sombor_float(et) == pytest.approx(
            float(exp_reduced_sombor(p5)), abs=1e-9)


class TestCoefficientTable:
    def test_values_against_oracle(self):
        # frozen from the independent mp computation at 60 digits
        expected = {
            "M12": "-0.86530791224393654831",
            "M13": "-7.1958317634287888613",
            "M22": "-32.474233726889426181",
            "M23": "-38.232313210727663649",
            "M24": "-29.465088366139238563",
            "M33": "-41.671251670427371611",
            "M34": "-27.288763122645289819",
        }
        table = coefficient_table(50)
        for name, value in expected.items():
            assert table.get(name).midpoint_str(20) == value

    def test_self_check_against_mp(self):
        table = coefficient_table(40)
        with mp.workdps(60):
            m34 = mp_f(3, 4) - mp_f(1, 4) / 9 - 8 * mp_f(4, 4) / 9
        assert table.M34.lo <= m34 <= table.M34.hi

    def test_all_negative(self):
        table = coefficient_table(30)
        for name in table.names():
            assert table.get(name).certainly_negative()

    def test_cached_per_precision(self):
        assert coefficient_table(30) is coefficient_table(30)


class TestDecomposition:
    def test_star_equals_closed_form(self, k14):
        # n=5 with n2=n3=0: decomposition collapses to 4*f(1,4)
        d = exp_reduced_sombor_decomposed(k14, 50)
        assert d.intersects(4 * f(1, 4, 50))

    def test_order_too_small(self):
        t = tree_from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(OrderTooSmallError):
            exp_reduced_sombor_decomposed(t)

    def test_n7_extremal(self):
        t = tree_from_edge_list(
            7, [(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3)])
        direct = exp_reduced_sombor(t, 50)
        decomposed = exp_reduced_sombor_decomposed(t, 50)
        assert direct.intersects(decomposed)

    def test_all_classes_n9(self):
        for t in enumerate_chemical_trees(EnumerationConfig(n=9)):
            direct = exp_reduced_sombor(t, 30)
            decomposed = exp_reduced_sombor_decomposed(t, 30)
            assert direct.intersects(decomposed)
            assert agreement_digits(direct, decomposed) >= 20


class TestStructuralIdentities:
    def test_star(self, k14):
        assert check_structural_identities(k14).all_ok

    def test_n6_extremal(self):
        # degree-4 center, pendant path: m12 = m24 = 1, m44 = 0
        t = tree_from_edge_list(6, [(0, 1), (1, 2), (0, 3), (0, 4), (0, 5)])
        et = edge_type_counts(t)
        assert (et.m12, et.m24, et.m44) == (1, 1, 0)
        assert check_structural_identities(t).all_ok

    def test_all_classes_n10(self):
        for t in enumerate_chemical_trees(EnumerationConfig(n=10)):
            assert check_structural_identities(t).all_ok

    def test_order_guard(self):
        t = tree_from_edge_list(3, [(0, 1), (1, 2)])
        with pytest.raises(OrderTooSmallError):
            check_structural_identities(t)
