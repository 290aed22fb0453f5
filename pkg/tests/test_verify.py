import json

import pytest

from esombor.enumeration import EnumerationConfig, enumerate_chemical_trees
from esombor.errors import OrderTooLargeError, OrderTooSmallError
from esombor.extremal import equality_conditions, theorem_bound
from esombor.trees import canonical_code
from esombor.verify import (
    bruteforce_max,
    refute_conjecture,
    verify_class_lemmas,
    verify_lemma0,
    verify_theorem,
)


class TestLemma0:
    def test_certified_at_50(self):
        report = verify_lemma0(50)
        assert report.status == "certified"
        assert report.precision_used == 50
        assert len(report.margins) == 10

    def test_margin_values(self):
        report = verify_lemma0(50)
        by_label = {m.label: m.gap for m in report.margins}
        m12_neg = by_label["M12 < 0"]
        assert m12_neg.midpoint_str(10) == "0.8653079122"
        chain2 = by_label["2M13+M34 < M12+M24"]
        assert chain2.midpoint_str(10) == "11.35003037"

    def test_all_margins_strictly_positive(self):
        for m in verify_lemma0(30).margins:
            assert m.gap.certainly_positive()

    def test_refinement_does_not_flip(self):
        assert verify_lemma0(30).status == verify_lemma0(100).status == "certified"

    def test_json_schema(self):
        j = verify_lemma0(30).to_json()
        assert set(j) >= {"subject", "status", "margins", "witnesses",
                          "precision_used", "wall_time_ms"}
        json.dumps(j)  # serializable


class TestBruteforceMax:
    def test_n5_star_wins(self, k14):
        value, maximizers = bruteforce_max(5, 50)
        assert len(maximizers) == 1
        assert canonical_code(maximizers[0]) == canonical_code(k14)
        assert value.intersects(theorem_bound(5, 50))

    def test_n7_maximizer_conditions(self):
        value, maximizers = bruteforce_max(7, 50)
        assert value.intersects(theorem_bound(7, 50))
        for t in maximizers:
            assert equality_conditions(t).satisfied

    def test_n9_value(self):
        value, _ = bruteforce_max(9, 50)
        assert value.intersects(theorem_bound(9, 50))

    def test_guards(self):
        with pytest.raises(OrderTooSmallError):
            bruteforce_max(4)
        with pytest.raises(OrderTooLargeError):
            bruteforce_max(17)


class TestTheorem:
    def test_certified_to_10(self):
        report = verify_theorem(10, 50)
        assert report.status == "certified"
        assert [row["n"] for row in report.rows] == list(range(5, 11))
        assert all(row["status"] == "certified" for row in report.rows)

    def test_maximizer_sets_match_both_ways(self):
        for n in (6, 7, 8):
            _, maximizers = bruteforce_max(n, 50)
            eq_classes = [t for t in
                          enumerate_chemical_trees(EnumerationConfig(n=n))
                          if equality_conditions(t).satisfied]
            assert ({canonical_code(t) for t in maximizers}
                    == {canonical_code(t) for t in eq_classes})

    def test_strictly_dominated_classes(self):
        # every n=8 class with n2+n3 >= 1 sits certainly below the bound
        from esombor.indices import exp_reduced_sombor
        from esombor.trees import degree_counts
        bound = theorem_bound(8, 50)
        for t in enumerate_chemical_trees(EnumerationConfig(n=8)):
            dc = degree_counts(t)
            if dc.n2 + dc.n3 >= 1:
                assert exp_reduced_sombor(t, 50).certainly_lt(bound)


class TestClassLemmas:
    def test_n7_stratum01(self):
        report = verify_class_lemmas(7, 50)
        assert report.status == "certified"
        strata = {tuple(r["stratum"]) if isinstance(r["stratum"], list)
                  else r["stratum"]: r for r in report.rows}
        assert strata[(0, 1)]["status"] == "certified"
        assert strata[(0, 0)]["status"] == "empty"
        assert strata[(1, 0)]["status"] == "empty"

    def test_n6_stratum10(self):
        report = verify_class_lemmas(6, 50)
        assert report.status == "certified"

    def test_n8_stratum00_nonempty(self):
        report = verify_class_lemmas(8, 50)
        strata = {tuple(r["stratum"]) if isinstance(r["stratum"], list)
                  else r["stratum"]: r for r in report.rows}
        assert strata[(0, 0)]["status"] == "certified"

    def test_dominance_margin_positive(self):
        report = verify_class_lemmas(9, 50)
        for m in report.margins:
            assert m.gap.certainly_positive()

    def test_guard(self):
        with pytest.raises(OrderTooSmallError):
            verify_class_lemmas(4)


class TestRefutation:
    def test_r2_equality(self):
        for n in (5, 8, 11):
            report = refute_conjecture(n, 50)
            assert report.status == "certified"
            assert not report.witnesses

    def test_r1_refuted(self):
        report = refute_conjecture(13, 50)
        assert report.status == "refuted"
        assert len(report.witnesses) == 1
        gap = report.margins[0].gap
        assert gap.certainly_positive()
        # frozen from the independent mp oracle:
        # 2e^2 - 2e^sqrt(13) - 2e^3 + 2e^(3 sqrt 2)
        assert gap.midpoint_str(15) == "40.185862718433"

    def test_r1_gap_is_order_independent(self):
        g7 = refute_conjecture(7, 50).margins[0].gap
        g10 = refute_conjecture(10, 50).margins[0].gap
        assert g7.midpoint_str(15) == g10.midpoint_str(15)

    def test_r0_refuted(self):
        report = refute_conjecture(9, 50)
        assert report.status == "refuted"
        assert report.margins[0].gap.midpoint_str(15) == "88.8563912234583"

    def test_witness_value_exceeds_bound(self):
        from esombor.extremal import conjecture_bound
        from esombor.indices import exp_reduced_sombor
        report = refute_conjecture(12, 50)
        [witness] = report.witnesses
        assert exp_reduced_sombor(witness, 50).certainly_gt(
            conjecture_bound(12, 50))

    def test_refinement_does_not_flip(self):
        assert (refute_conjecture(9, 30).status
                == refute_conjecture(9, 100).status == "refuted")

    def test_guard(self):
        with pytest.raises(OrderTooSmallError):
            refute_conjecture(4)
