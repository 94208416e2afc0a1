"""Tests for the decomposition searches."""

import pytest

from sit_rings import catalog
from sit_rings.constructions import zmod
from sit_rings.decomp import ALL_SCHEMES
from sit_rings.decomp import DecompScheme
from sit_rings.decomp import decompose_element
from sit_rings.decomp import decomposition_count
from sit_rings.decomp import iter_decompositions
from sit_rings.decomp import property_report
from sit_rings.decomp import revalidate
from sit_rings.decomp import scheme_holds
from sit_rings.decomp import uniquely_holds
from sit_rings.types import Scheme


SIT = DecompScheme(Scheme.SIT)
STRONG_SIT = DecompScheme(Scheme.SIT, strong=True)
WEAKLY_SIT = DecompScheme(Scheme.WEAKLY_SIT)
SITT = DecompScheme(Scheme.SITT)


class TestSchemeVerdicts:
    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_small_residue_rings_are_sit(self, n):
        assert scheme_holds(zmod(n), SIT)

    def test_z5_is_not_sit(self):
        verdict = scheme_holds(zmod(5), SIT)
        assert not verdict
        assert verdict.counterexample == 3
        assert verdict.as_data()["counterexample"] == "3"
        assert not scheme_holds(zmod(5), WEAKLY_SIT)

    def test_dual_numbers_fail_at_one_plus_x(self, z4_dual):
        verdict = scheme_holds(z4_dual, SIT)
        assert not verdict.holds
        assert "1+x" in z4_dual.labels_of(verdict.failures)

    def test_m2z2_is_sit_and_sitt(self, m2z2):
        assert scheme_holds(m2z2, SIT)
        assert scheme_holds(m2z2, SITT)

    def test_m2z2_is_not_strongly_sit(self, m2z2):
        """An element of order three commutes only with 0 and 1."""
        verdict = scheme_holds(m2z2, STRONG_SIT)
        assert not verdict
        assert "[[0,1],[1,1]]" in m2z2.labels_of(verdict.failures)

    def test_z6c2(self, z6c2):
        assert scheme_holds(z6c2, WEAKLY_SIT)
        assert scheme_holds(z6c2, SIT)

    def test_clean_and_nil_clean(self, z4, z6):
        assert scheme_holds(z4, DecompScheme(Scheme.NIL_CLEAN, strong=True))
        assert not scheme_holds(z6, DecompScheme(Scheme.NIL_CLEAN))
        assert scheme_holds(z6, DecompScheme(Scheme.CLEAN, strong=True))


class TestDecompositions:
    def test_swap_is_a_tripotent(self, m2z2):
        swap = m2z2.index(catalog.SWAP)
        found = decompose_element(m2z2, swap, SIT)
        assert found is not None
        assert found.parts == (m2z2.zero, swap)
        assert found.describe(m2z2) == (
            "[[0,1],[1,0]] = [[0,0],[0,0]] + [[0,1],[1,0]]"
        )
        assert found.commuting

    def test_canonical_order_sit(self):
        z3 = zmod(3)
        found = list(iter_decompositions(z3, 2, SIT))
        assert [d.parts for d in found] == [(0, 2), (1, 1)]
        assert decomposition_count(z3, 2, SIT) == 2

    def test_weakly_sit_signs(self):
        z3 = zmod(3)
        found = list(iter_decompositions(z3, 2, WEAKLY_SIT))
        assert [d.sign for d in found] == [1, -1, 1, -1]
        assert found[1].describe(z3) == "2 = 0 - 1"
        assert found[1].as_data(z3)["parts"] == {"e": "0", "t": "1"}

    def test_sitt_counts_unordered_pairs(self):
        z2 = zmod(2)
        found = list(iter_decompositions(z2, 0, SITT))
        assert [d.parts for d in found] == [(0, 0, 0), (0, 1, 1), (1, 0, 1)]

    def test_witnesses_revalidate(self, z6c2):
        verdict = scheme_holds(z6c2, WEAKLY_SIT)
        assert len(verdict.witnesses) == z6c2.order
        assert all(revalidate(z6c2, w) for w in verdict.witnesses.values())

    def test_revalidate_rejects_tampered_witness(self):
        z3 = zmod(3)
        found = decompose_element(z3, 2, SIT)
        assert found is not None
        tampered = type(found)(1, found.scheme, found.parts)
        assert not revalidate(z3, tampered)


class TestUniqueness:
    def test_zero_ring_is_uniquely_sit(self):
        assert uniquely_holds(zmod(1), Scheme.SIT)

    def test_z2_is_not_uniquely_sit(self):
        """0 = 0 + 0 = 1 + 1."""
        assert not uniquely_holds(zmod(2), Scheme.SIT)


def test_property_report(z4):
    report = property_report(z4)
    assert len(report.verdicts) == len(ALL_SCHEMES) == 12
    assert report.holds(Scheme.SIT)
    assert report.holds(Scheme.NIL_CLEAN, strong=True)
    assert report.flags.order == 4
    assert property_report(z4) is report
