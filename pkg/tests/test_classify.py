"""Tests for element classes, the Jacobson radical and ring flags."""

import pytest

from sit_rings import catalog
from sit_rings.classify import element_class
from sit_rings.classify import is_nil
from sit_rings.classify import is_weakly_boolean
from sit_rings.classify import jacobson_radical
from sit_rings.classify import maschke_condition
from sit_rings.classify import nilpotency_index
from sit_rings.classify import ring_flags
from sit_rings.classify import satisfies_identity
from sit_rings.config import Caps
from sit_rings.config import use_caps
from sit_rings.constructions import zmod
from sit_rings.exceptions import CapExceeded
from sit_rings.types import ElementKind
from sit_rings.types import Identity


class TestElementClasses:
    def test_z4(self, z4):
        assert element_class(z4, ElementKind.IDEMPOTENT).labels == ["0", "1"]
        assert element_class(z4, ElementKind.TRIPOTENT).labels == [
            "0",
            "1",
            "3",
        ]
        nil = element_class(z4, ElementKind.NILPOTENT)
        assert nil.labels == ["0", "2"]
        assert nil.nil_index == {0: 1, 2: 2}
        units = element_class(z4, ElementKind.UNIT)
        assert units.labels == ["1", "3"]
        assert units.inverses == {1: 1, 3: 3}

    def test_z6_is_tripotent(self, z6):
        assert element_class(z6, ElementKind.IDEMPOTENT).labels == [
            "0",
            "1",
            "3",
            "4",
        ]
        assert len(element_class(z6, ElementKind.TRIPOTENT)) == 6
        assert ring_flags(z6).is_tripotent

    def test_idempotents_are_tripotents(self, m2z2):
        idempotents = element_class(m2z2, ElementKind.IDEMPOTENT)
        tripotents = element_class(m2z2, ElementKind.TRIPOTENT)
        assert set(idempotents.members) <= set(tripotents.members)
        assert catalog.SWAP in tripotents.labels
        assert catalog.SWAP not in idempotents.labels

    def test_nilpotency_index(self):
        z8 = zmod(8)
        assert nilpotency_index(z8, 2) == 3
        assert nilpotency_index(z8, 1) is None

    def test_analysis_cap(self, m2z2):
        with use_caps(Caps(analysis=10)), pytest.raises(CapExceeded):
            element_class(m2z2, ElementKind.UNIT)


class TestRadical:
    def test_local_ring(self):
        z8 = zmod(8)
        radical = jacobson_radical(z8)
        assert radical.labels == ["0", "2", "4", "6"]
        assert is_nil(radical)

    def test_semisimple_rings(self, z6, m2z2):
        assert jacobson_radical(z6).is_zero()
        assert jacobson_radical(m2z2).is_zero()

    def test_gaussian_integers_mod_four(self):
        radical = jacobson_radical(catalog.gaussian_z4())
        assert set(radical.labels) == {
            "0", "2i", "1+i", "1+3i", "2", "2+2i", "3+i", "3+3i",
        }  # fmt: skip


class TestFlags:
    def test_z4_flags(self, z4):
        flags = ring_flags(z4)
        assert flags.is_local
        assert flags.two_in_radical
        assert flags.unit_exponent_two
        assert not flags.is_boolean
        assert not flags.is_weakly_boolean
        assert not flags.is_semisimple
        assert flags.radical_is_nil
        assert flags.characteristic == 4

    def test_weakly_boolean(self):
        assert is_weakly_boolean(zmod(3))
        assert not is_weakly_boolean(zmod(5))

    def test_identities(self, z4, z6):
        assert satisfies_identity(z6, Identity.CUBE)
        check = satisfies_identity(z4, Identity.CUBE)
        assert not check
        assert check.counterexample == 2
        assert satisfies_identity(z4, Identity.SIX_FOUR).holds

    def test_identity_respects_analysis_cap(self, m2z2):
        with use_caps(Caps(analysis=10)), pytest.raises(CapExceeded):
            satisfies_identity(m2z2, Identity.CUBE)

    def test_maschke_condition(self):
        assert maschke_condition(zmod(3), 2)
        assert not maschke_condition(zmod(2), 2)
