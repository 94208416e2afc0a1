"""Tests for homomorphisms, ideals, quotients and derived subrings."""

import pytest

from sit_rings import catalog
from sit_rings.constructions import direct_product
from sit_rings.constructions import zmod
from sit_rings.exceptions import InvalidHomomorphism
from sit_rings.exceptions import InvalidIdeal
from sit_rings.exceptions import NotIdempotent
from sit_rings.exceptions import RingMismatch
from sit_rings.subobjects import compose
from sit_rings.subobjects import corner_ring
from sit_rings.subobjects import generated_subring
from sit_rings.subobjects import ideal_generated
from sit_rings.subobjects import image_plus_ideal
from sit_rings.subobjects import make_hom
from sit_rings.subobjects import make_ideal
from sit_rings.subobjects import preimage_ideal
from sit_rings.subobjects import principal_ideals
from sit_rings.subobjects import product_projections
from sit_rings.subobjects import quotient_ring
from sit_rings.subobjects import same_ring
from sit_rings.subobjects import scalar_ideal
from sit_rings.types import HomTag


def _reduction(n: int, m: int):
    return make_hom(zmod(n), zmod(m), [a % m for a in range(n)])


class TestHomomorphisms:
    def test_reduction_map(self):
        hom = _reduction(6, 3)
        assert hom(4) == 1
        assert hom.kernel.labels == ["0", "3"]
        assert hom.is_surjective()
        assert not hom.is_injective()

    def test_images_by_label(self, z6):
        hom = make_hom(z6, zmod(2), ["0", "1", "0", "1", "0", "1"])
        assert hom.kernel.labels == ["0", "2", "4"]

    def test_not_additive(self):
        with pytest.raises(InvalidHomomorphism, match="additive"):
            _reduction(6, 4)

    def test_identity_must_be_preserved(self, z4):
        with pytest.raises(InvalidHomomorphism, match="identity"):
            make_hom(z4, z4, [0, 0, 0, 0])

    def test_identity_tag(self, z4):
        hom = make_hom(z4, zmod(4), tag=HomTag.IDENTITY)
        assert hom.image.tolist() == [0, 1, 2, 3]
        with pytest.raises(InvalidHomomorphism):
            make_hom(z4, zmod(5), tag=HomTag.IDENTITY)

    def test_diagonal_scalar_into_matrices(self, t2z2):
        hom = make_hom(zmod(2), t2z2, tag=HomTag.DIAGONAL_SCALAR)
        assert t2z2.labels_of(hom.image) == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]

    def test_diagonal_scalar_between_residue_rings(self):
        hom = make_hom(zmod(6), zmod(3), tag=HomTag.DIAGONAL_SCALAR)
        assert hom.image.tolist() == [0, 1, 2, 0, 1, 2]
        with pytest.raises(InvalidHomomorphism):
            make_hom(zmod(3), zmod(6), tag=HomTag.DIAGONAL_SCALAR)

    def test_compose(self):
        z12, z6 = zmod(12), zmod(6)
        outer = make_hom(z6, zmod(3), [a % 3 for a in range(6)])
        inner = make_hom(z12, z6, [a % 6 for a in range(12)])
        assert compose(outer, inner).image.tolist() == [
            a % 3 for a in range(12)
        ]
        with pytest.raises(RingMismatch):
            compose(inner, inner)

    def test_product_projections(self):
        left, right = zmod(2), zmod(3)
        first, second = product_projections(
            direct_product(left, right), left, right
        )
        assert first.image.tolist() == [0, 0, 0, 1, 1, 1]
        assert second.image.tolist() == [0, 1, 2, 0, 1, 2]


class TestIdeals:
    def test_make_ideal(self, z6):
        assert make_ideal(z6, [3, 0]).members == (0, 3)
        with pytest.raises(InvalidIdeal):
            make_ideal(z6, [0, 1])

    def test_generated(self):
        z12 = zmod(12)
        assert ideal_generated(z12, [8]).labels == ["0", "4", "8"]
        assert scalar_ideal(z12, 3).labels == ["0", "3", "6", "9"]

    def test_generated_two_sided(self, m2z2):
        """E11 generates the whole (simple) matrix ring."""
        ideal = ideal_generated(m2z2, [m2z2.index("[[1,0],[0,0]]")])
        assert ideal.is_whole()

    def test_principal_ideals(self, z6):
        ideals = principal_ideals(z6)
        assert [i.labels for i in ideals] == [
            ["0"],
            ["0", "1", "2", "3", "4", "5"],
            ["0", "2", "4"],
            ["0", "3"],
        ]

    def test_preimage(self):
        hom = _reduction(6, 3)
        zero = make_ideal(hom.target, [0])
        assert preimage_ideal(hom, zero).labels == ["0", "3"]
        with pytest.raises(RingMismatch):
            preimage_ideal(hom, make_ideal(hom.source, [0]))


class TestDerivedRings:
    def test_quotient(self):
        z12 = zmod(12)
        quotient, projection = quotient_ring(z12, ideal_generated(z12, [4]))
        assert quotient.labels == ("0", "1", "2", "3")
        assert projection(9) == quotient.index("1")
        assert projection.tag is HomTag.QUOTIENT_MAP

    def test_quotient_by_foreign_ideal(self, z6):
        with pytest.raises(RingMismatch):
            quotient_ring(z6, make_ideal(zmod(6), [0]))

    def test_image_plus_ideal(self, t2z2):
        hom = make_hom(zmod(2), t2z2, tag=HomTag.DIAGONAL_SCALAR)
        ideal = ideal_generated(t2z2, [t2z2.index(catalog.E22)])
        assert len(ideal) == 4
        subring, inclusion = image_plus_ideal(hom, ideal)
        assert subring.order == 8
        assert inclusion.is_injective()

    def test_corner(self, z6, z4):
        corner = corner_ring(z6, z6.index("3"))
        assert corner.labels == ("0", "3")
        assert corner.label(corner.one) == "3"
        with pytest.raises(NotIdempotent):
            corner_ring(z4, z4.index("2"))

    def test_generated_subring(self, m2z2):
        members = generated_subring(m2z2, [m2z2.index(catalog.E12)])
        assert set(m2z2.labels_of(members)) == {
            "[[0,0],[0,0]]",
            "[[1,0],[0,1]]",
            "[[0,1],[0,0]]",
            "[[1,1],[0,1]]",
        }

    def test_same_ring(self):
        assert same_ring(zmod(4), zmod(4))
        assert not same_ring(zmod(4), catalog.cyclic_group_ring(2))
