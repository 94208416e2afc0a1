"""Tests for the ring constructors and expression rebuilding."""

import pytest

from sit_rings import catalog
from sit_rings.constructions import build
from sit_rings.constructions import check_pattern
from sit_rings.constructions import cyclic_group
from sit_rings.constructions import direct_product
from sit_rings.constructions import full_mask
from sit_rings.constructions import group_ring
from sit_rings.constructions import matrix_ring
from sit_rings.constructions import poly_quotient
from sit_rings.constructions import positions_mask
from sit_rings.constructions import upper_triangular_mask
from sit_rings.constructions import zmod
from sit_rings.exceptions import InvalidGroupTable
from sit_rings.exceptions import InvalidModulus
from sit_rings.exceptions import InvalidPattern
from sit_rings.exceptions import InvalidRing
from sit_rings.exceptions import NonCommutativeBase
from sit_rings.exceptions import SpecError
from sit_rings.expressions import Amalgam
from sit_rings.expressions import Corner
from sit_rings.expressions import GroupTable
from sit_rings.expressions import Matrix
from sit_rings.expressions import Quotient
from sit_rings.expressions import ZMod


class TestZMod:
    def test_non_positive_modulus(self):
        with pytest.raises(InvalidRing):
            zmod(0)

    def test_tables(self):
        ring = zmod(5)
        assert int(ring.add_table[3, 4]) == 2
        assert int(ring.mul_table[3, 4]) == 2


class TestDirectProduct:
    def test_pair_labels_and_order(self):
        ring = direct_product(zmod(2), zmod(3))
        assert ring.order == 6
        assert ring.labels[0] == "(0, 0)"
        assert ring.labels[5] == "(1, 2)"
        assert ring.index("(1, 0)") == 3
        assert ring.label(ring.one) == "(1, 1)"
        assert ring.characteristic == 6
        assert ring.describe() == "Z2 x Z3"


class TestMatrixRings:
    def test_full_matrices(self, m2z2):
        assert m2z2.order == 16
        assert not m2z2.is_commutative
        assert m2z2.labels[0] == "[[0,0],[0,0]]"
        assert m2z2.labels[1] == "[[0,0],[0,1]]"
        assert m2z2.label(m2z2.one) == "[[1,0],[0,1]]"
        assert m2z2.describe() == "M2(Z2)"

    def test_swap_squares_to_identity(self, m2z2):
        swap = m2z2.index(catalog.SWAP)
        assert int(m2z2.mul_table[swap, swap]) == m2z2.one

    def test_upper_triangular(self, t2z2):
        assert t2z2.order == 8
        assert t2z2.describe() == "T2(Z2)"
        e12 = t2z2.index(catalog.E12)
        e22 = t2z2.index(catalog.E22)
        assert int(t2z2.mul_table[e12, e22]) == e12
        assert int(t2z2.mul_table[e22, e12]) == t2z2.zero

    def test_corner_pattern(self):
        ring = catalog.corner_pattern_ring()
        assert ring.order == 16
        assert ring.describe() == "M3(Z2)[101,010,001]"

    def test_positions_mask_matches_triangular(self):
        assert positions_mask(2, [(1, 1), (1, 2), (2, 2)]) == (
            upper_triangular_mask(2)
        )

    def test_position_outside_the_grid(self):
        with pytest.raises(InvalidPattern, match="outside a 2x2") as exc_info:
            positions_mask(2, [(1, 1), (2, 2), (3, 1)])
        assert exc_info.value.context["position"] == (3, 1)

    def test_pattern_must_contain_diagonal(self):
        with pytest.raises(InvalidPattern, match="diagonal"):
            check_pattern(2, positions_mask(2, [(1, 1), (1, 2)]))

    def test_pattern_must_be_closed(self):
        pattern = positions_mask(
            3, [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]
        )
        with pytest.raises(InvalidPattern) as exc_info:
            matrix_ring(zmod(2), 3, pattern)
        assert exc_info.value.context["position"] == (1, 3)


class TestPolyQuotient:
    def test_gaussian_integers_mod_four(self):
        ring = catalog.gaussian_z4()
        assert ring.order == 16
        assert ring.labels[:6] == ("0", "i", "2i", "3i", "1", "1+i")
        i = ring.index("i")
        assert int(ring.mul_table[i, i]) == ring.index("3")
        assert ring.describe() == "Z4[i]/(i^2+1)"

    def test_dual_numbers(self, z4_dual):
        x = z4_dual.index("x")
        assert int(z4_dual.mul_table[x, x]) == z4_dual.zero

    @pytest.mark.parametrize("modulus", [(1,), (1, 1, 2)])
    def test_modulus_must_be_monic(self, modulus):
        with pytest.raises(InvalidModulus):
            poly_quotient(zmod(2), modulus)

    def test_base_must_be_commutative(self, m2z2):
        with pytest.raises(NonCommutativeBase):
            poly_quotient(m2z2, (0, 0, 1))


class TestGroupRings:
    def test_cyclic_group(self):
        group = cyclic_group(3)
        assert group.elements == ("1", "x", "x^2")
        assert group.identity == 0

    def test_f2c2_labels(self):
        ring = group_ring(zmod(2), cyclic_group(2))
        assert ring.labels == ("0", "x", "1", "1+x")
        s = ring.index("1+x")
        assert int(ring.mul_table[s, s]) == ring.zero

    def test_invalid_group_table(self):
        with pytest.raises(InvalidGroupTable, match="no identity"):
            GroupTable("bad", ("a", "b"), ((0, 0), (0, 0)))

    def test_base_must_be_commutative(self, m2z2):
        with pytest.raises(NonCommutativeBase):
            group_ring(m2z2, cyclic_group(2))


class TestBuild:
    @pytest.mark.parametrize(
        "make",
        [
            lambda: zmod(12),
            lambda: direct_product(zmod(2), zmod(4)),
            catalog.corner_pattern_ring,
            catalog.gaussian_z4,
            lambda: catalog.cyclic_group_ring(3),
        ],
    )
    def test_rebuild_is_deterministic(self, make):
        ring = make()
        again = build(ring.provenance)
        assert again.labels == ring.labels
        assert (again.mul_table == ring.mul_table).all()

    def test_quotient_expression(self):
        ring = build(Quotient(ZMod(12), ("4",)))
        assert ring.labels == ("0", "1", "2", "3")
        assert ring.describe() == "Z12/(4)"

    def test_corner_expression(self):
        ring = build(
            Corner(Matrix(ZMod(2), 2, full_mask(2)), "[[1,0],[0,0]]")
        )
        assert ring.labels == ("[[0,0],[0,0]]", "[[1,0],[0,0]]")
        assert ring.label(ring.one) == "[[1,0],[0,0]]"

    def test_amalgam_needs_homomorphism_data(self):
        expr = Amalgam(ZMod(2), ZMod(2), ("0", "1"), ("0",))
        with pytest.raises(SpecError):
            build(expr)
