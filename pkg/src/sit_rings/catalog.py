"""Named rings and amalgam instances used throughout reports and tests."""

from .amalgam import AmalgamRing
from .amalgam import amalgamation
from .amalgam import bi_amalgamation
from .constructions import cyclic_group
from .constructions import group_ring
from .constructions import matrix_ring
from .constructions import poly_quotient
from .constructions import positions_mask
from .constructions import upper_triangular_mask
from .constructions import zmod
from .ring import FiniteRing
from .subobjects import ideal_generated
from .subobjects import make_hom
from .types import HomTag


SWAP = "[[0,1],[1,0]]"
E12 = "[[0,1],[0,0]]"
E22 = "[[0,0],[0,1]]"
PATTERN_E22 = "[[0,0,0],[0,1,0],[0,0,0]]"

# (1,1), (1,3), (2,2), (3,3): closed under products, contains the diagonal.
CORNER_PATTERN = positions_mask(3, [(1, 1), (1, 3), (2, 2), (3, 3)])

GAUSSIAN_MODULUS = (1, 0, 1)
SPLIT_MODULUS = (3, 0, 1)


def full_matrices(q: int, n: int = 2) -> FiniteRing:
    return matrix_ring(zmod(q), n)


def triangular(q: int, n: int = 2) -> FiniteRing:
    return matrix_ring(zmod(q), n, upper_triangular_mask(n))


def corner_pattern_ring() -> FiniteRing:
    """3x3 matrices over Z2 supported on the diagonal and position (1, 3)."""
    return matrix_ring(zmod(2), 3, CORNER_PATTERN)


def gaussian_z4(modulus: tuple[int, ...] = GAUSSIAN_MODULUS) -> FiniteRing:
    """``Z4[i]``; pass :data:`SPLIT_MODULUS` for the ``i^2 = 1`` variant."""
    return poly_quotient(zmod(4), modulus, "i")


def dual_numbers_z4() -> FiniteRing:
    """``Z4[x]/(x^2)``."""
    return poly_quotient(zmod(4), (0, 0, 1))


def cyclic_group_ring(q: int, n: int = 2) -> FiniteRing:
    return group_ring(zmod(q), cyclic_group(n))


def triangular_amalgam() -> AmalgamRing:
    """``Z2`` into ``T2(Z2)`` by scalars, along the ideal generated by
    ``e22``."""
    target = triangular(2)
    f = make_hom(zmod(2), target, tag=HomTag.DIAGONAL_SCALAR)
    return amalgamation(f, ideal_generated(target, [target.index(E22)]))


def corner_pattern_amalgam() -> AmalgamRing:
    """``Z2`` into the corner pattern ring along ``(e22)``."""
    target = corner_pattern_ring()
    f = make_hom(zmod(2), target, tag=HomTag.DIAGONAL_SCALAR)
    return amalgamation(
        f, ideal_generated(target, [target.index(PATTERN_E22)])
    )


def triangular_pattern_bi_amalgam() -> AmalgamRing:
    """``Z2`` into ``T2(Z2)`` along ``(e12)`` and into the corner pattern
    ring along ``(e22)``; both preimages are zero."""
    source = zmod(2)
    first, second = triangular(2), corner_pattern_ring()
    return bi_amalgamation(
        make_hom(source, first, tag=HomTag.DIAGONAL_SCALAR),
        make_hom(source, second, tag=HomTag.DIAGONAL_SCALAR),
        ideal_generated(first, [first.index(E12)]),
        ideal_generated(second, [second.index(PATTERN_E22)]),
    )
