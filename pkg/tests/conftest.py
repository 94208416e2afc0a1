"""Shared test fixtures for python-sit-rings."""

import pytest

from sit_rings import catalog
from sit_rings.constructions import zmod
from sit_rings.corpus import CorpusEntry
from sit_rings.corpus import CorpusSpec
from sit_rings.corpus import generate_corpus
from sit_rings.ring import FiniteRing


def small_corpus(low: int = 2, high: int = 6) -> list[CorpusEntry]:
    """Only the residue rings ``Z_low .. Z_high``."""
    spec = CorpusSpec(
        zmod_range=(low, high),
        products=False,
        matrix_rings=False,
        poly_quotients=False,
        group_rings=False,
        paper_examples=False,
        amalgams=False,
    )
    return generate_corpus(spec)


def label_set(ring: FiniteRing, members) -> set[str]:
    return set(ring.labels_of(members))


@pytest.fixture
def z4():
    return zmod(4)


@pytest.fixture
def z6():
    return zmod(6)


@pytest.fixture
def m2z2():
    """M2(Z2): SIT and SITT, but not strongly SIT."""
    return catalog.full_matrices(2)


@pytest.fixture
def t2z2():
    return catalog.triangular(2)


@pytest.fixture
def z4_dual():
    """Z4[x]/(x^2), which is not SIT at 1+x."""
    return catalog.dual_numbers_z4()


@pytest.fixture
def z6c2():
    return catalog.cyclic_group_ring(6)
