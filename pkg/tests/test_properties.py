"""Property-based checks over residue rings and their products."""

import math

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from sit_rings.amalgam import duplication
from sit_rings.classify import element_class
from sit_rings.classify import is_nil
from sit_rings.classify import jacobson_radical
from sit_rings.constructions import direct_product
from sit_rings.constructions import zmod
from sit_rings.decomp import DecompScheme
from sit_rings.decomp import revalidate
from sit_rings.decomp import scheme_holds
from sit_rings.subobjects import make_hom
from sit_rings.subobjects import quotient_ring
from sit_rings.subobjects import scalar_ideal
from sit_rings.theorems import run_check
from sit_rings.types import ElementKind
from sit_rings.types import Scheme
from sit_rings.types import VerdictStatus


moduli = st.integers(min_value=1, max_value=30)
small_moduli = st.integers(min_value=2, max_value=8)


def _squarefree_part(n: int) -> int:
    part, p = 1, 2
    while n > 1:
        if n % p == 0:
            part *= p
            while n % p == 0:
                n //= p
        p += 1
    return part


@settings(max_examples=30, deadline=None)
@given(moduli, st.sampled_from(list(Scheme)))
def test_witnesses_revalidate(n, scheme):
    ring = zmod(n)
    verdict = scheme_holds(ring, DecompScheme(scheme))
    assert all(revalidate(ring, w) for w in verdict.witnesses.values())
    assert len(verdict.witnesses) + len(verdict.failures) == ring.order


@settings(max_examples=30, deadline=None)
@given(moduli)
def test_idempotents_are_tripotents(n):
    ring = zmod(n)
    idempotents = element_class(ring, ElementKind.IDEMPOTENT).members
    tripotents = element_class(ring, ElementKind.TRIPOTENT).members
    assert set(idempotents) <= set(tripotents)


@settings(max_examples=30, deadline=None)
@given(moduli)
def test_radical_of_residue_ring(n):
    ring = zmod(n)
    radical = jacobson_radical(ring)
    assert is_nil(radical)
    step = _squarefree_part(n)
    assert radical.labels == [str(a) for a in range(0, n, step)]


@settings(max_examples=30, deadline=None)
@given(moduli, st.integers(min_value=0, max_value=30))
def test_quotient_order(n, d):
    ring = zmod(n)
    ideal = scalar_ideal(ring, d)
    quotient, projection = quotient_ring(ring, ideal)
    assert quotient.order * len(ideal) == n
    assert quotient.order == math.gcd(d, n)
    assert projection.kernel.members == ideal.members


@settings(max_examples=20, deadline=None)
@given(small_moduli, st.integers(min_value=1, max_value=8))
def test_duplication_order(n, d):
    ring = zmod(n)
    amalgam = duplication(ring, scalar_ideal(ring, d))
    assert amalgam.order_formula_holds()
    assert amalgam.first.is_surjective()


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=2, max_value=24), st.integers(1, 24))
def test_reduction_kernel(n, m):
    m = math.gcd(n, m)
    hom = make_hom(zmod(n), zmod(m), [a % m for a in range(n)])
    assert len(hom.kernel) == n // m


@settings(max_examples=15, deadline=None)
@given(small_moduli, small_moduli)
def test_sit_closure_on_products(p, q):
    verdict = run_check("P2.2", direct_product(zmod(p), zmod(q)))
    assert verdict.status is not VerdictStatus.COUNTEREXAMPLE
