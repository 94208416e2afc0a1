"""Amalgamated algebras along ideals and amalgamated duplications.

For ``f: A -> B`` and an ideal ``J`` of ``B`` the amalgamation is
``{(a, f(a) + j)}`` inside ``A x B``. For a second ``g: A -> C`` with
``g^-1(J') = f^-1(J)`` the bi-amalgamation is
``{(f(a) + j, g(a) + j')}`` inside ``B x C``.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

import numpy as np

from .config import check_construction
from .constructions import pair_label
from .constructions import pair_ring
from .exceptions import InvalidHomomorphism
from .exceptions import InvalidIdeal
from .exceptions import PreimageMismatch
from .exceptions import RingMismatch
from .exceptions import WellDefinednessError
from .expressions import Amalgam
from .expressions import BiAmalgam
from .expressions import Product
from .expressions import Subring
from .ring import FiniteRing
from .subobjects import Ideal
from .subobjects import RingHom
from .subobjects import image_plus_ideal
from .subobjects import make_hom
from .subobjects import make_ideal
from .subobjects import preimage_ideal
from .subobjects import quotient_ring
from .subobjects import same_ring
from .types import HomTag
from .types import SubjectKind


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AmalgamSpec:
    """Validated data ``(f, J)`` or ``(f, g, J, J')``."""

    f: RingHom
    ideal: Ideal
    g: RingHom | None = None
    ideal_prime: Ideal | None = None

    def __post_init__(self) -> None:
        if self.ideal.ring is not self.f.target:
            raise RingMismatch(
                "J must be an ideal of the target of f",
                context={"target": self.f.target.describe()},
            )
        if (self.g is None) != (self.ideal_prime is None):
            raise RingMismatch(
                "bi-amalgamation needs both g and J'",
                context={"g": self.g, "ideal_prime": self.ideal_prime},
            )
        if self.g is None or self.ideal_prime is None:
            return
        if self.g.source is not self.f.source:
            raise RingMismatch(
                "f and g must share their source ring",
                context={
                    "f_source": self.f.source.describe(),
                    "g_source": self.g.source.describe(),
                },
            )
        if self.ideal_prime.ring is not self.g.target:
            raise RingMismatch(
                "J' must be an ideal of the target of g",
                context={"target": self.g.target.describe()},
            )
        first = preimage_ideal(self.f, self.ideal)
        second = preimage_ideal(self.g, self.ideal_prime)
        if first.members != second.members:
            raise PreimageMismatch(
                "f^-1(J) and g^-1(J') differ",
                context={
                    "f_preimage": first.labels,
                    "g_preimage": second.labels,
                },
            )

    @property
    def source(self) -> FiniteRing:
        return self.f.source

    @property
    def is_bi(self) -> bool:
        return self.g is not None

    @cached_property
    def kernel(self) -> Ideal:
        """The common preimage ``I0 = f^-1(J)``."""
        return preimage_ideal(self.f, self.ideal)


@dataclass(frozen=True, eq=False)
class AmalgamRing:
    """An amalgamated ring with its coordinates and projections.

    ``pairs[i]`` holds the ambient coordinates of element ``i``. For the
    single form ``first`` maps to ``A`` and ``second`` to ``f(A)+J``; for
    the bi form they map to ``f(A)+J`` and ``g(A)+J'``.
    """

    ring: FiniteRing
    spec: AmalgamSpec
    pairs: np.ndarray = field(repr=False)
    first: RingHom = field(repr=False)
    second: RingHom = field(repr=False)
    image_f: FiniteRing = field(repr=False)
    image_g: FiniteRing | None = field(default=None, repr=False)

    @property
    def kind(self) -> SubjectKind:
        if self.spec.is_bi:
            return SubjectKind.BI_AMALGAM
        return SubjectKind.AMALGAM

    def describe(self) -> str:
        return self.ring.describe()

    def expected_order(self) -> int:
        spec = self.spec
        size = spec.source.order * len(spec.ideal)
        if spec.ideal_prime is None:
            return size
        return size * len(spec.ideal_prime) // len(spec.kernel)

    def order_formula_holds(self) -> bool:
        return self.ring.order == self.expected_order()


def _positions(members: np.ndarray, values: np.ndarray) -> np.ndarray:
    return np.searchsorted(members, values)


def amalgamation(f: RingHom, ideal: Ideal) -> AmalgamRing:
    """``A >< J = {(a, f(a) + j)}``, of order ``|A| * |J|``."""
    spec = AmalgamSpec(f, ideal)
    source, target = f.source, f.target
    check_construction(source.order * len(ideal), "amalgamation")
    a = np.repeat(np.arange(source.order), len(ideal))
    j = np.tile(ideal.array, source.order)
    pairs = np.unique(
        np.stack([a, target.add_table[f.image[a], j]], axis=1), axis=0
    )
    ring = pair_ring(
        source,
        target,
        pairs,
        provenance=Amalgam(
            source.provenance,
            target.provenance,
            tuple(target.labels_of(f.image)),
            tuple(ideal.labels),
        ),
    )
    image_f, inclusion = image_plus_ideal(f, ideal)
    members = inclusion.image
    result = AmalgamRing(
        ring=ring,
        spec=spec,
        pairs=pairs,
        first=make_hom(ring, source, pairs[:, 0], tag=HomTag.PROJECTION),
        second=make_hom(
            ring,
            image_f,
            _positions(members, pairs[:, 1]),
            tag=HomTag.PROJECTION,
        ),
        image_f=image_f,
    )
    logger.debug(
        "Amalgamated %s along %d-element ideal: order %d",
        source.describe(),
        len(ideal),
        ring.order,
    )
    return result


def duplication(ring: FiniteRing, ideal: Ideal) -> AmalgamRing:
    """The amalgamated duplication ``A >< I`` (``f`` the identity)."""
    return amalgamation(make_hom(ring, ring, tag=HomTag.IDENTITY), ideal)


def bi_amalgamation(
    f: RingHom, g: RingHom, ideal: Ideal, ideal_prime: Ideal
) -> AmalgamRing:
    """``B ><_A C = {(f(a) + j, g(a) + j')}``.

    :raises PreimageMismatch: If ``f^-1(J) != g^-1(J')``.
    """
    spec = AmalgamSpec(f, ideal, g, ideal_prime)
    source, first_target, second_target = f.source, f.target, g.target
    expected = (
        source.order * len(ideal) * len(ideal_prime) // len(spec.kernel)
    )
    check_construction(expected, "bi-amalgamation")
    a, j, k = (
        axis.ravel()
        for axis in np.meshgrid(
            np.arange(source.order),
            ideal.array,
            ideal_prime.array,
            indexing="ij",
        )
    )
    pairs = np.unique(
        np.stack(
            [
                first_target.add_table[f.image[a], j],
                second_target.add_table[g.image[a], k],
            ],
            axis=1,
        ),
        axis=0,
    )
    ring = pair_ring(
        first_target,
        second_target,
        pairs,
        provenance=BiAmalgam(
            source.provenance,
            first_target.provenance,
            tuple(first_target.labels_of(f.image)),
            tuple(ideal.labels),
            second_target.provenance,
            tuple(second_target.labels_of(g.image)),
            tuple(ideal_prime.labels),
        ),
    )
    image_f, inclusion_f = image_plus_ideal(f, ideal)
    image_g, inclusion_g = image_plus_ideal(g, ideal_prime)
    return AmalgamRing(
        ring=ring,
        spec=spec,
        pairs=pairs,
        first=make_hom(
            ring,
            image_f,
            _positions(inclusion_f.image, pairs[:, 0]),
            tag=HomTag.PROJECTION,
        ),
        second=make_hom(
            ring,
            image_g,
            _positions(inclusion_g.image, pairs[:, 1]),
            tag=HomTag.PROJECTION,
        ),
        image_f=image_f,
        image_g=image_g,
    )


def pullback(first: RingHom, second: RingHom) -> FiniteRing:
    """``{(x, y) : u(x) = v(y)}`` for ``u: X -> Q`` and ``v: Y -> Q``.

    :raises RingMismatch: If the two maps have different targets.
    """
    if not same_ring(first.target, second.target):
        raise RingMismatch(
            "pullback needs maps into the same ring",
            context={
                "first_target": first.target.describe(),
                "second_target": second.target.describe(),
            },
        )
    left, right = first.source, second.source
    pairs = np.argwhere(first.image[:, None] == second.image[None, :])
    return pair_ring(
        left,
        right,
        pairs,
        provenance=Subring(
            Product(left.provenance, right.provenance),
            "pullback",
            tuple(
                pair_label(left.label(x), right.label(y)) for x, y in pairs
            ),
        ),
    )


def _induced_map(
    hom: RingHom,
    ideal: Ideal,
    subring: FiniteRing,
    members: np.ndarray,
    projection: RingHom,
) -> RingHom:
    target = hom.target
    values = target.add_table[hom.image[:, None], ideal.array[None, :]]
    positions = _positions(members, values)
    cosets = np.broadcast_to(projection.image[:, None], positions.shape)
    image = np.full(subring.order, -1, dtype=np.int64)
    image[positions.ravel()] = cosets.ravel()
    clash = np.argwhere(image[positions] != cosets)
    if clash.size:
        a, _ = (int(v) for v in clash[0])
        raise WellDefinednessError(
            "induced map to A/I0 is not well defined",
            context={"source_element": hom.source.label(a)},
        )
    return make_hom(subring, projection.target, image, tag=HomTag.QUOTIENT_MAP)


def induced_quotient_maps(
    f: RingHom, g: RingHom, ideal: Ideal, ideal_prime: Ideal
) -> tuple[RingHom, RingHom]:
    """The maps ``f(A)+J -> A/I0`` and ``g(A)+J' -> A/I0`` sending
    ``f(a)+j`` and ``g(a)+j'`` to the class of ``a``."""
    spec = AmalgamSpec(f, ideal, g, ideal_prime)
    _, projection = quotient_ring(spec.source, spec.kernel)
    maps = []
    for hom, side in ((f, ideal), (g, ideal_prime)):
        subring, inclusion = image_plus_ideal(hom, side)
        maps.append(
            _induced_map(hom, side, subring, inclusion.image, projection)
        )
    return maps[0], maps[1]


def check_pullback_identity(
    f: RingHom, g: RingHom, ideal: Ideal, ideal_prime: Ideal
) -> bool:
    """True if the bi-amalgamation equals the pullback of the induced
    quotient maps, element for element."""
    amalgam = bi_amalgamation(f, g, ideal, ideal_prime)
    u, v = induced_quotient_maps(f, g, ideal, ideal_prime)
    fibre = pullback(u, v)
    same = set(amalgam.ring.labels) == set(fibre.labels)
    if not same:
        logger.warning(
            "Pullback identity fails for %s", amalgam.ring.describe()
        )
    return same


def _quotient_is_iso(
    amalgam: AmalgamRing,
    kept: int,
    kept_zero: int,
    dropped: Ideal,
    onto: RingHom,
) -> bool:
    """Check that dividing out the pairs whose coordinate ``kept`` is zero
    and whose other coordinate lies in ``dropped`` leaves a ring mapped
    isomorphically by ``onto``."""
    ring, pairs = amalgam.ring, amalgam.pairs
    members = np.flatnonzero(
        (pairs[:, kept] == kept_zero) & dropped.mask[pairs[:, 1 - kept]]
    )
    if len(members) != len(dropped):
        return False
    try:
        kernel = make_ideal(ring, members)
        quotient, _ = quotient_ring(ring, kernel)
        reps = [ring.index(label) for label in quotient.labels]
        iso = make_hom(quotient, onto.target, onto.image[reps])
    except (InvalidIdeal, InvalidHomomorphism) as exc:
        logger.warning("Quotient isomorphism check failed: %s", exc)
        return False
    return iso.is_injective() and iso.is_surjective()


def quotient_iso_check(
    f: RingHom, g: RingHom, ideal: Ideal, ideal_prime: Ideal
) -> bool:
    """``(B ><_A C)/(0 x J') ~ f(A)+J`` and ``/(J x 0) ~ g(A)+J'``."""
    amalgam = bi_amalgamation(f, g, ideal, ideal_prime)
    return _quotient_is_iso(
        amalgam, 0, f.target.zero, ideal_prime, amalgam.first
    ) and _quotient_is_iso(amalgam, 1, g.target.zero, ideal, amalgam.second)


def amalgam_quotient_iso_check(f: RingHom, ideal: Ideal) -> bool:
    """``(A >< J)/(0 x J) ~ A`` via the first coordinate."""
    amalgam = amalgamation(f, ideal)
    return _quotient_is_iso(
        amalgam, 0, f.source.zero, ideal, amalgam.first
    )


def realize(spec: AmalgamSpec) -> AmalgamRing:
    """Build the amalgam or bi-amalgam described by ``spec``."""
    if spec.g is None or spec.ideal_prime is None:
        return amalgamation(spec.f, spec.ideal)
    return bi_amalgamation(spec.f, spec.g, spec.ideal, spec.ideal_prime)
