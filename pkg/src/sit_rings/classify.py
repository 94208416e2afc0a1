"""Element classes, the Jacobson radical and ring-level flags."""

import logging
from dataclasses import dataclass

import numpy as np

from .caching import memoized
from .config import check_analysis
from .exceptions import InvalidIdeal
from .exceptions import RadicalComputationError
from .ring import FiniteRing
from .subobjects import Ideal
from .subobjects import make_ideal
from .types import ElementKind
from .types import Identity


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElementMasks:
    """Boolean membership vectors for the element classes of a ring.

    ``nil_index[a]`` is the least ``k`` with ``a**k = 0`` (0 when ``a`` is
    not nilpotent); ``inverse[a]`` is ``-1`` for non-units.
    """

    idempotent: np.ndarray
    tripotent: np.ndarray
    nilpotent: np.ndarray
    nil_index: np.ndarray
    unit: np.ndarray
    inverse: np.ndarray

    def of(self, kind: ElementKind) -> np.ndarray:
        return getattr(self, kind.name.lower())


def _compute_masks(ring: FiniteRing) -> ElementMasks:
    mul = ring.mul_table
    elements = np.arange(ring.order)
    square = mul[elements, elements]
    nil_index = np.zeros(ring.order, dtype=np.int64)
    power = elements.copy()
    for k in range(1, ring.order + 1):
        nil_index[(power == ring.zero) & (nil_index == 0)] = k
        power = mul[power, elements]
    right = mul == ring.one
    both = right & right.T
    unit = both.any(axis=1)
    inverse = np.where(unit, both.argmax(axis=1), -1)
    masks = ElementMasks(
        idempotent=square == elements,
        tripotent=mul[square, elements] == elements,
        nilpotent=nil_index > 0,
        nil_index=nil_index,
        unit=unit,
        inverse=inverse,
    )
    for array in vars(masks).values():
        array.setflags(write=False)
    return masks


def element_masks(ring: FiniteRing) -> ElementMasks:
    check_analysis(ring.order, ring.describe())
    return memoized(ring, "masks", lambda: _compute_masks(ring))


@dataclass(frozen=True)
class ElementClass:
    """The members of one element class, in canonical order."""

    ring: FiniteRing
    kind: ElementKind
    members: tuple[int, ...]
    inverses: dict[int, int] | None = None
    nil_index: dict[int, int] | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, element: int) -> bool:
        return element in set(self.members)

    @property
    def labels(self) -> list[str]:
        return self.ring.labels_of(self.members)


def element_class(ring: FiniteRing, kind: ElementKind) -> ElementClass:
    """Exhaustively compute Id, Tr, Nil or U of ``ring``.

    Units carry their inverses; nilpotents carry their nilpotency index.
    """
    masks = element_masks(ring)
    members = tuple(int(a) for a in np.flatnonzero(masks.of(kind)))
    inverses = nil_index = None
    if kind is ElementKind.UNIT:
        inverses = {a: int(masks.inverse[a]) for a in members}
    elif kind is ElementKind.NILPOTENT:
        nil_index = {a: int(masks.nil_index[a]) for a in members}
    return ElementClass(ring, kind, members, inverses, nil_index)


def nilpotency_index(ring: FiniteRing, element: int) -> int | None:
    index = int(element_masks(ring).nil_index[element])
    return index or None


def _compute_radical(ring: FiniteRing) -> Ideal:
    unit = element_masks(ring).unit
    one_minus = ring.sub[ring.one][ring.mul_table]
    members = np.flatnonzero(unit[one_minus].all(axis=0))
    try:
        return make_ideal(ring, members)
    except InvalidIdeal as exc:
        raise RadicalComputationError(
            f"computed radical of {ring.describe()} is not an ideal",
            context={"members": ring.labels_of(members), **exc.context},
        ) from exc


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """``J(R) = {x : 1 - rx is a unit for every r}``."""
    return memoized(ring, "radical", lambda: _compute_radical(ring))


def is_nil(ideal: Ideal) -> bool:
    """True if every member of the ideal is nilpotent."""
    return bool(element_masks(ideal.ring).nilpotent[ideal.array].all())


@dataclass(frozen=True)
class IdentityCheck:
    identity: Identity
    holds: bool
    counterexample: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def satisfies_identity(ring: FiniteRing, identity: Identity) -> IdentityCheck:
    """Check ``x^m = x^k`` for every element, reporting the first failure."""
    check_analysis(ring.order, ring.describe())
    high, low = identity.exponents
    bad = np.flatnonzero(ring.powers(high) != ring.powers(low))
    if bad.size:
        return IdentityCheck(identity, False, int(bad[0]))
    return IdentityCheck(identity, True)


@dataclass(frozen=True)
class RingFlags:
    order: int
    characteristic: int
    is_commutative: bool
    is_boolean: bool
    is_weakly_boolean: bool
    is_tripotent: bool
    is_semisimple: bool
    is_local: bool
    radical_is_nil: bool
    unit_exponent_two: bool
    two_in_radical: bool
    three_in_radical: bool
    two_nilpotent: bool
    three_nilpotent: bool


def is_weakly_boolean(ring: FiniteRing) -> bool:
    """Every element ``a`` has ``a`` or ``-a`` idempotent."""
    idempotent = element_masks(ring).idempotent
    return bool((idempotent | idempotent[ring.neg]).all())


def ring_flags(ring: FiniteRing) -> RingFlags:
    masks = element_masks(ring)
    radical = jacobson_radical(ring)
    units = np.flatnonzero(masks.unit)
    two, three = ring.integer(2), ring.integer(3)
    return RingFlags(
        order=ring.order,
        characteristic=ring.characteristic,
        is_commutative=ring.is_commutative,
        is_boolean=bool(masks.idempotent.all()),
        is_weakly_boolean=is_weakly_boolean(ring),
        is_tripotent=bool(masks.tripotent.all()),
        is_semisimple=radical.is_zero(),
        is_local=ring.order > 1 and len(units) == ring.order - len(radical),
        radical_is_nil=is_nil(radical),
        unit_exponent_two=bool(
            (ring.mul_table[units, units] == ring.one).all()
        ),
        two_in_radical=two in radical,
        three_in_radical=three in radical,
        two_nilpotent=bool(masks.nilpotent[two]),
        three_nilpotent=bool(masks.nilpotent[three]),
    )


def maschke_condition(ring: FiniteRing, group_order: int) -> bool:
    """True if ``|G| * 1`` is a unit of ``ring``."""
    return bool(element_masks(ring).unit[ring.integer(group_order)])
