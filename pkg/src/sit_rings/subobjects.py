"""Ring homomorphisms, ideals, quotients and derived subrings."""

import logging
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

import numpy as np

from .exceptions import InvalidHomomorphism
from .exceptions import InvalidIdeal
from .exceptions import NotIdempotent
from .exceptions import RingMismatch
from .expressions import Corner
from .expressions import GroupRing
from .expressions import Matrix
from .expressions import PolyQuot
from .expressions import Quotient
from .expressions import Subring
from .expressions import ZMod
from .ring import FiniteRing
from .ring import ensure_valid
from .types import HomTag


logger = logging.getLogger(__name__)


def same_ring(first: FiniteRing, second: FiniteRing) -> bool:
    """True if both rings have identical labels and tables."""
    return first is second or (
        first.labels == second.labels
        and first.zero == second.zero
        and first.one == second.one
        and np.array_equal(first.add_table, second.add_table)
        and np.array_equal(first.mul_table, second.mul_table)
    )


@dataclass(frozen=True, eq=False)
class RingHom:
    """A unital ring homomorphism ``source -> target``.

    ``image[a]`` is the image of element ``a``. Only :func:`make_hom` and
    the helpers in this module construct validated instances.
    """

    source: FiniteRing
    target: FiniteRing
    image: np.ndarray = field(repr=False)
    tag: HomTag = HomTag.EXPLICIT

    def __post_init__(self) -> None:
        image = np.array(self.image, dtype=np.int64)
        image.setflags(write=False)
        object.__setattr__(self, "image", image)

    def __call__(self, element: int) -> int:
        return int(self.image[element])

    @cached_property
    def kernel(self) -> "Ideal":
        zeros = np.flatnonzero(self.image == self.target.zero)
        return Ideal(self.source, tuple(int(a) for a in zeros))

    def is_injective(self) -> bool:
        return len(np.unique(self.image)) == self.source.order

    def is_surjective(self) -> bool:
        return len(np.unique(self.image)) == self.target.order


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal given by its sorted member indices."""

    ring: FiniteRing
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, element: int) -> bool:
        return bool(self.mask[element])

    @cached_property
    def array(self) -> np.ndarray:
        array = np.array(self.members, dtype=np.int64)
        array.setflags(write=False)
        return array

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.ring.order, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        return mask

    @property
    def labels(self) -> list[str]:
        return self.ring.labels_of(self.members)

    def is_zero(self) -> bool:
        return self.members == (self.ring.zero,)

    def is_whole(self) -> bool:
        return len(self.members) == self.ring.order


# --- homomorphisms ---


def _check_hom(
    source: FiniteRing, target: FiniteRing, image: np.ndarray
) -> None:
    if image.shape != (source.order,) or not (
        (image >= 0) & (image < target.order)
    ).all():
        raise InvalidHomomorphism(
            "image table does not map the source into the target",
            context={"source": source.describe(), "target": target.describe()},
        )
    if image[source.one] != target.one:
        raise InvalidHomomorphism(
            "identity is not mapped to the identity",
            context={
                "image_of_one": target.label(int(image[source.one])),
                "source": source.describe(),
                "target": target.describe(),
            },
        )
    for name, src, dst in (
        ("additive", source.add_table, target.add_table),
        ("multiplicative", source.mul_table, target.mul_table),
    ):
        bad = np.argwhere(image[src] != dst[image[:, None], image[None, :]])
        if bad.size:
            a, b = (int(v) for v in bad[0])
            raise InvalidHomomorphism(
                f"map is not {name} at "
                f"({source.label(a)}, {source.label(b)})",
                context={"witness": (source.label(a), source.label(b))},
            )


def _scalar_images(source: FiniteRing, target: FiniteRing) -> np.ndarray:
    expr = target.provenance
    if (
        isinstance(expr, Matrix | PolyQuot | GroupRing)
        and expr.base == source.provenance
    ):
        q = source.order
        match expr:
            case Matrix(size=n, pattern=pattern):
                cells = [
                    (i, j) for i in range(n) for j in range(n) if pattern[i][j]
                ]
                slots = [k for k, (i, j) in enumerate(cells) if i == j]
                width = len(cells)
            case PolyQuot(modulus=modulus):
                slots, width = [0], len(modulus) - 1
            case GroupRing(group=group):
                slots, width = [group.identity], group.order
        weights = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
        images = np.zeros(q, dtype=np.int64)
        for a in range(q):
            coords = np.full(width, source.zero, dtype=np.int64)
            coords[slots] = a
            images[a] = coords @ weights
        return images
    if isinstance(source.provenance, ZMod):
        return np.array([target.integer(a) for a in range(source.order)])
    raise InvalidHomomorphism(
        "diagonal-scalar map needs a target built over the source ring "
        "or a source of the form Zn",
        context={"source": source.describe(), "target": target.describe()},
    )


def make_hom(
    source: FiniteRing,
    target: FiniteRing,
    images: Sequence[int] | Sequence[str] | np.ndarray | None = None,
    *,
    tag: HomTag = HomTag.EXPLICIT,
) -> RingHom:
    """Build and validate a unital ring homomorphism.

    ``images`` lists the image of every source element (as indices or as
    target labels). When omitted, ``tag`` selects a canonical map:
    ``IDENTITY`` or ``DIAGONAL_SCALAR`` (``a -> a * 1``).

    :raises InvalidHomomorphism: If the map is not a unital ring
        homomorphism, with the first witnessing pair.
    """
    if images is None:
        match tag:
            case HomTag.IDENTITY:
                if not same_ring(source, target):
                    raise InvalidHomomorphism(
                        "identity map needs source and target to coincide",
                        context={
                            "source": source.describe(),
                            "target": target.describe(),
                        },
                    )
                image = np.arange(source.order)
            case HomTag.DIAGONAL_SCALAR:
                image = _scalar_images(source, target)
            case _:
                raise InvalidHomomorphism(
                    f"tag {tag} needs explicit images", context={"tag": tag}
                )
    else:
        values = list(images)
        if values and isinstance(values[0], str):
            image = np.array([target.index(v) for v in values])
        else:
            image = np.array(values, dtype=np.int64)
    _check_hom(source, target, image)
    return RingHom(source, target, image, tag)


def compose(outer: RingHom, inner: RingHom) -> RingHom:
    """Return ``outer o inner``.

    :raises RingMismatch: If ``inner`` does not land in ``outer``'s source.
    """
    if not same_ring(inner.target, outer.source):
        raise RingMismatch(
            "cannot compose: target and source differ",
            context={
                "inner_target": inner.target.describe(),
                "outer_source": outer.source.describe(),
            },
        )
    image = outer.image[inner.image]
    _check_hom(inner.source, outer.target, image)
    tag = HomTag.EXPLICIT
    if inner.tag == outer.tag == HomTag.IDENTITY:
        tag = HomTag.IDENTITY
    return RingHom(inner.source, outer.target, image, tag)


def product_projections(
    product: FiniteRing, left: FiniteRing, right: FiniteRing
) -> tuple[RingHom, RingHom]:
    """The two projections of ``direct_product(left, right)``."""
    first, second = np.divmod(np.arange(product.order), right.order)
    return (
        make_hom(product, left, first, tag=HomTag.PROJECTION),
        make_hom(product, right, second, tag=HomTag.PROJECTION),
    )


# --- ideals ---


def make_ideal(ring: FiniteRing, members: Iterable[int]) -> Ideal:
    """Validate an explicit member set as a two-sided ideal.

    :raises InvalidIdeal: If the set misses zero or is not closed under
        addition, negation, or multiplication by ring elements.
    """
    kept = np.unique(np.fromiter((int(m) for m in members), dtype=np.int64))
    mask = np.zeros(ring.order, dtype=bool)
    mask[kept] = True
    closures = {
        "contain zero": mask[[ring.zero]],
        "be closed under addition": mask[ring.add_table[np.ix_(kept, kept)]],
        "be closed under negation": mask[ring.neg[kept]],
        "absorb left multiplication": mask[ring.mul_table[:, kept]],
        "absorb right multiplication": mask[ring.mul_table[kept, :]],
    }
    for requirement, inside in closures.items():
        if not inside.all():
            raise InvalidIdeal(
                f"member set does not {requirement}",
                context={
                    "ring": ring.describe(),
                    "members": ring.labels_of(kept),
                },
            )
    return Ideal(ring, tuple(int(m) for m in kept))


def ideal_generated(ring: FiniteRing, generators: Iterable[int]) -> Ideal:
    """Smallest two-sided ideal containing ``generators``."""
    members = np.zeros(ring.order, dtype=bool)
    members[ring.zero] = True
    members[list(generators)] = True
    while True:
        idx = np.flatnonzero(members)
        grown = members.copy()
        grown[ring.mul_table[:, idx].ravel()] = True
        grown[ring.mul_table[idx, :].ravel()] = True
        grown[ring.add_table[np.ix_(idx, idx)].ravel()] = True
        if (grown == members).all():
            break
        members = grown
    return Ideal(ring, tuple(int(m) for m in np.flatnonzero(members)))


def scalar_ideal(ring: FiniteRing, k: int) -> Ideal:
    """The ideal ``kR = {k * r}``."""
    return make_ideal(ring, ring.mul_table[ring.integer(k), :])


def principal_ideals(ring: FiniteRing) -> list[Ideal]:
    """Distinct principal ideals, in order of their first generator."""
    seen: dict[tuple[int, ...], Ideal] = {}
    for a in range(ring.order):
        ideal = ideal_generated(ring, [a])
        seen.setdefault(ideal.members, ideal)
    return list(seen.values())


def preimage_ideal(hom: RingHom, ideal: Ideal) -> Ideal:
    """``f^-1(J)`` as an ideal of the source."""
    if ideal.ring is not hom.target:
        raise RingMismatch(
            "ideal does not live in the homomorphism's target",
            context={"target": hom.target.describe()},
        )
    return make_ideal(hom.source, np.flatnonzero(ideal.mask[hom.image]))


# --- derived rings ---


def quotient_ring(
    ring: FiniteRing,
    ideal: Ideal,
    *,
    generators: Sequence[str] | None = None,
) -> tuple[FiniteRing, RingHom]:
    """``R/I`` and the canonical surjection.

    Cosets are represented by their minimal-index member, whose label
    becomes the coset's label.
    """
    if ideal.ring is not ring:
        raise RingMismatch(
            "ideal does not live in this ring",
            context={"ring": ring.describe()},
        )
    rep = ring.add_table[:, ideal.array].min(axis=1)
    reps = np.unique(rep)
    position = np.full(ring.order, -1, dtype=np.int64)
    position[reps] = np.arange(len(reps))
    projection = position[rep]
    provenance = Quotient(
        ring.provenance,
        tuple(generators) if generators is not None else tuple(ideal.labels),
    )
    quotient = FiniteRing(
        labels=tuple(ring.labels[r] for r in reps),
        add_table=projection[ring.add_table[np.ix_(reps, reps)]],
        mul_table=projection[ring.mul_table[np.ix_(reps, reps)]],
        zero=int(projection[ring.zero]),
        one=int(projection[ring.one]),
        provenance=provenance,
    )
    quotient = ensure_valid(quotient)
    hom = make_hom(ring, quotient, projection, tag=HomTag.QUOTIENT_MAP)
    return quotient, hom


def image_plus_ideal(hom: RingHom, ideal: Ideal) -> tuple[FiniteRing, RingHom]:
    """The subring ``f(A) + J`` of the target and its inclusion."""
    if ideal.ring is not hom.target:
        raise RingMismatch(
            "ideal does not live in the homomorphism's target",
            context={"target": hom.target.describe()},
        )
    target = hom.target
    members = np.unique(target.add_table[hom.image[:, None], ideal.array])
    subring = target.restrict(
        members,
        provenance=Subring(
            target.provenance, "f(A)+J", tuple(target.labels_of(members))
        ),
    )
    inclusion = make_hom(subring, target, members, tag=HomTag.INCLUSION)
    return subring, inclusion


def corner_ring(ring: FiniteRing, idempotent: int) -> FiniteRing:
    """The corner ring ``eRe`` with identity ``e``.

    :raises NotIdempotent: If ``e * e != e``.
    """
    e = idempotent
    if ring.mul_table[e, e] != e:
        raise NotIdempotent(
            f"{ring.label(e)} is not idempotent in {ring.describe()}",
            context={"element": ring.label(e)},
        )
    members = np.unique(ring.mul_table[ring.mul_table[e, :], e])
    return ring.restrict(
        members,
        one=e,
        provenance=Corner(ring.provenance, ring.label(e)),
    )


def generated_subring(
    ring: FiniteRing, generators: Iterable[int]
) -> tuple[int, ...]:
    """Sorted members of the smallest unital subring containing
    ``generators``."""
    members = np.zeros(ring.order, dtype=bool)
    members[[ring.zero, ring.one]] = True
    members[list(generators)] = True
    while True:
        idx = np.flatnonzero(members)
        grown = members.copy()
        grown[ring.add_table[np.ix_(idx, idx)].ravel()] = True
        grown[ring.mul_table[np.ix_(idx, idx)].ravel()] = True
        if (grown == members).all():
            break
        members = grown
    return tuple(int(m) for m in np.flatnonzero(members))
