"""Executable checkers for the published results on SIT-type rings.

Each checker evaluates the premises and the conclusion of one result on a
concrete ring or amalgam instance. Biconditionals are split into
``forward`` and ``reverse`` directions so a one-sided failure can be
attributed. Conclusions phrased as "subdirect product of Z_p's" are
checked as the polynomial identity ``x^p = x``.
"""

import logging
import math
from collections.abc import Callable
from collections.abc import Iterable
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from typing import Any

import numpy as np

from .amalgam import AmalgamRing
from .amalgam import amalgam_quotient_iso_check
from .amalgam import check_pullback_identity
from .amalgam import quotient_iso_check
from .caching import memoized
from .classify import element_masks
from .classify import is_nil
from .classify import is_weakly_boolean
from .classify import jacobson_radical
from .classify import maschke_condition
from .classify import ring_flags
from .classify import satisfies_identity
from .constructions import build
from .constructions import direct_product
from .decomp import DecompScheme
from .decomp import decompose_element
from .decomp import scheme_holds
from .decomp import uniquely_holds
from .divergences import load_divergences
from .exceptions import SubjectMismatch
from .exceptions import UnknownTheorem
from .expressions import GroupRing
from .expressions import Product
from .ring import FiniteRing
from .subobjects import Ideal
from .subobjects import RingHom
from .subobjects import corner_ring
from .subobjects import generated_subring
from .subobjects import ideal_generated
from .subobjects import make_hom
from .subobjects import make_ideal
from .subobjects import principal_ideals
from .subobjects import quotient_ring
from .subobjects import scalar_ideal
from .types import DirectionData
from .types import HomTag
from .types import Identity
from .types import Scheme
from .types import SubjectKind
from .types import VerdictData
from .types import VerdictStatus


logger = logging.getLogger(__name__)

type Subject = FiniteRing | AmalgamRing


def _status(premises_hold: bool, conclusion_holds: bool) -> VerdictStatus:
    if not premises_hold:
        return VerdictStatus.PREMISE_NOT_MET
    if conclusion_holds:
        return VerdictStatus.VERIFIED
    return VerdictStatus.COUNTEREXAMPLE


@dataclass(frozen=True)
class DirectionVerdict:
    """One direction (or clause) of a checked result."""

    label: str
    premises_hold: bool
    conclusion_holds: bool

    @property
    def status(self) -> VerdictStatus:
        return _status(self.premises_hold, self.conclusion_holds)

    def as_data(self) -> DirectionData:
        return {
            "label": self.label,
            "premises_hold": self.premises_hold,
            "conclusion_holds": self.conclusion_holds,
            "status": str(self.status),
        }


@dataclass(frozen=True)
class Outcome:
    """What a checker function returns, before it is tied to a subject."""

    premises_hold: bool
    conclusion_holds: bool
    witness: dict[str, Any] = field(default_factory=dict)
    directions: tuple[DirectionVerdict, ...] = ()


def implication(
    premises: bool, conclusion: bool, witness: dict[str, Any]
) -> Outcome:
    return Outcome(bool(premises), bool(conclusion), witness)


def both_ways(
    label: str, side: bool, lhs: bool, rhs: bool
) -> list[DirectionVerdict]:
    """The two directions of ``lhs <=> rhs`` under the side premise."""
    prefix = f"{label} " if label else ""
    return [
        DirectionVerdict(f"{prefix}forward", bool(side), not lhs or rhs),
        DirectionVerdict(f"{prefix}reverse", bool(side), not rhs or lhs),
    ]


def combine(
    directions: Iterable[DirectionVerdict], witness: dict[str, Any]
) -> Outcome:
    """Aggregate directions: premises hold if any direction applies, the
    conclusion holds if every applicable direction holds."""
    directions = tuple(directions)
    return Outcome(
        premises_hold=any(d.premises_hold for d in directions),
        conclusion_holds=all(
            d.conclusion_holds for d in directions if d.premises_hold
        ),
        witness=witness,
        directions=directions,
    )


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    subject: str
    premises_hold: bool
    conclusion_holds: bool
    witness: dict[str, Any] = field(default_factory=dict)
    directions: tuple[DirectionVerdict, ...] = ()
    expected_divergence: bool = False

    @property
    def status(self) -> VerdictStatus:
        return _status(self.premises_hold, self.conclusion_holds)

    @property
    def failed_directions(self) -> list[str]:
        return [
            d.label
            for d in self.directions
            if d.status is VerdictStatus.COUNTEREXAMPLE
        ]

    def as_data(self) -> VerdictData:
        data: VerdictData = {
            "theorem": self.theorem,
            "subject": self.subject,
            "status": str(self.status),
            "premises_hold": self.premises_hold,
            "conclusion_holds": self.conclusion_holds,
            "expected_divergence": self.expected_divergence,
            "witness": self.witness,
        }
        if self.directions:
            data["directions"] = [d.as_data() for d in self.directions]
        return data


ALL_KINDS = frozenset(SubjectKind)


@dataclass(frozen=True)
class Checker:
    """A registered result. Ring checkers accept every subject kind and
    receive the underlying ring of amalgam instances."""

    theorem: str
    summary: str
    kinds: frozenset[SubjectKind]
    check: Callable[[Any], Outcome] = field(repr=False)

    @property
    def on_rings(self) -> bool:
        return self.kinds == ALL_KINDS


CATALOGUE: dict[str, Checker] = {}


def _register(
    theorem: str, summary: str, *kinds: SubjectKind
) -> Callable[[Callable[[Any], Outcome]], Callable[[Any], Outcome]]:
    def decorator(
        func: Callable[[Any], Outcome],
    ) -> Callable[[Any], Outcome]:
        CATALOGUE[theorem] = Checker(
            theorem, summary, frozenset(kinds) or ALL_KINDS, func
        )
        return func

    return decorator


def subject_kind(subject: Subject) -> SubjectKind:
    if isinstance(subject, AmalgamRing):
        return subject.kind
    return SubjectKind.RING


def run_check(
    theorem: str, subject: Subject, *, name: str | None = None
) -> TheoremVerdict:
    """Evaluate one catalogue entry on one subject.

    :param theorem: Catalogue id such as ``"T2.19"``.
    :param subject: A ring or an amalgam instance.
    :param name: Subject name for the report; defaults to its expression.
    :raises UnknownTheorem: If ``theorem`` is not registered.
    :raises SubjectMismatch: If the checker needs another kind of subject.
    """
    try:
        checker = CATALOGUE[theorem]
    except KeyError:
        raise UnknownTheorem(
            f"no checker registered for {theorem!r}",
            context={"theorem": theorem, "known": list(CATALOGUE)},
        ) from None
    kind = subject_kind(subject)
    if kind not in checker.kinds:
        raise SubjectMismatch(
            f"{theorem} needs a {' or '.join(sorted(checker.kinds))}"
            f" subject, got a {kind}",
            context={"theorem": theorem, "kind": kind},
        )
    target = subject
    if checker.on_rings and isinstance(subject, AmalgamRing):
        target = subject.ring
    outcome = checker.check(target)
    verdict = TheoremVerdict(
        theorem=theorem,
        subject=name or subject.describe(),
        premises_hold=outcome.premises_hold,
        conclusion_holds=outcome.conclusion_holds,
        witness=outcome.witness,
        directions=outcome.directions,
    )
    if verdict.status is VerdictStatus.COUNTEREXAMPLE:
        expected = load_divergences().covers_theorem(
            theorem, verdict.failed_directions
        )
        verdict = replace(verdict, expected_divergence=expected)
        logger.warning(
            "%s fails on %s (%s)%s",
            theorem,
            verdict.subject,
            ", ".join(verdict.failed_directions) or "conclusion",
            " [expected]" if expected else "",
        )
    return verdict


# --- shared predicates ---


def _holds(ring: FiniteRing, scheme: Scheme, *, strong: bool = False) -> bool:
    return scheme_holds(ring, DecompScheme(scheme, strong)).holds


def _vanishes(ring: FiniteRing, k: int) -> bool:
    return ring.integer(k) == ring.zero


def _principal_quotients(ring: FiniteRing) -> list[FiniteRing]:
    return memoized(
        ring,
        "principal-quotients",
        lambda: [
            quotient_ring(ring, ideal)[0]
            for ideal in principal_ideals(ring)
            if not ideal.is_zero()
        ],
    )


def _semisimple_quotient(ring: FiniteRing) -> FiniteRing:
    return memoized(
        ring,
        "semisimple-quotient",
        lambda: quotient_ring(ring, jacobson_radical(ring))[0],
    )


def _product_factors(
    ring: FiniteRing,
) -> tuple[FiniteRing, FiniteRing] | None:
    expr = ring.provenance
    if isinstance(expr, Product):
        return build(expr.left), build(expr.right)
    return None


def _first_label(ring: FiniteRing, bad: np.ndarray) -> str | None:
    failing = np.flatnonzero(bad)
    return ring.label(int(failing[0])) if failing.size else None


def _closure(ring: FiniteRing, scheme: Scheme) -> Outcome:
    holds = _holds(ring, scheme)
    quotients = _principal_quotients(ring)
    failing = [q.describe() for q in quotients if not _holds(q, scheme)]
    directions = [DirectionVerdict("quotients", holds, not failing)]
    witness: dict[str, Any] = {
        "holds": holds,
        "principal_quotients": len(quotients),
        "failing_quotients": failing,
    }
    factors = _product_factors(ring)
    if factors is not None:
        both = all(_holds(factor, scheme) for factor in factors)
        directions += both_ways("product", True, holds, both)
        witness["factors_hold"] = both
    return combine(directions, witness)


def _generated_by_idempotent(ideal: Ideal) -> bool:
    ring = ideal.ring
    idempotent = element_masks(ring).idempotent
    return any(
        idempotent[e] and ideal_generated(ring, [e]).members == ideal.members
        for e in ideal.members
    )


def _image_mod_ideal(image: FiniteRing, ideal: Ideal) -> FiniteRing:
    """``(f(A)+J)/J`` with ``J`` moved into the subring ``f(A)+J``."""
    inner = make_ideal(
        image, [image.index(label) for label in ideal.labels]
    )
    return quotient_ring(image, inner)[0]


# --- section two: SIT and weakly SIT rings ---


@_register("L2.15", "5 = e +- t forces 120 = 0")
def _five_forces_120(ring: FiniteRing) -> Outcome:
    five = ring.integer(5)
    found = decompose_element(ring, five, DecompScheme(Scheme.WEAKLY_SIT))
    witness: dict[str, Any] = {
        "five": ring.label(five),
        "one_hundred_twenty": ring.label(ring.integer(120)),
    }
    if found is not None:
        witness["decomposition"] = found.describe(ring)
    return implication(found is not None, _vanishes(ring, 120), witness)


@_register("L2.16", "weakly SIT rings split as R/8R x R/3R x R/5R")
def _three_factor_split(ring: FiniteRing) -> Outcome:
    premise = _holds(ring, Scheme.WEAKLY_SIT)
    parts = [quotient_ring(ring, scalar_ideal(ring, k)) for k in (8, 3, 5)]
    orders = [q.order for q, _ in parts]
    bijective = False
    if math.prod(orders) == ring.order:
        (q8, p8), (q3, p3), (q5, p5) = parts
        image = (p8.image * q3.order + p3.image) * q5.order + p5.image
        product = direct_product(direct_product(q8, q3), q5)
        bijective = make_hom(ring, product, image).is_injective()
    factors_ok = all(
        _holds(q, Scheme.WEAKLY_SIT) and _vanishes(q, k)
        for (q, _), k in zip(parts, (8, 3, 5), strict=True)
    )
    return implication(
        premise,
        _vanishes(ring, 120) and bijective and factors_ok,
        {"factor_orders": orders, "bijective": bijective},
    )


@_register("P2.2", "SIT passes to quotients and products")
def _sit_closure(ring: FiniteRing) -> Outcome:
    return _closure(ring, Scheme.SIT)


@_register("P2.8", "corner rings of SIT rings are SIT")
def _sit_corners(ring: FiniteRing) -> Outcome:
    premise = _holds(ring, Scheme.SIT)
    failing: list[str] = []
    if premise:
        idempotents = np.flatnonzero(element_masks(ring).idempotent)
        failing = [
            ring.label(int(e))
            for e in idempotents
            if not _holds(corner_ring(ring, int(e)), Scheme.SIT)
        ]
    return implication(premise, not failing, {"failing_corners": failing})


@_register("T2.9", "strong SIT iff strongly nil clean")
def _strong_sit_nil_clean(ring: FiniteRing) -> Outcome:
    flags = ring_flags(ring)
    side = flags.two_in_radical and flags.unit_exponent_two
    strong_sit = _holds(ring, Scheme.SIT, strong=True)
    nil_clean = _holds(ring, Scheme.NIL_CLEAN, strong=True)
    return combine(
        both_ways("", side, strong_sit, nil_clean),
        {
            "two_in_radical": flags.two_in_radical,
            "unit_exponent_two": flags.unit_exponent_two,
            "strong_sit": strong_sit,
            "strongly_nil_clean": nil_clean,
        },
    )


@_register("P2.14", "weakly SIT passes to quotients and products")
def _weakly_sit_closure(ring: FiniteRing) -> Outcome:
    return _closure(ring, Scheme.WEAKLY_SIT)


def _polynomial_idempotent(ring: FiniteRing, element: int) -> bool:
    masks = element_masks(ring)
    return any(
        masks.idempotent[e]
        and (
            masks.nilpotent[ring.sub[element, e]]
            or masks.nilpotent[ring.add_table[element, e]]
        )
        for e in generated_subring(ring, [element])
    )


@_register("T2.17", "strongly weakly nil clean iff a +- a^2 nilpotent")
def _weakly_nil_clean_forms(ring: FiniteRing) -> Outcome:
    masks = element_masks(ring)
    elements = np.arange(ring.order)
    squares = ring.powers(2)
    first = _holds(ring, Scheme.WEAKLY_NIL_CLEAN, strong=True)
    second_bad = ~(
        masks.nilpotent[ring.sub[elements, squares]]
        | masks.nilpotent[ring.add_table[elements, squares]]
    )
    third_bad = np.array(
        [not _polynomial_idempotent(ring, a) for a in range(ring.order)]
    )
    return combine(
        both_ways("(1)<=>(2)", True, first, not second_bad.any())
        + both_ways("(1)<=>(3)", True, first, not third_bad.any()),
        {
            "strongly_weakly_nil_clean": first,
            "square_clause_fails_at": _first_label(ring, second_bad),
            "idempotent_clause_fails_at": _first_label(ring, third_bad),
        },
    )


@_register("T2.18", "strongly weakly nil clean iff R/J weakly Boolean, J nil")
def _weakly_nil_clean_radical(ring: FiniteRing) -> Outcome:
    lhs = _holds(ring, Scheme.WEAKLY_NIL_CLEAN, strong=True)
    quotient_ok = is_weakly_boolean(_semisimple_quotient(ring))
    nil = is_nil(jacobson_radical(ring))
    return combine(
        both_ways("", True, lhs, quotient_ok and nil),
        {
            "strongly_weakly_nil_clean": lhs,
            "quotient_weakly_boolean": quotient_ok,
            "radical_nil": nil,
        },
    )


@_register("T2.19", "characterisations of strong weakly SIT when 2 in J")
def _strong_weakly_sit_forms(ring: FiniteRing) -> Outcome:
    flags = ring_flags(ring)
    side = flags.two_in_radical
    radical = jacobson_radical(ring).array
    mul, add, neg = ring.mul_table, ring.add_table, ring.neg
    squares = mul[radical, radical]
    doubles = add[radical, radical]
    quotient_ok = is_weakly_boolean(_semisimple_quotient(ring))
    sextic = satisfies_identity(ring, Identity.SIX_FOUR)
    clauses = {
        1: _holds(ring, Scheme.WEAKLY_SIT, strong=True),
        3: sextic.holds,
        4: quotient_ok
        and bool(((squares == doubles) & (squares == neg[doubles])).all()),
        5: quotient_ok and flags.unit_exponent_two,
    }
    clauses[2] = clauses[1] and _vanishes(ring, 8)
    directions = []
    for k in (2, 3, 4, 5):
        directions += both_ways(f"(1)<=>({k})", side, clauses[1], clauses[k])
    witness: dict[str, Any] = {
        f"clause_{k}": clauses[k] for k in sorted(clauses)
    }
    if sextic.counterexample is not None:
        witness["sextic_fails_at"] = ring.label(sextic.counterexample)
    return combine(directions, witness)


def _strong_weak_identity(
    ring: FiniteRing, p: int, identity: Identity
) -> Outcome:
    premise = _holds(ring, Scheme.WEAKLY_SIT, strong=True) and _vanishes(
        ring, p
    )
    check = satisfies_identity(ring, identity)
    witness: dict[str, Any] = {"identity": str(identity)}
    if check.counterexample is not None:
        witness["fails_at"] = ring.label(check.counterexample)
    return implication(premise, check.holds, witness)


@_register("P2.20", "strong weakly SIT with 3 = 0 satisfies x^3 = x")
def _characteristic_three(ring: FiniteRing) -> Outcome:
    return _strong_weak_identity(ring, 3, Identity.CUBE)


@_register("P2.21", "strong weakly SIT with 5 = 0 satisfies x^5 = x")
def _characteristic_five(ring: FiniteRing) -> Outcome:
    return _strong_weak_identity(ring, 5, Identity.FIFTH)


@_register("T2.25", "RG semisimple iff R semisimple and |G| a unit")
def _group_ring_semisimple(ring: FiniteRing) -> Outcome:
    expr = ring.provenance
    if not isinstance(expr, GroupRing):
        return implication(False, True, {"group_ring": False})
    base = build(expr.base)
    lhs = ring_flags(ring).is_semisimple
    base_ok = ring_flags(base).is_semisimple
    invertible = maschke_condition(base, expr.group.order)
    return combine(
        both_ways("", True, lhs, base_ok and invertible),
        {
            "semisimple": lhs,
            "base_semisimple": base_ok,
            "group_order_invertible": invertible,
        },
    )


# --- section three: amalgamations ---


@_register(
    "P3.4", "uniquely SIT amalgamation has uniquely SIT A", SubjectKind.AMALGAM
)
def _unique_descends(amalgam: AmalgamRing) -> Outcome:
    return implication(
        uniquely_holds(amalgam.ring, Scheme.SIT),
        uniquely_holds(amalgam.spec.source, Scheme.SIT),
        {},
    )


@_register(
    "P3.5", "SIT amalgamation has SIT A and f(A)+J", SubjectKind.AMALGAM
)
def _sit_descends(amalgam: AmalgamRing) -> Outcome:
    spec = amalgam.spec
    source_ok = _holds(spec.source, Scheme.SIT)
    image_ok = _holds(amalgam.image_f, Scheme.SIT)
    quotient = amalgam_quotient_iso_check(spec.f, spec.ideal)
    return combine(
        [
            DirectionVerdict(
                "images",
                _holds(amalgam.ring, Scheme.SIT),
                source_ok and image_ok,
            ),
            DirectionVerdict("quotient", True, quotient),
        ],
        {
            "source_sit": source_ok,
            "image_sit": image_ok,
            "quotient_isomorphism": quotient,
        },
    )


@_register(
    "P3.6",
    "with (f(A)+J)/J uniquely SIT: amalgamation SIT iff A and f(A)+J are",
    SubjectKind.AMALGAM,
)
def _sit_under_unique_quotient(amalgam: AmalgamRing) -> Outcome:
    spec = amalgam.spec
    side = uniquely_holds(
        _image_mod_ideal(amalgam.image_f, spec.ideal), Scheme.SIT
    )
    both = _holds(spec.source, Scheme.SIT) and _holds(
        amalgam.image_f, Scheme.SIT
    )
    return combine(
        both_ways("", side, _holds(amalgam.ring, Scheme.SIT), both),
        {"quotient_uniquely_sit": side},
    )


@_register(
    "R3.7", "amalgamation along B and along J with f^-1(J) = 0",
    SubjectKind.AMALGAM,
)
def _extreme_ideals(amalgam: AmalgamRing) -> Outcome:
    spec = amalgam.spec
    source, target = spec.source, spec.f.target
    whole, trivial = spec.ideal.is_whole(), spec.kernel.is_zero()
    sit = _holds(amalgam.ring, Scheme.SIT)
    directions = [
        DirectionVerdict(
            "(1) order",
            whole,
            amalgam.ring.order == source.order * target.order,
        )
    ]
    directions += both_ways(
        "(1)",
        whole,
        sit,
        _holds(source, Scheme.SIT) and _holds(target, Scheme.SIT),
    )
    directions += both_ways(
        "(2)", trivial, sit, _holds(amalgam.image_f, Scheme.SIT)
    )
    return combine(
        directions, {"ideal_is_whole": whole, "preimage_is_zero": trivial}
    )


@_register(
    "C3.8",
    "duplication with A/I uniquely SIT: A >< I SIT iff A SIT",
    SubjectKind.AMALGAM,
)
def _duplication_sit(amalgam: AmalgamRing) -> Outcome:
    spec = amalgam.spec
    duplicated = spec.f.tag is HomTag.IDENTITY
    side = duplicated and uniquely_holds(
        quotient_ring(spec.ideal.ring, spec.ideal)[0], Scheme.SIT
    )
    return combine(
        both_ways(
            "",
            side,
            _holds(amalgam.ring, Scheme.SIT),
            _holds(spec.source, Scheme.SIT),
        ),
        {"duplication": duplicated},
    )


@_register(
    "P3.9",
    "along an idempotent-generated ideal: SIT iff A and f(A)+(e) are",
    SubjectKind.AMALGAM,
)
def _idempotent_ideal_sit(amalgam: AmalgamRing) -> Outcome:
    """Only applies to commutative targets: splitting along ``e`` needs
    ``e`` to commute with ``f(A)``."""
    spec = amalgam.spec
    commutative = spec.f.target.is_commutative
    generated = _generated_by_idempotent(spec.ideal)
    both = _holds(spec.source, Scheme.SIT) and _holds(
        amalgam.image_f, Scheme.SIT
    )
    return combine(
        both_ways(
            "",
            commutative and generated,
            _holds(amalgam.ring, Scheme.SIT),
            both,
        ),
        {
            "target_commutative": commutative,
            "idempotent_generated": generated,
        },
    )


@_register(
    "P3.10", "idempotent ideals with 3 = 0, and tripotent amalgamations",
    SubjectKind.AMALGAM,
)
def _idempotent_members(amalgam: AmalgamRing) -> Outcome:
    """Clause (1) and the reverse of clause (2) expand squares and cubes of
    ``(a, f(a) + j)`` and need a commutative target. The forward direction
    of (2) applies to every amalgam."""
    spec = amalgam.spec
    target = spec.f.target
    masks = element_masks(target)
    members = spec.ideal.array
    commutative = target.is_commutative
    three_zero = _vanishes(target, 3)
    inside_id = bool(masks.idempotent[members].all())
    inside_tr = bool(masks.tripotent[members].all())
    directions = both_ways(
        "(1)",
        commutative and inside_id and three_zero,
        _holds(amalgam.ring, Scheme.SIT),
        _holds(spec.source, Scheme.SIT),
    )
    tripotent = ring_flags(amalgam.ring).is_tripotent
    parts = ring_flags(spec.source).is_tripotent and inside_tr and three_zero
    directions += [
        DirectionVerdict("(2) forward", True, not tripotent or parts),
        DirectionVerdict("(2) reverse", commutative, not parts or tripotent),
    ]
    return combine(
        directions,
        {
            "target_commutative": commutative,
            "ideal_in_idempotents": inside_id,
            "ideal_in_tripotents": inside_tr,
            "three_is_zero": three_zero,
        },
    )


# --- section four: SITT rings and bi-amalgamations ---


@_register("P4.3", "SITT passes to quotients and products")
def _sitt_closure(ring: FiniteRing) -> Outcome:
    return _closure(ring, Scheme.SITT)


def _nilpotent_power_gap(ring: FiniteRing, k: int) -> np.ndarray:
    """Mask of elements where ``a^k - a`` is not nilpotent."""
    gap = ring.sub[ring.powers(k), np.arange(ring.order)]
    return ~element_masks(ring).nilpotent[gap]


@_register("P4.4", "strong SITT with 2 nilpotent: a^2 - a nilpotent")
def _sitt_two_nilpotent(ring: FiniteRing) -> Outcome:
    flags = ring_flags(ring)
    premise = _holds(ring, Scheme.SITT, strong=True) and flags.two_nilpotent
    bad = _nilpotent_power_gap(ring, 2)
    return implication(
        premise, not bad.any(), {"fails_at": _first_label(ring, bad)}
    )


@_register("P4.5", "strong SITT with 3 nilpotent: a^3 - a nilpotent")
def _sitt_three_nilpotent(ring: FiniteRing) -> Outcome:
    flags = ring_flags(ring)
    premise = _holds(ring, Scheme.SITT, strong=True) and flags.three_nilpotent
    bad = _nilpotent_power_gap(ring, 3)
    return implication(
        premise, not bad.any(), {"fails_at": _first_label(ring, bad)}
    )


@_register("T4.7", "strong SITT with 3 nilpotent: J nil, R/J has x^3 = x")
def _sitt_ternary(ring: FiniteRing) -> Outcome:
    flags = ring_flags(ring)
    premise = _holds(ring, Scheme.SITT, strong=True) and flags.three_nilpotent
    cube = satisfies_identity(_semisimple_quotient(ring), Identity.CUBE)
    return implication(
        premise,
        flags.radical_is_nil and cube.holds,
        {"radical_nil": flags.radical_is_nil, "quotient_cube": cube.holds},
    )


@_register("T4.8", "strongly clean strong SITT with 2 nilpotent")
def _sitt_binary(ring: FiniteRing) -> Outcome:
    flags = ring_flags(ring)
    premise = (
        _holds(ring, Scheme.CLEAN, strong=True)
        and flags.two_nilpotent
        and _holds(ring, Scheme.SITT, strong=True)
    )
    boolean = ring_flags(_semisimple_quotient(ring)).is_boolean
    return implication(
        premise,
        boolean and flags.radical_is_nil,
        {"quotient_boolean": boolean, "radical_nil": flags.radical_is_nil},
    )


def _bi_data(
    amalgam: AmalgamRing,
) -> tuple[RingHom, RingHom, Ideal, Ideal, FiniteRing]:
    spec = amalgam.spec
    assert spec.g is not None and spec.ideal_prime is not None
    assert amalgam.image_g is not None
    return spec.f, spec.g, spec.ideal, spec.ideal_prime, amalgam.image_g


@_register(
    "T4.11", "bi-amalgamation is the pullback of the induced maps",
    SubjectKind.BI_AMALGAM,
)
def _pullback(amalgam: AmalgamRing) -> Outcome:
    f, g, ideal, ideal_prime, _ = _bi_data(amalgam)
    same = check_pullback_identity(f, g, ideal, ideal_prime)
    return implication(True, same, {"pullback_matches": same})


@_register(
    "P4.13", "SITT bi-amalgamation has SITT f(A)+J and g(A)+J'",
    SubjectKind.BI_AMALGAM,
)
def _sitt_descends(amalgam: AmalgamRing) -> Outcome:
    f, g, ideal, ideal_prime, image_g = _bi_data(amalgam)
    images = _holds(amalgam.image_f, Scheme.SITT) and _holds(
        image_g, Scheme.SITT
    )
    quotients = quotient_iso_check(f, g, ideal, ideal_prime)
    return combine(
        [
            DirectionVerdict(
                "images", _holds(amalgam.ring, Scheme.SITT), images
            ),
            DirectionVerdict("quotients", True, quotients),
        ],
        {"images_sitt": images, "quotient_isomorphisms": quotients},
    )


@_register(
    "P4.15",
    "with unique quotients: SITT iff f(A)+J and g(A)+J' are",
    SubjectKind.BI_AMALGAM,
)
def _sitt_under_unique_quotients(amalgam: AmalgamRing) -> Outcome:
    f, _, ideal, ideal_prime, image_g = _bi_data(amalgam)
    side = (
        _holds(f.source, Scheme.SITT)
        and uniquely_holds(
            _image_mod_ideal(amalgam.image_f, ideal), Scheme.SITT
        )
        and uniquely_holds(_image_mod_ideal(image_g, ideal_prime), Scheme.SITT)
    )
    images = _holds(amalgam.image_f, Scheme.SITT) and _holds(
        image_g, Scheme.SITT
    )
    return combine(
        both_ways("", side, _holds(amalgam.ring, Scheme.SITT), images),
        {"images_sitt": images},
    )


@_register(
    "P4.16",
    "idempotent-generated ideals: SITT iff f(A)+(e1) and g(A)+(e2) are",
    SubjectKind.BI_AMALGAM,
)
def _sitt_idempotent_ideals(amalgam: AmalgamRing) -> Outcome:
    """Both targets must be commutative, as for the single-target case."""
    f, g, ideal, ideal_prime, image_g = _bi_data(amalgam)
    commutative = f.target.is_commutative and g.target.is_commutative
    generated = _generated_by_idempotent(
        ideal
    ) and _generated_by_idempotent(ideal_prime)
    side = commutative and generated and _holds(f.source, Scheme.SITT)
    images = _holds(amalgam.image_f, Scheme.SITT) and _holds(
        image_g, Scheme.SITT
    )
    return combine(
        both_ways("", side, _holds(amalgam.ring, Scheme.SITT), images),
        {
            "targets_commutative": commutative,
            "idempotent_generated": generated,
            "images_sitt": images,
        },
    )
