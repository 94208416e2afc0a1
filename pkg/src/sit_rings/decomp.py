"""Decomposition searches: SIT, weakly SIT, SITT and the clean family.

Every search is exhaustive and runs in canonical order: idempotents
ascending; for the weak schemes sign ``+1`` before ``-1``; for SITT the
first tripotent ascending with ``t1 <= t2`` so unordered pairs are counted
once.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .caching import memoized
from .classify import RingFlags
from .classify import element_masks
from .classify import ring_flags
from .ring import FiniteRing
from .types import DecompositionData
from .types import Scheme
from .types import SchemeVerdictData


logger = logging.getLogger(__name__)

ROLES: dict[Scheme, tuple[str, ...]] = {
    Scheme.SIT: ("e", "t"),
    Scheme.WEAKLY_SIT: ("e", "t"),
    Scheme.SITT: ("e", "t1", "t2"),
    Scheme.NIL_CLEAN: ("e", "n"),
    Scheme.WEAKLY_NIL_CLEAN: ("e", "n"),
    Scheme.CLEAN: ("e", "u"),
}


@dataclass(frozen=True)
class DecompScheme:
    """A scheme together with the commuting ("strong") requirement."""

    scheme: Scheme
    strong: bool = False

    def __str__(self) -> str:
        return f"strong {self.scheme}" if self.strong else str(self.scheme)


ALL_SCHEMES = tuple(
    DecompScheme(scheme, strong)
    for scheme in Scheme
    for strong in (False, True)
)


@dataclass(frozen=True)
class Decomposition:
    """A witness ``element = parts`` under ``scheme``.

    ``sign`` is ``-1`` for ``a = e - t`` (weakly SIT) and ``a = -e + n``
    (weakly nil-clean), ``+1`` otherwise.
    """

    element: int
    scheme: DecompScheme
    parts: tuple[int, ...]
    sign: int = 1
    commuting: bool = False

    def describe(self, ring: FiniteRing) -> str:
        labels = [ring.label(p) for p in self.parts]
        scheme = self.scheme.scheme
        if self.sign < 0 and scheme is Scheme.WEAKLY_NIL_CLEAN:
            rhs = f"-{labels[0]} + {labels[1]}"
        elif self.sign < 0:
            rhs = f"{labels[0]} - {labels[1]}"
        else:
            rhs = " + ".join(labels)
        return f"{ring.label(self.element)} = {rhs}"

    def as_data(self, ring: FiniteRing) -> DecompositionData:
        roles = ROLES[self.scheme.scheme]
        return {
            "element": ring.label(self.element),
            "scheme": str(self.scheme.scheme),
            "strong": self.scheme.strong,
            "parts": {
                role: ring.label(p)
                for role, p in zip(roles, self.parts, strict=True)
            },
            "sign": self.sign,
            "commuting": self.commuting,
        }


def _part_masks(ring: FiniteRing, scheme: Scheme) -> np.ndarray:
    masks = element_masks(ring)
    if scheme in (Scheme.NIL_CLEAN, Scheme.WEAKLY_NIL_CLEAN):
        return masks.nilpotent
    if scheme is Scheme.CLEAN:
        return masks.unit
    return masks.tripotent


def _pairwise_commute(ring: FiniteRing, parts: tuple[int, ...]) -> bool:
    return all(
        ring.commutes[p, q]
        for i, p in enumerate(parts)
        for q in parts[i + 1 :]
    )


def iter_decompositions(
    ring: FiniteRing, element: int, scheme: DecompScheme
) -> Iterator[Decomposition]:
    """Yield every decomposition of ``element`` in canonical order."""
    masks = element_masks(ring)
    idempotents = np.flatnonzero(masks.idempotent)
    kind = _part_masks(ring, scheme.scheme)
    sub, add = ring.sub, ring.add_table
    a = element

    def emit(parts: tuple[int, ...], sign: int) -> Decomposition | None:
        commuting = _pairwise_commute(ring, parts)
        if scheme.strong and not commuting:
            return None
        return Decomposition(a, scheme, parts, sign, commuting)

    for e in (int(v) for v in idempotents):
        match scheme.scheme:
            case Scheme.SIT | Scheme.NIL_CLEAN | Scheme.CLEAN:
                candidates = [(1, int(sub[a, e]))]
            case Scheme.WEAKLY_SIT:
                candidates = [(1, int(sub[a, e])), (-1, int(sub[e, a]))]
            case Scheme.WEAKLY_NIL_CLEAN:
                candidates = [(1, int(sub[a, e])), (-1, int(add[a, e]))]
            case Scheme.SITT:
                firsts = np.flatnonzero(masks.tripotent)
                seconds = sub[sub[a, e], firsts]
                good = masks.tripotent[seconds] & (seconds >= firsts)
                for t1, t2 in zip(firsts[good], seconds[good], strict=True):
                    found = emit((e, int(t1), int(t2)), 1)
                    if found is not None:
                        yield found
                continue
        for sign, rest in candidates:
            if kind[rest]:
                found = emit((e, rest), sign)
                if found is not None:
                    yield found


def decompose_element(
    ring: FiniteRing, element: int, scheme: DecompScheme
) -> Decomposition | None:
    """First decomposition in canonical order, or ``None``."""
    return next(iter_decompositions(ring, element, scheme), None)


def decomposition_count(
    ring: FiniteRing, element: int, scheme: DecompScheme
) -> int:
    return sum(1 for _ in iter_decompositions(ring, element, scheme))


def revalidate(ring: FiniteRing, found: Decomposition) -> bool:
    """Independently re-check a decomposition witness."""
    masks = element_masks(ring)
    scheme = found.scheme.scheme
    kind = _part_masks(ring, scheme)
    e, *rest = found.parts
    if not masks.idempotent[e] or not all(kind[p] for p in rest):
        return False
    add, neg = ring.add_table, ring.neg
    if scheme is Scheme.SITT:
        total = int(add[add[e, rest[0]], rest[1]])
    elif found.sign < 0 and scheme is Scheme.WEAKLY_SIT:
        total = int(add[e, neg[rest[0]]])
    elif found.sign < 0 and scheme is Scheme.WEAKLY_NIL_CLEAN:
        total = int(add[neg[e], rest[0]])
    else:
        total = int(add[e, rest[0]])
    commuting = _pairwise_commute(ring, found.parts)
    return (
        total == found.element
        and commuting == found.commuting
        and (commuting or not found.scheme.strong)
    )


def _solvable(ring: FiniteRing, scheme: DecompScheme) -> np.ndarray:
    """Boolean vector: which elements admit a decomposition."""
    masks = element_masks(ring)
    kind = _part_masks(ring, scheme.scheme)
    sub, add, comm = ring.sub, ring.add_table, ring.commutes
    tripotents = np.flatnonzero(masks.tripotent)
    solvable = np.zeros(ring.order, dtype=bool)

    def admissible(e: int, rest: np.ndarray) -> np.ndarray:
        good = kind[rest]
        return good & comm[e, rest] if scheme.strong else good

    for e in np.flatnonzero(masks.idempotent):
        match scheme.scheme:
            case Scheme.SIT | Scheme.NIL_CLEAN | Scheme.CLEAN:
                solvable |= admissible(e, sub[:, e])
            case Scheme.WEAKLY_SIT:
                solvable |= admissible(e, sub[:, e]) | admissible(e, sub[e, :])
            case Scheme.WEAKLY_NIL_CLEAN:
                solvable |= admissible(e, sub[:, e]) | admissible(e, add[:, e])
            case Scheme.SITT:
                seconds = sub[sub[:, e][:, None], tripotents[None, :]]
                good = masks.tripotent[seconds]
                if scheme.strong:
                    good &= (
                        comm[e, tripotents][None, :]
                        & comm[e, seconds]
                        & comm[tripotents[None, :], seconds]
                    )
                solvable |= good.any(axis=1)
    return solvable


@dataclass(frozen=True)
class SchemeVerdict:
    """Whether every element decomposes under ``scheme``.

    ``counterexample`` is the first failing element in canonical order and
    ``failures`` lists all of them.
    """

    ring: FiniteRing
    scheme: DecompScheme
    holds: bool
    counterexample: int | None
    failures: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds

    @cached_property
    def witnesses(self) -> dict[int, Decomposition]:
        """First witness for every decomposable element."""
        failing = set(self.failures)
        return {
            a: found
            for a in range(self.ring.order)
            if a not in failing
            and (found := decompose_element(self.ring, a, self.scheme))
            is not None
        }

    def as_data(self) -> SchemeVerdictData:
        ring = self.ring
        counterexample = None
        if self.counterexample is not None:
            counterexample = ring.label(self.counterexample)
        return {
            "scheme": str(self.scheme.scheme),
            "strong": self.scheme.strong,
            "holds": self.holds,
            "counterexample": counterexample,
            "failures": ring.labels_of(self.failures),
        }


def _compute_verdict(ring: FiniteRing, scheme: DecompScheme) -> SchemeVerdict:
    failures = tuple(int(a) for a in np.flatnonzero(~_solvable(ring, scheme)))
    logger.debug(
        "%s on %s: %d failures", scheme, ring.describe(), len(failures)
    )
    return SchemeVerdict(
        ring=ring,
        scheme=scheme,
        holds=not failures,
        counterexample=failures[0] if failures else None,
        failures=failures,
    )


def scheme_holds(ring: FiniteRing, scheme: DecompScheme) -> SchemeVerdict:
    return memoized(
        ring, ("verdict", scheme), lambda: _compute_verdict(ring, scheme)
    )


def uniquely_holds(ring: FiniteRing, scheme: Scheme) -> bool:
    """True if every element has exactly one decomposition.

    Only meaningful for :attr:`Scheme.SIT` and :attr:`Scheme.SITT`.
    """
    plain = DecompScheme(scheme)
    for a in range(ring.order):
        found = iter_decompositions(ring, a, plain)
        if next(found, None) is None or next(found, None) is not None:
            return False
    return True


@dataclass(frozen=True)
class PropertyReport:
    ring: FiniteRing
    verdicts: dict[DecompScheme, SchemeVerdict]
    uniquely_sit: bool
    uniquely_sitt: bool
    flags: RingFlags

    def holds(self, scheme: Scheme, *, strong: bool = False) -> bool:
        return self.verdicts[DecompScheme(scheme, strong)].holds


def _compute_report(ring: FiniteRing) -> PropertyReport:
    return PropertyReport(
        ring=ring,
        verdicts={s: scheme_holds(ring, s) for s in ALL_SCHEMES},
        uniquely_sit=uniquely_holds(ring, Scheme.SIT),
        uniquely_sitt=uniquely_holds(ring, Scheme.SITT),
        flags=ring_flags(ring),
    )


def property_report(ring: FiniteRing) -> PropertyReport:
    """Every scheme verdict, uniqueness and flags, cached per ring."""
    return memoized(ring, "report", lambda: _compute_report(ring))
