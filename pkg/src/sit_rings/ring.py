"""Finite rings given by Cayley tables."""

import logging
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from .exceptions import InvalidRing
from .exceptions import UnknownElement


if TYPE_CHECKING:
    from collections.abc import Iterable

    from .expressions import RingExpr


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomViolation:
    """A failed ring axiom together with the elements witnessing it."""

    axiom: str
    witness: tuple[int, ...] = ()

    def describe(self, labels: tuple[str, ...] | None = None) -> str:
        if labels is None or any(i >= len(labels) for i in self.witness):
            shown = ", ".join(str(i) for i in self.witness)
        else:
            shown = ", ".join(labels[i] for i in self.witness)
        return f"{self.axiom} fails at ({shown})"


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite unital ring.

    Elements are the indices ``0 .. order-1``; ``labels[i]`` is the
    canonical text of element ``i``. Tables are read-only numpy arrays.
    Instances compare and hash by identity so they can key weak caches.
    """

    labels: tuple[str, ...]
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    zero: int
    one: int
    provenance: "RingExpr"

    def __post_init__(self) -> None:
        for name in ("add_table", "mul_table"):
            table = np.array(getattr(self, name), dtype=np.int64)
            table.setflags(write=False)
            object.__setattr__(self, name, table)

    def __repr__(self) -> str:
        return f"<FiniteRing {self.describe()} order={self.order}>"

    @property
    def order(self) -> int:
        return len(self.labels)

    def describe(self) -> str:
        return self.provenance.describe()

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        """Return the element with the given canonical label.

        :raises UnknownElement: If no element carries ``label``.
        """
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownElement(
                f"{label!r} is not an element of {self.describe()}",
                context={"label": label, "ring": self.describe()},
            ) from None

    def label(self, element: int) -> str:
        return self.labels[element]

    def labels_of(self, elements: "Iterable[int]") -> list[str]:
        return [self.labels[int(e)] for e in elements]

    @cached_property
    def neg(self) -> np.ndarray:
        """``neg[a]`` is the additive inverse of ``a``."""
        table = np.argmax(self.add_table == self.zero, axis=1)
        table.setflags(write=False)
        return table

    @cached_property
    def sub(self) -> np.ndarray:
        """``sub[a, b]`` is ``a - b``."""
        table = self.add_table[:, self.neg]
        table.setflags(write=False)
        return table

    @cached_property
    def commutes(self) -> np.ndarray:
        """Boolean table, ``commutes[a, b]`` iff ``ab = ba``."""
        table = self.mul_table == self.mul_table.T
        table.setflags(write=False)
        return table

    @cached_property
    def is_commutative(self) -> bool:
        return bool(self.commutes.all())

    @cached_property
    def characteristic(self) -> int:
        """Additive order of the identity."""
        element, k = self.one, 1
        while element != self.zero:
            element = int(self.add_table[element, self.one])
            k += 1
        return k if self.order > 1 else 1

    def integer(self, k: int) -> int:
        """Return the element ``k * 1``."""
        result = self.zero
        for _ in range(k % self.characteristic):
            result = int(self.add_table[result, self.one])
        return result

    def multiple(self, k: int, element: int) -> int:
        """Return ``k * element``."""
        return int(self.mul_table[self.integer(k), element])

    def power(self, element: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul_table[result, element])
        return result

    def powers(self, k: int) -> np.ndarray:
        """Vector of ``a**k`` for every element ``a``."""
        elements = np.arange(self.order)
        result = np.full(self.order, self.one)
        for _ in range(k):
            result = self.mul_table[result, elements]
        return result

    def restrict(
        self,
        members: "Iterable[int]",
        *,
        provenance: "RingExpr",
        one: int | None = None,
    ) -> "FiniteRing":
        """Build the ring carried by a closed subset of this ring.

        Members keep this ring's canonical order and labels. ``one`` is
        the identity of the new ring (defaults to this ring's identity,
        corner rings pass their idempotent).

        :raises InvalidRing: If the subset is not closed or the result
            fails the ring axioms.
        """
        kept = np.unique(np.fromiter(members, dtype=np.int64))
        identity = self.one if one is None else one

        def encode(values: np.ndarray) -> np.ndarray:
            position = np.searchsorted(kept, values).clip(0, len(kept) - 1)
            if not (kept[position] == values).all():
                raise InvalidRing(
                    "subset is not closed under the ring operations",
                    context={"ring": self.describe(), "size": len(kept)},
                )
            return position

        ring = FiniteRing(
            labels=tuple(self.labels[i] for i in kept),
            add_table=encode(self.add_table[np.ix_(kept, kept)]),
            mul_table=encode(self.mul_table[np.ix_(kept, kept)]),
            zero=int(encode(np.array(self.zero))),
            one=int(encode(np.array(identity))),
            provenance=provenance,
        )
        return ensure_valid(ring)


def validate_ring(ring: FiniteRing) -> list[AxiomViolation]:
    """Check every ring axiom exhaustively.

    Returns one violation per failing axiom, each with its first witness
    in canonical order. An empty list means the tables form a unital ring.
    """
    n = ring.order
    add, mul = ring.add_table, ring.mul_table
    if n == 0:
        return [AxiomViolation("non-empty carrier")]
    if add.shape != (n, n) or mul.shape != (n, n):
        return [AxiomViolation("table shape")]
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        return [AxiomViolation("table entries in range")]
    if not (0 <= ring.zero < n and 0 <= ring.one < n):
        return [AxiomViolation("distinguished elements in range")]
    violations = []
    if len(set(ring.labels)) != n:
        violations.append(AxiomViolation("distinct labels"))
    if ring.zero == ring.one and n > 1:
        violations.append(AxiomViolation("zero differs from one", (ring.zero,)))

    elements = np.arange(n)
    checks = {
        "additive commutativity": np.argwhere(add != add.T),
        "additive identity": np.argwhere(
            (add[ring.zero] != elements) | (add[:, ring.zero] != elements)
        ),
        "additive inverse": np.argwhere(~(add == ring.zero).any(axis=1)),
        "multiplicative identity": np.argwhere(
            (mul[ring.one] != elements) | (mul[:, ring.one] != elements)
        ),
    }
    for axiom, bad in checks.items():
        if bad.size:
            violations.append(
                AxiomViolation(axiom, tuple(int(v) for v in bad[0]))
            )

    found: dict[str, tuple[int, ...]] = {}
    for a in range(n):
        row_add, row_mul, col_mul = add[a], mul[a], mul[:, a]
        triples = {
            "additive associativity": (add[row_add], row_add[add], False),
            "multiplicative associativity": (
                mul[row_mul],
                row_mul[mul],
                False,
            ),
            "left distributivity": (
                row_mul[add],
                add[row_mul[:, None], row_mul[None, :]],
                False,
            ),
            "right distributivity": (
                col_mul[add],
                add[col_mul[:, None], col_mul[None, :]],
                True,
            ),
        }
        for axiom, (lhs, rhs, trailing) in triples.items():
            if axiom in found:
                continue
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                b, c = (int(v) for v in bad[0])
                found[axiom] = (b, c, a) if trailing else (a, b, c)
        if len(found) == len(triples):
            break
    violations.extend(AxiomViolation(k, v) for k, v in found.items())
    return violations


def ensure_valid(ring: FiniteRing) -> FiniteRing:
    """Return ``ring`` or raise :class:`InvalidRing` listing violations."""
    violations = validate_ring(ring)
    if violations:
        raise InvalidRing(
            f"{ring.describe()} is not a ring: "
            f"{violations[0].describe(ring.labels)}",
            context={"ring": ring.describe(), "violations": violations},
        )
    logger.debug("Built %s of order %d", ring.describe(), ring.order)
    return ring
