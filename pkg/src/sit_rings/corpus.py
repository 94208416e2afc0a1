"""Deterministic corpora of rings and amalgam instances for the suite."""

import itertools
import logging
import math
import random
from collections.abc import Callable
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator

from . import catalog
from .amalgam import AmalgamRing
from .amalgam import amalgamation
from .amalgam import bi_amalgamation
from .amalgam import duplication
from .constructions import direct_product
from .constructions import poly_quotient
from .constructions import zmod
from .ring import FiniteRing
from .subobjects import ideal_generated
from .subobjects import make_hom
from .subobjects import scalar_ideal
from .types import SubjectKind


logger = logging.getLogger(__name__)


class CorpusSpec(BaseModel):
    """Which ring families make up a corpus.

    ``sample`` keeps a seeded random subset of the generated amalgam
    instances; the other families are always kept whole.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_order: int = Field(default=256, ge=1)
    zmod_range: tuple[int, int] | None = (2, 30)
    products: bool = True
    matrix_rings: bool = True
    poly_quotients: bool = True
    group_rings: bool = True
    paper_examples: bool = True
    amalgams: bool = True
    sample: int | None = Field(default=None, ge=0)
    seed: int = 0

    @model_validator(mode="after")
    def _check_range(self) -> "CorpusSpec":
        if self.zmod_range is not None:
            low, high = self.zmod_range
            if not 1 <= low <= high:
                raise ValueError("zmod_range must satisfy 1 <= low <= high")
        return self

    @classmethod
    def empty(cls) -> "CorpusSpec":
        """A spec with every family switched off."""
        return cls(
            zmod_range=None,
            products=False,
            matrix_rings=False,
            poly_quotients=False,
            group_rings=False,
            paper_examples=False,
            amalgams=False,
        )

    @classmethod
    def from_file(cls, path: Path) -> "CorpusSpec":
        return cls.model_validate_json(path.read_text(encoding="utf-8"))


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    """A named suite subject: a plain ring or an amalgam instance."""

    name: str
    ring: FiniteRing
    amalgam: AmalgamRing | None = None

    @property
    def kind(self) -> SubjectKind:
        if self.amalgam is None:
            return SubjectKind.RING
        return self.amalgam.kind

    @property
    def subject(self) -> FiniteRing | AmalgamRing:
        return self.ring if self.amalgam is None else self.amalgam

    @classmethod
    def of(
        cls, subject: FiniteRing | AmalgamRing, name: str | None = None
    ) -> "CorpusEntry":
        if isinstance(subject, AmalgamRing):
            return cls(name or subject.describe(), subject.ring, subject)
        return cls(name or subject.describe(), subject)


@dataclass(frozen=True)
class Recipe:
    """A corpus member before construction.

    ``order`` is known up front so oversized members are skipped without
    building them. Rings without an explicit ``name`` are named by their
    expression.
    """

    order: int
    build: Callable[[], FiniteRing | AmalgamRing]
    name: str | None = None

    def make(self) -> CorpusEntry:
        return CorpusEntry.of(self.build(), self.name)


_PRODUCT_FACTORS = (2, 3, 4, 5, 6)
_MATRIX_RINGS = (
    Recipe(16, lambda: catalog.full_matrices(2)),
    Recipe(81, lambda: catalog.full_matrices(3)),
    Recipe(8, lambda: catalog.triangular(2)),
    Recipe(27, lambda: catalog.triangular(3)),
    Recipe(64, lambda: catalog.triangular(4)),
    Recipe(64, lambda: catalog.triangular(2, 3)),
    Recipe(16, catalog.corner_pattern_ring),
)
# x^2 + 1 over Z4 is listed separately as Z4[i].
_Z4_MODULI = ((0, 0, 1), (2, 0, 1), (3, 0, 1), (1, 1, 1))


def _monic(q: int, degree: int) -> Iterator[tuple[int, ...]]:
    for lower in itertools.product(range(q), repeat=degree):
        yield (*lower, 1)


def _poly_recipes() -> Iterator[Recipe]:
    moduli = [(2, m) for degree in (2, 3) for m in _monic(2, degree)]
    moduli += [(3, m) for m in _monic(3, 2)]
    moduli += [(4, m) for m in _Z4_MODULI]
    for q, modulus in moduli:
        yield Recipe(
            q ** (len(modulus) - 1),
            lambda q=q, modulus=modulus: poly_quotient(zmod(q), modulus),
        )
    yield Recipe(16, catalog.gaussian_z4)


def _ring_recipes(spec: CorpusSpec) -> Iterator[Recipe]:
    if spec.zmod_range is not None:
        low, high = spec.zmod_range
        for n in range(low, high + 1):
            yield Recipe(n, lambda n=n: zmod(n))
    if spec.products:
        for p, q in itertools.combinations_with_replacement(
            _PRODUCT_FACTORS, 2
        ):
            yield Recipe(
                p * q, lambda p=p, q=q: direct_product(zmod(p), zmod(q))
            )
    if spec.matrix_rings:
        yield from _MATRIX_RINGS
    if spec.poly_quotients:
        yield from _poly_recipes()
    if spec.group_rings:
        for n, bases in ((2, range(2, 7)), (3, range(2, 5))):
            for q in bases:
                yield Recipe(
                    q**n, lambda q=q, n=n: catalog.cyclic_group_ring(q, n)
                )
    if spec.paper_examples:
        yield Recipe(8, catalog.triangular_amalgam, "triangular amalgam")
        yield Recipe(
            4, catalog.corner_pattern_amalgam, "corner pattern amalgam"
        )
        yield Recipe(
            8,
            catalog.triangular_pattern_bi_amalgam,
            "triangular/pattern bi-amalgam",
        )


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _zmod_duplication(n: int, d: int) -> AmalgamRing:
    ring = zmod(n)
    return duplication(ring, scalar_ideal(ring, d))


def _zmod_amalgamation(n: int, m: int, d: int) -> AmalgamRing:
    source, target = zmod(n), zmod(m)
    f = make_hom(source, target, [a % m for a in range(n)])
    return amalgamation(f, scalar_ideal(target, d))


def _zmod_bi_amalgamation(n: int, m1: int, m2: int, d: int) -> AmalgamRing:
    source, first, second = zmod(n), zmod(m1), zmod(m2)
    return bi_amalgamation(
        make_hom(source, first, [a % m1 for a in range(n)]),
        make_hom(source, second, [a % m2 for a in range(n)]),
        scalar_ideal(first, d),
        scalar_ideal(second, d),
    )


def _generator_duplication(ring: FiniteRing, generator: str) -> AmalgamRing:
    return duplication(ring, ideal_generated(ring, [ring.index(generator)]))


# Generator label and the size of the ideal it generates in T2(Z2).
_TRIANGULAR_GENERATORS = (
    ("[[0,0],[0,0]]", 1),
    (catalog.E12, 2),
    (catalog.E22, 4),
    ("[[1,0],[0,0]]", 4),
    ("[[1,0],[0,1]]", 8),
)


def _amalgam_recipes() -> Iterator[Recipe]:
    for n in range(2, 11):
        for d in _divisors(n):
            yield Recipe(
                n * (n // d),
                lambda n=n, d=d: _zmod_duplication(n, d),
                f"Z{n} >< {d}Z{n}",
            )
    for n in (4, 6, 8, 9, 10, 12):
        for m in _divisors(n)[1:-1]:
            for d in _divisors(m):
                yield Recipe(
                    n * (m // d),
                    lambda n=n, m=m, d=d: _zmod_amalgamation(n, m, d),
                    f"Z{n} >< {d}Z{m} via Z{n}->Z{m}",
                )
    for n in (4, 6, 12):
        for m1, m2 in itertools.combinations(_divisors(n)[1:], 2):
            for d in _divisors(math.gcd(m1, m2)):
                yield Recipe(
                    m1 * m2 // d,
                    lambda n=n, m1=m1, m2=m2, d=d: _zmod_bi_amalgamation(
                        n, m1, m2, d
                    ),
                    f"Z{m1} ><_Z{n} Z{m2} along ({d}Z{m1}, {d}Z{m2})",
                )
    for generator, size in _TRIANGULAR_GENERATORS:
        yield Recipe(
            8 * size,
            lambda g=generator: _generator_duplication(
                catalog.triangular(2), g
            ),
            f"T2(Z2) >< ({generator})",
        )
    yield Recipe(
        8,
        lambda: _generator_duplication(catalog.cyclic_group_ring(2), "1+x"),
        "Z2[C2] >< (1+x)",
    )


def generate_corpus(spec: CorpusSpec | None = None) -> list[CorpusEntry]:
    """Build the corpus described by ``spec`` (the default corpus when
    omitted).

    Members larger than ``spec.max_order`` are skipped; the result is the
    same list, in the same order, every time.

    :raises CapExceeded: If an enabled member exceeds the active caps.
    """
    spec = spec or CorpusSpec()
    recipes = [r for r in _ring_recipes(spec) if r.order <= spec.max_order]
    if spec.amalgams:
        generated = [
            r for r in _amalgam_recipes() if r.order <= spec.max_order
        ]
        if spec.sample is not None:
            picked = random.Random(spec.seed).sample(
                range(len(generated)), min(spec.sample, len(generated))
            )
            generated = [generated[i] for i in sorted(picked)]
        recipes += generated
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    for recipe in recipes:
        entry = recipe.make()
        if entry.name in seen:
            continue
        seen.add(entry.name)
        entries.append(entry)
    logger.info("Generated corpus of %d subjects", len(entries))
    return entries
