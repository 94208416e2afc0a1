"""JSON spec files describing a ring or an amalgam instance.

A spec file holds exactly one top-level key, ``ring`` or ``amalgam``.
Ring expressions mirror the constructors::

    {"zmod": 6}
    {"product": [{"zmod": 2}, {"zmod": 3}]}
    {"matrix": {"base": {"zmod": 2}, "size": 2, "pattern": "upper-triangular"}}
    {"poly": {"base": {"zmod": 4}, "modulus": [1, 0, 1], "variable": "i"}}
    {"group_ring": {"base": {"zmod": 6}, "group": {"cyclic": 2}}}
    {"quotient": {"base": {"zmod": 12}, "generators": ["4"]}}
    {"corner": {"base": ..., "idempotent": "[[1,0],[0,0]]"}}

A homomorphism names its ``rule``: a tag (``identity``,
``diagonal-scalar``) or an explicit ``{source label: target label}`` map.
Ideals are given by generator labels. Unknown keys are rejected. See
``docs/spec-files.md``.
"""

import json
import logging
from importlib import resources
from pathlib import Path
from typing import Annotated
from typing import Literal

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from pydantic import field_validator
from pydantic import model_validator

from .amalgam import AmalgamSpec
from .constructions import build
from .constructions import check_pattern
from .constructions import cyclic_group
from .constructions import full_mask
from .constructions import positions_mask
from .constructions import upper_triangular_mask
from .exceptions import SpecError
from .expressions import Corner
from .expressions import GroupRing
from .expressions import GroupTable
from .expressions import Matrix
from .expressions import PolyQuot
from .expressions import Product
from .expressions import Quotient
from .expressions import RingExpr
from .expressions import ZMod
from .ring import FiniteRing
from .subobjects import Ideal
from .subobjects import RingHom
from .subobjects import ideal_generated
from .subobjects import make_hom
from .types import HomTag


logger = logging.getLogger(__name__)


class _Spec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class ZModSpec(_Spec):
    zmod: int = Field(ge=1)

    def to_expr(self) -> RingExpr:
        return ZMod(self.zmod)


class ProductSpec(_Spec):
    product: tuple["RingSpec", "RingSpec"]

    def to_expr(self) -> RingExpr:
        left, right = self.product
        return Product(left.to_expr(), right.to_expr())


class MatrixBody(_Spec):
    base: "RingSpec"
    size: int = Field(ge=1)
    pattern: Literal["full", "upper-triangular"] | list[tuple[int, int]] = (
        "full"
    )


class MatrixSpec(_Spec):
    matrix: MatrixBody

    def to_expr(self) -> RingExpr:
        body = self.matrix
        match body.pattern:
            case "full":
                mask = full_mask(body.size)
            case "upper-triangular":
                mask = upper_triangular_mask(body.size)
            case positions:
                mask = positions_mask(body.size, positions)
        check_pattern(body.size, mask)
        return Matrix(body.base.to_expr(), body.size, mask)


class PolyBody(_Spec):
    base: "RingSpec"
    modulus: list[int]
    variable: str = Field(default="x", min_length=1)

    @field_validator("modulus")
    @classmethod
    def _monic(cls, modulus: list[int]) -> list[int]:
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError(
                "modulus must be monic of degree at least 1, coefficients"
                " listed from the constant term up"
            )
        return modulus


class PolySpec(_Spec):
    poly: PolyBody

    def to_expr(self) -> RingExpr:
        body = self.poly
        return PolyQuot(
            body.base.to_expr(), tuple(body.modulus), body.variable
        )


class CyclicGroupSpec(_Spec):
    cyclic: int = Field(ge=1)

    def to_group(self) -> GroupTable:
        return cyclic_group(self.cyclic)


class TableGroupSpec(_Spec):
    name: str
    elements: list[str]
    table: list[list[int]]

    def to_group(self) -> GroupTable:
        return GroupTable(
            self.name,
            tuple(self.elements),
            tuple(tuple(row) for row in self.table),
        )


class GroupRingBody(_Spec):
    base: "RingSpec"
    group: CyclicGroupSpec | TableGroupSpec


class GroupRingSpec(_Spec):
    group_ring: GroupRingBody

    def to_expr(self) -> RingExpr:
        body = self.group_ring
        return GroupRing(body.base.to_expr(), body.group.to_group())


class QuotientBody(_Spec):
    base: "RingSpec"
    generators: list[str] = Field(min_length=1)


class QuotientSpec(_Spec):
    quotient: QuotientBody

    def to_expr(self) -> RingExpr:
        body = self.quotient
        return Quotient(body.base.to_expr(), tuple(body.generators))


class CornerBody(_Spec):
    base: "RingSpec"
    idempotent: str


class CornerSpec(_Spec):
    corner: CornerBody

    def to_expr(self) -> RingExpr:
        body = self.corner
        return Corner(body.base.to_expr(), body.idempotent)


RingSpec = (
    ZModSpec
    | ProductSpec
    | MatrixSpec
    | PolySpec
    | GroupRingSpec
    | QuotientSpec
    | CornerSpec
)


class HomSpec(_Spec):
    """``target`` defaults to the source ring."""

    target: RingSpec | None = None
    rule: Literal["identity", "diagonal-scalar"] | dict[str, str] = (
        "diagonal-scalar"
    )

    def to_hom(self, source: FiniteRing) -> RingHom:
        target = source
        if self.target is not None:
            target = build(self.target.to_expr())
        match self.rule:
            case "identity":
                if target is not source:
                    raise SpecError(
                        "an identity map needs the target to be the source",
                        context={"target": target.describe()},
                    )
                return make_hom(source, source, tag=HomTag.IDENTITY)
            case "diagonal-scalar":
                return make_hom(source, target, tag=HomTag.DIAGONAL_SCALAR)
            case images:
                missing = [a for a in source.labels if a not in images]
                unknown = [a for a in images if a not in source.labels]
                if missing or unknown:
                    raise SpecError(
                        "an explicit map must list every source element once",
                        context={"missing": missing, "unknown": unknown},
                    )
                return make_hom(
                    source, target, [images[a] for a in source.labels]
                )


class AmalgamBody(_Spec):
    source: RingSpec
    f: HomSpec
    ideal: list[str] = Field(min_length=1)
    g: HomSpec | None = None
    ideal_prime: Annotated[list[str], Field(min_length=1)] | None = None

    @model_validator(mode="after")
    def _paired(self) -> "AmalgamBody":
        if (self.g is None) != (self.ideal_prime is None):
            raise ValueError("g and ideal_prime must be given together")
        return self


class SpecFile(_Spec):
    ring: RingSpec | None = None
    amalgam: AmalgamBody | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "SpecFile":
        if (self.ring is None) == (self.amalgam is None):
            raise ValueError("give exactly one of 'ring' or 'amalgam'")
        return self


for _model in (
    ProductSpec,
    MatrixBody,
    MatrixSpec,
    PolyBody,
    PolySpec,
    GroupRingBody,
    GroupRingSpec,
    QuotientBody,
    QuotientSpec,
    CornerBody,
    CornerSpec,
    HomSpec,
    AmalgamBody,
    SpecFile,
):
    _model.model_rebuild()


def _ideal(ring: FiniteRing, generators: list[str]) -> Ideal:
    return ideal_generated(ring, [ring.index(g) for g in generators])


def _amalgam_spec(body: AmalgamBody) -> AmalgamSpec:
    source = build(body.source.to_expr())
    f = body.f.to_hom(source)
    ideal = _ideal(f.target, body.ideal)
    if body.g is None or body.ideal_prime is None:
        return AmalgamSpec(f, ideal)
    g = body.g.to_hom(source)
    return AmalgamSpec(f, ideal, g, _ideal(g.target, body.ideal_prime))


def parse_spec_text(
    text: str, source: str = "<string>"
) -> RingExpr | AmalgamSpec:
    """Parse and validate a spec document.

    Ring specs become a :data:`RingExpr` without building anything.
    Amalgam specs need their rings, homomorphisms and ideals, so those
    are built and checked.

    :param text: The JSON document.
    :param source: Name used in error messages.
    :raises SpecError: On a syntax error (with line and column) or a
        schema violation.
    :raises SitRingsError: On semantic errors raised by the constructors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}",
            context={"line": exc.lineno, "column": exc.colno},
        ) from exc
    try:
        spec = SpecFile.model_validate(raw)
    except ValidationError as exc:
        problems = [
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
            for err in exc.errors()
        ]
        raise SpecError(
            f"{source}: invalid spec: {problems[0]}",
            context={"errors": problems},
        ) from exc
    if spec.ring is not None:
        expr = spec.ring.to_expr()
        logger.debug("Parsed ring spec %s from %s", expr.describe(), source)
        return expr
    assert spec.amalgam is not None
    return _amalgam_spec(spec.amalgam)


def parse_spec(path: Path) -> RingExpr | AmalgamSpec:
    """Parse a spec file.

    :raises OSError: If the file cannot be read.
    :raises SpecError: See :func:`parse_spec_text`.
    """
    return parse_spec_text(path.read_text(encoding="utf-8"), str(path))


def shipped_specs() -> list[str]:
    """Names of the spec files bundled in ``sit_rings/data/specs``."""
    folder = resources.files("sit_rings").joinpath("data", "specs")
    return sorted(
        entry.name.removesuffix(".json")
        for entry in folder.iterdir()
        if entry.name.endswith(".json")
    )


def load_shipped_spec(name: str) -> RingExpr | AmalgamSpec:
    """Parse one bundled spec by name (without ``.json``)."""
    entry = resources.files("sit_rings").joinpath(
        "data", "specs", f"{name}.json"
    )
    return parse_spec_text(entry.read_text(encoding="utf-8"), name)
