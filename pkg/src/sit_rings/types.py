"""Enumerations and report payload types."""

from enum import IntEnum
from enum import StrEnum
from enum import auto
from enum import unique
from typing import Any
from typing import NotRequired
from typing import TypedDict


class Slug(StrEnum):
    @staticmethod
    def _generate_next_value_(name, start, count, last_values):
        return name.strip("_").lower().replace("_", "-")


@unique
class Scheme(Slug):
    """Decomposition schemes; values double as CLI ``--scheme`` names."""

    SIT = auto()
    WEAKLY_SIT = auto()
    SITT = auto()
    NIL_CLEAN = auto()
    WEAKLY_NIL_CLEAN = auto()
    CLEAN = auto()


@unique
class ElementKind(Slug):
    IDEMPOTENT = auto()
    TRIPOTENT = auto()
    NILPOTENT = auto()
    UNIT = auto()


@unique
class HomTag(Slug):
    """How a ring homomorphism was obtained."""

    IDENTITY = auto()
    DIAGONAL_SCALAR = auto()
    PROJECTION = auto()
    INCLUSION = auto()
    QUOTIENT_MAP = auto()
    EXPLICIT = auto()


@unique
class Identity(StrEnum):
    """Polynomial identities ``x^m = x^k`` checked on whole rings."""

    SQUARE = "x^2=x"
    CUBE = "x^3=x"
    FIFTH = "x^5=x"
    SIX_FOUR = "x^6=x^4"

    @property
    def exponents(self) -> tuple[int, int]:
        left, right = self.value.split("=")
        low = right.removeprefix("x^") if right != "x" else "1"
        return int(left.removeprefix("x^")), int(low)


@unique
class SubjectKind(Slug):
    RING = auto()
    AMALGAM = auto()
    BI_AMALGAM = auto()


@unique
class VerdictStatus(StrEnum):
    VERIFIED = "verified"
    PREMISE_NOT_MET = "premise_not_met"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@unique
class CheckStatus(StrEnum):
    MATCH = "MATCH"
    DIVERGENCE = "DIVERGENCE"


@unique
class OutputFormat(Slug):
    TEXT = auto()
    JSON = auto()


@unique
class Command(Slug):
    BUILD = auto()
    CLASSIFY = auto()
    DECOMPOSE = auto()
    AMALGAMATE = auto()
    VERIFY = auto()
    PAPER_EXAMPLES = auto()


@unique
class ExitCode(IntEnum):
    OK = 0
    PROPERTY_FALSE = 1
    INVALID_INPUT = 2
    CAP_EXCEEDED = 3


# --- TypedDicts for machine-readable reports ---


class DecompositionData(TypedDict):
    element: str
    scheme: str
    strong: bool
    parts: dict[str, str]
    sign: int
    commuting: bool


class SchemeVerdictData(TypedDict):
    scheme: str
    strong: bool
    holds: bool
    counterexample: str | None
    failures: list[str]


class DirectionData(TypedDict):
    label: str
    premises_hold: bool
    conclusion_holds: bool
    status: str


class VerdictData(TypedDict):
    theorem: str
    subject: str
    status: str
    premises_hold: bool
    conclusion_holds: bool
    expected_divergence: bool
    witness: dict[str, Any]
    directions: NotRequired[list[DirectionData]]


class ExampleCheckData(TypedDict):
    check: str
    description: str
    status: str
    expected_divergence: bool
    claimed: Any
    computed: Any
    note: NotRequired[str]


class ExampleData(TypedDict):
    example: str
    title: str
    checks: list[ExampleCheckData]


class SuiteData(TypedDict):
    summary: dict[str, int]
    unexpected: int
    verdicts: list[VerdictData]
