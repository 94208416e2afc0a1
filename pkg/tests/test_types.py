"""Tests for enums and their CLI-facing values."""

from sit_rings.types import Command
from sit_rings.types import ExitCode
from sit_rings.types import HomTag
from sit_rings.types import Identity
from sit_rings.types import OutputFormat
from sit_rings.types import Scheme
from sit_rings.types import SubjectKind
from sit_rings.types import VerdictStatus


def test_scheme_values():
    assert Scheme.SIT == "sit"
    assert Scheme.WEAKLY_SIT == "weakly-sit"
    assert Scheme.SITT == "sitt"
    assert Scheme.NIL_CLEAN == "nil-clean"
    assert Scheme.WEAKLY_NIL_CLEAN == "weakly-nil-clean"
    assert Scheme.CLEAN == "clean"
    assert len(Scheme) == 6


def test_command_values():
    assert Command.PAPER_EXAMPLES == "paper-examples"
    assert [str(c) for c in Command] == [
        "build",
        "classify",
        "decompose",
        "amalgamate",
        "verify",
        "paper-examples",
    ]


def test_hom_tag_and_subject_kind_values():
    assert HomTag.DIAGONAL_SCALAR == "diagonal-scalar"
    assert HomTag.QUOTIENT_MAP == "quotient-map"
    assert SubjectKind.BI_AMALGAM == "bi-amalgam"
    assert OutputFormat.JSON == "json"


def test_identity_exponents():
    assert Identity.SQUARE.exponents == (2, 1)
    assert Identity.CUBE.exponents == (3, 1)
    assert Identity.FIFTH.exponents == (5, 1)
    assert Identity.SIX_FOUR.exponents == (6, 4)


def test_verdict_status_values():
    """Counterexamples are upper-case so they stand out in reports."""
    assert VerdictStatus.VERIFIED == "verified"
    assert VerdictStatus.PREMISE_NOT_MET == "premise_not_met"
    assert VerdictStatus.COUNTEREXAMPLE == "COUNTEREXAMPLE"


def test_exit_codes():
    assert ExitCode.OK == 0
    assert ExitCode.PROPERTY_FALSE == 1
    assert ExitCode.INVALID_INPUT == 2
    assert ExitCode.CAP_EXCEEDED == 3
