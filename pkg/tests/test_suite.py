"""Tests for running the checker catalogue over a corpus."""

import pytest

from sit_rings.config import Caps
from sit_rings.config import use_caps
from sit_rings.exceptions import CapExceeded
from sit_rings.exceptions import UnknownTheorem
from sit_rings.suite import resolve_theorems
from sit_rings.suite import run_suite
from sit_rings.theorems import CATALOGUE
from sit_rings.types import VerdictStatus

from .conftest import small_corpus


THEOREMS = ["T2.19", "L2.15", "P2.2"]


def _statuses(result, theorem):
    return {
        v.subject: v.status for v in result.verdicts if v.theorem == theorem
    }


class TestRunSuite:
    def test_summary(self):
        result = run_suite(small_corpus(), THEOREMS)
        assert len(result.verdicts) == 15
        assert result.summary == {
            "verified": 11,
            "premise_not_met": 4,
            "COUNTEREXAMPLE": 0,
        }
        assert result.ok
        assert result.as_data()["unexpected"] == 0

    def test_verdicts_per_subject(self):
        result = run_suite(small_corpus(), THEOREMS)
        assert _statuses(result, "T2.19") == {
            "Z2": VerdictStatus.VERIFIED,
            "Z3": VerdictStatus.PREMISE_NOT_MET,
            "Z4": VerdictStatus.VERIFIED,
            "Z5": VerdictStatus.PREMISE_NOT_MET,
            "Z6": VerdictStatus.PREMISE_NOT_MET,
        }
        assert set(_statuses(result, "L2.15").values()) == {
            VerdictStatus.VERIFIED
        }
        assert _statuses(result, "P2.2")["Z5"] is (
            VerdictStatus.PREMISE_NOT_MET
        )

    def test_order_is_corpus_then_catalogue(self):
        result = run_suite(small_corpus(2, 3), ["P2.2", "T2.19"])
        assert [(v.subject, v.theorem) for v in result.verdicts] == [
            ("Z2", "P2.2"),
            ("Z2", "T2.19"),
            ("Z3", "P2.2"),
            ("Z3", "T2.19"),
        ]

    def test_amalgam_checkers_skip_rings(self):
        assert run_suite(small_corpus(), ["P3.5"]).verdicts == ()

    def test_threaded_run_matches_serial(self):
        corpus = small_corpus()
        serial = run_suite(corpus, THEOREMS)
        threaded = run_suite(corpus, THEOREMS, max_workers=4)
        assert [v.as_data() for v in threaded.verdicts] == [
            v.as_data() for v in serial.verdicts
        ]

    def test_caps_reach_worker_threads(self):
        corpus = small_corpus()
        with use_caps(Caps(analysis=3)), pytest.raises(CapExceeded):
            run_suite(corpus, ["P2.2"], max_workers=2)


class TestResolveTheorems:
    def test_everything(self):
        assert resolve_theorems(None) == list(CATALOGUE)
        assert resolve_theorems(["all"]) == list(CATALOGUE)

    def test_subset_keeps_order(self):
        assert resolve_theorems(["P2.2", "L2.15"]) == ["P2.2", "L2.15"]

    def test_unknown(self):
        with pytest.raises(UnknownTheorem) as exc_info:
            resolve_theorems(["P2.2", "T9.1"])
        assert exc_info.value.context["unknown"] == ["T9.1"]
