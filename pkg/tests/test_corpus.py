"""Tests for corpus generation."""

import pytest
from pydantic import ValidationError

from sit_rings.constructions import zmod
from sit_rings.corpus import CorpusEntry
from sit_rings.corpus import CorpusSpec
from sit_rings.corpus import generate_corpus
from sit_rings.types import SubjectKind

from .conftest import small_corpus


def _names(entries):
    return [entry.name for entry in entries]


class TestCorpusSpec:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"zmod_range": (5, 2)},
            {"zmod_range": (0, 3)},
            {"sample": -1},
            {"max_order": 0},
            {"colour": "red"},
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ValidationError):
            CorpusSpec(**kwargs)

    def test_from_file(self, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text(
            '{"zmod_range": [2, 3], "products": false, "matrix_rings": false,'
            ' "poly_quotients": false, "group_rings": false,'
            ' "paper_examples": false, "amalgams": false}'
        )
        spec = CorpusSpec.from_file(path)
        assert spec.zmod_range == (2, 3)
        assert _names(generate_corpus(spec)) == ["Z2", "Z3"]

    def test_empty(self):
        assert generate_corpus(CorpusSpec.empty()) == []


class TestGenerateCorpus:
    def test_residue_rings(self):
        entries = small_corpus(2, 4)
        assert _names(entries) == ["Z2", "Z3", "Z4"]
        assert all(e.kind is SubjectKind.RING for e in entries)

    def test_deterministic(self):
        spec = CorpusSpec(max_order=16)
        assert _names(generate_corpus(spec)) == _names(generate_corpus(spec))

    def test_max_order(self):
        spec = CorpusSpec.empty().model_copy(
            update={"zmod_range": (2, 30), "max_order": 6}
        )
        assert _names(generate_corpus(spec)) == ["Z2", "Z3", "Z4", "Z5", "Z6"]

    def test_every_member_within_max_order(self):
        for entry in generate_corpus(CorpusSpec(max_order=12)):
            assert entry.ring.order <= 12

    def test_seeded_sample(self):
        spec = CorpusSpec.empty().model_copy(
            update={"amalgams": True, "sample": 3, "seed": 7, "max_order": 16}
        )
        first = generate_corpus(spec)
        assert len(first) == 3
        assert _names(first) == _names(generate_corpus(spec))
        assert all(e.kind is not SubjectKind.RING for e in first)

    def test_paper_examples(self):
        spec = CorpusSpec.empty().model_copy(update={"paper_examples": True})
        entries = generate_corpus(spec)
        assert _names(entries) == [
            "triangular amalgam",
            "corner pattern amalgam",
            "triangular/pattern bi-amalgam",
        ]
        assert [e.kind for e in entries] == [
            SubjectKind.AMALGAM,
            SubjectKind.AMALGAM,
            SubjectKind.BI_AMALGAM,
        ]


class TestCorpusEntry:
    def test_ring(self):
        ring = zmod(3)
        entry = CorpusEntry.of(ring)
        assert entry.name == "Z3"
        assert entry.kind is SubjectKind.RING
        assert entry.subject is ring

    def test_amalgam(self):
        entries = generate_corpus(
            CorpusSpec.empty().model_copy(update={"paper_examples": True})
        )
        amalgam = entries[0].amalgam
        assert amalgam is not None
        entry = CorpusEntry.of(amalgam, "renamed")
        assert entry.name == "renamed"
        assert entry.subject is amalgam
        assert entry.ring is amalgam.ring
