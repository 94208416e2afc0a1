"""Tests for the ``sit-rings`` command line."""

import json

import pytest

from sit_rings import __version__
from sit_rings.cli import main
from sit_rings.types import ExitCode
from sit_rings.worked_examples import run_example


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path, monkeypatch):
    """Bundled spec names must not collide with files in the cwd."""
    monkeypatch.chdir(tmp_path)


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


class TestBuild:
    def test_bundled_spec(self, capsys):
        assert main(["build", "z6"]) == ExitCode.OK
        out = capsys.readouterr().out
        assert out.startswith("Ring Z6\n")
        assert "Elements (6):" in out

    def test_spec_file(self, tmp_path, capsys):
        path = tmp_path / "ring.json"
        path.write_text('{"ring": {"zmod": 3}}', encoding="utf-8")
        assert main(["build", str(path), "--format", "json"]) == ExitCode.OK
        payload = _json(capsys)
        assert payload["elements"] == ["0", "1", "2"]
        assert payload["commutative"] is True

    def test_missing_file(self):
        assert main(["build", "no-such-spec.json"]) == ExitCode.INVALID_INPUT

    def test_invalid_spec(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"ring": {"zmod": -1}}', encoding="utf-8")
        assert main(["build", str(path)]) == ExitCode.INVALID_INPUT

    def test_cap_exceeded(self):
        assert main(["build", "m2-z3", "--max-order", "10"]) == (
            ExitCode.CAP_EXCEEDED
        )

    def test_max_order_must_be_positive(self):
        assert main(["build", "z6", "--max-order", "0"]) == (
            ExitCode.INVALID_INPUT
        )


class TestClassify:
    def test_dual_numbers(self, capsys):
        assert main(["classify", "z4-dual", "--format", "json"]) == ExitCode.OK
        payload = _json(capsys)
        assert payload["idempotents"] == ["0", "1"]
        assert payload["schemes"]["sit"]["holds"] is False
        assert payload["schemes"]["sit"]["counterexample"] is not None

    def test_json_is_deterministic(self, capsys):
        main(["classify", "z6", "--format", "json"])
        first = capsys.readouterr().out
        main(["classify", "z6", "--format", "json"])
        assert capsys.readouterr().out == first


class TestDecompose:
    def test_element_without_decomposition(self, capsys):
        code = main(["decompose", "z4-dual", "--element", "1+x"])
        assert code == ExitCode.PROPERTY_FALSE
        assert "no decomposition" in capsys.readouterr().out

    def test_element_decompositions(self, capsys):
        code = main(["decompose", "z6", "--element", "5", "--format", "json"])
        assert code == ExitCode.OK
        payload = _json(capsys)
        assert payload["element"] == "5"
        assert payload["decompositions"]

    def test_whole_ring(self, capsys):
        assert main(["decompose", "m2-z2", "--scheme", "sitt"]) == ExitCode.OK
        assert "holds" in capsys.readouterr().out

    def test_strong_sit_fails_on_m2z2(self):
        code = main(["decompose", "m2-z2", "--strong"])
        assert code == ExitCode.PROPERTY_FALSE

    def test_unknown_element(self):
        code = main(["decompose", "z6", "--element", "7"])
        assert code == ExitCode.INVALID_INPUT


class TestAmalgamate:
    def test_triangular_amalgam(self, capsys):
        code = main(["amalgamate", "triangular-amalgam", "--format", "json"])
        assert code == ExitCode.OK
        payload = _json(capsys)
        assert payload["order"] == 8
        assert payload["order_formula_holds"] is True
        assert payload["sit"] is True

    def test_bi_amalgam_lists_both_images(self, capsys):
        code = main(
            ["amalgamate", "triangular-pattern-bi-amalgam", "--format", "json"]
        )
        assert code == ExitCode.OK
        payload = _json(capsys)
        assert payload["kind"] == "bi-amalgam"
        assert len(payload["image_g"]) == 4

    def test_ring_spec_is_rejected(self):
        assert main(["amalgamate", "z6"]) == ExitCode.INVALID_INPUT


class TestVerify:
    def test_named_subjects(self, capsys):
        code = main(["verify", "z6", "z4", "--theorems", "T2.19,L2.15"])
        assert code == ExitCode.OK
        out = capsys.readouterr().out
        assert out.startswith("Theorem suite\n")
        assert "unexpected" in out

    def test_json_summary(self, capsys):
        code = main(
            ["verify", "z6", "--theorems", "L2.15", "--format", "json"]
        )
        assert code == ExitCode.OK
        payload = _json(capsys)
        assert payload["summary"]["verified"] == 1
        assert payload["unexpected"] == 0

    def test_unknown_theorem(self):
        code = main(["verify", "z6", "--theorems", "X9.9"])
        assert code == ExitCode.INVALID_INPUT

    def test_corpus_file(self, tmp_path, capsys):
        path = tmp_path / "corpus.json"
        path.write_text(
            json.dumps(
                {
                    "zmod_range": [2, 4],
                    "products": False,
                    "matrix_rings": False,
                    "poly_quotients": False,
                    "group_rings": False,
                    "paper_examples": False,
                    "amalgams": False,
                }
            ),
            encoding="utf-8",
        )
        code = main(
            [
                "verify",
                "--corpus",
                str(path),
                "--theorems",
                "P2.2",
                "--workers",
                "2",
                "--format",
                "json",
            ]
        )
        assert code == ExitCode.OK
        assert len(_json(capsys)["verdicts"]) == 3

    def test_invalid_corpus_file(self, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text('{"zmod_range": [5, 2]}', encoding="utf-8")
        code = main(["verify", "--corpus", str(path), "--theorems", "P2.2"])
        assert code == ExitCode.INVALID_INPUT


class TestMisc:
    def test_paper_examples_command(self, monkeypatch, capsys):
        monkeypatch.setattr(
            "sit_rings.cli.paper_example_report",
            lambda: [run_example("2.11")],
        )
        assert main(["paper-examples"]) == ExitCode.OK
        out = capsys.readouterr().out
        assert out.startswith("Worked examples")
        assert "Example 2.11" in out

    @pytest.mark.slow
    def test_paper_examples(self, capsys):
        assert main(["paper-examples", "--format", "json"]) == ExitCode.OK
        payload = _json(capsys)
        assert payload["unexpected"] == 0
        assert len(payload["examples"]) == 10

    def test_version(self, capsys):
        assert main(["--version"]) == ExitCode.OK
        assert __version__ in capsys.readouterr().out

    def test_no_arguments(self):
        assert main([]) == ExitCode.INVALID_INPUT
