"""
End-to-end integration tests

Runs whole sctool pipelines over real files.
Author: DmitrTRC
"""

import json
from pathlib import Path
from typing import Any

import pytest

from sctool.presentation.cli.app import run


def run_json(capsys: pytest.CaptureFixture[str], *argv: object) -> tuple[int, Any]:
    """Run a command with JSON output and decode it."""
    code = run([*(str(a) for a in argv), "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


class TestGenerateRecognize:
    """Generated profiles recognized back to their trees."""

    @pytest.mark.parametrize("tree_file", ["smallstar.tree", "star1.tree", "two.tree"])
    def test_round_trip(
        self,
        fixtures_dir: Path,
        temp_output_dir: Path,
        capsys: pytest.CaptureFixture[str],
        tree_file: str,
    ) -> None:
        """Test generate, verify and recognize on the same tree."""
        tree_path = fixtures_dir / tree_file
        profile_path = temp_output_dir / "generated.profile"

        assert run(["generate", str(tree_path), "-o", str(profile_path)]) == 0
        capsys.readouterr()

        code, verified = run_json(capsys, "verify", profile_path, tree_path)
        assert code == 0
        assert verified["collapsible_edges"] == []

        code, recognized = run_json(capsys, "recognize", profile_path)
        assert code == 0
        edges = [
            sorted(int(v) for v in line.split())
            for line in tree_path.read_text(encoding="utf-8").splitlines()
            if line and not line.startswith("#")
        ]
        assert recognized["reduced_tree"]["edges"] == sorted(edges)

    def test_generated_domain_is_condorcet(
        self,
        fixtures_dir: Path,
        temp_output_dir: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test sampling and majority on a generated profile."""
        profile_path = temp_output_dir / "generated.profile"
        run(["generate", str(fixtures_dir / "smallstar.tree"), "-o", str(profile_path)])
        capsys.readouterr()

        code, report = run_json(capsys, "check-domain", profile_path, "--seed", "9")

        assert code == 0
        assert report["failures"] == 0


class TestCommittees:
    """Fast committees against the brute-force oracle."""

    @pytest.mark.parametrize("rule", ["utilitarian", "egalitarian"])
    @pytest.mark.parametrize("k", ["1", "2", "3"])
    def test_cc_matches_oracle(
        self, fixtures_dir: Path, capsys: pytest.CaptureFixture[str], rule: str, k: str
    ) -> None:
        """Test phi on the small star."""
        profile = fixtures_dir / "smallstar.profile"
        tree = fixtures_dir / "smallstar.tree"

        code, fast = run_json(capsys, "cc", profile, tree, "-k", k, "--rule", rule)
        _, slow = run_json(capsys, "oracle", "cc", profile, "-k", k, "--rule", rule)

        assert code == 0
        assert fast["phi"] == slow["phi"]

    def test_matrix_file(
        self,
        fixtures_dir: Path,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test a misrepresentation matrix read from disk."""
        matrix = tmp_path / "r.txt"
        matrix.write_text("0 1/3\n1/7 0\n", encoding="utf-8")

        code, result = run_json(
            capsys,
            "cc",
            fixtures_dir / "two.profile",
            fixtures_dir / "two.tree",
            "-k",
            "1",
            "--misrep",
            f"matrix:{matrix}",
        )

        assert code == 0
        assert result["phi"] == "1/7"
        assert result["committee"] == ["a"]


class TestDeterminism:
    """Identical inputs give identical output."""

    def test_json_is_byte_identical(
        self, fixtures_dir: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test repeated recognition."""
        profile = str(fixtures_dir / "smallstar.profile")
        argv = ["recognize", profile, "--format", "json"]

        run(argv)
        first = capsys.readouterr().out
        run(argv)
        second = capsys.readouterr().out

        assert first == second

    def test_weighted_profile(
        self, fixtures_dir: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that clones of one order form a path."""
        code, data = run_json(capsys, "recognize", fixtures_dir / "unanimous4.profile")

        assert code == 0
        assert data["classes"] == 1
        assert data["full_tree"] == {"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}
        assert data["line"] == {"line": True, "ordering": [1, 2, 3, 4]}
