"""
Unit tests for exporters.

Author: DmitrTRC
"""

import json
from pathlib import Path

import pytest

from sctool.domain.exceptions import DataError
from sctool.domain.models import Profile, Tree
from sctool.domain.parsing import parse_profile, parse_tree
from sctool.domain.sctree import generate_profile
from sctool.infrastructure.config.settings import Settings
from sctool.infrastructure.exporters import (
    JSONExporter,
    ProfileTextExporter,
    emit_profile,
    emit_tree,
)


class TestJSONExporter:
    """Test cases for JSONExporter."""

    def test_pretty(self) -> None:
        """Test indented output."""
        exporter = JSONExporter(Settings())

        text = exporter.render({"phi": "1/1", "committee": ["a", "c"]})

        assert text.startswith('{\n  "phi": "1/1"')
        assert exporter.get_format_name() == "JSON"

    def test_compact(self) -> None:
        """Test single-line output."""
        exporter = JSONExporter(Settings(pretty_json=False))

        assert exporter.render({"a": [1, 2]}) == '{"a": [1, 2]}'

    def test_to_dict_payload(self, smallstar_tree: Tree) -> None:
        """Test objects exposing to_dict."""
        text = JSONExporter(Settings()).render(smallstar_tree)

        assert json.loads(text) == {"n": 4, "edges": [[1, 2], [2, 3], [2, 4]]}

    def test_unicode_kept(self) -> None:
        """Test that names are not escaped."""
        text = JSONExporter(Settings(pretty_json=False)).render({"name": "Zoë"})

        assert text == '{"name": "Zoë"}'

    def test_write(self, temp_output_dir: Path) -> None:
        """Test writing into a fresh subdirectory."""
        path = temp_output_dir / "nested" / "report.json"

        written = JSONExporter(Settings()).write({"ok": True}, path)

        assert written == path
        assert json.loads(path.read_text(encoding="utf-8")) == {"ok": True}

    def test_write_failure(self, temp_output_dir: Path) -> None:
        """Test writing onto a directory."""
        with pytest.raises(DataError):
            JSONExporter(Settings()).write({}, temp_output_dir)


class TestTextEmission:
    """Test cases for canonical profile and tree text."""

    def test_emit_profile(self, unanimous4: Profile) -> None:
        """Test weighted lines use the K* prefix."""
        assert emit_profile(unanimous4) == "a b c d\n4* a b c d\n"

    def test_emit_profile_parses_back(self, smallstar: Profile) -> None:
        """Test the emitted text reads back to the same profile."""
        text = emit_profile(smallstar, comments=["small star"])

        assert text.startswith("# small star\na b c d\n")
        assert parse_profile(text) == smallstar

    def test_emit_tree(self, smallstar_tree: Tree) -> None:
        """Test one edge per line."""
        text = emit_tree(smallstar_tree)

        assert text == "1 2\n2 3\n2 4\n"
        assert parse_tree(text, 4) == smallstar_tree

    def test_emit_single_vertex(self) -> None:
        """Test a tree without edges."""
        assert emit_tree(Tree(n=1)) == ""


class TestProfileTextExporter:
    """Test cases for ProfileTextExporter."""

    def test_generated_profile_comments(self) -> None:
        """Test that the association is written as comments."""
        generated = generate_profile(Tree.line([1, 2]))

        text = ProfileTextExporter().render(generated)

        assert text == (
            "# vertex 1 -> c1\n# vertex 2 -> c2\nc1 c2\nc1 c2\nc2 c1\n"
        )
        assert parse_profile(text) == generated.profile

    def test_plain_profile(self, two: Profile) -> None:
        """Test a loaded profile."""
        exporter = ProfileTextExporter()

        assert exporter.render(two) == "a b\na b\nb a\n"
        assert exporter.get_format_name() == "profile"
