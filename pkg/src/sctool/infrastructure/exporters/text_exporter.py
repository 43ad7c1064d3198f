"""
Canonical text emission for profiles and trees.

The output parses back to an equal object with parse_profile / parse_tree.
Author: DmitrTRC
"""

from typing import Any, Sequence

from sctool.domain.constants import COMMENT_PREFIX, MULTIPLICITY_SUFFIX
from sctool.domain.models import Profile, Tree
from sctool.domain.sctree import GeneratedProfile
from sctool.infrastructure.exporters.base import BaseExporter


def _join(lines: Sequence[str]) -> str:
    return "\n".join(lines) + "\n" if lines else ""


def emit_profile(p: Profile, comments: Sequence[str] = ()) -> str:
    """
    Emit a profile in the profile-file format.

    Args:
        p: Profile
        comments: Lines written as '#' comments before the header

    Returns:
        Profile file contents
    """
    lines = [f"{COMMENT_PREFIX} {comment}" for comment in comments]
    lines.append(" ".join(p.names))
    for v in range(1, p.n + 1):
        ranking = " ".join(p.ranking_names(v))
        weight = p.weight(v)
        if weight > 1:
            ranking = f"{weight}{MULTIPLICITY_SUFFIX} {ranking}"
        lines.append(ranking)
    return _join(lines)


def emit_tree(t: Tree, comments: Sequence[str] = ()) -> str:
    """
    Emit a tree in the tree-file format (one "u v" edge per line).

    Args:
        t: Tree
        comments: Lines written as '#' comments first

    Returns:
        Tree file contents
    """
    lines = [f"{COMMENT_PREFIX} {comment}" for comment in comments]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return _join(lines)


class ProfileTextExporter(BaseExporter):
    """Writes generated or loaded profiles as profile files."""

    def render(self, payload: Any) -> str:
        """
        Render a Profile or GeneratedProfile.

        Generated profiles carry their vertex-to-candidate association as
        comments.
        """
        if isinstance(payload, GeneratedProfile):
            names = payload.profile.names
            comments = [
                f"vertex {v} -> {names[payload.candidate_of(v)]}"
                for v in payload.tree.vertices
            ]
            return emit_profile(payload.profile, comments)
        return emit_profile(payload)

    def get_format_name(self) -> str:
        """Get format name."""
        return "profile"
