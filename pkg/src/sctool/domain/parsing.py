"""
Text parsers for sctool input files.

Profile file: the first non-comment line lists candidate names; every further
line is an optional "K*" multiplicity prefix followed by all candidate names,
best first. Tree file: one "u v" edge per line. Lines starting with '#' and
blank lines are ignored everywhere.
Author: DmitrTRC
"""

import logging
from fractions import Fraction
from typing import Iterator, Optional

from sctool.domain.constants import (
    COMMENT_PREFIX,
    EMPTY_APPROVAL_TOKEN,
    MULTIPLICITY_SUFFIX,
)
from sctool.domain.exceptions import (
    MisrepParseError,
    ProfileParseError,
    TreeParseError,
    TreeStructureError,
)
from sctool.domain.models import Candidate, LinearOrder, Profile, Tree

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (line number, stripped line) for every non-comment, non-blank line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith(COMMENT_PREFIX):
            yield number, line


# ═══════════════════════════════════════════════════════════
# Profiles
# ═══════════════════════════════════════════════════════════


def _is_number(token: str) -> bool:
    """True for ASCII decimal digits only."""
    return token.isascii() and token.isdecimal()


def _parse_multiplicity(token: str, number: int, line: str) -> int:
    """Parse a "K*" prefix token."""
    digits = token[: -len(MULTIPLICITY_SUFFIX)]
    if not _is_number(digits) or int(digits) < 1:
        raise ProfileParseError(
            f"Malformed multiplicity '{token}'", line=number, text=line
        )
    return int(digits)


def parse_profile(text: str) -> Profile:
    """
    Parse profile-file contents.

    Args:
        text: Profile file contents

    Returns:
        Profile with candidates in header order and voters in line order

    Raises:
        ProfileParseError: On duplicate names, non-permutation rankings,
            malformed multiplicities or an empty profile
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ProfileParseError("Empty profile: no candidate header")

    header_number, header_line = header
    names = header_line.split()
    index_of: dict[str, int] = {}
    for name in names:
        if name in index_of:
            raise ProfileParseError(
                f"Duplicate candidate name '{name}'",
                line=header_number,
                text=header_line,
            )
        if name.endswith(MULTIPLICITY_SUFFIX) or name == EMPTY_APPROVAL_TOKEN:
            raise ProfileParseError(
                f"Reserved token used as candidate name '{name}'",
                line=header_number,
                text=header_line,
            )
        index_of[name] = len(index_of)

    voters: list[LinearOrder] = []
    multiplicities: list[int] = []
    for number, line in lines:
        tokens = line.split()
        weight = 1
        if tokens[0].endswith(MULTIPLICITY_SUFFIX):
            weight = _parse_multiplicity(tokens[0], number, line)
            tokens = tokens[1:]

        unknown = [token for token in tokens if token not in index_of]
        if unknown:
            raise ProfileParseError(
                f"Unknown candidate '{unknown[0]}'", line=number, text=line
            )
        if len(tokens) != len(names) or len(set(tokens)) != len(tokens):
            raise ProfileParseError(
                "Ranking is not a permutation of the candidates",
                line=number,
                text=line,
            )
        voters.append(LinearOrder(ranking=tuple(index_of[t] for t in tokens)))
        multiplicities.append(weight)

    if not voters:
        raise ProfileParseError("Empty profile: no voter lines")

    profile = Profile(
        candidates=tuple(Candidate(index=i, name=n) for i, n in enumerate(names)),
        voters=tuple(voters),
        multiplicities=tuple(multiplicities),
    )
    logger.debug("Parsed profile: n=%d m=%d", profile.n, profile.m)
    return profile


# ═══════════════════════════════════════════════════════════
# Trees
# ═══════════════════════════════════════════════════════════


def parse_tree(text: str, n: Optional[int] = None) -> Tree:
    """
    Parse tree-file contents.

    Args:
        text: Tree file contents
        n: Vertex count (voter count of the expanded profile); when omitted,
            the largest vertex mentioned (1 for an empty file)

    Returns:
        Tree on vertices 1..n

    Raises:
        TreeParseError: On malformed lines, out-of-range vertices, cycles or a
            wrong edge count
    """
    edges: list[tuple[int, int]] = []
    line_of: dict[tuple[int, int], tuple[int, str]] = {}
    if n is None:
        n = infer_vertex_count(text)

    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_number(t) for t in tokens):
            raise TreeParseError("Expected an edge 'u v'", line=number, text=line)
        u, v = int(tokens[0]), int(tokens[1])
        for vertex in (u, v):
            if not 1 <= vertex <= n:
                raise TreeParseError(
                    f"Vertex {vertex} is out of range 1..{n}", line=number, text=line
                )
        key = (min(u, v), max(u, v))
        if key in line_of or u == v:
            raise TreeParseError("Cycle detected", line=number, text=line)
        line_of[key] = (number, line)
        edges.append((u, v))

    try:
        tree = Tree(n=n, edges=edges)
    except TreeStructureError as e:
        located: Optional[tuple[int, str]] = (
            line_of.get(e.value) if isinstance(e.value, tuple) else None
        )
        if located is not None:
            raise TreeParseError(e.message, line=located[0], text=located[1]) from e
        raise TreeParseError(e.message) from e

    logger.debug("Parsed tree: n=%d edges=%d", tree.n, len(tree.edges))
    return tree


# ═══════════════════════════════════════════════════════════
# Misrepresentation Inputs
# ═══════════════════════════════════════════════════════════


def parse_rational(
    token: str, number: Optional[int] = None, line: str = ""
) -> Fraction:
    """
    Parse a rational token such as "3", "1/2" or "0.25".

    Raises:
        MisrepParseError: If the token is not a rational number
    """
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise MisrepParseError(
            f"Not a rational number '{token}'", line=number, text=line or token
        ) from e


def parse_positional_vector(spec: str) -> tuple[Fraction, ...]:
    """
    Parse a comma-separated scoring vector, e.g. "0,1,5/2,4".

    Raises:
        MisrepParseError: On empty or malformed entries
    """
    tokens = [token.strip() for token in spec.split(",")]
    if not tokens or any(not token for token in tokens):
        raise MisrepParseError(f"Malformed positional vector '{spec}'")
    return tuple(parse_rational(token) for token in tokens)


def parse_matrix(
    text: str, rows: int, columns: int
) -> tuple[tuple[Fraction, ...], ...]:
    """
    Parse a misrepresentation matrix: one row of rationals per voter line.

    Args:
        text: Matrix file contents
        rows: Expected number of rows (profile voter lines)
        columns: Expected number of columns (candidates)

    Raises:
        MisrepParseError: On malformed values or wrong dimensions
    """
    matrix: list[tuple[Fraction, ...]] = []
    for number, line in _content_lines(text):
        values = tuple(parse_rational(t, number, line) for t in line.split())
        if len(values) != columns:
            raise MisrepParseError(
                f"Expected {columns} values, got {len(values)}", line=number, text=line
            )
        matrix.append(values)
    if len(matrix) != rows:
        raise MisrepParseError(f"Expected {rows} matrix rows, got {len(matrix)}")
    return tuple(matrix)


def parse_approval(text: str, profile: Profile) -> tuple[frozenset[int], ...]:
    """
    Parse approval ballots: one line of approved candidate names per voter line.

    A line holding only "-" approves nobody.

    Raises:
        MisrepParseError: On unknown names or a wrong number of lines
    """
    ballots: list[frozenset[int]] = []
    for number, line in _content_lines(text):
        tokens = line.split()
        if tokens == [EMPTY_APPROVAL_TOKEN]:
            ballots.append(frozenset())
            continue
        approved = set()
        for token in tokens:
            if token not in profile.names:
                raise MisrepParseError(
                    f"Unknown candidate '{token}'", line=number, text=line
                )
            approved.add(profile.index_of(token))
        ballots.append(frozenset(approved))
    if len(ballots) != profile.n:
        raise MisrepParseError(
            f"Expected {profile.n} approval lines, got {len(ballots)}"
        )
    return tuple(ballots)


def infer_vertex_count(text: str) -> int:
    """
    Largest vertex label mentioned in a tree file (1 when there are no edges).

    Raises:
        TreeParseError: On a line that is not two vertex numbers
    """
    largest = 1
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_number(t) for t in tokens):
            raise TreeParseError("Expected an edge 'u v'", line=number, text=line)
        largest = max(largest, *(int(t) for t in tokens))
    return largest
