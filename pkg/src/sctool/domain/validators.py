"""
Domain validation rules for sctool.

This module provides validation functions shared by the domain models and parsers.
Author: DmitrTRC
"""

import math
from typing import Iterable, Sequence

from sctool.domain.constants import (
    MAX_BRUTE_FORCE_COMMITTEES,
    MAX_ORACLE_VOTERS,
    MIN_ORACLE_VOTERS,
)
from sctool.domain.exceptions import (
    GuardRangeError,
    InvalidCommitteeSizeError,
    ProfileStructureError,
    TreeStructureError,
)


def validate_candidate_name(name: str) -> None:
    """
    Validate a candidate name token.

    Args:
        name: Candidate name

    Raises:
        ProfileStructureError: If the name is empty or contains whitespace
    """
    if not name or any(ch.isspace() for ch in name):
        raise ProfileStructureError(
            "Candidate name must be a non-empty token without whitespace",
            field="name",
            value=repr(name),
        )


def validate_unique_names(names: Sequence[str]) -> None:
    """
    Validate that candidate names are unique.

    Raises:
        ProfileStructureError: On the first duplicated name
    """
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise ProfileStructureError(
                f"Duplicate candidate name: {name}", field="candidates", value=name
            )
        seen.add(name)


def validate_permutation(ranking: Sequence[int]) -> None:
    """
    Validate that a ranking is a permutation of 0..m-1.

    Raises:
        ProfileStructureError: If it is not
    """
    if sorted(ranking) != list(range(len(ranking))):
        raise ProfileStructureError(
            "Ranking is not a permutation of the candidates",
            field="ranking",
            value=list(ranking),
        )


def validate_vertex(vertex: int, n: int) -> None:
    """
    Validate that a vertex lies in [1, n].

    Raises:
        TreeStructureError: If the vertex is out of range
    """
    if not 1 <= vertex <= n:
        raise TreeStructureError(
            f"Vertex {vertex} is out of range 1..{n}", field="vertex", value=vertex
        )


def validate_multiplicities(multiplicities: Iterable[int]) -> None:
    """
    Validate that every multiplicity is a positive integer.

    Raises:
        ProfileStructureError: On the first non-positive multiplicity
    """
    for weight in multiplicities:
        if weight < 1:
            raise ProfileStructureError(
                "Multiplicities must be positive", field="multiplicity", value=weight
            )


def validate_committee_size(k: int, m: int) -> None:
    """
    Validate the committee size against the number of candidates.

    Raises:
        InvalidCommitteeSizeError: If k is outside [1, m]
    """
    if not 1 <= k <= m:
        raise InvalidCommitteeSizeError(k, m)


def validate_oracle_size(n: int) -> None:
    """
    Validate that a brute-force tree enumeration stays within the guard range.

    Raises:
        GuardRangeError: If n is outside [1, 8]
    """
    if not MIN_ORACLE_VOTERS <= n <= MAX_ORACLE_VOTERS:
        raise GuardRangeError("Voter count", n, MAX_ORACLE_VOTERS)


def validate_committee_count(m: int, k: int) -> None:
    """
    Validate that enumerating all k-subsets of m candidates is affordable.

    Raises:
        GuardRangeError: If C(m, k) exceeds the guard
    """
    count = math.comb(m, k)
    if count > MAX_BRUTE_FORCE_COMMITTEES:
        raise GuardRangeError("Committee count", count, MAX_BRUTE_FORCE_COMMITTEES)
