"""
Brute-force oracles for sctool.

Exhaustive counterparts of the polynomial algorithms, guarded to desk-scale
inputs. The recognition oracle checks the single-crossing definition directly
on networkx graphs and shares no cut logic with the sctree module.
Author: DmitrTRC
"""

import logging
from itertools import combinations, product
from typing import Any, Iterator, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict

from sctool.domain.cc import (
    CCResult,
    MisrepModel,
    assignment_cost,
    best_assignment_for_committee,
    ensure_valid_model,
)
from sctool.domain.enums import AggregationMode
from sctool.domain.models import (
    LinearOrder,
    Profile,
    ReducedProfile,
    Tree,
    reduce_profile,
)
from sctool.domain.validators import (
    validate_committee_count,
    validate_committee_size,
    validate_oracle_size,
)

logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════
# Labeled Trees
# ═══════════════════════════════════════════════════════════


class LabeledTreeIterator:
    """
    Every labeled tree on vertices 1..n, each exactly once.

    Trees come from Prüfer sequences in lexicographic order; n = 1 and n = 2
    yield their single tree.

    Example:
        >>> LabeledTreeIterator(4).count
        16
    """

    def __init__(self, n: int) -> None:
        """
        Initialize iterator.

        Args:
            n: Vertex count, 1 <= n <= 8

        Raises:
            GuardRangeError: If n is outside the guard range
        """
        validate_oracle_size(n)
        self.n = n

    @property
    def count(self) -> int:
        """Number of labeled trees (Cayley's formula n^(n-2))."""
        return self.n ** (self.n - 2) if self.n >= 2 else 1

    def __iter__(self) -> Iterator[Tree]:
        """Yield trees in Prüfer order."""
        if self.n == 1:
            yield Tree(n=1)
            return
        if self.n == 2:
            yield Tree(n=2, edges=[(1, 2)])
            return
        for sequence in product(range(self.n), repeat=self.n - 2):
            graph = nx.from_prufer_sequence(list(sequence))
            yield Tree(n=self.n, edges=[(u + 1, v + 1) for u, v in graph.edges()])

    def __len__(self) -> int:
        """Same as count."""
        return self.count


def enumerate_labeled_trees(n: int) -> LabeledTreeIterator:
    """
    Enumerate all labeled trees on n vertices.

    Raises:
        GuardRangeError: If n is outside [1, 8]
    """
    return LabeledTreeIterator(n)


# ═══════════════════════════════════════════════════════════
# Exhaustive Recognition
# ═══════════════════════════════════════════════════════════


def _to_graph(tree: Tree) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(tree.vertices)
    graph.add_edges_from(tree.edges)
    return graph


def _satisfies_definition(
    graph: nx.Graph, orders: tuple[LinearOrder, ...], m: int
) -> bool:
    """Both voter sides of every candidate pair induce connected subgraphs."""
    for a, b in combinations(range(m), 2):
        prefer_a = [v for v in graph.nodes if orders[v - 1].prefers(a, b)]
        prefer_b = [v for v in graph.nodes if not orders[v - 1].prefers(a, b)]
        for side in (prefer_a, prefer_b):
            if side and not nx.is_connected(graph.subgraph(side)):
                return False
    return True


def _is_minimal(graph: nx.Graph, orders: tuple[LinearOrder, ...]) -> bool:
    """Every edge separates two voters who disagree on some pair."""
    return all(orders[u - 1] != orders[v - 1] for u, v in graph.edges)


class ExhaustiveRecognition(BaseModel):
    """
    Every tree on the classes of a profile that makes it single-crossing.

    Attributes:
        reduced: Classes of the expanded profile
        passing: Trees on the classes satisfying the definition
        minimal: Passing trees without collapsible edges
    """

    reduced: ReducedProfile
    passing: tuple[Tree, ...]
    minimal: tuple[Tree, ...]

    @property
    def single_crossing(self) -> bool:
        """True when some tree passes."""
        return bool(self.passing)

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {
            "single_crossing": self.single_crossing,
            "classes": self.reduced.r,
            "passing": [tree.to_dict() for tree in self.passing],
            "minimal": [tree.to_dict() for tree in self.minimal],
        }

    model_config = ConfigDict(frozen=True)


def recognize_exhaustive(p: Profile) -> ExhaustiveRecognition:
    """
    Try every labeled tree on the distinct orders of a profile.

    Args:
        p: Profile with at most 8 distinct orders

    Returns:
        ExhaustiveRecognition

    Raises:
        GuardRangeError: If there are more than 8 distinct orders
    """
    reduced = reduce_profile(p.expanded())
    orders = reduced.classes
    passing = []
    minimal = []
    for tree in enumerate_labeled_trees(reduced.r):
        graph = _to_graph(tree)
        if _satisfies_definition(graph, orders, len(reduced.candidates)):
            passing.append(tree)
            if _is_minimal(graph, orders):
                minimal.append(tree)
    logger.debug(
        "Exhaustive recognition: r=%d passing=%d minimal=%d",
        reduced.r,
        len(passing),
        len(minimal),
    )
    return ExhaustiveRecognition(
        reduced=reduced, passing=tuple(passing), minimal=tuple(minimal)
    )


# ═══════════════════════════════════════════════════════════
# Committees
# ═══════════════════════════════════════════════════════════


def cc_brute_force(
    p: Profile, k: int, model: MisrepModel, mode: AggregationMode
) -> CCResult:
    """
    Optimal Chamberlin-Courant committee by trying every k-subset.

    The first optimal committee in lexicographic order is reported.

    Args:
        p: Any profile
        k: Committee size
        model: Valid misrepresentation model
        mode: Aggregation mode

    Returns:
        CCResult

    Raises:
        InvalidCommitteeSizeError: If k is outside [1, m]
        GuardRangeError: If C(m, k) exceeds the guard
        ModelValidationError: If the model is invalid for p
    """
    validate_committee_size(k, p.m)
    validate_committee_count(p.m, k)
    ensure_valid_model(model, p)

    best = None
    for committee in combinations(range(p.m), k):
        assignment = best_assignment_for_committee(p, committee, model, mode)
        phi = assignment_cost(p, assignment, model, mode)
        if best is None or phi < best[0]:
            best = (phi, assignment)

    assert best is not None
    phi, assignment = best
    return CCResult(
        candidates=p.candidates, k=k, mode=mode, phi=phi, assignment=assignment
    )


# ═══════════════════════════════════════════════════════════
# Classical Single-Crossing
# ═══════════════════════════════════════════════════════════


def _preference_bits(order: LinearOrder, m: int) -> int:
    bits = 0
    for index, (a, b) in enumerate(combinations(range(m), 2)):
        if order.prefers(a, b):
            bits |= 1 << index
    return bits


def classical_sc_check(p: Profile) -> Optional[tuple[int, ...]]:
    """
    Search for a voter ordering along which every pair switches at most once.

    Args:
        p: Profile with at most 8 expanded voters

    Returns:
        Lexicographically first such ordering of the expanded voters, or None

    Raises:
        GuardRangeError: If there are more than 8 expanded voters
    """
    q = p.expanded()
    validate_oracle_size(q.n)
    bits = [_preference_bits(order, q.m) for order in q.voters]

    def extend(path: list[int], switched: int) -> Optional[list[int]]:
        if len(path) == q.n:
            return path
        for w in range(q.n):
            if w in path:
                continue
            diff = bits[path[-1]] ^ bits[w]
            if diff & switched:
                continue
            found = extend(path + [w], switched | diff)
            if found is not None:
                return found
        return None

    for start in range(q.n):
        found = extend([start], 0)
        if found is not None:
            return tuple(v + 1 for v in found)
    return None
