"""
Single-crossing profiles on trees.

Cuts and verification against a given tree, collapsible edges, potential
leaves, recognition with construction of the minimal tree, witness-profile
generation for any tree, and the line/non-line classification.

Tree vertices are the voters of the expanded profile: vertex i is the i-th
voter once multiplicities have been unrolled.
Author: DmitrTRC
"""

import logging
from itertools import combinations
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict

from sctool.domain.constants import (
    GENERATED_CANDIDATE_PREFIX,
    MIN_GENERATOR_VERTICES,
)
from sctool.domain.enums import VirtualDirection
from sctool.domain.exceptions import (
    NotReducedError,
    NotSingleCrossingError,
    PreconditionError,
    SizeMismatchError,
)
from sctool.domain.models import (
    Candidate,
    Edge,
    LinearOrder,
    Profile,
    ReducedProfile,
    Tree,
    reduce_profile,
)

logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════
# Cuts
# ═══════════════════════════════════════════════════════════


class Cut(BaseModel):
    """
    The ab-cut of a candidate pair.

    An edge cut is oriented (u, v) with u in side_a (voters preferring a) and
    v in side_b. A virtual cut has one empty side.

    Attributes:
        a: First candidate
        b: Second candidate
        side_a: Voters with a ≻ b
        side_b: Voters with b ≻ a
        edge: Oriented cut edge, None when virtual
        virtual: Which alternative everybody prefers, None for edge cuts
    """

    a: int
    b: int
    side_a: frozenset[int]
    side_b: frozenset[int]
    edge: Optional[Edge] = None
    virtual: Optional[VirtualDirection] = None

    @property
    def is_virtual(self) -> bool:
        """True when all voters agree on the pair."""
        return self.virtual is not None

    @property
    def tree_edge(self) -> Optional[Edge]:
        """The cut edge normalized to (min, max)."""
        if self.edge is None:
            return None
        u, v = self.edge
        return (min(u, v), max(u, v))

    def to_dict(self, names: tuple[str, ...]) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        cut: dict[str, Any]
        if self.virtual is not None:
            cut = {"virtual": self.virtual.value}
        else:
            assert self.edge is not None
            cut = {"edge": list(self.edge)}
        return {"a": names[self.a], "b": names[self.b], "cut": cut}

    model_config = ConfigDict(frozen=True)


class NoCutWitness(BaseModel):
    """
    Evidence that a pair has no cut: one side is disconnected in the tree.

    Attributes:
        a: First candidate
        b: Second candidate
        side: Which side is disconnected (voters preferring a or b)
        vertices: Two voters of that side lying in different components
    """

    a: int
    b: int
    side: VirtualDirection
    vertices: tuple[int, int]

    def describe(self, names: tuple[str, ...]) -> str:
        """Human-readable explanation."""
        preferred, other = (
            (names[self.a], names[self.b])
            if self.side == VirtualDirection.PREFER_A
            else (names[self.b], names[self.a])
        )
        u, v = self.vertices
        return (
            f"voters preferring {preferred} over {other} are disconnected "
            f"(voters {u} and {v})"
        )

    def to_dict(self, names: tuple[str, ...]) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {
            "a": names[self.a],
            "b": names[self.b],
            "side": self.side.value,
            "vertices": list(self.vertices),
        }

    model_config = ConfigDict(frozen=True)


class CutTable(BaseModel):
    """
    One cut per unordered candidate pair, in candidate-index pair order.

    Attributes:
        candidates: Candidates of the profile
        cuts: Cuts for (0,1), (0,2), ..., (m-2, m-1)
    """

    candidates: tuple[Candidate, ...]
    cuts: tuple[Cut, ...]

    def cut(self, a: int, b: int) -> Cut:
        """Get the cut recorded for the unordered pair {a, b}."""
        lo, hi = min(a, b), max(a, b)
        m = len(self.candidates)
        index = lo * m - lo * (lo + 1) // 2 + (hi - lo - 1)
        return self.cuts[index]

    def cut_edges(self) -> frozenset[Edge]:
        """Normalized tree edges that carry at least one cut."""
        return frozenset(c.tree_edge for c in self.cuts if c.tree_edge is not None)

    def to_dict(self) -> dict[str, Any]:
        """
        Convert to a JSON-compatible dictionary.

        Returns:
            {"pairs": [{"a": .., "b": .., "cut": {"edge": [u, v]} | {"virtual": ..}}]}
        """
        names = tuple(c.name for c in self.candidates)
        return {"pairs": [c.to_dict(names) for c in self.cuts]}

    model_config = ConfigDict(frozen=True)


def _check_sizes(q: Profile, t: Tree) -> None:
    """Ensure the tree has one vertex per expanded voter."""
    if t.n != q.n:
        raise SizeMismatchError(t.n, q.n)


def _split_witness(t: Tree, side: frozenset[int]) -> Optional[tuple[int, int]]:
    """Smallest (s, x) with s = min(side) and x outside the component of s."""
    components = t.components(side)
    if len(components) <= 1:
        return None
    first = components[0]
    return first[0], min(side.difference(first))


def _cut_for(q: Profile, t: Tree, a: int, b: int) -> Union[Cut, NoCutWitness]:
    """find_cut on an already expanded, size-checked profile."""
    side_a = frozenset(v for v in t.vertices if q.voter(v).prefers(a, b))
    side_b = frozenset(t.vertices).difference(side_a)

    if not side_b:
        return Cut(
            a=a, b=b, side_a=side_a, side_b=side_b, virtual=VirtualDirection.PREFER_A
        )
    if not side_a:
        return Cut(
            a=a, b=b, side_a=side_a, side_b=side_b, virtual=VirtualDirection.PREFER_B
        )

    witnesses = []
    for direction, side in (
        (VirtualDirection.PREFER_A, side_a),
        (VirtualDirection.PREFER_B, side_b),
    ):
        pair = _split_witness(t, side)
        if pair is not None:
            witnesses.append((pair, direction))
    if witnesses:
        pair, direction = min(witnesses)
        return NoCutWitness(a=a, b=b, side=direction, vertices=pair)

    edge = next(
        (u, v) for u in sorted(side_a) for v in t.neighbors(u) if v in side_b
    )
    return Cut(a=a, b=b, side_a=side_a, side_b=side_b, edge=edge)


def find_cut(p: Profile, t: Tree, a: int, b: int) -> Union[Cut, NoCutWitness]:
    """
    Find the ab-cut of a pair on a tree.

    Args:
        p: Profile (expanded before use)
        t: Tree on the expanded voters
        a: First candidate
        b: Second candidate

    Returns:
        The Cut (edge or virtual), or a NoCutWitness naming a disconnected side

    Raises:
        PreconditionError: If a == b
        SizeMismatchError: If the tree and profile sizes differ
    """
    if a == b:
        raise PreconditionError("Cut needs two distinct candidates", {"a": a})
    q = p.expanded()
    _check_sizes(q, t)
    return _cut_for(q, t, a, b)


def verify_single_crossing(p: Profile, t: Tree) -> Union[CutTable, NoCutWitness]:
    """
    Verify that a profile is single-crossing on a tree.

    Args:
        p: Profile
        t: Tree on the expanded voters

    Returns:
        The full CutTable, or the witness of the first failing pair in
        candidate-index order

    Raises:
        SizeMismatchError: If the tree and profile sizes differ
    """
    q = p.expanded()
    _check_sizes(q, t)
    cuts = []
    for a, b in combinations(range(q.m), 2):
        result = _cut_for(q, t, a, b)
        if isinstance(result, NoCutWitness):
            logger.debug("No cut for pair (%d, %d): %s", a, b, result.vertices)
            return result
        cuts.append(result)
    return CutTable(candidates=q.candidates, cuts=tuple(cuts))


def collapsible_edges(p: Profile, t: Tree, ct: CutTable) -> tuple[Edge, ...]:
    """
    Edges that are the cut edge of no pair.

    Args:
        p: Profile the table was built for
        t: Tree the table was built for
        ct: Result of verify_single_crossing(p, t)

    Returns:
        Sorted normalized edges; empty iff t is minimal for p
    """
    _check_sizes(p.expanded(), t)
    used = ct.cut_edges()
    return tuple(edge for edge in t.edges if edge not in used)


# ═══════════════════════════════════════════════════════════
# Potential Leaves
# ═══════════════════════════════════════════════════════════


class PotentialLeaf(BaseModel):
    """
    A voter whose removal keeps a single-crossing profile single-crossing.

    Attributes:
        voter: 1-based voter index
        unique_pairs: Ordered pairs (x, y), x ≻ y, held by this voter alone
        witness: Smallest other voter agreeing on every remaining pair
    """

    voter: int
    unique_pairs: tuple[tuple[int, int], ...]
    witness: int

    model_config = ConfigDict(frozen=True)


def _pair_bits(order: LinearOrder, pairs: list[tuple[int, int]]) -> int:
    """Bit i is set when the order ranks pairs[i][0] above pairs[i][1]."""
    bits = 0
    for index, (a, b) in enumerate(pairs):
        if order.prefers(a, b):
            bits |= 1 << index
    return bits


def potential_leaves(p: Profile) -> list[PotentialLeaf]:
    """
    Find all potential leaves of a reduced profile.

    Voter i is a potential leaf when the set S_i of comparisons no other voter
    shares is nonempty and some voter k ≠ i agrees with i on every pair outside
    S_i.

    Args:
        p: Reduced profile with n >= 2

    Returns:
        Potential leaves in voter order, each with its smallest witness

    Raises:
        NotReducedError: If two voters hold the same order
        PreconditionError: If n < 2
    """
    duplicate = p.duplicate_pair()
    if duplicate is not None:
        raise NotReducedError(*duplicate)
    if p.n < 2:
        raise PreconditionError("Potential leaves need at least two voters", {"n": p.n})

    pairs = list(combinations(range(p.m), 2))
    full = (1 << len(pairs)) - 1
    bits = [_pair_bits(order, pairs) for order in p.voters]

    leaves = []
    for i in range(p.n):
        unique = full
        for k in range(p.n):
            if k != i:
                unique &= bits[i] ^ bits[k]
        if not unique:
            continue
        witness = next(
            (k for k in range(p.n) if k != i and (bits[i] ^ bits[k]) & ~unique == 0),
            None,
        )
        if witness is None:
            continue
        order = p.voters[i]
        unique_pairs = tuple(
            (a, b) if order.prefers(a, b) else (b, a)
            for index, (a, b) in enumerate(pairs)
            if unique >> index & 1
        )
        leaves.append(
            PotentialLeaf(voter=i + 1, unique_pairs=unique_pairs, witness=witness + 1)
        )
    return leaves


# ═══════════════════════════════════════════════════════════
# Recognition
# ═══════════════════════════════════════════════════════════


class RecognitionResult(BaseModel):
    """
    A recognized single-crossing profile with its minimal tree.

    Attributes:
        reduced: Classes of the expanded profile
        reduced_tree: Minimal tree on the classes (1-based class vertices)
        full_tree: Tree on all expanded voters
        cut_table: Cut table of the expanded profile on full_tree
        peel_order: (potential leaf, attachment class) in removal order
    """

    reduced: ReducedProfile
    reduced_tree: Tree
    full_tree: Tree
    cut_table: CutTable
    peel_order: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {
            "single_crossing": True,
            "classes": self.reduced.r,
            "class_of": list(self.reduced.class_of),
            "reduced_tree": self.reduced_tree.to_dict(),
            "full_tree": self.full_tree.to_dict(),
            "cut_table": self.cut_table.to_dict(),
            "peel_order": [list(step) for step in self.peel_order],
        }

    model_config = ConfigDict(frozen=True)


class NotSingleCrossing(BaseModel):
    """
    Recognition got stuck: the remaining classes have no potential leaf.

    Attributes:
        stuck: The remaining classes as a profile
        classes: Their 1-based class indices
        voters: First expanded voter of each remaining class
    """

    stuck: Profile
    classes: tuple[int, ...]
    voters: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {
            "single_crossing": False,
            "stuck_classes": list(self.classes),
            "stuck_voters": list(self.voters),
            "stuck_profile": self.stuck.to_dict(),
        }

    model_config = ConfigDict(frozen=True)


def expand_clones(reduced: ReducedProfile, reduced_tree: Tree) -> Tree:
    """
    Grow a tree on the classes into a tree on every voter.

    The clones of a class form a path from its first voter (head) to its last
    (tail). Every edge to a parent class is subdivided by the child's clones,
    entering at the tail; the root's chain subdivides the edge to its smallest
    child. Paths stay paths.

    Args:
        reduced: Reduction of an expanded profile
        reduced_tree: Tree on its classes

    Returns:
        Tree on all voters of the expanded profile
    """
    chains = {c: reduced.members(c) for c in range(1, reduced.r + 1)}
    edges: list[Edge] = []
    for chain in chains.values():
        edges.extend(zip(chain, chain[1:]))

    parent, _ = reduced_tree.rooted(1)
    first_child = min(reduced_tree.neighbors(1), default=None)
    for child, up in parent.items():
        if up == 1 and child == first_child:
            attach = chains[1][-1]
        else:
            attach = chains[up][0]
        edges.append((chains[child][-1], attach))

    return Tree(n=len(reduced.class_of), edges=edges)


def recognize(p: Profile) -> Union[RecognitionResult, NotSingleCrossing]:
    """
    Decide whether a profile is single-crossing on some tree.

    Peels the smallest-index potential leaf of the remaining classes until one
    class is left, then rebuilds the minimal tree from the recorded witnesses
    and expands it over clones.

    Args:
        p: Profile

    Returns:
        RecognitionResult, or NotSingleCrossing with the stuck classes
    """
    q = p.expanded()
    reduced = reduce_profile(q)
    classes = reduced.class_profile()
    active = list(range(1, reduced.r + 1))
    peel_order: list[tuple[int, int]] = []

    while len(active) > 1:
        leaves = potential_leaves(classes.subprofile(active))
        if not leaves:
            logger.debug("Recognition stuck with %d classes", len(active))
            return NotSingleCrossing(
                stuck=classes.subprofile(active),
                classes=tuple(active),
                voters=tuple(reduced.members(c)[0] for c in active),
            )
        leaf = leaves[0]
        step = (active[leaf.voter - 1], active[leaf.witness - 1])
        logger.debug("Peeled class %d (attached to %d)", *step)
        peel_order.append(step)
        active.remove(step[0])

    reduced_tree = Tree(n=reduced.r, edges=list(reversed(peel_order)))
    full_tree = expand_clones(reduced, reduced_tree)
    table = verify_single_crossing(q, full_tree)
    if isinstance(table, NoCutWitness):
        raise NotSingleCrossingError(
            "Constructed tree failed verification", {"pair": f"{table.a},{table.b}"}
        )
    return RecognitionResult(
        reduced=reduced,
        reduced_tree=reduced_tree,
        full_tree=full_tree,
        cut_table=table,
        peel_order=tuple(peel_order),
    )


def is_single_crossing(p: Profile) -> bool:
    """Check whether some tree makes the profile single-crossing."""
    return isinstance(recognize(p), RecognitionResult)


# ═══════════════════════════════════════════════════════════
# Generation
# ═══════════════════════════════════════════════════════════


class GeneratedProfile(BaseModel):
    """
    A reduced witness profile for a tree.

    Voter v of the profile sits on tree vertex v. Each vertex introduced one
    candidate.

    Attributes:
        tree: The input tree
        profile: Profile over exactly n candidates
        association: association[v - 1] is the candidate introduced by vertex v
    """

    tree: Tree
    profile: Profile
    association: tuple[int, ...]

    def candidate_of(self, vertex: int) -> int:
        """Candidate introduced by a vertex."""
        return self.association[vertex - 1]

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        names = self.profile.names
        return {
            **self.profile.to_dict(),
            "association": {
                str(v): names[c] for v, c in enumerate(self.association, start=1)
            },
        }

    model_config = ConfigDict(frozen=True)


def generate_profile(t: Tree) -> GeneratedProfile:
    """
    Build a reduced profile that is single-crossing on t with no collapsible edge.

    Vertices are added in breadth-first order from vertex 1. The first two
    start as (c1 c2) / (c2 c1); each later vertex v attached to u copies u's
    order with c_v placed just before c_u, and c_v is placed just after c_u in
    every earlier order.

    Args:
        t: Tree with at least two vertices

    Returns:
        GeneratedProfile over candidates c1..cn

    Raises:
        PreconditionError: If t has fewer than two vertices
    """
    if t.n < MIN_GENERATOR_VERTICES:
        raise PreconditionError(
            "Generation needs a tree with at least two vertices", {"n": t.n}
        )

    order, parent = t.bfs_order(1)
    cand = {v: v - 1 for v in t.vertices}
    first, second = order[0], order[1]
    rankings: dict[int, list[int]] = {
        first: [cand[first], cand[second]],
        second: [cand[second], cand[first]],
    }

    for v in order[2:]:
        u = parent[v]
        new_order = list(rankings[u])
        new_order.insert(new_order.index(cand[u]), cand[v])
        for ranking in rankings.values():
            ranking.insert(ranking.index(cand[u]) + 1, cand[v])
        rankings[v] = new_order

    candidates = tuple(
        Candidate(index=cand[v], name=f"{GENERATED_CANDIDATE_PREFIX}{v}")
        for v in t.vertices
    )
    profile = Profile(
        candidates=candidates,
        voters=tuple(LinearOrder(ranking=tuple(rankings[v])) for v in t.vertices),
    )
    logger.debug("Generated profile for tree with %d vertices", t.n)
    return GeneratedProfile(
        tree=t, profile=profile, association=tuple(cand[v] for v in t.vertices)
    )


# ═══════════════════════════════════════════════════════════
# Line Classification
# ═══════════════════════════════════════════════════════════


class LineOrdering(BaseModel):
    """The minimal tree is a path; voters in path order."""

    ordering: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {"line": True, "ordering": list(self.ordering)}

    model_config = ConfigDict(frozen=True)


class NonLineWitness(BaseModel):
    """Three voters around a branching vertex: single-crossing on no tree."""

    center: int
    voters: tuple[int, int, int]

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {"line": False, "center": self.center, "voters": list(self.voters)}

    model_config = ConfigDict(frozen=True)


def hereditary_check(p: Profile) -> Union[LineOrdering, NonLineWitness]:
    """
    Classify a single-crossing profile as classical (line) or not.

    Args:
        p: Profile recognized as single-crossing

    Returns:
        LineOrdering of the expanded voters when the minimal tree is a path,
        otherwise three neighbors (as voters) of the smallest branching class

    Raises:
        NotSingleCrossingError: If the profile is not single-crossing
    """
    result = recognize(p)
    if isinstance(result, NotSingleCrossing):
        raise NotSingleCrossingError(
            "Line classification needs a single-crossing profile",
            {"stuck_classes": len(result.classes)},
        )
    return classify_line(result)


def classify_line(result: RecognitionResult) -> Union[LineOrdering, NonLineWitness]:
    """Line classification of an existing recognition result."""
    tree = result.reduced_tree
    if tree.is_path():
        return LineOrdering(ordering=result.full_tree.path_ordering())

    center = min(v for v in tree.vertices if tree.degree(v) >= 3)
    first, second, third = (
        result.reduced.members(c)[0] for c in tree.neighbors(center)[:3]
    )
    return NonLineWitness(
        center=result.reduced.members(center)[0], voters=(first, second, third)
    )
