"""
Domain models for sctool.

This module defines the core types shared by every algorithm: candidates, linear
orders, profiles (with multiplicities), reduced profiles and trees on voters.
All models are immutable pydantic models.
Author: DmitrTRC
"""

from collections import deque
from typing import Any, Iterable, Optional, Sequence

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    field_validator,
    model_validator,
)

from sctool.domain.exceptions import (
    PreconditionError,
    ProfileStructureError,
    TreeStructureError,
)
from sctool.domain.validators import (
    validate_candidate_name,
    validate_multiplicities,
    validate_permutation,
    validate_unique_names,
    validate_vertex,
)

Edge = tuple[int, int]


class Candidate(BaseModel):
    """
    An alternative being ranked by voters.

    Attributes:
        index: Position of the candidate in the profile header (0-based)
        name: Unique whitespace-free token

    Example:
        >>> Candidate(index=0, name="a")
    """

    index: int = Field(..., ge=0, description="0-based candidate index")
    name: str = Field(..., description="Candidate name token")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        """Validate that the name is a single token."""
        validate_candidate_name(v)
        return v

    def __str__(self) -> str:
        """String representation of candidate."""
        return self.name

    model_config = ConfigDict(frozen=True)


class LinearOrder(BaseModel):
    """
    One voter's strict ranking of all m candidates, best first.

    Attributes:
        ranking: Candidate indices, best first

    Example:
        >>> order = LinearOrder(ranking=(0, 2, 1, 3))
        >>> order.position(2)
        2
    """

    ranking: tuple[int, ...] = Field(..., min_length=1, description="Best first")

    _positions: tuple[int, ...] = PrivateAttr(default=())

    @field_validator("ranking")
    @classmethod
    def validate_ranking(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """Validate that the ranking is a permutation."""
        validate_permutation(v)
        return v

    def model_post_init(self, __context: Any) -> None:
        """Derive the position map pos(c)."""
        positions = [0] * len(self.ranking)
        for idx, candidate in enumerate(self.ranking):
            positions[candidate] = idx + 1
        self._positions = tuple(positions)

    @property
    def m(self) -> int:
        """Number of ranked candidates."""
        return len(self.ranking)

    @property
    def positions(self) -> tuple[int, ...]:
        """1-based position of every candidate, indexed by candidate."""
        return self._positions

    @property
    def top(self) -> int:
        """The most preferred candidate."""
        return self.ranking[0]

    def position(self, candidate: int) -> int:
        """
        Get pos(c), the 1-based position of a candidate.

        Args:
            candidate: Candidate index

        Returns:
            Position in [1, m]
        """
        return self._positions[candidate]

    def prefers(self, a: int, b: int) -> bool:
        """Check whether a is ranked above b."""
        return self._positions[a] < self._positions[b]

    def best_of(self, candidates: Iterable[int]) -> int:
        """Get the highest-ranked candidate of a set."""
        return min(candidates, key=lambda c: self._positions[c])

    def __len__(self) -> int:
        """Number of ranked candidates."""
        return len(self.ranking)

    model_config = ConfigDict(frozen=True)


class Profile(BaseModel):
    """
    An ordered list of voters' linear orders over a shared candidate set.

    Voters are 1-indexed. Each voter line may carry a multiplicity; tree-based
    algorithms work on `expanded()`, where vertex i is the i-th expanded voter.

    Attributes:
        candidates: Candidates in header order
        voters: One linear order per voter line
        multiplicities: Positive weight per voter line (default 1)

    Example:
        >>> p = Profile.from_names(["a", "b"], [["a", "b"], ["b", "a"]])
        >>> p.n
        2
    """

    candidates: tuple[Candidate, ...] = Field(..., description="Candidates")
    voters: tuple[LinearOrder, ...] = Field(..., description="Voter orders")
    multiplicities: tuple[int, ...] = Field(
        default=(), description="Weight of each voter line"
    )

    _index_of: dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def fill_multiplicities(cls, data: Any) -> Any:
        """Default every multiplicity to 1."""
        if isinstance(data, dict) and not data.get("multiplicities"):
            voters = tuple(data.get("voters", ()))
            data = {**data, "voters": voters, "multiplicities": (1,) * len(voters)}
        return data

    @model_validator(mode="after")
    def validate_profile(self) -> "Profile":
        """Validate the shared candidate set and multiplicities."""
        if not self.voters:
            raise ProfileStructureError("Profile has no voters", field="voters")
        if not self.candidates:
            raise ProfileStructureError("Profile has no candidates", field="candidates")

        for idx, candidate in enumerate(self.candidates):
            if candidate.index != idx:
                raise ProfileStructureError(
                    "Candidate indices must be contiguous",
                    field="candidates",
                    value=candidate.name,
                )
        validate_unique_names([c.name for c in self.candidates])

        m = len(self.candidates)
        for voter, order in enumerate(self.voters, start=1):
            if order.m != m:
                raise ProfileStructureError(
                    f"Voter {voter} ranks {order.m} candidates, expected {m}",
                    field="voters",
                    value=voter,
                )

        if len(self.multiplicities) != len(self.voters):
            raise ProfileStructureError(
                "One multiplicity per voter is required", field="multiplicities"
            )
        validate_multiplicities(self.multiplicities)
        return self

    def model_post_init(self, __context: Any) -> None:
        """Index candidate names."""
        self._index_of = {c.name: c.index for c in self.candidates}

    # ═══════════════════════════════════════════════════════════
    # Constructors
    # ═══════════════════════════════════════════════════════════

    @classmethod
    def from_names(
        cls,
        names: Sequence[str],
        rankings: Sequence[Sequence[str]],
        multiplicities: Optional[Sequence[int]] = None,
    ) -> "Profile":
        """
        Build a profile from candidate names.

        Args:
            names: Candidate names in header order
            rankings: Each voter's ranking as names, best first
            multiplicities: Optional weight per voter

        Returns:
            Profile

        Raises:
            ProfileStructureError: If a ranking names an unknown candidate
        """
        candidates = tuple(Candidate(index=i, name=n) for i, n in enumerate(names))
        index_of = {name: i for i, name in enumerate(names)}
        orders = []
        for ranking in rankings:
            unknown = [name for name in ranking if name not in index_of]
            if unknown:
                raise ProfileStructureError(
                    f"Unknown candidate: {unknown[0]}",
                    field="ranking",
                    value=unknown[0],
                )
            orders.append(LinearOrder(ranking=tuple(index_of[n] for n in ranking)))
        return cls(
            candidates=candidates,
            voters=tuple(orders),
            multiplicities=tuple(multiplicities or ()),
        )

    # ═══════════════════════════════════════════════════════════
    # Accessors
    # ═══════════════════════════════════════════════════════════

    @property
    def n(self) -> int:
        """Number of voter lines."""
        return len(self.voters)

    @property
    def m(self) -> int:
        """Number of candidates."""
        return len(self.candidates)

    @property
    def total_weight(self) -> int:
        """Sum of multiplicities."""
        return sum(self.multiplicities)

    @property
    def voter_count(self) -> int:
        """Number of voters after expansion (tree vertex count)."""
        return self.total_weight

    @property
    def names(self) -> tuple[str, ...]:
        """Candidate names in index order."""
        return tuple(c.name for c in self.candidates)

    def name_of(self, candidate: int) -> str:
        """Get a candidate's name."""
        return self.candidates[candidate].name

    def index_of(self, name: str) -> int:
        """
        Get a candidate's index by name.

        Raises:
            ProfileStructureError: If the name is unknown
        """
        try:
            return self._index_of[name]
        except KeyError as e:
            raise ProfileStructureError(
                f"Unknown candidate: {name}", field="candidate", value=name
            ) from e

    def voter(self, v: int) -> LinearOrder:
        """Get the order of voter v (1-based)."""
        return self.voters[v - 1]

    def weight(self, v: int) -> int:
        """Get the multiplicity of voter v (1-based)."""
        return self.multiplicities[v - 1]

    def ranking_names(self, v: int) -> tuple[str, ...]:
        """Get voter v's ranking as names."""
        return tuple(self.name_of(c) for c in self.voter(v).ranking)

    # ═══════════════════════════════════════════════════════════
    # Derived Profiles
    # ═══════════════════════════════════════════════════════════

    def duplicate_pair(self) -> Optional[tuple[int, int]]:
        """
        Find two voters with identical orders.

        Returns:
            (first, later) voter indices, or None if the profile is reduced
        """
        first_seen: dict[tuple[int, ...], int] = {}
        for v, order in enumerate(self.voters, start=1):
            if order.ranking in first_seen:
                return first_seen[order.ranking], v
            first_seen[order.ranking] = v
        if any(weight > 1 for weight in self.multiplicities):
            v = next(i for i, w in enumerate(self.multiplicities, 1) if w > 1)
            return v, v
        return None

    def is_reduced(self) -> bool:
        """Check that no linear order appears twice (counting multiplicities)."""
        return self.duplicate_pair() is None

    def expanded(self) -> "Profile":
        """
        Repeat every voter according to its multiplicity.

        Returns:
            Profile whose multiplicities are all 1
        """
        if all(weight == 1 for weight in self.multiplicities):
            return self
        voters = tuple(
            order
            for order, weight in zip(self.voters, self.multiplicities)
            for _ in range(weight)
        )
        return Profile(candidates=self.candidates, voters=voters)

    def expanded_origin(self) -> tuple[int, ...]:
        """Map every expanded voter (0-based position) to its voter line (1-based)."""
        return tuple(
            v
            for v, weight in enumerate(self.multiplicities, start=1)
            for _ in range(weight)
        )

    def subprofile(self, voters: Sequence[int]) -> "Profile":
        """
        Restrict the profile to some voters, in the given order.

        Args:
            voters: 1-based voter indices

        Returns:
            Profile of those voters with their multiplicities
        """
        for v in voters:
            validate_vertex(v, self.n)
        return Profile(
            candidates=self.candidates,
            voters=tuple(self.voter(v) for v in voters),
            multiplicities=tuple(self.weight(v) for v in voters),
        )

    def permuted(self, order: Sequence[int]) -> "Profile":
        """
        Reorder voters: new voter i is old voter order[i-1].

        Raises:
            ProfileStructureError: If order is not a permutation of 1..n
        """
        if sorted(order) != list(range(1, self.n + 1)):
            raise ProfileStructureError(
                "Voter order must be a permutation", field="order", value=list(order)
            )
        return self.subprofile(order)

    def with_multiplicities(self, weights: Sequence[int]) -> "Profile":
        """Replace every voter's multiplicity."""
        return Profile(
            candidates=self.candidates,
            voters=self.voters,
            multiplicities=tuple(weights),
        )

    def to_dict(self) -> dict[str, Any]:
        """
        Convert profile to a JSON-compatible dictionary.

        Returns:
            {"candidates": [...], "voters": [[...], ...]}, one entry per voter line;
            weights are carried by the K* prefix of the text form only
        """
        return {
            "candidates": list(self.names),
            "voters": [list(self.ranking_names(v)) for v in range(1, self.n + 1)],
        }

    def __str__(self) -> str:
        """String representation of profile."""
        return f"Profile(n={self.n}, m={self.m}, weight={self.total_weight})"

    model_config = ConfigDict(frozen=True)


class ReducedProfile(BaseModel):
    """
    The distinct orders D(P) of a profile with their clone counts.

    Attributes:
        candidates: Candidates of the source profile
        classes: Distinct orders in first-appearance order
        class_of: 1-based class of every voter line of the source profile
        counts: Total weight per class
    """

    candidates: tuple[Candidate, ...]
    classes: tuple[LinearOrder, ...]
    class_of: tuple[int, ...]
    counts: tuple[int, ...]

    @model_validator(mode="after")
    def validate_reduction(self) -> "ReducedProfile":
        """Validate distinct classes and positive counts."""
        if len({order.ranking for order in self.classes}) != len(self.classes):
            raise ProfileStructureError("Classes must be pairwise distinct")
        if len(self.counts) != len(self.classes):
            raise ProfileStructureError("One count per class is required")
        validate_multiplicities(self.counts)
        for c in self.class_of:
            if not 1 <= c <= len(self.classes):
                raise ProfileStructureError("Class index out of range", value=c)
        return self

    @property
    def r(self) -> int:
        """Number of distinct classes."""
        return len(self.classes)

    @property
    def total_weight(self) -> int:
        """Total voter weight across classes."""
        return sum(self.counts)

    def members(self, c: int) -> tuple[int, ...]:
        """Voter lines (1-based) belonging to class c (1-based)."""
        return tuple(v for v, cls in enumerate(self.class_of, start=1) if cls == c)

    def as_profile(self) -> Profile:
        """The classes as a profile, counts as multiplicities."""
        return Profile(
            candidates=self.candidates,
            voters=self.classes,
            multiplicities=self.counts,
        )

    def class_profile(self) -> Profile:
        """The classes as a reduced profile with unit multiplicities."""
        return Profile(candidates=self.candidates, voters=self.classes)

    model_config = ConfigDict(frozen=True)


def reduce_profile(p: Profile) -> ReducedProfile:
    """
    Collapse identical linear orders into classes.

    Args:
        p: Profile to reduce

    Returns:
        ReducedProfile with classes in first-appearance order and counts
        aggregating voter multiplicities
    """
    class_index: dict[tuple[int, ...], int] = {}
    classes: list[LinearOrder] = []
    counts: list[int] = []
    class_of: list[int] = []

    for order, weight in zip(p.voters, p.multiplicities):
        idx = class_index.get(order.ranking)
        if idx is None:
            classes.append(order)
            counts.append(0)
            idx = len(classes)
            class_index[order.ranking] = idx
        counts[idx - 1] += weight
        class_of.append(idx)

    return ReducedProfile(
        candidates=p.candidates,
        classes=tuple(classes),
        class_of=tuple(class_of),
        counts=tuple(counts),
    )


class Tree(BaseModel):
    """
    A tree on voter vertices 1..n.

    Edges are stored normalized (u < v) and sorted, so equal trees compare equal.

    Attributes:
        n: Vertex count
        edges: n-1 unordered vertex pairs

    Example:
        >>> star = Tree(n=4, edges=[(1, 2), (2, 3), (2, 4)])
        >>> star.degree(2)
        3
    """

    n: int = Field(..., ge=1, description="Vertex count")
    edges: tuple[Edge, ...] = Field(default=(), description="Normalized edges")

    _adjacency: dict[int, tuple[int, ...]] = PrivateAttr(default_factory=dict)

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, value: Any) -> tuple[Edge, ...]:
        """Normalize every edge to (min, max) and sort."""
        normalized = []
        for edge in value:
            u, v = edge
            normalized.append((min(int(u), int(v)), max(int(u), int(v))))
        return tuple(sorted(normalized))

    @model_validator(mode="after")
    def validate_tree(self) -> "Tree":
        """Validate range, acyclicity and the edge count."""
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            validate_vertex(u, self.n)
            validate_vertex(v, self.n)
            root_u, root_v = find(u), find(v)
            if root_u == root_v:
                raise TreeStructureError(
                    f"Cycle detected at edge {u} {v}", field="edges", value=(u, v)
                )
            parent[root_u] = root_v

        # acyclic with n - 1 edges implies connected
        if len(self.edges) != self.n - 1:
            raise TreeStructureError(
                f"Expected {self.n - 1} edges for {self.n} vertices, "
                f"got {len(self.edges)}",
                field="edges",
                value=len(self.edges),
            )
        return self

    def model_post_init(self, __context: Any) -> None:
        """Build sorted adjacency lists."""
        adjacency: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}

    # ═══════════════════════════════════════════════════════════
    # Constructors
    # ═══════════════════════════════════════════════════════════

    @classmethod
    def line(cls, order: Sequence[int]) -> "Tree":
        """Build the path visiting vertices in the given order."""
        return cls(n=len(order), edges=list(zip(order, order[1:])))

    @classmethod
    def star(cls, n: int, center: int = 1) -> "Tree":
        """Build the star S_n with the given center."""
        return cls(n=n, edges=[(center, v) for v in range(1, n + 1) if v != center])

    # ═══════════════════════════════════════════════════════════
    # Structure
    # ═══════════════════════════════════════════════════════════

    @property
    def vertices(self) -> range:
        """All vertices 1..n."""
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in increasing order."""
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        """Degree of v."""
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether (u, v) is an edge."""
        return v in self._adjacency.get(u, ())

    def leaves(self) -> tuple[int, ...]:
        """Vertices of degree 1."""
        return tuple(v for v in self.vertices if self.degree(v) == 1)

    def is_path(self) -> bool:
        """Check whether the tree is a line."""
        return all(self.degree(v) <= 2 for v in self.vertices)

    def path_ordering(self) -> tuple[int, ...]:
        """
        Walk a path tree from its smaller endpoint.

        Raises:
            PreconditionError: If the tree is not a path
        """
        if not self.is_path():
            raise PreconditionError("Tree is not a path")
        if self.n == 1:
            return (1,)
        start = min(self.leaves())
        return tuple(self.rooted(start)[1])

    def rooted(self, root: int) -> tuple[dict[int, int], list[int]]:
        """
        Root the tree.

        Args:
            root: Root vertex

        Returns:
            (parent map without the root, preorder list starting at root)
        """
        validate_vertex(root, self.n)
        parent: dict[int, int] = {}
        order = [root]
        stack = [root]
        seen = {root}
        while stack:
            u = stack.pop()
            for w in reversed(self._adjacency[u]):
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    order.append(w)
                    stack.append(w)
        return parent, order

    def bfs_order(self, root: int = 1) -> tuple[list[int], dict[int, int]]:
        """Breadth-first order from root with parent map."""
        validate_vertex(root, self.n)
        order = [root]
        parent: dict[int, int] = {}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if w != root and w not in parent:
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        return order, parent

    def path(self, u: int, v: int) -> list[int]:
        """The unique path from u to v, endpoints included."""
        parent, _ = self.rooted(u)
        walk = [v]
        while walk[-1] != u:
            walk.append(parent[walk[-1]])
        return walk[::-1]

    def distance(self, u: int, v: int) -> int:
        """d(u, v): number of edges on the unique u-v path."""
        return len(self.path(u, v)) - 1

    def components(self, vertices: Iterable[int]) -> list[tuple[int, ...]]:
        """
        Connected components of the subgraph induced by some vertices.

        Returns:
            Components as sorted tuples, ordered by smallest member
        """
        remaining = set(vertices)
        result = []
        for start in sorted(remaining):
            if start not in remaining:
                continue
            remaining.discard(start)
            component = [start]
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self._adjacency[u]:
                    if w in remaining:
                        remaining.discard(w)
                        component.append(w)
                        stack.append(w)
            result.append(tuple(sorted(component)))
        return result

    def split(self, edge: Edge) -> tuple[frozenset[int], frozenset[int]]:
        """
        Delete an edge and return the two sides.

        Args:
            edge: (u, v), an edge of the tree

        Returns:
            (side containing u, side containing v)

        Raises:
            TreeStructureError: If (u, v) is not an edge
        """
        u, v = edge
        if not self.has_edge(u, v):
            raise TreeStructureError(f"Not an edge: {u} {v}", field="edge", value=edge)
        side_u = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for w in self._adjacency[x]:
                if w not in side_u and not (x == u and w == v):
                    side_u.add(w)
                    stack.append(w)
        return frozenset(side_u), frozenset(set(self.vertices) - side_u)

    def relabel(self, mapping: dict[int, int], n: Optional[int] = None) -> "Tree":
        """Rename vertices through a mapping (optionally onto a larger range)."""
        return Tree(
            n=n or self.n,
            edges=[(mapping[u], mapping[v]) for u, v in self.edges],
        )

    def to_dict(self) -> dict[str, Any]:
        """
        Convert tree to a JSON-compatible dictionary.

        Returns:
            {"n": N, "edges": [[u, v], ...]}
        """
        return {"n": self.n, "edges": [list(edge) for edge in self.edges]}

    def __str__(self) -> str:
        """String representation of tree."""
        edges = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Tree(n={self.n}: {edges})"

    model_config = ConfigDict(frozen=True)
