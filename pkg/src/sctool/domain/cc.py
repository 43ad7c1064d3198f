"""
Chamberlin-Courant committees on single-crossing profiles.

Misrepresentation models, assignment costs, and the polynomial dynamic program
over the voter tree. Costs are exact fractions.

The program roots the tree at an anchor leaf with ranking a_1, ..., a_m. For
an edge e, Near(e) is the anchor's side and Far(e) the other. A[V, j, t] is
the least misrepresentation of V with at most t representatives from
a_1..a_j, kept for V = N and for every Near(e). In an optimal assignment each
representative's voters form a connected region, so the region of the latest
elected candidate is the far side of an edge.
Author: DmitrTRC
"""

import logging
import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from sctool.domain.enums import AggregationMode, MisrepKind, TableMove
from sctool.domain.exceptions import (
    EmptyCommitteeError,
    ModelValidationError,
    NotSingleCrossingError,
    PreconditionError,
)
from sctool.domain.models import Candidate, Edge, Profile, Tree
from sctool.domain.sctree import NoCutWitness, verify_single_crossing
from sctool.domain.validators import validate_committee_size

logger = logging.getLogger(__name__)

Cost = Union[Fraction, int, float]
INFEASIBLE: float = math.inf


def format_rational(value: Fraction) -> str:
    """Render a fraction as "p/q", always with a denominator."""
    return f"{value.numerator}/{value.denominator}"


def aggregate(values: Iterable[Cost], mode: AggregationMode) -> Cost:
    """
    Aggregate misrepresentation values.

    Args:
        values: Individual values
        mode: Sum (utilitarian) or max (egalitarian)

    Returns:
        Aggregate; 0 for no values
    """
    if mode == AggregationMode.UTILITARIAN:
        return sum(values, Fraction(0))
    return max(values, default=Fraction(0))


def _combine(left: Cost, right: Cost, mode: AggregationMode) -> Cost:
    if mode == AggregationMode.UTILITARIAN:
        return left + right
    return max(left, right)


# ═══════════════════════════════════════════════════════════
# Misrepresentation Models
# ═══════════════════════════════════════════════════════════


class Violation(BaseModel):
    """
    One breach of the misrepresentation-function definition.

    Attributes:
        reason: What is wrong
        voter: Voter line (1-based), when voter-specific
        candidate: Higher-ranked candidate of a monotonicity breach
        other: Lower-ranked candidate with the smaller value
    """

    reason: str
    voter: Optional[int] = None
    candidate: Optional[int] = None
    other: Optional[int] = None

    def to_dict(self, names: Sequence[str]) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {
            "reason": self.reason,
            "voter": self.voter,
            "candidate": names[self.candidate] if self.candidate is not None else None,
            "other": names[self.other] if self.other is not None else None,
        }

    model_config = ConfigDict(frozen=True)


class MisrepModel(BaseModel, ABC):
    """Base class for misrepresentation functions r(v, c)."""

    @property
    @abstractmethod
    def kind(self) -> MisrepKind:
        """Model family."""

    @abstractmethod
    def check_dimensions(self, p: Profile) -> None:
        """
        Ensure the model fits the profile.

        Raises:
            ModelValidationError: On a dimension mismatch
        """

    @abstractmethod
    def row(self, p: Profile, v: int) -> tuple[Fraction, ...]:
        """Values r(v, c) for every candidate c of voter line v."""

    def structural_violations(self) -> list[Violation]:
        """Violations that do not depend on a particular voter."""
        return []

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _to_fractions(value: Any) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in value)


class PositionalModel(MisrepModel):
    """
    Classical positional model: r(v, c) = s[pos_v(c)].

    Attributes:
        scores: s_1..s_m, expected 0 = s_1 <= s_2 <= ... <= s_m
    """

    scores: tuple[Fraction, ...] = Field(..., min_length=1)

    @field_validator("scores", mode="before")
    @classmethod
    def coerce_scores(cls, v: Any) -> tuple[Fraction, ...]:
        """Coerce numbers and strings to fractions."""
        return _to_fractions(v)

    @classmethod
    def borda(cls, m: int) -> "PositionalModel":
        """Borda misrepresentation (0, 1, ..., m-1)."""
        return cls(scores=tuple(range(m)))

    @classmethod
    def k_approval(cls, m: int, j: int) -> "PositionalModel":
        """Every voter approves her top j candidates."""
        return cls(scores=tuple(0 if i < j else 1 for i in range(m)))

    @property
    def kind(self) -> MisrepKind:
        """Model family."""
        return MisrepKind.POSITIONAL

    def check_dimensions(self, p: Profile) -> None:
        """Ensure there is one score per position."""
        if len(self.scores) != p.m:
            raise ModelValidationError(
                f"Positional vector has {len(self.scores)} entries, expected {p.m}"
            )

    def row(self, p: Profile, v: int) -> tuple[Fraction, ...]:
        """Values of voter line v."""
        order = p.voter(v)
        return tuple(self.scores[order.position(c) - 1] for c in range(p.m))

    def structural_violations(self) -> list[Violation]:
        """Check s_1 = 0."""
        if self.scores[0] != 0:
            return [Violation(reason="first score must be 0")]
        return []


class MatrixModel(MisrepModel):
    """
    Explicit values r(v, c), one row per voter line.

    Attributes:
        rows: n×m nonnegative fractions
    """

    rows: tuple[tuple[Fraction, ...], ...]

    @field_validator("rows", mode="before")
    @classmethod
    def coerce_rows(cls, v: Any) -> tuple[tuple[Fraction, ...], ...]:
        """Coerce numbers and strings to fractions."""
        return tuple(_to_fractions(row) for row in v)

    @property
    def kind(self) -> MisrepKind:
        """Model family."""
        return MisrepKind.MATRIX

    def check_dimensions(self, p: Profile) -> None:
        """Ensure an n×m shape."""
        if len(self.rows) != p.n or any(len(row) != p.m for row in self.rows):
            raise ModelValidationError(
                f"Matrix must have {p.n} rows of {p.m} values"
            )

    def row(self, p: Profile, v: int) -> tuple[Fraction, ...]:
        """Values of voter line v."""
        return self.rows[v - 1]


class ApprovalModel(MisrepModel):
    """
    Approval misrepresentation: 0 for approved candidates, 1 otherwise.

    Attributes:
        approved: Approved candidate set per voter line
    """

    approved: tuple[frozenset[int], ...]

    @property
    def kind(self) -> MisrepKind:
        """Model family."""
        return MisrepKind.APPROVAL

    def check_dimensions(self, p: Profile) -> None:
        """Ensure one ballot per voter line over known candidates."""
        if len(self.approved) != p.n:
            raise ModelValidationError(f"Expected {p.n} approval ballots")
        if any(c >= p.m or c < 0 for ballot in self.approved for c in ballot):
            raise ModelValidationError("Approval ballot names an unknown candidate")

    def row(self, p: Profile, v: int) -> tuple[Fraction, ...]:
        """Values of voter line v."""
        ballot = self.approved[v - 1]
        return tuple(Fraction(0) if c in ballot else Fraction(1) for c in range(p.m))


def _row_violations(p: Profile, v: int, row: Sequence[Fraction]) -> list[Violation]:
    """Negative values and monotonicity breaches of one voter line."""
    violations = [
        Violation(reason="negative value", voter=v, candidate=c)
        for c in range(p.m)
        if row[c] < 0
    ]
    ranking = p.voter(v).ranking
    for i, c in enumerate(ranking):
        for other in ranking[i + 1 :]:
            if row[c] > row[other]:
                violations.append(
                    Violation(
                        reason="higher-ranked candidate costs more",
                        voter=v,
                        candidate=c,
                        other=other,
                    )
                )
    return violations


def validate_model(model: MisrepModel, p: Profile) -> list[Violation]:
    """
    Check a misrepresentation model against a profile.

    Args:
        model: Model to check
        p: Profile it will be used with

    Returns:
        All violations found; empty means valid

    Raises:
        ModelValidationError: If the model's dimensions do not match p
    """
    model.check_dimensions(p)
    violations = model.structural_violations()
    for v in range(1, p.n + 1):
        violations.extend(_row_violations(p, v, model.row(p, v)))
    return violations


def ensure_valid_model(model: MisrepModel, p: Profile) -> None:
    """
    Raise when validate_model reports anything.

    Raises:
        ModelValidationError: Carrying the violation list
    """
    violations = validate_model(model, p)
    if violations:
        raise ModelValidationError(
            f"Misrepresentation model is invalid ({violations[0].reason})", violations
        )


def misrep_value(model: MisrepModel, p: Profile, v: int, c: int) -> Fraction:
    """
    Get r(v, c).

    Args:
        model: Misrepresentation model
        p: Profile
        v: Voter line (1-based)
        c: Candidate index

    Returns:
        Nonnegative fraction

    Raises:
        ModelValidationError: If the model does not fit p or voter v's row is
            not a valid misrepresentation row
    """
    model.check_dimensions(p)
    row = model.row(p, v)
    violations = _row_violations(p, v, row)
    if violations:
        raise ModelValidationError(f"Invalid values for voter {v}", violations)
    return row[c]


def _expanded_costs(model: MisrepModel, p: Profile) -> list[tuple[Fraction, ...]]:
    """Cost rows for every expanded voter, in expanded order."""
    rows = {v: model.row(p, v) for v in range(1, p.n + 1)}
    return [rows[v] for v in p.expanded_origin()]


# ═══════════════════════════════════════════════════════════
# Assignments
# ═══════════════════════════════════════════════════════════


class Assignment(BaseModel):
    """
    Representatives of every expanded voter.

    Attributes:
        representatives: representatives[i - 1] represents voter i
    """

    representatives: tuple[int, ...] = Field(..., min_length=1)

    @property
    def committee(self) -> tuple[int, ...]:
        """The image w(N), sorted by candidate index."""
        return tuple(sorted(set(self.representatives)))

    def of(self, voter: int) -> int:
        """Representative of a voter."""
        return self.representatives[voter - 1]

    model_config = ConfigDict(frozen=True)


def assignment_cost(
    p: Profile, w: Assignment, model: MisrepModel, mode: AggregationMode
) -> Fraction:
    """
    Total misrepresentation Phi(P, w).

    Args:
        p: Profile (multiplicities count as repeated voters)
        w: Assignment over the expanded voters
        model: Misrepresentation model
        mode: Sum or max

    Returns:
        Phi as a fraction

    Raises:
        PreconditionError: If w does not cover every expanded voter
    """
    costs = _expanded_costs(model, p)
    if len(w.representatives) != len(costs):
        raise PreconditionError(
            "Assignment must cover every voter",
            {"assigned": len(w.representatives), "voters": len(costs)},
        )
    total = aggregate((costs[i][c] for i, c in enumerate(w.representatives)), mode)
    return Fraction(total)


def best_assignment_for_committee(
    p: Profile, committee: Iterable[int], model: MisrepModel, mode: AggregationMode
) -> Assignment:
    """
    Assign every voter her cheapest committee member.

    Ties go to the member she ranks higher. The same assignment is optimal for
    both aggregation modes.

    Args:
        p: Profile
        committee: Nonempty set of candidate indices
        model: Misrepresentation model
        mode: Aggregation mode

    Returns:
        Assignment over the expanded voters

    Raises:
        EmptyCommitteeError: If the committee is empty
    """
    members = sorted(set(committee))
    if not members:
        raise EmptyCommitteeError()
    q = p.expanded()
    costs = _expanded_costs(model, p)
    representatives = tuple(
        min(members, key=lambda c, i=i: (costs[i][c], q.voters[i].position(c)))
        for i in range(q.n)
    )
    logger.debug("Best assignment for committee %s (%s)", members, mode)
    return Assignment(representatives=representatives)


class CCResult(BaseModel):
    """
    An optimal Chamberlin-Courant committee.

    Attributes:
        candidates: Candidates of the profile
        k: Committee size bound
        mode: Aggregation mode
        phi: Total misrepresentation
        assignment: Representative of every expanded voter
    """

    candidates: tuple[Candidate, ...]
    k: int = Field(..., ge=1)
    mode: AggregationMode
    phi: Fraction
    assignment: Assignment

    @property
    def committee(self) -> tuple[int, ...]:
        """Assigned candidates, sorted by index."""
        return self.assignment.committee

    def to_dict(self) -> dict[str, Any]:
        """
        Convert to a JSON-compatible dictionary.

        Returns:
            {"k", "mode", "phi": "p/q", "committee": [...], "assignment": {...}}
        """
        names = [c.name for c in self.candidates]
        return {
            "k": self.k,
            "mode": self.mode.value,
            "phi": format_rational(self.phi),
            "committee": [names[c] for c in self.committee],
            "assignment": {
                str(v): names[c]
                for v, c in enumerate(self.assignment.representatives, start=1)
            },
        }

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


# ═══════════════════════════════════════════════════════════
# Dynamic Program
# ═══════════════════════════════════════════════════════════


class TableEntry(BaseModel):
    """
    How A[N, j, t] was reached.

    Attributes:
        move: Skip a_j, collapse everything onto one candidate, or elect a_j
        candidate: Collapsed-to or elected candidate (None for skip)
        edge: Edge whose far side a_j represents (elect only)
    """

    move: TableMove
    candidate: Optional[int] = None
    edge: Optional[Edge] = None

    model_config = ConfigDict(frozen=True)


class DPTable(BaseModel):
    """
    The committee table over the whole vertex set and every near side.

    A[V, j, t] is the least misrepresentation of the voters V using at most t
    representatives drawn from the anchor's first j candidates. V is either N
    (all voters) or Near(e), the anchor's side of an edge e.

    Attributes:
        n: Number of expanded voters
        anchor: Root leaf of the tree
        anchor_ranking: Anchor's ranking, a_1 first
        k: Largest budget
        whole_values: A[N, j, t] at [j - 1][t - 1]
        near_values: A[Near(e), j, t] per edge at [j - 1][t - 1]
        near_sides: Near(e) per edge
        entries: Move realizing A[N, j, t] at [j - 1][t - 1]
    """

    n: int
    anchor: int
    anchor_ranking: tuple[int, ...]
    k: int
    whole_values: tuple[tuple[Fraction, ...], ...]
    near_values: dict[Edge, tuple[tuple[Fraction, ...], ...]]
    near_sides: dict[Edge, frozenset[int]]
    entries: tuple[tuple[TableEntry, ...], ...]

    def whole(self, j: int, t: int) -> Fraction:
        """A[N, j, t]."""
        return self.whole_values[j - 1][t - 1]

    def near(self, edge: Edge, j: int, t: int) -> Fraction:
        """A[Near(edge), j, t]."""
        return self.near_values[(min(edge), max(edge))][j - 1][t - 1]

    def states(self) -> list[frozenset[int]]:
        """Vertex sets with a row: N first, then Near(e) in edge order."""
        return [frozenset(range(1, self.n + 1)), *self.near_sides.values()]

    def value(self, vertices: Iterable[int], j: int, t: int) -> Fraction:
        """
        A[V, j, t] for a vertex set V that has a row.

        Raises:
            KeyError: If V is neither N nor a near side
        """
        wanted = frozenset(vertices)
        if wanted == frozenset(range(1, self.n + 1)):
            return self.whole(j, t)
        for edge, side in self.near_sides.items():
            if side == wanted:
                return self.near(edge, j, t)
        raise KeyError(sorted(wanted))

    def entry(self, j: int, t: int) -> TableEntry:
        """Move realizing A[N, j, t]."""
        return self.entries[j - 1][t - 1]

    @property
    def optimum(self) -> Fraction:
        """A[N, m, k]."""
        return self.whole(len(self.anchor_ranking), self.k)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _scaled_costs(model: MisrepModel, p: Profile) -> tuple[list[tuple[int, ...]], int]:
    """Expanded cost rows as integers over one common denominator."""
    rows = _expanded_costs(model, p)
    scale = math.lcm(*(x.denominator for row in rows for x in row))
    return [tuple(int(x * scale) for x in row) for row in rows], scale


def _region_cost(
    costs: list[tuple[int, ...]],
    vertices: Iterable[int],
    c: int,
    mode: AggregationMode,
) -> int:
    values = [costs[v - 1][c] for v in vertices]
    if mode == AggregationMode.UTILITARIAN:
        return sum(values)
    return max(values, default=0)


class _Rooting:
    """A connected vertex set containing the anchor, rooted at the anchor."""

    def __init__(
        self, anchor: int, parent: dict[int, int], preorder: list[int]
    ) -> None:
        self.anchor = anchor
        self.parent = parent
        self.preorder = preorder
        self.children: dict[int, list[int]] = {v: [] for v in preorder}
        for v in preorder[1:]:
            self.children[parent[v]].append(v)

    @classmethod
    def of(cls, tree: Tree, anchor: int) -> "_Rooting":
        parent, preorder = tree.rooted(anchor)
        return cls(anchor, parent, preorder)

    def below(self, x: int) -> list[int]:
        """x and everything farther from the anchor behind it."""
        found: list[int] = []
        stack = [x]
        while stack:
            v = stack.pop()
            found.append(v)
            stack.extend(self.children[v])
        return sorted(found)

    def without(self, x: int) -> "_Rooting":
        """The anchor's side of the edge above x."""
        gone = set(self.below(x))
        preorder = [v for v in self.preorder if v not in gone]
        return _Rooting(
            self.anchor, {v: self.parent[v] for v in preorder[1:]}, preorder
        )

    def lower_ends(self) -> list[tuple[Edge, int]]:
        """Edges inside the set in edge order, each with its far endpoint."""
        return sorted(((min(p, x), max(p, x)), x) for x, p in self.parent.items())


class _Sweep:
    """
    Rooted tree knapsack over connected representation regions.

    inside[x][c][t] prices everything below x (x included) when x is
    represented by c and that part splits into exactly t regions. outside[x]
    prices the rest when x's parent is represented by c. Index 0 is always
    infeasible.
    """

    def __init__(
        self,
        rooting: _Rooting,
        costs: list[tuple[int, ...]],
        allowed: Sequence[int],
        k: int,
        mode: AggregationMode,
    ) -> None:
        self.rooting = rooting
        self.costs = costs
        self.allowed = tuple(allowed)
        self.k = k
        self.mode = mode
        self.inside: dict[int, dict[int, list[Cost]]] = {}
        self.opened: dict[int, list[Cost]] = {}
        self.outside: dict[int, dict[int, list[Cost]]] = {}

    def _unit(self, cost: Cost) -> list[Cost]:
        row: list[Cost] = [INFEASIBLE] * (self.k + 1)
        row[1] = cost
        return row

    def _identity(self) -> list[Cost]:
        row: list[Cost] = [INFEASIBLE] * (self.k + 1)
        row[0] = 0
        return row

    def _convolve(self, left: list[Cost], right: list[Cost]) -> list[Cost]:
        result: list[Cost] = [INFEASIBLE] * (self.k + 1)
        for a, x in enumerate(left):
            if x == INFEASIBLE:
                continue
            for b in range(self.k + 1 - a):
                y = right[b]
                if y == INFEASIBLE:
                    continue
                total = _combine(x, y, self.mode)
                if total < result[a + b]:
                    result[a + b] = total
        return result

    def _gain(self, u: int, c: int) -> list[Cost]:
        """Regions child u adds to its parent's region when the parent has c."""
        merged, opened = self.inside[u][c], self.opened[u]
        return [
            min(merged[s + 1] if s < self.k else INFEASIBLE, opened[s])
            for s in range(self.k + 1)
        ]

    def down(self) -> "_Sweep":
        for x in reversed(self.rooting.preorder):
            rows: dict[int, list[Cost]] = {}
            for c in self.allowed:
                row = self._unit(self.costs[x - 1][c])
                for u in self.rooting.children[x]:
                    row = self._convolve(row, self._gain(u, c))
                rows[c] = row
            self.inside[x] = rows
            self.opened[x] = [
                min(rows[c][t] for c in self.allowed) for t in range(self.k + 1)
            ]
        return self

    def _head(self, p: int, c: int, fresh: list[Cost]) -> list[Cost]:
        """Price of p plus everything above it, p represented by c."""
        own = self.costs[p - 1][c]
        if p == self.rooting.anchor:
            return self._unit(own)
        joined = self.outside[p][c]
        row: list[Cost] = [INFEASIBLE] * (self.k + 1)
        for t in range(1, self.k + 1):
            rest = min(joined[t], fresh[t - 1])
            if rest != INFEASIBLE:
                row[t] = _combine(rest, own, self.mode)
        return row

    def up(self) -> "_Sweep":
        for p in self.rooting.preorder:
            kids = self.rooting.children[p]
            if not kids:
                continue
            fresh: list[Cost] = [INFEASIBLE] * (self.k + 1)
            if p != self.rooting.anchor:
                above = self.outside[p]
                fresh = [
                    min(above[d][t] for d in self.allowed) for t in range(self.k + 1)
                ]
            for c in self.allowed:
                gains = [self._gain(u, c) for u in kids]
                # suffix[i] merges the children after the i-th
                suffix = [self._identity()]
                for gain in reversed(gains[1:]):
                    suffix.append(self._convolve(gain, suffix[-1]))
                suffix.reverse()
                prefix = self._head(p, c, fresh)
                for i, u in enumerate(kids):
                    self.outside.setdefault(u, {})[c] = self._convolve(
                        prefix, suffix[i]
                    )
                    prefix = self._convolve(prefix, gains[i])
        return self

    def whole(self, t: int) -> Cost:
        """Best cost of the whole set with at most t regions."""
        rows = self.inside[self.rooting.anchor]
        return min(rows[c][s] for c in self.allowed for s in range(1, t + 1))

    def near(self, x: int, t: int) -> Cost:
        """Best cost of the anchor's side of the edge above x, at most t regions."""
        rows = self.outside[x]
        return min(rows[c][s] for c in self.allowed for s in range(1, t + 1))


def _optimum(
    part: _Rooting,
    costs: list[tuple[int, ...]],
    allowed: Sequence[int],
    t: int,
    mode: AggregationMode,
) -> Cost:
    return _Sweep(part, costs, allowed, t, mode).down().whole(t)


def _trace(
    rooting: _Rooting,
    costs: list[tuple[int, ...]],
    ranking: Sequence[int],
    k: int,
    mode: AggregationMode,
) -> tuple[Cost, dict[int, int]]:
    """
    Rebuild an optimal assignment from A[N, m, k].

    Each step takes the smallest prefix j that keeps the value (skip), then
    collapses onto a_j if that is optimal, else elects a_j for the far side of
    the first edge in edge order whose near side completes the value.
    """
    representatives: dict[int, int] = {}
    part, j, t = rooting, len(ranking), k
    phi = value = _optimum(part, costs, ranking[:j], t, mode)
    while True:
        low, high = 1, j
        while low < high:
            mid = (low + high) // 2
            if _optimum(part, costs, ranking[:mid], t, mode) == value:
                high = mid
            else:
                low = mid + 1
        j = low
        candidate = ranking[j - 1]
        if _region_cost(costs, part.preorder, candidate, mode) == value:
            representatives.update(dict.fromkeys(part.preorder, candidate))
            return phi, representatives
        if j == 1 or t == 1:
            raise AssertionError("Collapse must realize a single-region value")
        sweep = _Sweep(part, costs, ranking[: j - 1], t - 1, mode).down().up()
        for _, x in part.lower_ends():
            far = part.below(x)
            rest = sweep.near(x, t - 1)
            if _combine(rest, _region_cost(costs, far, candidate, mode), mode) == value:
                representatives.update(dict.fromkeys(far, candidate))
                part, j, t, value = part.without(x), j - 1, t - 1, rest
                break
        else:
            raise AssertionError("No elect move realizes the value")


def _prepare(
    p: Profile, t: Tree, k: int, model: MisrepModel, anchor: Optional[int]
) -> tuple[Profile, int]:
    """Check preconditions; return the expanded profile and the anchor."""
    validate_committee_size(k, p.m)
    ensure_valid_model(model, p)
    verdict = verify_single_crossing(p, t)
    if isinstance(verdict, NoCutWitness):
        raise NotSingleCrossingError(
            "Profile is not single-crossing on the given tree",
            {"pair": f"{p.name_of(verdict.a)},{p.name_of(verdict.b)}"},
        )
    leaves = t.leaves() or (1,)
    if anchor is None:
        anchor = min(leaves)
    elif anchor not in leaves:
        raise PreconditionError("Anchor must be a leaf of the tree", {"anchor": anchor})
    return p.expanded(), anchor


def build_dp_table(
    p: Profile,
    t: Tree,
    k: int,
    model: MisrepModel,
    mode: AggregationMode,
    anchor: Optional[int] = None,
) -> DPTable:
    """
    Compute A[V, j, t] for V = N and every near side, in one pass over j.

    The N row follows three moves: skip a_j (A[N, j - 1, t]), collapse all
    voters onto the best of a_1..a_j, or elect a_j for the far side of an edge
    e on top of A[Near(e), j - 1, t - 1]. Near rows come from a downward and
    an upward knapsack sweep per prefix, since the near side of an edge
    inside Near(e) is in general not a near side of the full tree.

    Args:
        p: Profile single-crossing on t
        t: Tree on the expanded voters
        k: Largest budget
        model: Valid misrepresentation model
        mode: Aggregation mode
        anchor: Root leaf (default: smallest-index leaf)

    Returns:
        DPTable

    Raises:
        NotSingleCrossingError: If p is not single-crossing on t
        InvalidCommitteeSizeError: If k is outside [1, m]
        ModelValidationError: If the model is invalid for p
    """
    q, root = _prepare(p, t, k, model, anchor)
    costs, scale = _scaled_costs(model, p)
    rooting = _Rooting.of(t, root)
    ranking = q.voter(root).ranking
    ends = rooting.lower_ends()
    far = {edge: rooting.below(x) for edge, x in ends}

    whole: list[list[Cost]] = []
    entries: list[tuple[TableEntry, ...]] = []
    near: dict[Edge, list[list[Cost]]] = {edge: [] for edge, _ in ends}
    collapsed: Cost = INFEASIBLE
    collapsed_to = ranking[0]
    for j in range(1, q.m + 1):
        candidate = ranking[j - 1]
        single = _region_cost(costs, rooting.preorder, candidate, mode)
        if single < collapsed:
            collapsed, collapsed_to = single, candidate
        far_costs = {
            edge: _region_cost(costs, side, candidate, mode)
            for edge, side in far.items()
        }
        row: list[Cost] = []
        steps: list[TableEntry] = []
        for budget in range(1, k + 1):
            options: list[tuple[Cost, TableEntry]] = []
            if j > 1:
                options.append(
                    (whole[j - 2][budget - 1], TableEntry(move=TableMove.SKIP))
                )
            options.append(
                (
                    collapsed,
                    TableEntry(move=TableMove.COLLAPSE, candidate=collapsed_to),
                )
            )
            if j > 1 and budget > 1:
                for edge, _ in ends:
                    elected = _combine(
                        near[edge][j - 2][budget - 2], far_costs[edge], mode
                    )
                    options.append(
                        (
                            elected,
                            TableEntry(
                                move=TableMove.ELECT, candidate=candidate, edge=edge
                            ),
                        )
                    )
            value, step = min(options, key=lambda option: option[0])
            row.append(value)
            steps.append(step)
        whole.append(row)
        entries.append(tuple(steps))

        sweep = _Sweep(rooting, costs, ranking[:j], k, mode).down().up()
        for edge, x in ends:
            near[edge].append([sweep.near(x, budget) for budget in range(1, k + 1)])

    logger.debug(
        "DP table: %d prefixes, %d near sides, anchor=%d", q.m, len(ends), root
    )

    def exact(rows: list[list[Cost]]) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(int(v), scale) for v in r) for r in rows)

    return DPTable(
        n=t.n,
        anchor=root,
        anchor_ranking=ranking,
        k=k,
        whole_values=exact(whole),
        near_values={edge: exact(rows) for edge, rows in near.items()},
        near_sides={
            edge: frozenset(rooting.without(x).preorder) for edge, x in ends
        },
        entries=tuple(entries),
    )


def cc_optimal(
    p: Profile,
    t: Tree,
    k: int,
    model: MisrepModel,
    mode: AggregationMode,
    anchor: Optional[int] = None,
) -> CCResult:
    """
    Find an optimal Chamberlin-Courant k-assignment.

    Ties between optimal assignments are broken by preferring a shorter
    prefix of the anchor's ranking, then collapsing over electing, then the
    smallest edge.

    Args:
        p: Profile single-crossing on t
        t: Tree on the expanded voters
        k: Committee size, 1 <= k <= m
        model: Valid misrepresentation model
        mode: Utilitarian (sum) or egalitarian (max)
        anchor: Root leaf (default: smallest-index leaf)

    Returns:
        CCResult with exact phi and a realizing assignment

    Raises:
        NotSingleCrossingError: If p is not single-crossing on t
        InvalidCommitteeSizeError: If k is outside [1, m]
        ModelValidationError: If the model is invalid for p
    """
    q, root = _prepare(p, t, k, model, anchor)
    costs, scale = _scaled_costs(model, p)
    logger.debug("CC program: n=%d m=%d k=%d anchor=%d", t.n, q.m, k, root)
    value, representatives = _trace(
        _Rooting.of(t, root), costs, q.voter(root).ranking, k, mode
    )
    return CCResult(
        candidates=q.candidates,
        k=k,
        mode=mode,
        phi=Fraction(int(value), scale),
        assignment=Assignment(
            representatives=tuple(representatives[v] for v in t.vertices)
        ),
    )
