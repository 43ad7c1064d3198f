"""
Majority analysis for sctool.

Weighted majority margins, the strict majority relation and its transitivity,
representative voters, and a seeded sampler that probes whether a set of
linear orders behaves as a Condorcet domain.
Author: DmitrTRC
"""

import logging
from typing import Any, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from sctool.domain.constants import DEFAULT_MAX_WEIGHT, DEFAULT_TRIALS
from sctool.domain.enums import PairRelation
from sctool.domain.exceptions import EvenElectorateError
from sctool.domain.models import Candidate, LinearOrder, Profile, ReducedProfile

logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════
# Numeric Kernels
# ═══════════════════════════════════════════════════════════


def _sign_tensor(orders: Sequence[LinearOrder]) -> np.ndarray:
    """
    Pairwise preference signs of every order.

    Returns:
        Array S of shape (n, m, m) with S[v, a, b] = +1 if voter v ranks a
        above b, -1 if below and 0 on the diagonal
    """
    positions = np.array([order.positions for order in orders], dtype=np.int64)
    return np.sign(positions[:, None, :] - positions[:, :, None])


def _weighted_margins(
    orders: Sequence[LinearOrder], weights: Sequence[int]
) -> np.ndarray:
    """Margin matrix for orders carrying the given (possibly zero) weights."""
    weight_vector = np.asarray(weights, dtype=np.int64)
    return np.tensordot(weight_vector, _sign_tensor(orders), axes=1)


def _intransitive_triple(margins: np.ndarray) -> Optional[tuple[int, int, int]]:
    """
    Find a ≻ b ≻ c with not a ≻ c in the strict part of a margin matrix.

    Returns:
        The first such (a, b, c) in index order, or None if transitive
    """
    beats = margins > 0
    two_step = (beats.astype(np.int64) @ beats.astype(np.int64)) > 0
    violations = np.argwhere(two_step & ~beats)
    if violations.size == 0:
        return None
    a, c = (int(x) for x in violations[0])
    b = int(np.flatnonzero(beats[a] & beats[:, c])[0])
    return a, b, c


# ═══════════════════════════════════════════════════════════
# Models
# ═══════════════════════════════════════════════════════════


class MarginMatrix(BaseModel):
    """
    Weighted majority margins.

    Entry (a, b) is the weight of voters with a ≻ b minus the weight with b ≻ a.

    Attributes:
        candidates: Candidates in index order
        values: m×m integer matrix
        total_weight: Total voter weight behind the margins
    """

    candidates: tuple[Candidate, ...]
    values: tuple[tuple[int, ...], ...]
    total_weight: int = Field(..., ge=0)

    @classmethod
    def from_array(
        cls, candidates: tuple[Candidate, ...], margins: np.ndarray, total_weight: int
    ) -> "MarginMatrix":
        """Build a margin matrix from a numpy array."""
        return cls(
            candidates=candidates,
            values=tuple(tuple(int(x) for x in row) for row in margins),
            total_weight=total_weight,
        )

    @property
    def m(self) -> int:
        """Number of candidates."""
        return len(self.candidates)

    def margin(self, a: int, b: int) -> int:
        """Margin of a over b."""
        return self.values[a][b]

    def as_array(self) -> np.ndarray:
        """The margins as an integer numpy array."""
        return np.array(self.values, dtype=np.int64).reshape(self.m, self.m)

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return {
            "candidates": [c.name for c in self.candidates],
            "total_weight": self.total_weight,
            "margins": [list(row) for row in self.values],
        }

    model_config = ConfigDict(frozen=True)


class MajorityRelation(BaseModel):
    """
    Strict majority relation derived pointwise from margin signs.

    Attributes:
        candidates: Candidates in index order
        signs: m×m matrix of margin signs
        transitive: Whether the strict part is transitive
    """

    candidates: tuple[Candidate, ...]
    signs: tuple[tuple[int, ...], ...]
    transitive: bool

    @property
    def m(self) -> int:
        """Number of candidates."""
        return len(self.candidates)

    def beats(self, a: int, b: int) -> bool:
        """Check a ≻ b in the strict majority relation."""
        return self.signs[a][b] > 0

    def relation(self, a: int, b: int) -> PairRelation:
        """Verdict on the ordered pair (a, b)."""
        sign = self.signs[a][b]
        if sign > 0:
            return PairRelation.BEATS
        if sign < 0:
            return PairRelation.LOSES
        return PairRelation.TIE

    def is_total(self) -> bool:
        """Check that no pair is tied."""
        return all(
            self.signs[a][b] != 0 for a in range(self.m) for b in range(a + 1, self.m)
        )

    def intransitive_triple(self) -> Optional[tuple[int, int, int]]:
        """Find a ≻ b ≻ c with not a ≻ c, if any."""
        return _intransitive_triple(np.array(self.signs, dtype=np.int64))

    def as_ranking(self) -> Optional[tuple[int, ...]]:
        """
        The relation as a linear order.

        Returns:
            Candidates best first when the relation is total and transitive,
            otherwise None
        """
        if not (self.transitive and self.is_total()):
            return None
        wins = [
            sum(1 for b in range(self.m) if self.beats(a, b)) for a in range(self.m)
        ]
        return tuple(sorted(range(self.m), key=lambda c: -wins[c]))

    def condorcet_winner(self) -> Optional[int]:
        """The candidate beating every other candidate, if one exists."""
        for a in range(self.m):
            if all(self.beats(a, b) for b in range(self.m) if b != a):
                return a
        return None

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        names = [c.name for c in self.candidates]
        ranking = self.as_ranking()
        winner = self.condorcet_winner()
        return {
            "pairs": [
                {"a": names[a], "b": names[b], "relation": self.relation(a, b).value}
                for a in range(self.m)
                for b in range(a + 1, self.m)
            ],
            "transitive": self.transitive,
            "ranking": [names[c] for c in ranking] if ranking is not None else None,
            "condorcet_winner": names[winner] if winner is not None else None,
        }

    model_config = ConfigDict(frozen=True)


class CondorcetCounterexample(BaseModel):
    """Class weights whose majority relation is intransitive, with the cycle."""

    weights: tuple[int, ...]
    cycle: tuple[int, int, int]

    model_config = ConfigDict(frozen=True)


class CondorcetReport(BaseModel):
    """
    Outcome of sampling multiplicity vectors over a domain.

    Attributes:
        candidates: Candidates of the domain
        trials: Number of sampled weight vectors
        failures: How many of them produced an intransitive strict majority
        counterexample: The first failing trial, if any
    """

    candidates: tuple[Candidate, ...]
    trials: int = Field(..., ge=0)
    failures: int = Field(..., ge=0)
    counterexample: Optional[CondorcetCounterexample] = None

    @property
    def passed(self) -> bool:
        """True when no trial failed."""
        return self.failures == 0

    def to_dict(self) -> dict[str, Any]:
        """
        Convert to a JSON-compatible dictionary.

        Returns:
            {"trials": T, "failures": F, "counterexample": null | {...}}
        """
        counterexample = None
        if self.counterexample is not None:
            counterexample = {
                "weights": list(self.counterexample.weights),
                "cycle": [self.candidates[c].name for c in self.counterexample.cycle],
            }
        return {
            "trials": self.trials,
            "failures": self.failures,
            "counterexample": counterexample,
        }

    model_config = ConfigDict(frozen=True)


# ═══════════════════════════════════════════════════════════
# Operations
# ═══════════════════════════════════════════════════════════


def majority_margins(p: Profile) -> MarginMatrix:
    """
    Compute weighted majority margins.

    Args:
        p: Profile (multiplicities counted as weights)

    Returns:
        MarginMatrix
    """
    margins = _weighted_margins(p.voters, p.multiplicities)
    return MarginMatrix.from_array(p.candidates, margins, p.total_weight)


def strict_majority(mm: MarginMatrix) -> MajorityRelation:
    """
    Derive the strict majority relation from margins.

    Zero margins are ties and count as incomparable for the transitivity flag.

    Args:
        mm: Margin matrix

    Returns:
        MajorityRelation
    """
    margins = mm.as_array()
    return MajorityRelation(
        candidates=mm.candidates,
        signs=tuple(tuple(int(x) for x in row) for row in np.sign(margins)),
        transitive=_intransitive_triple(margins) is None,
    )


def representative_voter(p: Profile) -> Optional[int]:
    """
    Find the smallest voter whose order equals the strict majority relation.

    Args:
        p: Profile with odd total weight

    Returns:
        1-based voter index, or None when no voter matches

    Raises:
        EvenElectorateError: If the total voter weight is even
    """
    if p.total_weight % 2 == 0:
        raise EvenElectorateError(p.total_weight)

    signs = _sign_tensor(p.voters)
    majority = np.sign(np.tensordot(np.asarray(p.multiplicities), signs, axes=1))
    for v in range(p.n):
        if np.array_equal(signs[v], majority):
            return v + 1
    return None


def sample_condorcet_check(
    d: ReducedProfile,
    trials: int = DEFAULT_TRIALS,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    seed: int = 0,
) -> CondorcetReport:
    """
    Probe a domain with random odd-total multiplicity vectors.

    The first trial weights every class once; later trials draw weights
    uniformly from [0, max_weight]. An even total gets one extra vote on a
    random class.

    Args:
        d: Domain of distinct orders
        trials: Number of weight vectors to try
        max_weight: Largest weight drawn per class
        seed: RNG seed

    Returns:
        CondorcetReport (never raises on failures)
    """
    rng = np.random.default_rng(seed)
    r = d.r
    signs = _sign_tensor(d.classes)
    failures = 0
    counterexample: Optional[CondorcetCounterexample] = None

    for trial in range(trials):
        if trial == 0:
            weights = np.ones(r, dtype=np.int64)
        else:
            weights = rng.integers(0, max_weight + 1, size=r)
        if int(weights.sum()) % 2 == 0:
            bump = 0 if trial == 0 else int(rng.integers(r))
            weights[bump] += 1

        triple = _intransitive_triple(np.tensordot(weights, signs, axes=1))
        if triple is not None:
            failures += 1
            if counterexample is None:
                counterexample = CondorcetCounterexample(
                    weights=tuple(int(w) for w in weights), cycle=triple
                )

    logger.debug("Condorcet sampling: r=%d trials=%d failures=%d", r, trials, failures)
    return CondorcetReport(
        candidates=d.candidates,
        trials=trials,
        failures=failures,
        counterexample=counterexample,
    )
