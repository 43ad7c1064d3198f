"""
Unit tests for brute-force oracles.

Author: DmitrTRC
"""

import pytest

from sctool.domain.cc import PositionalModel
from sctool.domain.enums import AggregationMode
from sctool.domain.exceptions import GuardRangeError
from sctool.domain.models import Profile, Tree
from sctool.domain.oracle import (
    cc_brute_force,
    classical_sc_check,
    enumerate_labeled_trees,
    recognize_exhaustive,
)


class TestEnumerateLabeledTrees:
    """Test cases for enumerate_labeled_trees."""

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16)])
    def test_cayley_counts(self, n: int, count: int) -> None:
        """Test that n^(n-2) trees come out."""
        trees = list(enumerate_labeled_trees(n))

        assert len(trees) == count
        assert len(enumerate_labeled_trees(n)) == count

    def test_each_tree_once(self) -> None:
        """Test uniqueness on five vertices."""
        trees = list(enumerate_labeled_trees(5))

        assert len(trees) == 125
        assert len(set(trees)) == 125

    def test_paths_on_three_vertices(self) -> None:
        """Test that the three trees differ by their middle vertex."""
        middles = {
            next(v for v in tree.vertices if tree.degree(v) == 2)
            for tree in enumerate_labeled_trees(3)
        }

        assert middles == {1, 2, 3}

    @pytest.mark.parametrize("n", [0, 9])
    def test_guard(self, n: int) -> None:
        """Test the vertex range."""
        with pytest.raises(GuardRangeError) as exc_info:
            enumerate_labeled_trees(n)

        assert exc_info.value.limit == 8


class TestRecognizeExhaustive:
    """Test cases for recognize_exhaustive."""

    def test_smallstar_has_one_tree(
        self, smallstar: Profile, smallstar_tree: Tree
    ) -> None:
        """Test that only the star centered at voter 2 passes."""
        result = recognize_exhaustive(smallstar)

        assert result.single_crossing
        assert result.passing == (smallstar_tree,)
        assert result.minimal == (smallstar_tree,)

    def test_latin_square_fails(self, latin4: Profile) -> None:
        """Test a profile that no tree supports."""
        result = recognize_exhaustive(latin4)

        assert not result.single_crossing
        assert result.minimal == ()

    def test_cycle_fails(self, cycle3: Profile) -> None:
        """Test the three-voter Condorcet cycle."""
        assert not recognize_exhaustive(cycle3).single_crossing

    def test_unanimous_collapses_to_one_class(self, unanimous4: Profile) -> None:
        """Test that identical voters become a single vertex."""
        result = recognize_exhaustive(unanimous4)

        assert result.reduced.r == 1
        assert result.passing == (Tree(n=1),)

    def test_to_dict(self, two: Profile) -> None:
        """Test the JSON shape."""
        assert recognize_exhaustive(two).to_dict() == {
            "single_crossing": True,
            "classes": 2,
            "passing": [{"n": 2, "edges": [[1, 2]]}],
            "minimal": [{"n": 2, "edges": [[1, 2]]}],
        }


class TestCCBruteForce:
    """Test cases for cc_brute_force."""

    def test_first_optimal_committee(self, smallstar: Profile) -> None:
        """Test that {a, c} is the first committee with phi 1."""
        result = cc_brute_force(
            smallstar, 2, PositionalModel.borda(4), AggregationMode.UTILITARIAN
        )

        assert result.phi == 1
        assert result.committee == (0, 2)

    def test_no_tree_needed(self, cycle3: Profile) -> None:
        """Test that any profile is accepted."""
        result = cc_brute_force(
            cycle3, 1, PositionalModel.borda(3), AggregationMode.EGALITARIAN
        )

        assert result.phi == 2


class TestClassicalSCCheck:
    """Test cases for classical_sc_check."""

    def test_unanimous(self, unanimous4: Profile) -> None:
        """Test that identical voters line up in index order."""
        assert classical_sc_check(unanimous4) == (1, 2, 3, 4)

    def test_two_voters(self, two: Profile) -> None:
        """Test the smallest line."""
        assert classical_sc_check(two) == (1, 2)

    def test_star_is_not_a_line(self, smallstar: Profile) -> None:
        """Test a profile single-crossing on a star only."""
        assert classical_sc_check(smallstar) is None

    def test_cycle(self, cycle3: Profile) -> None:
        """Test the Condorcet cycle."""
        assert classical_sc_check(cycle3) is None

    def test_generated_path(self) -> None:
        """Test a reversed voter order is still found."""
        profile = Profile.from_names(
            ["a", "b", "c"], [["c", "b", "a"], ["b", "c", "a"], ["a", "b", "c"]]
        )

        assert classical_sc_check(profile) == (1, 2, 3)

    def test_guard(self) -> None:
        """Test too many expanded voters."""
        profile = Profile.from_names(["a", "b"], [["a", "b"]], [9])

        with pytest.raises(GuardRangeError):
            classical_sc_check(profile)
