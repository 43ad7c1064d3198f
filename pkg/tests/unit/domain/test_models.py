"""
Unit tests for domain models.

Author: DmitrTRC
"""

import pydantic
import pytest

from sctool.domain.exceptions import (
    PreconditionError,
    ProfileStructureError,
    TreeStructureError,
)
from sctool.domain.models import (
    Candidate,
    LinearOrder,
    Profile,
    Tree,
    reduce_profile,
)


class TestCandidate:
    """Test cases for Candidate model."""

    def test_create_valid_candidate(self) -> None:
        """Test creating a valid candidate."""
        candidate = Candidate(index=0, name="a")

        assert candidate.index == 0
        assert str(candidate) == "a"

    def test_name_with_whitespace(self) -> None:
        """Test that names must be single tokens."""
        with pytest.raises(ProfileStructureError):
            Candidate(index=0, name="a b")

    def test_negative_index(self) -> None:
        """Test that indices are non-negative."""
        with pytest.raises(pydantic.ValidationError):
            Candidate(index=-1, name="a")


class TestLinearOrder:
    """Test cases for LinearOrder model."""

    def test_positions(self) -> None:
        """Test the 1-based position map."""
        order = LinearOrder(ranking=(2, 0, 1))

        assert order.top == 2
        assert order.position(2) == 1
        assert order.position(1) == 3
        assert order.positions == (2, 3, 1)
        assert len(order) == 3

    def test_prefers(self) -> None:
        """Test pairwise preference."""
        order = LinearOrder(ranking=(0, 2, 1))

        assert order.prefers(2, 1)
        assert not order.prefers(1, 0)

    def test_best_of(self) -> None:
        """Test picking the highest-ranked member of a set."""
        order = LinearOrder(ranking=(3, 1, 0, 2))

        assert order.best_of({0, 2}) == 0

    def test_not_a_permutation(self) -> None:
        """Test that repeated candidates are rejected."""
        with pytest.raises(ProfileStructureError):
            LinearOrder(ranking=(0, 0, 1))

    def test_empty_ranking(self) -> None:
        """Test that a ranking needs at least one candidate."""
        with pytest.raises(pydantic.ValidationError):
            LinearOrder(ranking=())


class TestProfile:
    """Test cases for Profile model."""

    def test_from_names(self, smallstar: Profile) -> None:
        """Test building a profile from names."""
        assert smallstar.n == 4
        assert smallstar.m == 4
        assert smallstar.names == ("a", "b", "c", "d")
        assert smallstar.ranking_names(3) == ("d", "a", "c", "b")
        assert smallstar.multiplicities == (1, 1, 1, 1)

    def test_index_of(self, smallstar: Profile) -> None:
        """Test name lookup."""
        assert smallstar.index_of("c") == 2
        assert smallstar.name_of(3) == "d"

    def test_index_of_unknown(self, smallstar: Profile) -> None:
        """Test that unknown names raise."""
        with pytest.raises(ProfileStructureError):
            smallstar.index_of("z")

    def test_unknown_name_in_ranking(self) -> None:
        """Test that rankings may only use header names."""
        with pytest.raises(ProfileStructureError):
            Profile.from_names(["a", "b"], [["a", "z"]])

    def test_mismatched_ranking_length(self) -> None:
        """Test that every voter ranks all candidates."""
        with pytest.raises(ProfileStructureError):
            Profile(
                candidates=(Candidate(index=0, name="a"), Candidate(index=1, name="b")),
                voters=(LinearOrder(ranking=(0, 1, 2)),),
            )

    def test_duplicate_names(self) -> None:
        """Test that candidate names are unique."""
        with pytest.raises(ProfileStructureError):
            Profile.from_names(["a", "a"], [["a", "a"]])

    def test_zero_multiplicity(self) -> None:
        """Test that multiplicities are positive."""
        with pytest.raises(ProfileStructureError):
            Profile.from_names(["a", "b"], [["a", "b"]], [0])

    def test_weights(self, unanimous4: Profile) -> None:
        """Test weighted voter lines."""
        assert unanimous4.n == 1
        assert unanimous4.total_weight == 4
        assert unanimous4.voter_count == 4
        assert unanimous4.weight(1) == 4

    def test_expanded(self, unanimous4: Profile) -> None:
        """Test unrolling multiplicities."""
        expanded = unanimous4.expanded()

        assert expanded.n == 4
        assert expanded.multiplicities == (1, 1, 1, 1)
        assert unanimous4.expanded_origin() == (1, 1, 1, 1)

    def test_expanded_unweighted_is_identity(self, smallstar: Profile) -> None:
        """Test that expansion leaves unit weights alone."""
        assert smallstar.expanded() is smallstar

    def test_duplicate_pair(self) -> None:
        """Test finding two voters with the same order."""
        profile = Profile.from_names(["a", "b"], [["a", "b"], ["b", "a"], ["a", "b"]])

        assert profile.duplicate_pair() == (1, 3)
        assert not profile.is_reduced()

    def test_weighted_line_is_not_reduced(self, unanimous4: Profile) -> None:
        """Test that a weight above one counts as a duplicate."""
        assert unanimous4.duplicate_pair() == (1, 1)

    def test_reduced(self, smallstar: Profile) -> None:
        """Test a profile with distinct orders."""
        assert smallstar.is_reduced()
        assert smallstar.duplicate_pair() is None

    def test_subprofile_and_permuted(self, smallstar: Profile) -> None:
        """Test restricting and reordering voters."""
        sub = smallstar.subprofile([4, 1])

        assert sub.n == 2
        assert sub.voter(1) == smallstar.voter(4)
        assert smallstar.permuted([2, 1, 3, 4]).voter(1) == smallstar.voter(2)

    def test_permuted_requires_permutation(self, smallstar: Profile) -> None:
        """Test that a voter order must be a permutation."""
        with pytest.raises(ProfileStructureError):
            smallstar.permuted([1, 1, 2, 3])

    def test_with_multiplicities(self, two: Profile) -> None:
        """Test replacing weights."""
        assert two.with_multiplicities([2, 3]).total_weight == 5

    def test_to_dict(self, unanimous4: Profile, two: Profile) -> None:
        """Test that the JSON shape has candidates and voters only."""
        assert two.to_dict() == {
            "candidates": ["a", "b"],
            "voters": [["a", "b"], ["b", "a"]],
        }
        assert unanimous4.to_dict() == {
            "candidates": ["a", "b", "c", "d"],
            "voters": [["a", "b", "c", "d"]],
        }

    def test_is_frozen(self, two: Profile) -> None:
        """Test immutability."""
        with pytest.raises(pydantic.ValidationError):
            two.multiplicities = (2, 2)  # type: ignore[misc]


class TestReduceProfile:
    """Test cases for reduce_profile."""

    def test_collapses_identical_orders(self) -> None:
        """Test classes, counts and class membership."""
        profile = Profile.from_names(
            ["a", "b", "c"],
            [["a", "b", "c"], ["b", "c", "a"], ["a", "b", "c"]],
            [1, 2, 3],
        )

        reduced = reduce_profile(profile)

        assert reduced.r == 2
        assert reduced.class_of == (1, 2, 1)
        assert reduced.counts == (4, 2)
        assert reduced.total_weight == 6
        assert reduced.members(1) == (1, 3)

    def test_as_profile(self, unanimous4: Profile) -> None:
        """Test classes as a weighted profile."""
        reduced = reduce_profile(unanimous4.expanded())

        assert reduced.as_profile().multiplicities == (4,)
        assert reduced.class_profile().multiplicities == (1,)


class TestTree:
    """Test cases for Tree model."""

    def test_edges_are_normalized(self) -> None:
        """Test that equal trees compare equal regardless of edge order."""
        assert Tree(n=3, edges=[(2, 1), (3, 2)]) == Tree(n=3, edges=[(2, 3), (1, 2)])

    def test_structure(self, smallstar_tree: Tree) -> None:
        """Test degrees, leaves and neighbors."""
        assert smallstar_tree.degree(2) == 3
        assert smallstar_tree.leaves() == (1, 3, 4)
        assert smallstar_tree.neighbors(2) == (1, 3, 4)
        assert smallstar_tree.has_edge(4, 2)
        assert not smallstar_tree.is_path()

    def test_single_vertex(self) -> None:
        """Test the one-vertex tree."""
        tree = Tree(n=1)

        assert tree.leaves() == ()
        assert tree.is_path()
        assert tree.path_ordering() == (1,)

    def test_cycle(self) -> None:
        """Test that cycles are rejected."""
        with pytest.raises(TreeStructureError):
            Tree(n=3, edges=[(1, 2), (2, 3), (1, 3)])

    def test_disconnected(self) -> None:
        """Test that forests are rejected by their edge count."""
        with pytest.raises(TreeStructureError) as exc_info:
            Tree(n=4, edges=[(1, 2), (3, 4)])

        assert "Expected 3 edges for 4 vertices, got 2" in exc_info.value.message

    def test_vertex_out_of_range(self) -> None:
        """Test that vertices lie in 1..n."""
        with pytest.raises(TreeStructureError):
            Tree(n=2, edges=[(1, 5)])

    def test_path_ordering(self) -> None:
        """Test walking a path from its smaller endpoint."""
        assert Tree.line([3, 1, 2]).path_ordering() == (2, 1, 3)

    def test_path_ordering_requires_path(self, smallstar_tree: Tree) -> None:
        """Test that stars have no path ordering."""
        with pytest.raises(PreconditionError):
            smallstar_tree.path_ordering()

    def test_paths_and_distance(self, smallstar_tree: Tree) -> None:
        """Test unique paths."""
        assert smallstar_tree.path(1, 3) == [1, 2, 3]
        assert smallstar_tree.distance(1, 3) == 2
        assert smallstar_tree.distance(4, 4) == 0

    def test_bfs_order(self, smallstar_tree: Tree) -> None:
        """Test breadth-first order with parents."""
        order, parent = smallstar_tree.bfs_order(3)

        assert order == [3, 2, 1, 4]
        assert parent == {2: 3, 1: 2, 4: 2}

    def test_components(self, smallstar_tree: Tree) -> None:
        """Test induced components."""
        assert smallstar_tree.components([1, 3, 4]) == [(1,), (3,), (4,)]
        assert smallstar_tree.components([1, 2, 4]) == [(1, 2, 4)]

    def test_split(self, smallstar_tree: Tree) -> None:
        """Test deleting an edge."""
        near, far = smallstar_tree.split((2, 4))

        assert near == frozenset({1, 2, 3})
        assert far == frozenset({4})

    def test_split_requires_edge(self, smallstar_tree: Tree) -> None:
        """Test splitting on a non-edge."""
        with pytest.raises(TreeStructureError):
            smallstar_tree.split((1, 3))

    def test_rooted(self, smallstar_tree: Tree) -> None:
        """Test rooting at a leaf."""
        parent, order = smallstar_tree.rooted(1)

        assert parent == {2: 1, 3: 2, 4: 2}
        assert order[0] == 1
        assert sorted(order) == [1, 2, 3, 4]

    def test_relabel(self) -> None:
        """Test renaming vertices."""
        tree = Tree.line([1, 2, 3]).relabel({1: 2, 2: 3, 3: 1})

        assert tree.edges == ((1, 3), (2, 3))

    def test_to_dict(self) -> None:
        """Test the JSON shape."""
        assert Tree.line([1, 2]).to_dict() == {"n": 2, "edges": [[1, 2]]}
