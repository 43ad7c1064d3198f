"""
Unit tests for single-crossing recognition on trees.

Author: DmitrTRC
"""

import pytest

from sctool.domain.enums import VirtualDirection
from sctool.domain.exceptions import (
    NotReducedError,
    NotSingleCrossingError,
    PreconditionError,
    SizeMismatchError,
)
from sctool.domain.models import Profile, Tree, reduce_profile
from sctool.domain.sctree import (
    Cut,
    CutTable,
    LineOrdering,
    NoCutWitness,
    NonLineWitness,
    NotSingleCrossing,
    RecognitionResult,
    classify_line,
    collapsible_edges,
    expand_clones,
    find_cut,
    generate_profile,
    hereditary_check,
    is_single_crossing,
    potential_leaves,
    recognize,
    verify_single_crossing,
)

SMALLSTAR_CUTS = {
    ("a", "b"): (2, 4),
    ("a", "c"): (2, 4),
    ("a", "d"): (2, 3),
    ("b", "c"): (1, 2),
    ("b", "d"): (2, 3),
    ("c", "d"): (2, 3),
}


class TestFindCut:
    """Test cases for find_cut."""

    def test_edge_cut(self, smallstar: Profile, smallstar_tree: Tree) -> None:
        """Test the bc-cut of the small star."""
        cut = find_cut(smallstar, smallstar_tree, 1, 2)

        assert isinstance(cut, Cut)
        assert cut.edge == (1, 2)
        assert cut.side_a == frozenset({1})
        assert cut.side_b == frozenset({2, 3, 4})
        assert not cut.is_virtual

    def test_virtual_cut(self, unanimous4: Profile) -> None:
        """Test a pair everybody agrees on."""
        cut = find_cut(unanimous4, Tree.line([1, 2, 3, 4]), 3, 0)

        assert isinstance(cut, Cut)
        assert cut.virtual == VirtualDirection.PREFER_B
        assert cut.edge is None
        assert cut.tree_edge is None

    def test_no_cut(self, latin4: Profile) -> None:
        """Test a disconnected side on the star centered at 1."""
        witness = find_cut(latin4, Tree.star(4, center=1), 0, 3)

        assert isinstance(witness, NoCutWitness)
        assert witness.side == VirtualDirection.PREFER_B
        assert witness.vertices == (2, 3)

    def test_same_candidate(self, two: Profile) -> None:
        """Test that a pair needs two candidates."""
        with pytest.raises(PreconditionError):
            find_cut(two, Tree.line([1, 2]), 0, 0)

    def test_size_mismatch(self, two: Profile) -> None:
        """Test a tree of the wrong size."""
        with pytest.raises(SizeMismatchError):
            find_cut(two, Tree.line([1, 2, 3]), 0, 1)

    def test_weighted_voters_are_vertices(self) -> None:
        """Test that multiplicities expand into tree vertices."""
        profile = Profile.from_names(["a", "b"], [["a", "b"], ["b", "a"]], [2, 1])

        cut = find_cut(profile, Tree.line([1, 2, 3]), 0, 1)

        assert isinstance(cut, Cut)
        assert cut.edge == (2, 3)


class TestVerifySingleCrossing:
    """Test cases for verify_single_crossing."""

    def test_smallstar_cut_table(
        self, smallstar: Profile, smallstar_tree: Tree
    ) -> None:
        """Test the exact cut table of the small star."""
        table = verify_single_crossing(smallstar, smallstar_tree)

        assert isinstance(table, CutTable)
        names = smallstar.names
        found = {(names[c.a], names[c.b]): c.tree_edge for c in table.cuts}
        assert found == SMALLSTAR_CUTS
        assert table.cut(2, 0).tree_edge == (2, 4)

    def test_witness_is_first_failing_pair(self, latin4: Profile) -> None:
        """Test that pairs are checked in candidate-index order."""
        witness = verify_single_crossing(latin4, Tree.star(4, center=1))

        assert isinstance(witness, NoCutWitness)
        assert (witness.a, witness.b) == (0, 2)
        assert witness.to_dict(latin4.names) == {
            "a": "a",
            "b": "c",
            "side": "b",
            "vertices": [2, 3],
        }

    def test_witness_description(self, latin4: Profile) -> None:
        """Test the human-readable explanation."""
        witness = verify_single_crossing(latin4, Tree.star(4, center=1))

        assert isinstance(witness, NoCutWitness)
        assert witness.describe(latin4.names) == (
            "voters preferring c over a are disconnected (voters 2 and 3)"
        )

    def test_to_dict(self, two: Profile) -> None:
        """Test the JSON shape."""
        table = verify_single_crossing(two, Tree.line([1, 2]))

        assert isinstance(table, CutTable)
        assert table.to_dict() == {
            "pairs": [{"a": "a", "b": "b", "cut": {"edge": [1, 2]}}]
        }


class TestCollapsibleEdges:
    """Test cases for collapsible_edges."""

    def test_minimal_tree(self, smallstar: Profile, smallstar_tree: Tree) -> None:
        """Test that every star edge carries a cut."""
        table = verify_single_crossing(smallstar, smallstar_tree)

        assert isinstance(table, CutTable)
        assert collapsible_edges(smallstar, smallstar_tree, table) == ()

    def test_unanimous_edges_collapse(self, unanimous4: Profile) -> None:
        """Test that a unanimous profile has only collapsible edges."""
        tree = Tree.line([1, 2, 3, 4])
        table = verify_single_crossing(unanimous4, tree)

        assert isinstance(table, CutTable)
        assert all(c.virtual == VirtualDirection.PREFER_A for c in table.cuts)
        assert collapsible_edges(unanimous4, tree, table) == ((1, 2), (2, 3), (3, 4))


class TestPotentialLeaves:
    """Test cases for potential_leaves."""

    def test_smallstar(self, smallstar: Profile) -> None:
        """Test that the star's leaves are the potential leaves."""
        leaves = potential_leaves(smallstar)

        assert [leaf.voter for leaf in leaves] == [1, 3, 4]
        assert all(leaf.witness == 2 for leaf in leaves)
        assert leaves[0].unique_pairs == ((1, 2),)

    def test_latin_square_has_none(self, latin4: Profile) -> None:
        """Test a profile without potential leaves."""
        assert potential_leaves(latin4) == []

    def test_not_reduced(self, unanimous4: Profile) -> None:
        """Test that duplicates are refused."""
        with pytest.raises(NotReducedError):
            potential_leaves(unanimous4)

    def test_single_voter(self) -> None:
        """Test that one voter has no leaves to speak of."""
        with pytest.raises(PreconditionError):
            potential_leaves(Profile.from_names(["a", "b"], [["a", "b"]]))


class TestRecognize:
    """Test cases for recognize."""

    def test_smallstar(self, smallstar: Profile, smallstar_tree: Tree) -> None:
        """Test recognition of the small star."""
        result = recognize(smallstar)

        assert isinstance(result, RecognitionResult)
        assert result.reduced_tree == smallstar_tree
        assert result.full_tree == smallstar_tree
        assert result.peel_order == ((1, 2), (3, 2), (2, 4))
        names = smallstar.names
        found = {(names[c.a], names[c.b]): c.tree_edge for c in result.cut_table.cuts}
        assert found == SMALLSTAR_CUTS

    def test_latin_square(self, latin4: Profile) -> None:
        """Test that recognition gets stuck on every class."""
        result = recognize(latin4)

        assert isinstance(result, NotSingleCrossing)
        assert result.classes == (1, 2, 3, 4)
        assert result.voters == (1, 2, 3, 4)
        assert result.to_dict()["single_crossing"] is False

    def test_unanimous(self, unanimous4: Profile) -> None:
        """Test one class expanded into a path of clones."""
        result = recognize(unanimous4)

        assert isinstance(result, RecognitionResult)
        assert result.reduced.r == 1
        assert result.reduced_tree == Tree(n=1)
        assert result.full_tree == Tree.line([1, 2, 3, 4])
        assert result.peel_order == ()

    def test_two(self, two: Profile) -> None:
        """Test two opposite voters."""
        result = recognize(two)

        assert isinstance(result, RecognitionResult)
        assert result.full_tree == Tree.line([1, 2])

    def test_clones_keep_single_crossing(self, smallstar: Profile) -> None:
        """Test that weighted voters expand into a valid voter tree."""
        weighted = smallstar.with_multiplicities([2, 1, 3, 1])

        result = recognize(weighted)

        assert isinstance(result, RecognitionResult)
        assert result.full_tree.n == 7
        assert isinstance(verify_single_crossing(weighted, result.full_tree), CutTable)

    def test_to_dict(self, smallstar: Profile) -> None:
        """Test the JSON shape."""
        result = recognize(smallstar)

        assert isinstance(result, RecognitionResult)
        data = result.to_dict()
        assert data["single_crossing"] is True
        assert data["classes"] == 4
        assert data["reduced_tree"] == {"n": 4, "edges": [[1, 2], [2, 3], [2, 4]]}
        assert data["peel_order"] == [[1, 2], [3, 2], [2, 4]]

    def test_is_single_crossing(self, smallstar: Profile, latin4: Profile) -> None:
        """Test the predicate."""
        assert is_single_crossing(smallstar)
        assert not is_single_crossing(latin4)


class TestExpandClones:
    """Test cases for expand_clones."""

    def test_path_stays_path(self) -> None:
        """Test that clones of a path profile form a longer path."""
        profile = Profile.from_names(
            ["a", "b"], [["a", "b"], ["b", "a"], ["a", "b"], ["b", "a"]]
        )
        reduced = reduce_profile(profile)

        tree = expand_clones(reduced, Tree.line([1, 2]))

        assert tree.n == 4
        assert tree.is_path()
        assert isinstance(verify_single_crossing(profile, tree), CutTable)


class TestGenerateProfile:
    """Test cases for generate_profile."""

    def test_star(self, smallstar_tree: Tree) -> None:
        """Test a minimal witness for the star."""
        generated = generate_profile(smallstar_tree)
        profile = generated.profile

        assert profile.n == 4
        assert profile.m == 4
        assert profile.is_reduced()
        table = verify_single_crossing(profile, smallstar_tree)
        assert isinstance(table, CutTable)
        assert collapsible_edges(profile, smallstar_tree, table) == ()

    def test_first_two_vertices(self) -> None:
        """Test the opening pair of orders."""
        generated = generate_profile(Tree.line([1, 2]))

        assert generated.profile.ranking_names(1) == ("c1", "c2")
        assert generated.profile.ranking_names(2) == ("c2", "c1")
        assert generated.candidate_of(2) == 1

    def test_path_profile(self) -> None:
        """Test the orders built along a path."""
        generated = generate_profile(Tree.line([1, 2, 3]))

        assert generated.profile.ranking_names(1) == ("c1", "c2", "c3")
        assert generated.profile.ranking_names(2) == ("c2", "c3", "c1")
        assert generated.profile.ranking_names(3) == ("c3", "c2", "c1")

    def test_to_dict(self) -> None:
        """Test the association in the JSON shape."""
        data = generate_profile(Tree.line([1, 2])).to_dict()

        assert data["association"] == {"1": "c1", "2": "c2"}
        assert data["voters"] == [["c1", "c2"], ["c2", "c1"]]

    def test_single_vertex(self) -> None:
        """Test that one vertex is too small."""
        with pytest.raises(PreconditionError):
            generate_profile(Tree(n=1))


class TestLineClassification:
    """Test cases for hereditary_check and classify_line."""

    def test_star_is_not_a_line(self, smallstar: Profile) -> None:
        """Test the branching witness of the star."""
        witness = hereditary_check(smallstar)

        assert witness == NonLineWitness(center=2, voters=(1, 3, 4))
        assert witness.to_dict() == {"line": False, "center": 2, "voters": [1, 3, 4]}

    def test_witness_voters_fail_recognition(self, smallstar: Profile) -> None:
        """Test that the three voters around the center fit no tree."""
        witness = hereditary_check(smallstar)

        assert isinstance(witness, NonLineWitness)
        sub = smallstar.subprofile(list(witness.voters))
        assert isinstance(recognize(sub), NotSingleCrossing)

    def test_classify_line_matches_hereditary_check(self, smallstar: Profile) -> None:
        """Test classification of an existing recognition result."""
        result = recognize(smallstar)

        assert isinstance(result, RecognitionResult)
        assert classify_line(result) == hereditary_check(smallstar)

    def test_unanimous_is_a_line(self, unanimous4: Profile) -> None:
        """Test a path ordering over clones."""
        assert hereditary_check(unanimous4) == LineOrdering(ordering=(1, 2, 3, 4))

    def test_not_single_crossing(self, latin4: Profile) -> None:
        """Test that classification needs a single-crossing profile."""
        with pytest.raises(NotSingleCrossingError):
            hereditary_check(latin4)
