"""
Unit tests for the permutation backend.
"""
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from rtilde.coxeter import CoxeterGroup, dihedral_matrix, type_a_matrix
from rtilde.errors import InvalidPermutationError, PreconditionError
from rtilde.memory import InMemoryMemoStore
from rtilde.symmetric import (
    SymmetricGroup,
    build_group,
    format_permutation,
    inversions,
    is_321_avoiding,
    parse_permutation,
    perm_to_word,
    word_to_perm,
)

# s3 s2 s4 s1 s3 s5 s2 s4 s3: fully commutative, s3 occurs three times
THREE_REPEATING = (2, 1, 3, 0, 2, 4, 1, 3, 2)


@pytest.mark.unit
class TestPermutations:
    """Test one-line permutation helpers."""

    def test_parse_permutation(self):
        """Test compact and comma separated forms."""
        assert parse_permutation("p:321") == (3, 2, 1)
        assert parse_permutation("p:3,4,5,6,7,8,9,10,1,2") == (3, 4, 5, 6, 7, 8, 9, 10, 1, 2)

    @pytest.mark.parametrize("text", ["p:", "p:113", "p:1x3", "p:24"])
    def test_parse_permutation_errors(self, text):
        """Test malformed permutations."""
        with pytest.raises(InvalidPermutationError):
            parse_permutation(text)

    def test_format_permutation(self):
        """Test both output forms."""
        assert format_permutation((2, 1, 3)) == "p:213"
        assert format_permutation(tuple(range(10, 0, -1))) == "p:10,9,8,7,6,5,4,3,2,1"

    def test_word_to_perm(self):
        """Test that right multiplication swaps positions."""
        assert word_to_perm((0,), 3) == (2, 1, 3)
        assert word_to_perm((0, 1), 3) == (2, 3, 1)

    def test_perm_to_word(self):
        """Test lex-least reduced words."""
        assert perm_to_word((2, 3, 1)) == (0, 1)
        assert perm_to_word((3, 2, 1)) == (0, 1, 0)
        assert perm_to_word((1, 2, 3)) == ()

    @given(st.permutations(range(1, 6)))
    def test_word_round_trip(self, perm):
        """Test that the word spells the permutation with one letter per inversion."""
        perm = tuple(perm)
        word = perm_to_word(perm)
        assert word_to_perm(word, 5) == perm
        assert len(word) == inversions(perm)

    @pytest.mark.parametrize("perm,expected", [
        ((3, 2, 1), False),
        ((3, 4, 1, 2), True),
        ((2, 1, 4, 3), True),
        ((4, 1, 3, 2), False),
        ((1, 2, 3), True),
    ])
    def test_is_321_avoiding(self, perm, expected):
        """Test pattern avoidance."""
        assert is_321_avoiding(perm) is expected

    def test_is_321_avoiding_matches_braid_factors(self):
        """Test avoidance over S_5 against reduced words free of s_i s_{i+1} s_i and s_{i+1} s_i s_{i+1}."""
        group = CoxeterGroup(type_a_matrix(4), store=InMemoryMemoStore())
        fully_commutative = 0
        for v in group.elements():
            has_braid_factor = any(
                word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1
                for word in group.reduced_expressions(v)
                for k in range(len(word) - 2)
            )
            perm = word_to_perm(v.word, 5)
            assert is_321_avoiding(perm) is not has_braid_factor, f"perm={perm}"
            fully_commutative += not has_braid_factor
        assert fully_commutative == 42


@pytest.mark.unit
class TestSymmetricGroup:
    """Test the permutation backend against the generic one."""

    def test_size_check(self):
        """Test that S_1 is rejected."""
        with pytest.raises(InvalidPermutationError):
            SymmetricGroup(1)

    def test_name_and_backend(self, s4):
        """Test identification."""
        assert s4.name == "S4"
        assert s4.backend == "symmetric"
        assert s4.rank == 3

    def test_perm_to_element(self, s4):
        """Test elements from one-line notation."""
        u = s4.perm_to_element((2, 1, 4, 3))
        assert u.word == (0, 2)
        assert s4.element_to_perm(u) == (2, 1, 4, 3)
        with pytest.raises(InvalidPermutationError):
            s4.perm_to_element((2, 1, 3))

    def test_elements(self, s4):
        """Test enumeration."""
        elements = s4.elements()
        assert len(elements) == 24
        assert len(s4.elements(1)) == 4
        assert elements[-1].length == 6

    def test_is_descent(self, s4):
        """Test descents are positions where the one-line notation drops."""
        u = s4.perm_to_element((2, 3, 1, 4))
        assert [s4.is_descent(u, s) for s in range(3)] == [False, True, False]
        assert not s4.is_descent(s4.identity(), 0)

    def test_inverse(self, s4):
        """Test inverses of permutations."""
        u = s4.perm_to_element((2, 3, 1, 4))
        assert s4.element_to_perm(s4.inverse(u)) == (3, 1, 2, 4)

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=2), max_size=10))
    def test_agrees_with_generic_backend(self, word):
        """Test canonical words, descents and lengths against the generic backend."""
        fast = SymmetricGroup(4, store=InMemoryMemoStore())
        generic = CoxeterGroup(type_a_matrix(3), store=InMemoryMemoStore())
        x, y = fast.canonicalize(word), generic.canonicalize(word)
        assert x.word == y.word
        assert fast.element_to_perm(x) == word_to_perm(y.word, 4)
        assert fast.right_descents(x) == generic.right_descents(y)

    def test_fully_commutative_statistics(self):
        """Test a 321-avoiding element that is not 2-repeating."""
        group = SymmetricGroup(6)
        v = group.canonicalize(THREE_REPEATING)
        assert v.length == len(THREE_REPEATING)
        assert group.is_fully_commutative(v)
        assert group.letter_multiplicities(v)[2] == 3
        assert not group.is_2_repeating(v)
        assert not group.is_321_avoiding_2_repeating(v)

    def test_pagliacci_is_2_repeating(self):
        """Test 3 4 5 1 2."""
        group = SymmetricGroup(5)
        v = group.perm_to_element((3, 4, 5, 1, 2))
        assert group.is_321_avoiding_2_repeating(v)
        assert group.letter_multiplicities(v) == {0: 1, 1: 2, 2: 2, 3: 1}

    def test_multiplicities_need_fully_commutative(self, s3):
        """Test that multiplicities of non-FC elements are refused."""
        w0 = s3.perm_to_element((3, 2, 1))
        with pytest.raises(PreconditionError):
            s3.letter_multiplicities(w0)


@pytest.mark.unit
class TestBuildGroup:
    """Test backend selection."""

    def test_auto_picks_permutations(self):
        """Test that type A gets the permutation backend."""
        assert isinstance(build_group(type_a_matrix(3)), SymmetricGroup)
        assert not isinstance(build_group(dihedral_matrix(5)), SymmetricGroup)

    def test_generic_is_forced(self):
        """Test the generic override."""
        group = build_group(type_a_matrix(3), "generic")
        assert type(group) is CoxeterGroup

    def test_symmetric_needs_type_a(self):
        """Test an impossible backend request."""
        with pytest.raises(InvalidPermutationError):
            build_group(dihedral_matrix(4), "symmetric")

    def test_unknown_backend(self):
        """Test an unknown backend name."""
        with pytest.raises(ValueError):
            build_group(type_a_matrix(2), "fast")
