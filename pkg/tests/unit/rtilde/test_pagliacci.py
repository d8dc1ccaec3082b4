"""
Unit tests for v_n = 3 4 ... n 1 2 and its CLR words.
"""
import pytest

from rtilde.closedforms.configurations import config_is_admissible, config_to_word, heap_of
from rtilde.closedforms.fibonacci import fib_paths
from rtilde.closedforms.pagliacci import (
    clr_degree,
    clr_polynomial,
    clr_to_path,
    clr_words,
    is_clr_word,
    pagliacci_configuration,
    pagliacci_element,
    pagliacci_permutation,
    pagliacci_rtilde,
    pagliacci_word,
)
from rtilde.errors import PreconditionError
from rtilde.hecke import hecke_rtilde, r_polynomial, rtilde_recursive
from rtilde.lightleaves import diagrammatic_rtilde
from rtilde.poly import fibonacci, substitute_t_minus_tinv
from rtilde.symmetric import SymmetricGroup


@pytest.mark.unit
class TestPagliacciElement:
    """Test the word and the permutation of v_n."""

    def test_word(self):
        """Test s2 s1 s3 s2 for n = 4."""
        assert pagliacci_word(4) == (1, 0, 2, 1)
        assert pagliacci_word(3) == (1, 0)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_word_spells_permutation(self, n):
        """Test the word is a reduced expression of 3 4 ... n 1 2."""
        group = SymmetricGroup(n)
        v = pagliacci_element(group, n)
        assert group.element_to_perm(v) == pagliacci_permutation(n)
        assert v.length == 2 * (n - 2)
        assert group.is_reduced(pagliacci_word(n))

    def test_too_small_group(self):
        """Test v_5 does not fit in S_4."""
        with pytest.raises(PreconditionError):
            pagliacci_element(SymmetricGroup(4), 5)

    def test_rejects_small_n(self):
        """Test n < 3."""
        with pytest.raises(PreconditionError):
            pagliacci_word(2)


@pytest.mark.unit
class TestPagliacciRTilde:
    """Test R-tilde(e, v_n) = t^(n-2) F_{n-2}."""

    def test_n7(self):
        """Test the seven-strand value."""
        assert str(pagliacci_rtilde(7)) == "t^10 + 4t^8 + 3t^6"

    def test_n3(self):
        """Test the smallest case."""
        assert str(pagliacci_rtilde(3)) == "t^2"

    @pytest.mark.parametrize("n", range(3, 8))
    def test_against_leaves_and_recursion(self, n):
        """Test the closed form against the enumeration and the descent recursion."""
        group = SymmetricGroup(n)
        v = pagliacci_element(group, n)
        expected = pagliacci_rtilde(n)
        assert diagrammatic_rtilde(group, group.identity(), pagliacci_word(n)) == expected
        assert rtilde_recursive(group, group.identity(), v) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [8, 9])
    def test_larger_n(self, n):
        """Test the closed form on eight and nine strands."""
        group = SymmetricGroup(n)
        assert diagrammatic_rtilde(group, group.identity(), pagliacci_word(n)) == pagliacci_rtilde(n)
        assert rtilde_recursive(group, group.identity(), pagliacci_element(group, n)) == pagliacci_rtilde(n)

    @pytest.mark.parametrize("n", range(3, 6))
    def test_against_hecke(self, n):
        """Test the closed form against the Hecke algebra and the substitution t - 1/t."""
        group = SymmetricGroup(n)
        v = pagliacci_element(group, n)
        expected = pagliacci_rtilde(n)
        assert hecke_rtilde(group, group.identity(), v) == expected
        assert r_polynomial(group, group.identity(), v) == substitute_t_minus_tinv(expected)


@pytest.mark.unit
class TestCLRWords:
    """Test CLR words and their degrees."""

    def test_small_n(self):
        """Test the single empty word at n = 3 and the two words at n = 4."""
        assert clr_words(3) == [""]
        assert clr_degree("") == 2
        assert clr_words(4) == ["L", "R"]
        assert [clr_degree(w) for w in clr_words(4)] == [2, 4]

    def test_n7(self):
        """Test the eight words at n = 7 and their degrees."""
        words = clr_words(7)
        assert words == ["LCLC", "LCRL", "LCRR", "RLCL", "RLCR", "RRLC", "RRRL", "RRRR"]
        assert [clr_degree(w) for w in words] == [6, 6, 8, 6, 8, 8, 8, 10]
        assert str(clr_polynomial(7)) == "t^10 + 4t^8 + 3t^6"

    @pytest.mark.parametrize("word,valid", [
        ("RRRL", True),
        ("LC", True),
        ("", True),
        ("LR", False),
        ("C", False),
        ("RC", False),
        ("LL", False),
        ("RX", False),
    ])
    def test_is_clr_word(self, word, valid):
        """Test validity of CLR words, including a trailing L."""
        assert is_clr_word(word) is valid

    def test_path(self):
        """Test the Fibonacci path of a CLR word."""
        assert str(clr_to_path("RLC")) == "RLC"
        with pytest.raises(PreconditionError):
            clr_to_path("CL")

    @pytest.mark.parametrize("n", range(4, 11))
    def test_bijection_onto_tree_paths(self, n):
        """Test CLR words map one to one onto the paths of the Fibonacci tree."""
        words = clr_words(n)
        paths = [clr_to_path(word) for word in words]
        assert len(set(paths)) == len(words)
        assert sorted(str(path) for path in paths) == sorted(str(path) for path in fib_paths(n - 3))
        for word, path in zip(words, paths):
            assert clr_degree(word) == 2 + 2 * ((n - 3) - path.lam)

    @pytest.mark.parametrize("n", range(3, 11))
    def test_degrees_match_closed_form(self, n):
        """Test the degree multiset equals the exponents of the closed form."""
        assert clr_polynomial(n) == pagliacci_rtilde(n)
        assert len(clr_words(n)) == fibonacci(n - 2).evaluate(1)


@pytest.mark.unit
class TestPagliacciConfiguration:
    """Test the point configuration of v_n."""

    @pytest.mark.parametrize("n", range(3, 8))
    def test_reads_as_word(self, n):
        """Test the configuration reads back as the word of v_n."""
        config = pagliacci_configuration(n)
        assert config_is_admissible(config)
        assert config_to_word(config) == pagliacci_word(n)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_matches_heap(self, n):
        """Test the configuration is the heap of v_n."""
        group = SymmetricGroup(n)
        assert heap_of(group, pagliacci_element(group, n)) == pagliacci_configuration(n)
