"""
Unit tests for the group, method and closed-formula registries.
"""
import pytest

from rtilde.closedforms.configurations import configuration_from_columns
from rtilde.closedforms.pagliacci import pagliacci_element, pagliacci_word
from rtilde.coxeter import dihedral_matrix, type_a_matrix
from rtilde.errors import CoxeterMatrixError, PreconditionError
from rtilde.registry import MethodRegistry, closed_registry, method_registry, resolve_group_name
from rtilde.symmetric import SymmetricGroup


@pytest.mark.unit
class TestMethodRegistry:
    """Test the registry mechanics."""

    def test_register_and_call(self):
        """Test registration under the function name and an explicit name."""
        registry = MethodRegistry("test")

        @registry.register
        def double(x):
            """Twice x."""
            return 2 * x

        @registry.register(name="triple")
        def times_three(x):
            return 3 * x

        assert registry.names() == ["double", "triple"]
        assert registry.call("double", x=4) == 8
        assert registry.call("triple", x=4) == 12
        assert registry.description("double") == "Twice x."

    def test_unknown_function(self):
        """Test calling and patterning an unregistered name."""
        registry = MethodRegistry("test")
        with pytest.raises(ValueError):
            registry.call("missing")
        with pytest.raises(ValueError):
            registry.register_patterns("missing", [r"x"])

    def test_patterns(self):
        """Test named groups become arguments."""
        registry = MethodRegistry("test")

        @registry.register
        def rank(n):
            return int(n)

        registry.register_patterns("rank", [r"R(?P<n>\d+)"])
        assert registry.find_pattern_handler(" r12 ") == ("rank", {"n": "12"})
        assert registry.find_pattern_handler("R12x") is None


@pytest.mark.unit
class TestGroupNames:
    """Test group shorthands."""

    @pytest.mark.parametrize("text,matrix", [
        ("A3", type_a_matrix(3)),
        ("I2(5)", dihedral_matrix(5)),
        ("I2_5", dihedral_matrix(5)),
        ("I2(inf)", dihedral_matrix(None)),
        ("Sym4", type_a_matrix(3)),
        ("S_4", type_a_matrix(3)),
    ])
    def test_resolve(self, text, matrix):
        """Test every shorthand resolves to its Coxeter matrix."""
        assert resolve_group_name(text).entries == matrix.entries

    @pytest.mark.parametrize("text", ["B3", "Sym1", "A", ""])
    def test_unknown(self, text):
        """Test names that do not resolve."""
        with pytest.raises(CoxeterMatrixError):
            resolve_group_name(text)


@pytest.mark.unit
class TestComputeMethods:
    """Test the four compute methods."""

    def test_names(self):
        """Test the registered methods in order."""
        assert method_registry.names() == ["diagrammatic", "recursive", "hecke", "closed"]

    def test_all_methods_agree(self, s4):
        """Test the general methods on the longest element of S_4."""
        word = (0, 1, 0, 2, 1, 0)
        for name in ["diagrammatic", "recursive", "hecke"]:
            result = method_registry.call(name, group=s4, u=s4.identity(), word=word)
            assert str(result) == "t^6 + 3t^4 + t^2", name
        # neither UD nor 321-avoiding
        assert method_registry.call("closed", group=s4, u=s4.identity(), word=word) is None

    def test_non_reduced_word(self, s3):
        """Test the Hecke method declines a non-reduced word."""
        word = (0, 0, 0)
        assert method_registry.call("hecke", group=s3, u=s3.identity(), word=word) is None
        assert str(method_registry.call("recursive", group=s3, u=s3.identity(), word=word)) == "t^3 + 2t"
        assert str(method_registry.call("closed", group=s3, u=s3.identity(), word=word)) == "t^3 + 2t"

    def test_closed_general(self):
        """Test the closed method falls back to the product formula."""
        group = SymmetricGroup(5)
        word = pagliacci_word(5)
        assert str(method_registry.call("closed", group=group, u=group.identity(), word=word)) == "t^6 + 2t^4"

    def test_closed_not_applicable(self, s3):
        """Test the closed method returns None when no formula applies."""
        assert method_registry.call("closed", group=s3, u=s3.identity(), word=(0, 1, 0, 1)) is None
        assert method_registry.call("closed", group=s3, u=s3.generator(0), word=(1, 0, 1, 0)) is None

    def test_closed_dihedral(self, dihedral5):
        """Test only power words have a closed formula outside type A."""
        assert str(method_registry.call("closed", group=dihedral5, u=dihedral5.identity(), word=(0,))) == "t"
        assert method_registry.call("closed", group=dihedral5, u=dihedral5.identity(), word=(0, 1)) is None


@pytest.mark.unit
class TestClosedFamilies:
    """Test the families of the closed command."""

    def test_names(self):
        """Test every family is registered."""
        assert sorted(closed_registry.names()) == [
            "clr", "fibonacci", "general", "pagliacci", "power", "transposition", "ud",
        ]

    def test_ud(self, s3):
        """Test the UD family prints the table and its statistics."""
        lines = closed_registry.call("ud", group=s3, word=(0, 1, 0))
        assert lines == ["t^3 + t", "cases: s2:A1 s1:D2", "c=1 d2=1"]

    def test_power(self, s4):
        """Test the power family."""
        assert closed_registry.call("power", group=s4, n=3) == ["t^3 + 2t"]
        assert closed_registry.call("power", group=s4, u=s4.generator(1), n=3, s=2) == ["t^2 + 1"]

    def test_fibonacci(self):
        """Test both Fibonacci polynomials from paths."""
        assert closed_registry.call("fibonacci", n=3) == ["F_3 = t^3 + 2t", "modified F_3 = t^6 + 3t^4 + t^2"]

    def test_pagliacci(self):
        """Test the seven-strand value."""
        assert closed_registry.call("pagliacci", n=7) == ["t^10 + 4t^8 + 3t^6"]

    def test_clr(self):
        """Test the CLR words at n = 4."""
        assert closed_registry.call("clr", n=4) == ["L deg=2", "R deg=4"]
        assert closed_registry.call("clr", n=3) == ["- deg=2"]

    def test_general_from_element(self):
        """Test the product formula on v_5."""
        group = SymmetricGroup(5)
        assert closed_registry.call("general", group=group, v=pagliacci_element(group, 5)) == ["t^6 + 2t^4"]

    def test_general_from_configuration(self):
        """Test the product formula on a configuration."""
        group = SymmetricGroup(10)
        config = configuration_from_columns([
            (-2, [3]), (-1, [2, 4, 6]), (0, [1, 3, 5, 7]), (1, [2, 4, 6, 8]), (2, [7, 9]), (3, [8]),
        ])
        lines = closed_registry.call("general", group=group, config=config)
        assert lines == ["t^15 + 6t^13 + 11t^11 + 6t^9 + t^7"]

    def test_transposition(self, s4):
        """Test the transposition family."""
        v = s4.perm_to_element((4, 2, 3, 1))
        lines = closed_registry.call("transposition", group=s4, v=v, a=1, b=4)
        assert lines == ["t^5 + 2t^3 + t", "cases: s3:A1 s2:D2 s1:D2"]

    @pytest.mark.parametrize("family,kwargs", [
        ("ud", {}),
        ("power", {}),
        ("pagliacci", {}),
        ("general", {}),
        ("transposition", {"a": 1, "b": 4}),
    ])
    def test_missing_arguments(self, s4, family, kwargs):
        """Test every family names the flag it is missing."""
        with pytest.raises(PreconditionError):
            closed_registry.call(family, group=s4, **kwargs)
