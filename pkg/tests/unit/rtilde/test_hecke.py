"""
Unit tests for the Hecke algebra and the R-tilde recursion.
"""
import pytest

from rtilde.errors import SupportOverflowError
from rtilde.hecke import (
    DESCENT_POLICIES,
    HeckeElement,
    hecke_rtilde,
    r_polynomial,
    rtilde_recursive,
)
from rtilde.memory import InMemoryMemoStore
from rtilde.poly import IntPolynomial, LaurentPolynomial, T


@pytest.mark.unit
class TestHeckeElement:
    """Test multiplication in the standard basis."""

    def test_quadratic_relation(self, s3):
        """Test H_s^2 = 1 + (t^-1 - t) H_s."""
        s = s3.generator(0)
        square = HeckeElement.basis(s3, s).mul_by_generator(0)
        assert square.coefficient(s3.identity()) == LaurentPolynomial.one()
        assert square.coefficient(s) == LaurentPolynomial(((-1, 1), (1, -1)))

    def test_inverse_relation(self, s3):
        """Test H_s^-1 H_s = 1."""
        product = HeckeElement.identity(s3).mul_by_generator_inverse(1).mul_by_generator(1)
        assert product == HeckeElement.identity(s3)

    def test_arithmetic(self, s3):
        """Test sums, differences and scaling."""
        h = HeckeElement.basis(s3, s3.generator(0))
        assert len(h + h) == 1
        assert (h + h).coefficient(s3.generator(0)) == LaurentPolynomial.monomial(0, 2)
        assert len(h - h) == 0
        assert str(h - h) == "0"

    def test_support_is_sorted(self, s3):
        """Test iteration order."""
        h = HeckeElement.identity(s3).mul_by_generator_inverse(0).mul_by_generator_inverse(1)
        assert [u.word for u in h.support()] == [(), (0,), (1,), (0, 1)]


@pytest.mark.unit
class TestRPolynomials:
    """Test R-polynomials and R-tilde polynomials."""

    def test_r_of_a_generator(self, s3):
        """Test R(e, s) = t - t^-1."""
        assert r_polynomial(s3, s3.identity(), s3.generator(0)) == LaurentPolynomial(((-1, -1), (1, 1)))
        assert hecke_rtilde(s3, s3.identity(), s3.generator(0)) == T

    def test_longest_element_of_s3(self, s3):
        """Test R~(e, w0) = t^3 + t."""
        w0 = s3.perm_to_element((3, 2, 1))
        assert hecke_rtilde(s3, s3.identity(), w0) == T ** 3 + T
        assert rtilde_recursive(s3, s3.identity(), w0) == T ** 3 + T

    def test_longest_element_of_s4(self, s4):
        """Test R~(e, w0) = t^6 + 3t^4 + t^2."""
        w0 = s4.perm_to_element((4, 3, 2, 1))
        expected = T ** 6 + 3 * T ** 4 + T ** 2
        assert rtilde_recursive(s4, s4.identity(), w0) == expected
        assert hecke_rtilde(s4, s4.identity(), w0) == expected

    def test_incomparable_pair_is_zero(self, s3):
        """Test u not below v."""
        assert rtilde_recursive(s3, s3.generator(0), s3.generator(1)).is_zero()
        assert hecke_rtilde(s3, s3.generator(0), s3.generator(1)).is_zero()

    def test_diagonal_is_one(self, s4):
        """Test R~(u, u) = 1."""
        for u in s4.elements():
            assert rtilde_recursive(s4, u, u) == IntPolynomial.one()

    def test_recursion_matches_hecke(self, s4):
        """Test both methods over every pair of S_4."""
        elements = s4.elements()
        for v in elements:
            for u in elements:
                assert rtilde_recursive(s4, u, v) == hecke_rtilde(s4, u, v)

    def test_dihedral_recursion_matches_hecke(self, dihedral5):
        """Test both methods over I_2(5)."""
        elements = dihedral5.elements()
        for v in elements:
            for u in elements:
                assert rtilde_recursive(dihedral5, u, v) == hecke_rtilde(dihedral5, u, v)

    @pytest.mark.parametrize("policy", sorted(DESCENT_POLICIES))
    def test_descent_policy_invariance(self, s4, policy):
        """Test that every descent choice gives the same polynomial."""
        for v in s4.elements():
            for u in s4.elements():
                expected = rtilde_recursive(s4, u, v, descent_policy="rightmost", store=InMemoryMemoStore())
                assert rtilde_recursive(s4, u, v, descent_policy=policy, store=InMemoryMemoStore()) == expected

    def test_unknown_policy(self, s3):
        """Test an unknown descent policy."""
        with pytest.raises(ValueError):
            rtilde_recursive(s3, s3.identity(), s3.generator(0), descent_policy="random")

    def test_memo_store_is_filled(self, s4):
        """Test that intermediate results are written to the store."""
        store = InMemoryMemoStore()
        rtilde_recursive(s4, s4.identity(), s4.perm_to_element((4, 3, 2, 1)), store=store)
        assert len(store) > 0
        assert store.get("|0,1,0,2,1,0") == [0, 0, 1, 0, 3, 0, 1]

    def test_support_cap(self, s4):
        """Test that the expansion stops at the support cap."""
        w0 = s4.perm_to_element((4, 3, 2, 1))
        with pytest.raises(SupportOverflowError):
            hecke_rtilde(s4, s4.identity(), w0, support_cap=3)
