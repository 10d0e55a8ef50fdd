from fractions import Fraction

import pytest
import sympy

from bottom_schur.errors import BasisMismatchError, PreconditionError, UnfaithfulEvaluationError
from bottom_schur.partitions import Partition, partitions_of
from bottom_schur.symfunc import (
    Basis,
    MonomialVector,
    SymFn,
    augment_m,
    diagonal_D,
    evaluate_finite,
    h_in_p,
    h_to_p,
    p_to_m,
    reduce_m,
    rescale_p_tilde,
    to_monomial,
    transition_R,
    transition_entry,
    unscale_p_tilde,
)


def p(*index, coeff=1):
    return SymFn.monomial(Basis.POWER_SUM, index, coeff)


def pt(*index, coeff=1):
    return SymFn.monomial(Basis.SCALED_POWER_SUM, index, coeff)


def m(*index, coeff=1):
    return SymFn.monomial(Basis.MONOMIAL, index, coeff)


class TestRing:
    def test_product_concatenates_indices(self):
        assert p(2) * p(1) == p(2, 1)

    def test_cancellation_drops_zero_terms(self):
        f = (pt(5, 1) - pt(3, 3)) + pt(3, 3)
        assert f == pt(5, 1)
        assert len(f) == 1

    def test_scale(self):
        assert p(2, coeff=Fraction(1, 2)) * 2 == p(2)
        assert 3 * p(2) == p(2, coeff=3)

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatchError):
            p(1) + m(1)
        with pytest.raises(BasisMismatchError):
            m(1) * m(1)

    def test_zero_is_basis_agnostic(self):
        assert SymFn.zero(Basis.MONOMIAL) + p(1) == p(1)
        assert SymFn.zero(Basis.POWER_SUM) == SymFn.zero(Basis.MONOMIAL)

    def test_render(self):
        assert (pt(5, 1) - pt(3, 3)).render() == "p~[5,1] - p~[3,3]"
        assert (pt(5, 4, 3, coeff=-2) + pt(4, 4, 4)).render() == "-2 p~[5,4,3] + p~[4,4,4]"
        assert h_in_p(2).render() == "1/2 p[2] + 1/2 p[1,1]"
        assert SymFn.zero(Basis.POWER_SUM).render() == "0"

    def test_json_round_trip(self):
        f = h_in_p(3)
        assert SymFn.from_json(f.to_json()) == f
        assert f.to_model().terms[0].index == [3]

    def test_components(self):
        f = p(2) + p(1)
        assert not f.is_homogeneous()
        assert f.components() == {2: p(2), 1: p(1)}


class TestBasisChange:
    def test_h_in_p(self):
        assert h_in_p(1) == p(1)
        assert h_in_p(2) == p(2, coeff=Fraction(1, 2)) + p(1, 1, coeff=Fraction(1, 2))
        assert h_in_p(3) == (
            p(3, coeff=Fraction(1, 3)) + p(2, 1, coeff=Fraction(1, 2)) + p(1, 1, 1, coeff=Fraction(1, 6))
        )

    @pytest.mark.parametrize("n", [0, -1])
    def test_h_in_p_needs_positive_degree(self, n):
        with pytest.raises(PreconditionError):
            h_in_p(n)

    def test_h_to_p_product(self):
        h21 = SymFn.monomial(Basis.HOMOGENEOUS, (2, 1))
        assert h_to_p(h21) == h_in_p(2) * p(1)

    @pytest.mark.parametrize(
        "source, expected",
        [
            ((1, 1), m(2) + m(1, 1, coeff=2)),
            ((3, 3), m(6) + m(3, 3, coeff=2)),
            ((5, 1), m(6) + m(5, 1)),
        ],
    )
    def test_p_to_m(self, source, expected):
        assert p_to_m(p(*source)) == expected

    def test_p_tilde_scaling(self):
        f = p(3, 2, coeff=Fraction(1, 6))
        assert rescale_p_tilde(f) == pt(3, 2)
        assert unscale_p_tilde(rescale_p_tilde(f)) == f

    def test_augmented_monomials(self):
        assert reduce_m(SymFn.monomial(Basis.AUGMENTED_MONOMIAL, (6, 3, 3))) == m(6, 3, 3, coeff=2)
        assert augment_m(m(4, 4, 4, coeff=6)) == SymFn.monomial(Basis.AUGMENTED_MONOMIAL, (4, 4, 4))

    def test_h_to_monomial(self):
        # h_2 = m_2 + m_11
        assert to_monomial(SymFn.monomial(Basis.HOMOGENEOUS, (2,))) == m(2) + m(1, 1)


class TestTransition:
    def test_entries(self):
        assert transition_entry((1, 1), (2,)) == 1
        assert transition_entry((1, 1), (1, 1)) == 2
        assert transition_entry((2,), (1, 1)) == 0

    @pytest.mark.parametrize("n", range(1, 8))
    def test_diagonal_matches_D(self, n):
        R, D = transition_R(n), diagonal_D(n)
        size = len(partitions_of(n))
        assert all(R[i, i] == D[i, i] for i in range(size))

    @pytest.mark.parametrize("n", range(1, 10))
    def test_invertible(self, n):
        assert transition_R(n).determinant() != 0

    def test_rows_agree_with_p_to_m(self):
        index = partitions_of(5)
        R = transition_R(5)
        for i, lam in enumerate(index):
            assert p_to_m(p(*lam)).vector(index) == [R[i, j] for j in range(len(index))]


class TestFiniteEvaluation:
    def test_p2_in_three_variables(self):
        poly = evaluate_finite(p(2), 3)
        assert poly == {
            MonomialVector((2, 0, 0)): 1,
            MonomialVector((0, 2, 0)): 1,
            MonomialVector((0, 0, 2)): 1,
        }

    def test_unfaithful(self):
        with pytest.raises(UnfaithfulEvaluationError):
            evaluate_finite(p(2, 1), 2)

    def test_against_sympy_expansion(self):
        xs = sympy.symbols("x1:5")
        power = sympy.expand(sum(x**2 for x in xs) * sum(xs) ** 2)
        poly = evaluate_finite(p(2, 1, 1), 4)
        expected = sympy.Poly(power, *xs).as_dict()
        assert {mono.exponents: int(c) for mono, c in poly.items()} == {
            k: int(v) for k, v in expected.items()
        }

    def test_monomial_shape(self):
        assert MonomialVector((0, 3, 1, 3)).shape == Partition([3, 3, 1])
