"""
Tests for exact rational linear algebra
"""

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import rational_matrices
from src.errors import DimensionMismatchError, DocumentParseError
from src.exactlin import (
    Matrix,
    Subspace,
    annihilator,
    apply_matrix,
    column_space,
    format_rational,
    from_qq,
    kernel,
    nullspace,
    parse_rational,
    qq,
    rref,
    solve,
    span,
    subspace_contains,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
    zero_matrix,
)


class TestRationalLiterals:
    def test_integer_and_fraction(self):
        assert parse_rational("3") == 3
        assert parse_rational("-1/2") == Fraction(-1, 2)
        assert parse_rational(" 4/6 ") == Fraction(2, 3)

    def test_unicode_minus(self):
        assert parse_rational("−1/2") == Fraction(-1, 2)

    @pytest.mark.parametrize("text", ["", "1/0", "1/-2", "a", "1.5", "1//2"])
    def test_malformed(self, text):
        with pytest.raises(DocumentParseError):
            parse_rational(text)

    def test_format(self):
        assert format_rational(Fraction(-3, 6)) == "-1/2"
        assert format_rational(Fraction(4)) == "4"


class TestRref:
    def test_rank_and_pivots(self):
        m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        reduced, rank, pivots = rref(m)
        assert rank == 2
        assert pivots == [0, 1]
        assert reduced.row(0) == (1, 0, 1)
        assert reduced.row(1) == (0, 1, 1)
        assert reduced.row(2) == (0, 0, 0)

    def test_zero_matrix(self):
        _, rank, pivots = rref(Matrix.zero(2, 3))
        assert rank == 0
        assert pivots == []

    def test_exact_fractions(self):
        m = Matrix.from_rows([[3, 1], [1, Fraction(1, 3)]])
        assert rref(m)[1] == 1


class TestSubspaces:
    def test_span_is_canonical(self):
        a = span(3, [[1, 1, 0], [0, 1, 1]])
        b = span(3, [[1, 0, -1], [2, 3, 1], [0, 0, 0]])
        assert a == b
        assert a.dim == 2

    def test_nullspace(self):
        ns = nullspace(Matrix.from_rows([[1, 1, 0], [0, 0, 1]]))
        assert ns.dim == 1
        assert subspace_contains(ns, [1, -1, 0])

    def test_nullspace_of_empty_system_is_full(self):
        assert nullspace(Matrix.zero(0, 3)).is_full()

    def test_sum_and_intersection(self):
        a = span(3, [[1, 0, 0], [0, 1, 0]])
        b = span(3, [[0, 1, 0], [0, 0, 1]])
        assert subspace_sum(a, b).is_full()
        assert subspace_intersection(a, b) == span(3, [[0, 1, 0]])
        assert subspace_leq(subspace_intersection(a, b), a)

    def test_annihilator(self):
        s = span(4, [[0, 1, 0, 0], [0, 0, 1, 0]])
        assert annihilator(s) == span(4, [[1, 0, 0, 0], [0, 0, 0, 1]])
        assert annihilator(Subspace.zero(2)).is_full()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            subspace_sum(Subspace.full(2), Subspace.full(3))
        with pytest.raises(DimensionMismatchError):
            span(2, [[1, 2, 3]])


class TestSolve:
    def test_consistent(self):
        m = Matrix.from_rows([[1, 1], [1, -1]])
        assert solve(m, [2, 0]) == (1, 1)

    def test_free_variables_are_zero(self):
        m = Matrix.from_rows([[1, 1, 0]])
        assert solve(m, [5]) == (5, 0, 0)

    def test_inconsistent(self):
        m = Matrix.from_rows([[1, 1], [2, 2]])
        assert solve(m, [1, 3]) is None


class TestProperties:
    @given(rational_matrices())
    def test_rank_nullity(self, rows):
        m = Matrix.from_rows(rows)
        _, rank, _ = rref(m)
        assert rank + nullspace(m).dim == m.cols

    @given(rational_matrices())
    def test_nullspace_vectors_are_solutions(self, rows):
        m = Matrix.from_rows(rows)
        for v in nullspace(m).vectors():
            assert all(x == 0 for x in m.apply(v))

    @given(rational_matrices())
    def test_row_space_and_annihilator_are_complementary(self, rows):
        row_space = span(len(rows[0]), rows)
        assert row_space.dim + annihilator(row_space).dim == row_space.ambient_dim
        assert annihilator(annihilator(row_space)) == row_space


class TestDomainMatrices:
    def test_round_trip(self):
        m = Matrix.from_rows([[Fraction(1, 2), 0], [0, -3]])
        assert Matrix.from_domain(m.to_domain()) == m

    def test_scalar_conversion(self):
        assert from_qq(qq("-7/3")) == Fraction(-7, 3)
        assert from_qq(qq(0)) == 0

    def test_kernel_and_column_space(self):
        dm = Matrix.from_rows([[1, 1, 0], [0, 0, 0]]).to_domain()
        assert kernel(dm) == span(3, [[1, -1, 0], [0, 0, 1]])
        assert column_space(dm) == span(2, [[1, 0]])

    def test_zero_system(self):
        assert kernel(zero_matrix(2, 3)).is_full()
        assert column_space(zero_matrix(2, 3)).is_zero()

    def test_apply(self):
        dm = Matrix.from_rows([[1, 2], [3, 4]]).to_domain()
        assert apply_matrix(dm, [1, Fraction(1, 2)]) == (2, 5)
        with pytest.raises(DimensionMismatchError):
            apply_matrix(dm, [1, 2, 3])
