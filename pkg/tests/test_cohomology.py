"""
Tests for cochains, coboundary operators and the degree-1 adjoint cohomology tables
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import LIE_IDS, TRILIE_IDS, rational_vectors, rationals, subspace_elements
from src.catalog import TABLE7_CASES, catalog_get, catalog_list, table7
from src.cohomology import (
    ADJOINT,
    LIE,
    SCALAR,
    SKEW_FULL,
    SKEW_PAIR,
    TRILIE,
    as_trilie,
    cochain_basis,
    check_class_preservation,
    cochain_keys,
    cocycle_space,
    cocycle_support,
    cohomology_report,
    derivation_transfer,
    derivations,
    from_vector,
    induced_coboundary_identity,
    lie_delta,
    lift_2cocycle,
    linear_map,
    make_cochain,
    scalar_1cocycle_transfer,
    trace_compose_check,
    trilie_d,
)
from src.errors import AlgebraError, ArityError, DegreeError, PreconditionError
from src.exactlin import subspace_leq
from src.induce import LinearForm, induce_bracket, trace_space

GOLDEN = {
    "gl2": ((4, 3, 1), (7, 6, 1)),
    "M4": ((8, 2, 6), (9, 3, 6)),
    "M5": ((10, 2, 8), (12, 3, 9)),
    "M8": ((4, 4, 0), (9, 5, 4)),
}


def _all_positions(missing):
    return {(q, i) for q in range(1, 5) for i in range(1, 5)} - set(missing)


SUPPORT = {
    "gl2": (
        {(1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3), (4, 4)},
        {(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 4), (3, 1), (3, 3), (3, 4), (4, 4)},
    ),
    "M4": (
        {(1, 1), (1, 2), (1, 4), (2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4)},
        _all_positions([(1, 3), (2, 3), (4, 3)]),
    ),
    "M5": (
        _all_positions([(2, 1), (4, 1), (1, 3), (2, 3), (4, 3)]),
        _all_positions([(1, 3), (2, 3), (4, 3)]),
    ),
    "M8": (
        {(2, 1), (2, 2), (4, 3), (4, 4)},
        {(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 3), (4, 1), (4, 3), (4, 4)},
    ),
}


def _mu(dim=4):
    return make_cochain(LIE, SCALAR, 2, dim, [((2, 4), 1), ((3, 4), -1)])


SMALL_TRILIE_IDS = [e.id for e in catalog_list(arity=3) if e.dim <= 4]
TRACED_IDS = [lie_id for lie_id in LIE_IDS if trace_space(catalog_get(lie_id)).dim > 0]


def _degree_one_size(coeffs, dim):
    return dim * dim if coeffs == ADJOINT else dim


def _first_trace(a):
    return trace_space(a).basis_forms()[0]


class TestCochains:
    def test_key_shapes(self):
        assert cochain_keys(LIE, 2, 3) == [(1, 2), (1, 3), (2, 3)]
        assert cochain_keys(TRILIE, 1, 2) == [(1,), (2,)]
        assert ((1, 2), 3) in cochain_keys(TRILIE, 2, 3)
        assert len(cochain_keys(TRILIE, 2, 4)) == 6 * 4

    def test_basis_spans_coordinates(self):
        basis = cochain_basis(LIE, ADJOINT, 1, 3)
        assert len(basis) == 9
        assert basis[1].basis_value((1,)) == (0, 1, 0)
        assert len(cochain_basis(TRILIE, SCALAR, 2, 3)) == 9

    def test_skew_symmetric_evaluation(self):
        c = make_cochain(LIE, SCALAR, 2, 3, [((2, 1), 5)])
        assert c.scalar((1, 2)) == -5
        assert c.scalar((2, 1)) == 5
        assert c.scalar((1, 1)) == 0

    def test_duplicate_assignment_rejected(self):
        with pytest.raises(AlgebraError):
            make_cochain(LIE, SCALAR, 2, 3, [((1, 2), 1), ((2, 1), 1)])

    def test_repeated_argument_must_vanish(self):
        with pytest.raises(AlgebraError):
            make_cochain(LIE, SCALAR, 2, 3, [((1, 1), 1)])

    def test_linear_map_coordinates(self):
        f = linear_map(LIE, [[1, 2], [3, 4]])
        assert f.basis_value((1,)) == (1, 3)
        assert f.basis_value((2,)) == (2, 4)
        assert f.to_vector() == (1, 3, 2, 4)

    def test_full_skew_detection(self):
        pair_only = make_cochain(TRILIE, SCALAR, 2, 3, [((1, 2, 3), 1)])
        assert not pair_only.is_fully_skew()
        full = make_cochain(TRILIE, SCALAR, 2, 3, [((1, 2, 3), 1), ((1, 3, 2), -1), ((2, 3, 1), 1)])
        assert full.is_fully_skew()


class TestCoboundary:
    def test_scalar_degree_one_convention(self, m5):
        alpha = make_cochain(LIE, SCALAR, 1, 4, [((3,), 1)])
        assert lie_delta(m5, alpha).scalar((2, 4)) == 1

    @given(rational_vectors(16))
    def test_lie_adjoint_delta_squares_to_zero(self, coords):
        m4 = catalog_get("M4")
        f = from_vector(LIE, ADJOINT, 1, 4, coords)
        assert lie_delta(m4, lie_delta(m4, f)).is_zero()

    @given(rational_vectors(4))
    def test_trilie_scalar_d_squares_to_zero(self, coords):
        induced = induce_bracket(catalog_get("gl2"), LinearForm.coordinate(4, 4))
        alpha = from_vector(TRILIE, SCALAR, 1, 4, coords)
        assert trilie_d(induced, trilie_d(induced, alpha)).is_zero()

    @given(st.data())
    def test_lie_delta_squares_to_zero_across_catalog(self, data):
        a = catalog_get(data.draw(st.sampled_from(LIE_IDS)))
        coeffs = data.draw(st.sampled_from([ADJOINT, SCALAR]))
        coords = data.draw(rational_vectors(_degree_one_size(coeffs, a.dim)))
        c = from_vector(LIE, coeffs, 1, a.dim, coords)
        assert lie_delta(a, lie_delta(a, c)).is_zero()

    @given(st.data())
    def test_trilie_d_squares_to_zero_across_catalog(self, data):
        coeffs = data.draw(st.sampled_from([ADJOINT, SCALAR]))
        ids = SMALL_TRILIE_IDS if coeffs == ADJOINT else TRILIE_IDS
        t = catalog_get(data.draw(st.sampled_from(ids)))
        coords = data.draw(rational_vectors(_degree_one_size(coeffs, t.dim)))
        c = from_vector(TRILIE, coeffs, 1, t.dim, coords)
        assert trilie_d(t, trilie_d(t, c)).is_zero()

    @given(st.data())
    def test_induced_d_squares_to_zero(self, data):
        a = catalog_get(data.draw(st.sampled_from(TRACED_IDS)))
        induced = induce_bracket(a, _first_trace(a))
        coeffs = data.draw(st.sampled_from([ADJOINT, SCALAR]))
        coords = data.draw(rational_vectors(_degree_one_size(coeffs, a.dim)))
        c = from_vector(TRILIE, coeffs, 1, a.dim, coords)
        assert trilie_d(induced, trilie_d(induced, c)).is_zero()

    @pytest.mark.parametrize("coeffs", [ADJOINT, SCALAR])
    @pytest.mark.parametrize("degree", [1, 2])
    @pytest.mark.parametrize("lie_id", LIE_IDS)
    def test_lie_coboundaries_inside_cocycles(self, lie_id, degree, coeffs):
        report = cohomology_report(catalog_get(lie_id), LIE, coeffs, degree)
        assert subspace_leq(report.B, report.Z)

    @pytest.mark.parametrize("coeffs", [ADJOINT, SCALAR])
    @pytest.mark.parametrize("degree", [1, 2])
    @pytest.mark.parametrize("trilie_id", SMALL_TRILIE_IDS)
    def test_trilie_coboundaries_inside_cocycles(self, trilie_id, degree, coeffs):
        report = cohomology_report(catalog_get(trilie_id), TRILIE, coeffs, degree)
        assert subspace_leq(report.B, report.Z)

    @given(st.data())
    def test_random_coboundary_is_cocycle(self, data):
        a = catalog_get(data.draw(st.sampled_from(LIE_IDS)))
        coeffs = data.draw(st.sampled_from([ADJOINT, SCALAR]))
        coords = data.draw(rational_vectors(_degree_one_size(coeffs, a.dim)))
        image = lie_delta(a, from_vector(LIE, coeffs, 1, a.dim, coords))
        assert image.to_vector() in cocycle_space(a, LIE, coeffs, 2)

    def test_unsupported_degree(self, m5):
        with pytest.raises(DegreeError):
            cohomology_report(m5, LIE, ADJOINT, 3)

    def test_theory_needs_matching_arity(self, m5):
        with pytest.raises(ArityError):
            cohomology_report(m5, TRILIE, ADJOINT, 1)

    @pytest.mark.parametrize("lie_id", list(TABLE7_CASES))
    def test_coboundaries_are_cocycles(self, lie_id):
        a = catalog_get(lie_id)
        induced = induce_bracket(a, LinearForm.of(TABLE7_CASES[lie_id]))
        for theory, algebra in ((LIE, a), (TRILIE, induced)):
            for coeffs in (ADJOINT, SCALAR):
                report = cohomology_report(algebra, theory, coeffs, 2)
                assert subspace_leq(report.B, report.Z)

    def test_full_skew_cocycles_inside_pair_skew(self):
        induced = induce_bracket(catalog_get("M4"), LinearForm.coordinate(4, 1))
        pair = cocycle_space(induced, TRILIE, SCALAR, 2, SKEW_PAIR)
        full = cocycle_space(induced, TRILIE, SCALAR, 2, SKEW_FULL)
        assert subspace_leq(full, pair)


class TestFirstCohomologyTable:
    @pytest.mark.parametrize("lie_id", list(GOLDEN))
    def test_dimensions(self, lie_id):
        (row,) = table7(lie_id)
        lie, induced = GOLDEN[lie_id]
        assert (row.lie_report.dim_Z, row.lie_report.dim_B, row.lie_report.dim_H) == lie
        assert (row.induced_report.dim_Z, row.induced_report.dim_B, row.induced_report.dim_H) == induced

    @pytest.mark.parametrize("lie_id", list(SUPPORT))
    def test_support_patterns(self, lie_id):
        (row,) = table7(lie_id)
        lie_support, induced_support = SUPPORT[lie_id]
        assert cocycle_support(row.lie_report.Z, 4) == lie_support
        assert cocycle_support(row.induced_report.Z, 4) == induced_support

    def test_all_rows(self):
        assert [row.lie_id for row in table7()] == list(TABLE7_CASES)

    def test_derivations_are_lie_cocycles(self, m5):
        assert derivations(m5) == cocycle_space(m5, LIE, ADJOINT, 1)


class TestDerivationTransfer:
    def test_derivation_killed_by_trace_is_kept(self, m5):
        f = linear_map(LIE, [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])
        result = derivation_transfer(m5, LinearForm.coordinate(4, 1), f)
        assert result.is_induced_derivation
        assert result.direct

    def test_derivation_seen_by_trace_is_lost(self, m5):
        f = linear_map(LIE, [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
        result = derivation_transfer(m5, LinearForm.coordinate(4, 1), f)
        assert not result.is_induced_derivation
        assert not result.direct
        assert result.obstruction.basis_bracket((1, 2, 4)) == (0, 0, 1, 0)

    def test_criterion_matches_direct_check(self, m5):
        tau = LinearForm.coordinate(4, 1)
        for v in derivations(m5).vectors():
            f = from_vector(LIE, ADJOINT, 1, 4, v)
            result = derivation_transfer(m5, tau, f)
            assert result.is_induced_derivation == result.direct

    @given(st.data())
    def test_criterion_matches_direct_check_across_catalog(self, data):
        a = catalog_get(data.draw(st.sampled_from(LIE_IDS)))
        traces = trace_space(a)
        tau = LinearForm(data.draw(subspace_elements(traces.space))) if traces.dim else LinearForm.zero(a.dim)
        f = from_vector(LIE, ADJOINT, 1, a.dim, data.draw(subspace_elements(derivations(a))))
        result = derivation_transfer(a, tau, f)
        assert result.is_induced_derivation == result.direct

    def test_composition_is_a_trace(self, m5):
        f = from_vector(LIE, ADJOINT, 1, 4, derivations(m5).vectors()[0])
        composed = trace_compose_check(m5, LinearForm.coordinate(4, 1), f)
        assert composed.dim == 4

    def test_non_derivation_rejected(self, m5):
        f = linear_map(LIE, [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
        with pytest.raises(PreconditionError):
            derivation_transfer(m5, LinearForm.coordinate(4, 1), f)

    def test_as_trilie_keeps_values(self):
        f = linear_map(LIE, [[1, 0], [0, 2]])
        assert as_trilie(f).basis_value((2,)) == (0, 2)


class TestLifting:
    def test_scalar_lift_without_third_condition(self, m4):
        tau = LinearForm.coordinate(4, 1)
        result = lift_2cocycle(m4, tau, _mu(), tau, SCALAR)
        assert result.condition3_holds is False
        induced = induce_bracket(m4, tau)
        assert trilie_d(induced, result.psi).is_zero()
        assert result.psi.scalar((1, 2, 4)) == 1
        assert result.psi.scalar((1, 3, 4)) == -1

    def test_forms_must_be_proportional(self, m4):
        with pytest.raises(PreconditionError) as excinfo:
            lift_2cocycle(m4, LinearForm.coordinate(4, 1), _mu(), LinearForm.coordinate(4, 4), SCALAR)
        assert excinfo.value.condition == 1

    def test_omega_must_be_a_trace(self, m4):
        with pytest.raises(PreconditionError) as excinfo:
            lift_2cocycle(m4, LinearForm.zero(4), _mu(), LinearForm.coordinate(4, 3), SCALAR)
        assert excinfo.value.condition == 2

    def test_phi_must_be_a_cocycle(self, m4):
        not_cocycle = make_cochain(LIE, SCALAR, 2, 4, [((1, 3), 1)])
        tau = LinearForm.coordinate(4, 1)
        with pytest.raises(PreconditionError):
            lift_2cocycle(m4, tau, not_cocycle, tau, SCALAR)

    def test_adjoint_lift_of_the_bracket(self, m5):
        # the bracket itself is an adjoint 2-cocycle and tau kills its values
        tau = LinearForm.coordinate(4, 1)
        phi = make_cochain(LIE, ADJOINT, 2, 4, [((2, 4), (0, 0, 1, 0))])
        result = lift_2cocycle(m5, tau, phi, tau, ADJOINT)
        assert result.condition3_holds
        assert result.psi.basis_value((1, 2, 4)) == (0, 0, 1, 0)
        assert trilie_d(induce_bracket(m5, tau), result.psi).is_zero()

    def test_adjoint_lift_third_condition_fails(self, m5):
        tau = LinearForm.coordinate(4, 1)
        phi = make_cochain(LIE, ADJOINT, 2, 4, [((2, 4), (1, 0, 0, 0))])
        assert lie_delta(m5, phi).is_zero()
        with pytest.raises(PreconditionError) as excinfo:
            lift_2cocycle(m5, tau, phi, tau, ADJOINT)
        assert excinfo.value.condition == 3

    def test_adjoint_forms_must_be_proportional(self, m5):
        phi = make_cochain(LIE, ADJOINT, 2, 4, [((2, 4), (0, 0, 1, 0))])
        with pytest.raises(PreconditionError) as excinfo:
            lift_2cocycle(m5, LinearForm.coordinate(4, 1), phi, LinearForm.coordinate(4, 2), ADJOINT)
        assert excinfo.value.condition == 1

    @given(st.data())
    def test_adjoint_lifts_are_cocycles(self, data):
        a = catalog_get(data.draw(st.sampled_from(TRACED_IDS)))
        tau = _first_trace(a)
        phi = from_vector(LIE, ADJOINT, 2, a.dim, data.draw(subspace_elements(cocycle_space(a, LIE, ADJOINT, 2))))
        scale = data.draw(rationals.filter(lambda c: c != 0))
        omega = LinearForm(tuple(scale * c for c in tau.coeffs))
        try:
            result = lift_2cocycle(a, tau, phi, omega, ADJOINT)
        except PreconditionError as error:
            assert error.condition == 3
            return
        assert trilie_d(induce_bracket(a, tau), result.psi).is_zero()

    @given(st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4))
    def test_coboundary_identity(self, coeffs):
        m4 = catalog_get("M4")
        assert induced_coboundary_identity(m4, LinearForm.coordinate(4, 1), LinearForm.of(coeffs))

    def test_class_preservation(self, m4):
        tau = LinearForm.of([1, 1, 0, 1])
        assert check_class_preservation(m4, tau, _mu(), LinearForm.of([0, 1, 2, 3]))

    def test_scalar_one_cocycle_transfer(self, m8):
        assert scalar_1cocycle_transfer(m8, LinearForm.of([1, 0, 1, 0]), LinearForm.coordinate(4, 3))
        with pytest.raises(PreconditionError):
            scalar_1cocycle_transfer(m8, LinearForm.of([1, 0, 1, 0]), LinearForm.coordinate(4, 2))
