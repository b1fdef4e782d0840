"""
Tests for central extensions and the extension induced through a trace
"""

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import LIE_IDS, TRILIE_IDS, rational_vectors, subspace_elements
from src.algebra import verify_identity
from src.catalog import catalog_get
from src.cohomology import LIE, SCALAR, SKEW_FULL, TRILIE, cocycle_space, from_vector, lie_delta, make_cochain, trilie_d
from src.errors import CocycleError, DimensionMismatchError, PreconditionError
from src.extensions import (
    build_extension,
    central_extend,
    equivalent_extensions,
    extend_form,
    induce_extension,
    is_trivial_extension,
    trivial_extension_witness,
)
from src.induce import LinearForm, induce_bracket, trace_space


@pytest.fixture
def tau():
    return LinearForm.coordinate(4, 1)


@pytest.fixture
def lam():
    return make_cochain(LIE, SCALAR, 2, 4, [((1, 2), 1)])


@pytest.fixture
def mu():
    return make_cochain(LIE, SCALAR, 2, 4, [((2, 4), 1), ((3, 4), -1)])


def _alternating(dim, values):
    """Scalar trilie 2-cochain alternating in all arguments, one value per increasing triple"""
    items = []
    for (i, j, k), v in zip(itertools.combinations(range(1, dim + 1), 3), values):
        items += [((i, j, k), v), ((i, k, j), -v), ((j, k, i), v)]
    return make_cochain(TRILIE, SCALAR, 2, dim, items)


def _square_cases():
    cases = []
    for lie_id in LIE_IDS:
        a = catalog_get(lie_id)
        cocycles = cocycle_space(a, LIE, SCALAR, 2).dim
        traces = trace_space(a).dim
        cases.extend((lie_id, n, k) for n in range(cocycles) for k in range(traces))
    return cases


class TestCentralExtension:
    def test_extension_satisfies_jacobi(self, m4, mu):
        ext = central_extend(m4, mu)
        assert ext.total.dim == 5
        assert ext.central_index == 5
        assert ext.total.basis_bracket((2, 4)) == (0, 0, 1, 0, 1)
        assert ext.total.basis_bracket((3, 4)) == (0, 0, 1, 0, -1)
        assert verify_identity(ext.total).ok

    def test_non_cocycle_reports_first_violation(self, m4):
        omega = make_cochain(LIE, SCALAR, 2, 4, [((1, 3), 1)])
        with pytest.raises(CocycleError) as excinfo:
            central_extend(m4, omega)
        assert excinfo.value.key is not None

    def test_dimension_checked(self, m4):
        omega = make_cochain(LIE, SCALAR, 2, 3, [((1, 2), 1)])
        with pytest.raises(DimensionMismatchError):
            central_extend(m4, omega)

    def test_theory_must_match_arity(self, m4):
        omega = make_cochain(TRILIE, SCALAR, 2, 4, [((1, 2, 3), 1)])
        with pytest.raises(PreconditionError):
            central_extend(m4, omega)


class TestTriviality:
    def test_lambda_is_nontrivial(self, m4, lam):
        assert not is_trivial_extension(m4, lam)
        assert trivial_extension_witness(m4, lam) is None

    def test_coboundary_is_trivial(self, m4):
        # delta x3 = e2^e4 + e3^e4
        omega = make_cochain(LIE, SCALAR, 2, 4, [((2, 4), 1), ((3, 4), 1)])
        assert is_trivial_extension(m4, omega)
        witness = trivial_extension_witness(m4, omega)
        assert witness is not None
        assert witness((0, 0, 1, 0)) == 1

    def test_equivalence_up_to_coboundary(self, m4, lam):
        shifted = make_cochain(LIE, SCALAR, 2, 4, [((1, 2), 1), ((2, 4), 2), ((3, 4), 2)])
        assert equivalent_extensions(m4, lam, shifted)
        assert not equivalent_extensions(m4, lam, lam.scaled(2))


class TestInducedExtension:
    def test_lambda_induces_zero_cocycle(self, m4, tau, lam):
        induced = induce_extension(m4, tau, lam)
        assert induced.omega_tau.is_zero()

    def test_mu_induces_nontrivial_extension(self, m4, tau, mu):
        induced = induce_extension(m4, tau, mu)
        assert induced.omega_tau.scalar((1, 2, 4)) == 1
        assert induced.omega_tau.scalar((1, 3, 4)) == -1
        assert len(induced.omega_tau.values) == 2 * 3
        total = induced.ext3.total
        assert total.basis_bracket((1, 2, 4)) == (0, 0, 1, 0, 1)
        assert total.basis_bracket((1, 3, 4)) == (0, 0, 1, 0, -1)
        assert not is_trivial_extension(induce_bracket(m4, tau), induced.omega_tau)

    def test_induced_extension_is_3lie(self, m4, tau, mu):
        assert verify_identity(induce_extension(m4, tau, mu).ext3.total).ok

    def test_trace_required(self, m4, mu):
        with pytest.raises(PreconditionError):
            induce_extension(m4, LinearForm.coordinate(4, 3), mu)

    def test_extended_form(self, tau):
        assert extend_form(tau).coeffs == (1, 0, 0, 0, 0)

    def test_gl2_extension_adds_one_dimension(self, gl2):
        omega = make_cochain(LIE, SCALAR, 2, 4, [((2, 3), 1)])
        induced = induce_extension(gl2, LinearForm.coordinate(4, 4), omega)
        assert induced.ext3.total.dim == 5

    def test_lambda_induced_brackets(self, m4, tau, lam):
        total = induce_extension(m4, tau, lam).ext3.total
        assert total.basis_bracket((1, 2, 4)) == (0, 0, 1, 0, 0)
        assert total.basis_bracket((1, 3, 4)) == (0, 0, 1, 0, 0)
        assert len(total.table) == 2

    def test_lambda_induced_cocycle_is_trivial(self, m4, tau, lam):
        induced = induce_extension(m4, tau, lam)
        base = induce_bracket(m4, tau)
        assert is_trivial_extension(base, induced.omega_tau)
        witness = trivial_extension_witness(base, induced.omega_tau)
        assert witness is not None
        assert witness.is_zero()

    @pytest.mark.parametrize("lie_id,cocycle,trace", _square_cases())
    def test_extension_square_commutes(self, lie_id, cocycle, trace):
        a = catalog_get(lie_id)
        omega = from_vector(LIE, SCALAR, 2, a.dim, cocycle_space(a, LIE, SCALAR, 2).vectors()[cocycle])
        tau = trace_space(a).basis_forms()[trace]
        induced = induce_extension(a, tau, omega)
        assert induced.ext3.total == induce_bracket(central_extend(a, omega).total, extend_form(tau))
        assert verify_identity(induced.ext3.total).ok


class TestIdentityMatchesCocycle:
    def test_lie_non_cocycle(self, m4):
        omega = make_cochain(LIE, SCALAR, 2, 4, [((1, 3), 1)])
        assert not lie_delta(m4, omega).is_zero()
        assert not verify_identity(build_extension(m4, omega)).ok

    def test_trilie_non_cocycle(self):
        t = catalog_get("T4.3c")
        omega = _alternating(4, [0, 1, 0, 0])
        assert not trilie_d(t, omega).is_zero()
        assert not verify_identity(build_extension(t, omega)).ok

    @given(st.data())
    def test_lie(self, data):
        a = catalog_get(data.draw(st.sampled_from(LIE_IDS)))
        if data.draw(st.booleans()):
            coords = data.draw(subspace_elements(cocycle_space(a, LIE, SCALAR, 2)))
        else:
            coords = data.draw(rational_vectors(a.dim * (a.dim - 1) // 2))
        omega = from_vector(LIE, SCALAR, 2, a.dim, coords)
        assert verify_identity(build_extension(a, omega)).ok == lie_delta(a, omega).is_zero()

    @given(st.data())
    def test_trilie(self, data):
        t = catalog_get(data.draw(st.sampled_from(TRILIE_IDS)))
        if data.draw(st.booleans()):
            coords = data.draw(subspace_elements(cocycle_space(t, TRILIE, SCALAR, 2, SKEW_FULL)))
            omega = from_vector(TRILIE, SCALAR, 2, t.dim, coords)
        else:
            omega = _alternating(t.dim, data.draw(rational_vectors(math.comb(t.dim, 3))))
        assert omega.is_fully_skew()
        assert verify_identity(build_extension(t, omega)).ok == trilie_d(t, omega).is_zero()
