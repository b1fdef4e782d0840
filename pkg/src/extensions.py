#!/usr/bin/env python3
"""
Extensions
Central extensions by a one-dimensional center and the extension induced through a trace
"""

import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from src.algebra import StructureConstants, canonicalize
from src.cohomology import (
    LIE,
    SCALAR,
    TRILIE,
    Cochain,
    coboundary_matrix,
    coboundary_space,
    cyclic_lift,
    first_violation,
)
from src.errors import AlgebraError, ArityError, CocycleError, DimensionMismatchError, PreconditionError
from src.exactlin import Matrix, solve, subspace_contains
from src.induce import LinearForm, induce_bracket, is_trace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentralExtension:
    """
    A + Kc with [x_1..x_n]_c = [x_1..x_n] + omega(x_1..x_n) c

    The central element c is the last basis vector of total.
    """

    base: StructureConstants
    cocycle: Cochain
    total: StructureConstants

    @property
    def central_index(self) -> int:
        return self.base.dim + 1


def _scalar_theory(a: StructureConstants) -> str:
    if a.arity == 2:
        return LIE
    if a.arity == 3:
        return TRILIE
    raise ArityError(f"central extensions are built for arity 2 or 3, got {a.arity}")


def _check_cochain(a: StructureConstants, omega: Cochain):
    theory = _scalar_theory(a)
    if omega.theory != theory or omega.coeffs != SCALAR or omega.degree != 2:
        raise PreconditionError(f"expected a {theory} scalar 2-cochain")
    if omega.dim != a.dim:
        raise DimensionMismatchError(f"cochain on {omega.dim} coordinates for an algebra of dimension {a.dim}")


def build_extension(a: StructureConstants, omega: Cochain) -> StructureConstants:
    """Bracket of A + Kc twisted by omega, without checking the cocycle condition"""
    _check_cochain(a, omega)
    raw = []
    for key in itertools.combinations(range(1, a.dim + 1), a.arity):
        value = a.basis_bracket(key) + (omega.scalar(key),)
        raw.append((key, value))
    name = f"{a.name}_ext" if a.name else ""
    return canonicalize(raw, a.arity, a.dim + 1, name)


def central_extend(a: StructureConstants, omega: Cochain) -> CentralExtension:
    """
    Central extension by a scalar 2-cocycle

    Args:
        a: Lie or 3-Lie algebra
        omega: Scalar 2-cochain of the matching theory

    Returns:
        CentralExtension whose total algebra has the central element as e_{d+1}

    Raises:
        CocycleError: omega is not a cocycle; carries the first violated tuple
    """
    _check_cochain(a, omega)
    if omega.theory == TRILIE and not omega.is_fully_skew():
        raise PreconditionError("a 3-Lie extension cocycle must be alternating in all arguments")
    violation = first_violation(a, omega)
    if violation is not None:
        raise CocycleError(f"cochain is not a 2-cocycle, defect at {violation}", key=violation)
    extension = CentralExtension(a, omega, build_extension(a, omega))
    logger.debug(f"central extension of {a.name or 'algebra'}: {extension.total.describe()}")
    return extension


def extend_form(tau: LinearForm) -> LinearForm:
    """tau on A + Kc with tau(c) = 0"""
    return tau.extended(1)


class InducedExtension(NamedTuple):
    ext3: CentralExtension
    omega_tau: Cochain


def induce_extension(a: StructureConstants, tau: LinearForm, omega: Cochain) -> InducedExtension:
    """
    Extend a Lie algebra by omega, then induce with tau(c) = 0

    The result is the central extension of the induced 3-Lie algebra by
    omega_tau(x,y,z) = tau(x)omega(y,z) + tau(y)omega(z,x) + tau(z)omega(x,y).
    """
    if a.arity != 2:
        raise ArityError("induced extensions start from a Lie algebra")
    if not is_trace(a, tau):
        raise PreconditionError(f"{tau.describe()} is not a trace")
    lie_extension = central_extend(a, omega)
    induced_total = induce_bracket(lie_extension.total, extend_form(tau))
    omega_tau = cyclic_lift(tau, omega)
    ext3 = central_extend(induce_bracket(a, tau), omega_tau)
    if ext3.total != induced_total:
        raise AlgebraError("inducing the extension does not commute with extending the induced algebra")
    return InducedExtension(ext3, omega_tau)


def is_trivial_extension(a: StructureConstants, omega: Cochain) -> bool:
    """omega is a scalar 2-coboundary"""
    _check_cochain(a, omega)
    violation = first_violation(a, omega)
    if violation is not None:
        raise CocycleError(f"cochain is not a 2-cocycle, defect at {violation}", key=violation)
    return subspace_contains(coboundary_space(a, omega.theory, SCALAR, 2), omega.to_vector())


def trivial_extension_witness(a: StructureConstants, omega: Cochain) -> Optional[LinearForm]:
    """
    A linear form alpha whose coboundary is omega, if there is one

    Args:
        a: Lie or 3-Lie algebra
        omega: Scalar 2-cochain

    Returns:
        alpha with delta1 alpha = omega (d1 alpha for 3-Lie), free coordinates set
        to zero, or None when omega is not a coboundary
    """
    _check_cochain(a, omega)
    matrix = Matrix.from_domain(coboundary_matrix(a, omega.theory, SCALAR, 1))
    solution = solve(matrix, omega.to_vector())
    return LinearForm(solution) if solution is not None else None


def equivalent_extensions(a: StructureConstants, omega1: Cochain, omega2: Cochain) -> bool:
    """Extensions by omega1 and omega2 are equivalent when omega2 - omega1 is a coboundary"""
    return is_trivial_extension(a, omega2 - omega1)
