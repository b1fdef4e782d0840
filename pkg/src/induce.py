#!/usr/bin/env python3
"""
Induce
Trace spaces of a bracket and the induced (n+1)-ary bracket built from a trace
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.algebra import StructureConstants, canonicalize, linear_combination
from src.errors import ArityError, DimensionMismatchError, TracePreconditionError
from src.exactlin import Rational, Subspace, Vector, annihilator, dot, format_rational, span, unit_vector, vec_add, vec_scale, vector, zero_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearForm:
    """tau(e_i) = coeffs[i-1]"""

    coeffs: Vector

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __call__(self, v: Sequence[Fraction]) -> Fraction:
        return dot(self.coeffs, v)

    @classmethod
    def of(cls, values: Sequence[Rational]) -> "LinearForm":
        return cls(vector(values))

    @classmethod
    def coordinate(cls, dim: int, i: int) -> "LinearForm":
        """x -> x_i, 1-based"""
        return cls(unit_vector(dim, i - 1))

    @classmethod
    def zero(cls, dim: int) -> "LinearForm":
        return cls(zero_vector(dim))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def extended(self, extra: int = 1) -> "LinearForm":
        """Same form on a space with extra trailing basis vectors it kills"""
        return LinearForm(self.coeffs + zero_vector(extra))

    def describe(self, variable: str = "x") -> str:
        terms = []
        for k, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            coef = "" if c == 1 else "-" if c == -1 else format_rational(c)
            sign = "" if not terms or coef.startswith("-") else "+"
            terms.append(f"{sign}{coef}{variable}{k}")
        return "".join(terms) if terms else "0"


@dataclass(frozen=True)
class TraceSpace:
    """Linear forms vanishing on every bracket value of the algebra"""

    algebra: StructureConstants
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_forms(self) -> List[LinearForm]:
        return [LinearForm(v) for v in self.space.vectors()]

    def contains(self, tau: LinearForm) -> bool:
        return tau.coeffs in self.space


def derived_subspace(a: StructureConstants) -> Subspace:
    """Span of all bracket values"""
    return span(a.dim, [v for _, v in a.table])


def trace_space(a: StructureConstants) -> TraceSpace:
    """
    Forms vanishing on [A..A]

    Args:
        a: Lie or n-Lie algebra

    Returns:
        TraceSpace whose basis is the canonical basis of the annihilator of the
        derived subspace
    """
    return TraceSpace(a, annihilator(derived_subspace(a)))


def is_trace(a: StructureConstants, tau: LinearForm) -> bool:
    if tau.dim != a.dim:
        raise DimensionMismatchError(f"form on {tau.dim} coordinates for an algebra of dimension {a.dim}")
    return all(tau(v) == 0 for _, v in a.table)


def induce_bracket(a: StructureConstants, tau: LinearForm) -> StructureConstants:
    """
    Induced bracket of arity n+1

    phi_tau(x_1..x_{n+1}) = sum_k (-1)^(k-1) tau(x_k) phi(x_1..^x_k..x_{n+1}), k 1-based.
    For a Lie algebra this is tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y].

    Raises:
        TracePreconditionError: tau does not vanish on every bracket value
    """
    if not is_trace(a, tau):
        raise TracePreconditionError(f"{tau.describe()} is not a trace of {a.name or 'the algebra'}")
    raw = []
    for key in itertools.combinations(range(1, a.dim + 1), a.arity + 1):
        value = zero_vector(a.dim)
        for k, i in enumerate(key):
            weight = tau.coeffs[i - 1]
            if weight == 0:
                continue
            rest = key[:k] + key[k + 1:]
            sign = -1 if k % 2 else 1
            value = vec_add(value, vec_scale(sign * weight, a.basis_bracket(rest)))
        raw.append((key, value))
    name = f"{a.name}_tau" if a.name else ""
    induced = canonicalize(raw, a.arity + 1, a.dim, name)
    logger.debug(f"induced {name or 'bracket'} with tau={tau.describe()}: {len(induced.table)} nonzero brackets")
    return induced


def induced_family(a: StructureConstants) -> List[Tuple[LinearForm, StructureConstants]]:
    """One induced 3-Lie bracket per basis vector of the trace space"""
    if a.arity != 2:
        raise ArityError(f"induced families are tabulated for Lie algebras, got arity {a.arity}")
    return [(tau, induce_bracket(a, tau)) for tau in trace_space(a).basis_forms()]


def combine_family(a: StructureConstants, weights: Sequence[Rational]) -> StructureConstants:
    """
    Induced bracket for the trace sum_i w_i tau_i over the trace-space basis

    Equals induce_bracket(a, sum_i w_i tau_i) since the construction is linear in tau.
    """
    family = induced_family(a)
    if len(weights) != len(family):
        raise DimensionMismatchError(f"{len(weights)} weights for a trace space of dimension {len(family)}")
    if not family:
        return canonicalize([], a.arity + 1, a.dim, a.name)
    return linear_combination([alg for _, alg in family], list(weights), a.name)
