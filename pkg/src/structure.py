#!/usr/bin/env python3
"""
Structure
Ideals, derived and central series, centers and the transfer results for induced algebras
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from src.algebra import StructureConstants, bracket_eval
from src.errors import ArityError, DimensionMismatchError, PreconditionError
from src.exactlin import Matrix, Subspace, Vector, nullspace, solve, span, subspace_leq, subspace_sum, unit_vector
from src.induce import LinearForm, derived_subspace, induce_bracket

logger = logging.getLogger(__name__)

DERIVED = "derived"
CENTRAL = "central"


@dataclass(frozen=True)
class SeriesReport:
    """
    Terms of a derived or central series, term 0 being the whole algebra

    The chain stops at the zero subspace or at the first repeated term; in the
    latter case the repeated term is not listed again, stabilized is True and
    series_class is None.
    """

    kind: str
    terms: Tuple[Subspace, ...]
    stabilized: bool
    series_class: Optional[int]

    @property
    def dims(self) -> List[int]:
        return [t.dim for t in self.terms]

    def term(self, p: int) -> Subspace:
        """p-th term, repeating the stable tail"""
        return self.terms[min(p, len(self.terms) - 1)]


def _check_dim(a: StructureConstants, s: Subspace):
    if s.ambient_dim != a.dim:
        raise DimensionMismatchError(f"subspace of a {s.ambient_dim}-space in an algebra of dimension {a.dim}")


def product_span(a: StructureConstants, parts: Sequence[Subspace]) -> Subspace:
    """Span of [b_1..b_n] over basis vectors b_i of the i-th part"""
    if len(parts) != a.arity:
        raise ArityError(f"product of {len(parts)} subspaces for a bracket of arity {a.arity}")
    for s in parts:
        _check_dim(a, s)
    if any(s.is_zero() for s in parts):
        return Subspace.zero(a.dim)
    values = [bracket_eval(a, list(combo)) for combo in itertools.product(*(s.vectors() for s in parts))]
    return span(a.dim, values)


def is_subalgebra(a: StructureConstants, s: Subspace) -> bool:
    return subspace_leq(product_span(a, [s] * a.arity), s)


def is_ideal(a: StructureConstants, s: Subspace) -> bool:
    whole = Subspace.full(a.dim)
    return subspace_leq(product_span(a, [s] + [whole] * (a.arity - 1)), s)


def generated_ideal(a: StructureConstants, vectors: Sequence[Sequence[Fraction]]) -> Subspace:
    """Smallest ideal containing the given vectors"""
    whole = Subspace.full(a.dim)
    current = span(a.dim, vectors)
    while True:
        grown = subspace_sum(current, product_span(a, [current] + [whole] * (a.arity - 1)))
        if grown == current:
            return current
        current = grown


def coordinate_ideals(a: StructureConstants) -> List[Subspace]:
    """Distinct ideals generated by nonempty subsets of basis vectors"""
    found: List[Subspace] = []
    for size in range(1, a.dim + 1):
        for subset in itertools.combinations(range(a.dim), size):
            ideal = generated_ideal(a, [unit_vector(a.dim, k) for k in subset])
            if ideal not in found:
                found.append(ideal)
    return found


class IdealTransfer(NamedTuple):
    predicted: bool
    direct: bool


def kernel_contains(tau: LinearForm, s: Subspace) -> bool:
    return all(tau(v) == 0 for v in s.vectors())


def ideal_transfer(a: StructureConstants, tau: LinearForm, j: Subspace) -> IdealTransfer:
    """
    Compare the ideal criterion ([A,A] in J or J in ker tau) with a direct check

    Args:
        a: Lie algebra
        tau: Trace of a
        j: Ideal of a

    Returns:
        IdealTransfer(predicted, direct); the two always agree

    Raises:
        PreconditionError: j is not an ideal of the Lie algebra
    """
    if a.arity != 2:
        raise ArityError(f"ideal transfer starts from a Lie algebra, got arity {a.arity}")
    if not is_ideal(a, j):
        raise PreconditionError("subspace is not an ideal of the Lie algebra")
    predicted = subspace_leq(derived_subspace(a), j) or kernel_contains(tau, j)
    direct = is_ideal(induce_bracket(a, tau), j)
    return IdealTransfer(predicted, direct)


def _series(a: StructureConstants, kind: str) -> SeriesReport:
    whole = Subspace.full(a.dim)
    terms = [whole]
    while not terms[-1].is_zero():
        current = terms[-1]
        if kind == DERIVED:
            following = product_span(a, [current] * a.arity)
        else:
            following = product_span(a, [current] + [whole] * (a.arity - 1))
        if following == current:
            logger.debug(f"{kind} series of {a.name or 'algebra'} stabilized at dimension {current.dim}")
            return SeriesReport(kind, tuple(terms), True, None)
        terms.append(following)
    return SeriesReport(kind, tuple(terms), False, len(terms) - 1)


def derived_series(a: StructureConstants) -> SeriesReport:
    return _series(a, DERIVED)


def central_series(a: StructureConstants) -> SeriesReport:
    return _series(a, CENTRAL)


def solvability_class(a: StructureConstants) -> Optional[int]:
    return derived_series(a).series_class


def nilpotency_class(a: StructureConstants) -> Optional[int]:
    return central_series(a).series_class


def center(a: StructureConstants) -> Subspace:
    """Elements x with [x, e_{i_1}..e_{i_{n-1}}] = 0 for every basis tuple"""
    rows = []
    for key in itertools.combinations(range(1, a.dim + 1), a.arity - 1):
        images = [a.basis_bracket((k,) + key) for k in range(1, a.dim + 1)]
        for q in range(a.dim):
            rows.append([images[k][q] for k in range(a.dim)])
    if not rows:
        return Subspace.full(a.dim)
    return nullspace(Matrix.from_rows(rows, cols=a.dim))


def check_induced_solvable(a: StructureConstants, tau: LinearForm) -> bool:
    """D^2 of the induced algebra vanishes"""
    induced = induce_bracket(a, tau)
    d1 = product_span(induced, [Subspace.full(a.dim)] * induced.arity)
    d2 = product_span(induced, [d1] * induced.arity)
    return d2.is_zero()


def _termwise_included(small: SeriesReport, large: SeriesReport) -> bool:
    length = max(len(small.terms), len(large.terms))
    return all(subspace_leq(small.term(p), large.term(p)) for p in range(length))


def check_series_inclusion(a: StructureConstants, tau: LinearForm) -> bool:
    """C^p of the induced algebra lies in C^p of the Lie algebra for every p"""
    induced = induce_bracket(a, tau)
    return _termwise_included(central_series(induced), central_series(a))


def find_unit_element(lie: StructureConstants, tau: LinearForm) -> Optional[Vector]:
    """
    Element i with [i,x,y]_tau = [x,y] for all x, y, if one exists

    Solved as a linear system in the coordinates of i over basis pairs.
    """
    induced = induce_bracket(lie, tau)
    rows, rhs = [], []
    for x, y in itertools.combinations(range(1, lie.dim + 1), 2):
        target = lie.basis_bracket((x, y))
        images = [induced.basis_bracket((k, x, y)) for k in range(1, lie.dim + 1)]
        for q in range(lie.dim):
            rows.append([images[k][q] for k in range(lie.dim)])
            rhs.append(target[q])
    if not rows:
        return tuple(Fraction(0) for _ in range(lie.dim))
    return solve(Matrix.from_rows(rows, cols=lie.dim), rhs)


@dataclass(frozen=True)
class SeriesComparison:
    """Series of a Lie algebra next to those of its induced 3-Lie algebra"""

    lie_central: SeriesReport
    induced_central: SeriesReport
    lie_derived: SeriesReport
    induced_derived: SeriesReport
    central_included: bool
    derived1_included: bool
    unit_element: Optional[Vector]
    central_equal: bool
    derived1_equal: bool

    @property
    def lie_nilpotency(self) -> Optional[int]:
        return self.lie_central.series_class

    @property
    def induced_nilpotency(self) -> Optional[int]:
        return self.induced_central.series_class


def compare_series(lie: StructureConstants, tau: LinearForm) -> SeriesComparison:
    """
    Central and derived series of a Lie algebra and of the algebra tau induces

    Args:
        lie: Lie algebra
        tau: Trace of lie

    Returns:
        SeriesComparison with termwise inclusion flags and the unit element, if any
    """
    induced = induce_bracket(lie, tau)
    lie_central, induced_central = central_series(lie), central_series(induced)
    lie_derived, induced_derived = derived_series(lie), derived_series(induced)
    length = max(len(lie_central.terms), len(induced_central.terms))
    central_equal = all(lie_central.term(p) == induced_central.term(p) for p in range(length))
    comparison = SeriesComparison(
        lie_central=lie_central,
        induced_central=induced_central,
        lie_derived=lie_derived,
        induced_derived=induced_derived,
        central_included=_termwise_included(induced_central, lie_central),
        derived1_included=subspace_leq(induced_derived.term(1), lie_derived.term(1)),
        unit_element=find_unit_element(lie, tau),
        central_equal=central_equal,
        derived1_equal=induced_derived.term(1) == lie_derived.term(1),
    )
    logger.debug(
        f"series comparison for {lie.name or 'algebra'}: central included {comparison.central_included}, "
        f"unit element {comparison.unit_element is not None}"
    )
    return comparison


def check_nilpotency_transfer(lie: StructureConstants, tau: LinearForm) -> bool:
    """A Lie algebra nilpotent of class p induces an algebra nilpotent of class at most p"""
    p = nilpotency_class(lie)
    if p is None:
        return True
    q = nilpotency_class(induce_bracket(lie, tau))
    return q is not None and q <= p


def is_simple(a: StructureConstants) -> bool:
    """
    Nonzero derived algebra and no proper nonzero ideal among the candidates

    Candidates are the center, the derived algebra and every ideal generated by
    a subset of basis vectors; this is a test in the given basis only.
    """
    whole = Subspace.full(a.dim)
    derived = product_span(a, [whole] * a.arity)
    if derived.is_zero():
        return False
    candidates = coordinate_ideals(a) + [center(a), derived]
    return all(c.is_zero() or c.is_full() for c in candidates)
