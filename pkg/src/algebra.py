#!/usr/bin/env python3
"""
Algebra
Lie and n-Lie algebras given by structure constants, bracket evaluation and identity checks
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from src.errors import (
    AntisymmetryError,
    ArityError,
    DimensionMismatchError,
    DuplicateDefinitionError,
    IndexRangeError,
)
from src.exactlin import Rational, Vector, format_rational, is_zero, to_scalar, unit_vector, vec_add, vec_scale, vec_sub, zero_vector

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]
AlgebraElement = Vector
BracketValue = Union[Sequence[Rational], Mapping[int, Rational]]


def permutation_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting indices (indices assumed distinct)"""
    inversions = sum(1 for i, j in itertools.combinations(range(len(indices)), 2) if indices[i] > indices[j])
    return -1 if inversions % 2 else 1


def basis_vector(dim: int, i: int) -> AlgebraElement:
    """Basis element e_i, 1-based"""
    if not 1 <= i <= dim:
        raise IndexRangeError(f"basis index {i} outside 1..{dim}")
    return unit_vector(dim, i - 1)


@dataclass(frozen=True)
class StructureConstants:
    """
    Antisymmetric n-ary bracket on a d-dimensional space

    table holds (strictly increasing 1-based index tuple, nonzero value) pairs
    sorted by key; every other increasing tuple brackets to zero.
    """

    arity: int
    dim: int
    table: Tuple[Tuple[Key, Vector], ...]
    name: str = field(default="", compare=False)

    @cached_property
    def entries(self) -> Dict[Key, Vector]:
        return dict(self.table)

    def is_abelian(self) -> bool:
        return not self.table

    def renamed(self, name: str) -> "StructureConstants":
        return StructureConstants(self.arity, self.dim, self.table, name)

    def basis_bracket(self, indices: Sequence[int]) -> Vector:
        """Bracket of basis elements e_{i_1},...,e_{i_n} in any order"""
        if len(set(indices)) < len(indices):
            return zero_vector(self.dim)
        value = self.entries.get(tuple(sorted(indices)))
        if value is None:
            return zero_vector(self.dim)
        if permutation_sign(indices) < 0:
            return tuple(-x for x in value)
        return value

    def describe(self) -> str:
        if not self.table:
            return "abelian"
        parts = []
        for key, value in self.table:
            args = ",".join(f"e{i}" for i in key)
            parts.append(f"[{args}]={format_element(value)}")
        return "; ".join(parts)


def format_element(v: Sequence[Fraction]) -> str:
    """Render coordinates as a combination of e_i, e.g. 2e2-1/3e4"""
    terms = []
    for k, c in enumerate(v, start=1):
        if c == 0:
            continue
        if c == 1:
            coef = ""
        elif c == -1:
            coef = "-"
        else:
            coef = format_rational(c)
        sign = "" if not terms or coef.startswith("-") else "+"
        terms.append(f"{sign}{coef}e{k}")
    return "".join(terms) if terms else "0"


def _coerce_value(value: BracketValue, dim: int, location: str) -> Vector:
    if isinstance(value, Mapping):
        coords = [Fraction(0)] * dim
        for index, coef in value.items():
            index = int(index)
            if not 1 <= index <= dim:
                raise IndexRangeError(f"{location}: value index {index} outside 1..{dim}")
            coords[index - 1] = to_scalar(coef)
        return tuple(coords)
    coords = tuple(to_scalar(c) for c in value)
    if len(coords) != dim:
        raise DimensionMismatchError(f"{location}: value has {len(coords)} coordinates, algebra has dimension {dim}")
    return coords


def canonicalize(
    raw: Iterable[Tuple[Sequence[int], BracketValue]],
    arity: int,
    dim: int,
    name: str = "",
) -> StructureConstants:
    """
    Build canonical structure constants from bracket assignments

    Args:
        raw: (1-based index tuple in any order, value) pairs; a value is either a
            coordinate sequence or a mapping from 1-based basis index to coefficient
        arity: Number of bracket arguments n >= 2
        dim: Dimension of the algebra
        name: Optional label carried along for reports

    Raises:
        ArityError: wrong tuple length or arity < 2
        IndexRangeError: index outside 1..dim
        AntisymmetryError: repeated index with a nonzero value
        DuplicateDefinitionError: the same tuple assigned twice
    """
    if arity < 2:
        raise ArityError(f"arity must be at least 2, got {arity}")
    table: Dict[Key, Vector] = {}
    for args, value in raw:
        args = tuple(int(i) for i in args)
        location = "[" + ",".join(f"e{i}" for i in args) + "]"
        if len(args) != arity:
            raise ArityError(f"{location}: expected {arity} arguments, got {len(args)}")
        for i in args:
            if not 1 <= i <= dim:
                raise IndexRangeError(f"{location}: index {i} outside 1..{dim}")
        coords = _coerce_value(value, dim, location)
        if len(set(args)) < len(args):
            if not is_zero(coords):
                raise AntisymmetryError(f"{location}: repeated index with nonzero value")
            continue
        key = tuple(sorted(args))
        if key in table:
            raise DuplicateDefinitionError(f"{location}: bracket on {key} defined twice")
        table[key] = vec_scale(permutation_sign(args), coords)
    cleaned = tuple(sorted((k, v) for k, v in table.items() if not is_zero(v)))
    return StructureConstants(arity, dim, cleaned, name)


def bracket_eval(a: StructureConstants, args: Sequence[Sequence[Fraction]]) -> AlgebraElement:
    """Multilinear antisymmetric extension of the bracket table"""
    if len(args) != a.arity:
        raise ArityError(f"bracket of arity {a.arity} applied to {len(args)} arguments")
    supports = []
    for x in args:
        if len(x) != a.dim:
            raise DimensionMismatchError(f"element with {len(x)} coordinates in an algebra of dimension {a.dim}")
        supports.append([(k + 1, c) for k, c in enumerate(x) if c != 0])
    result = [Fraction(0)] * a.dim
    for combo in itertools.product(*supports):
        indices = [i for i, _ in combo]
        if len(set(indices)) < len(indices):
            continue
        value = a.basis_bracket(indices)
        coef = Fraction(1)
        for _, c in combo:
            coef *= c
        for k, x in enumerate(value):
            if x != 0:
                result[k] += coef * x
    return tuple(result)


@dataclass
class IdentityReport:
    """Outcome of checking the fundamental identity on basis tuples"""

    arity: int
    violations: List[Tuple[Key, Key, Vector]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def identity_defect(a: StructureConstants, xs: Sequence[Sequence[Fraction]], ys: Sequence[Sequence[Fraction]]) -> Vector:
    """
    [x_1..x_{n-1},[y_1..y_n]] - sum_i [y_1..[x_1..x_{n-1},y_i]..y_n]

    For n = 2 this is the Jacobi defect.
    """
    inner = bracket_eval(a, list(ys))
    lhs = bracket_eval(a, list(xs) + [inner])
    rhs = zero_vector(a.dim)
    for i in range(len(ys)):
        substituted = list(ys)
        substituted[i] = bracket_eval(a, list(xs) + [ys[i]])
        rhs = vec_add(rhs, bracket_eval(a, substituted))
    return vec_sub(lhs, rhs)


def verify_identity(a: StructureConstants) -> IdentityReport:
    """
    Check the Filippov identity (Jacobi for arity 2) on all increasing basis tuples

    Args:
        a: Structure constants of arity n >= 2

    Returns:
        IdentityReport listing every basis tuple with a nonzero defect
    """
    report = IdentityReport(a.arity)
    basis = [basis_vector(a.dim, i) for i in range(1, a.dim + 1)]
    for xkey in itertools.combinations(range(1, a.dim + 1), a.arity - 1):
        xs = [basis[i - 1] for i in xkey]
        for ykey in itertools.combinations(range(1, a.dim + 1), a.arity):
            defect = identity_defect(a, xs, [basis[i - 1] for i in ykey])
            if not is_zero(defect):
                report.violations.append((xkey, ykey, defect))
    if report.violations:
        logger.debug(f"{a.name or 'algebra'}: {len(report.violations)} identity violations")
    return report


def linear_combination(algebras: Sequence[StructureConstants], weights: Sequence[Rational], name: str = "") -> StructureConstants:
    """Weighted sum of brackets sharing arity and dimension"""
    if len(algebras) != len(weights):
        raise DimensionMismatchError(f"{len(algebras)} algebras with {len(weights)} weights")
    if not algebras:
        raise ArityError("cannot combine an empty family")
    arity, dim = algebras[0].arity, algebras[0].dim
    total: Dict[Key, Vector] = {}
    for alg, w in zip(algebras, weights):
        if alg.arity != arity or alg.dim != dim:
            raise DimensionMismatchError("algebras of different arity or dimension cannot be combined")
        for key, value in alg.table:
            total[key] = vec_add(total.get(key, zero_vector(dim)), vec_scale(w, value))
    return canonicalize(total.items(), arity, dim, name)


def fixed_bracket(t: StructureConstants, element: Sequence[Rational]) -> StructureConstants:
    """
    Bracket of arity n-1 obtained by fixing the first slot: [x..]_a = [a, x..]

    For a 3-Lie algebra the result is a Lie algebra.
    """
    if t.arity < 3:
        raise ArityError(f"fixing a slot needs arity at least 3, got {t.arity}")
    element = tuple(to_scalar(c) for c in element)
    raw = []
    for key in itertools.combinations(range(1, t.dim + 1), t.arity - 1):
        args = [element] + [basis_vector(t.dim, i) for i in key]
        raw.append((key, bracket_eval(t, args)))
    return canonicalize(raw, t.arity - 1, t.dim, f"{t.name}_fixed" if t.name else "")

