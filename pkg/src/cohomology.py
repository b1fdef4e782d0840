#!/usr/bin/env python3
"""
Cohomology
Cochains, coboundary operators of Lie and 3-Lie algebras with adjoint or scalar
coefficients, cocycle and coboundary spaces, and the lifting results for induced algebras
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple, Union

from cachetools import LRUCache, cached
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra import StructureConstants, basis_vector, bracket_eval, permutation_sign
from src.errors import AlgebraError, ArityError, DegreeError, DimensionMismatchError, PreconditionError, TracePreconditionError
from src.exactlin import (
    Rational,
    Subspace,
    Vector,
    apply_matrix,
    column_space,
    is_zero,
    kernel,
    qq,
    sparse_matrix,
    span,
    subspace_contains,
    subspace_leq,
    to_scalar,
    vector,
    zero_matrix,
    zero_vector,
)
from src.induce import LinearForm, induce_bracket, is_trace

logger = logging.getLogger(__name__)

LIE = "lie"
TRILIE = "trilie"
ADJOINT = "adjoint"
SCALAR = "scalar"
THEORIES = (LIE, TRILIE)
COEFFICIENTS = (ADJOINT, SCALAR)
SKEW_PAIR = "pair"
SKEW_FULL = "full"

CochainKey = Tuple


def _check_kind(theory: str, coeffs: str):
    if theory not in THEORIES:
        raise DegreeError(f"unknown theory '{theory}', expected one of {', '.join(THEORIES)}")
    if coeffs not in COEFFICIENTS:
        raise DegreeError(f"unknown coefficients '{coeffs}', expected one of {', '.join(COEFFICIENTS)}")


def cochain_keys(theory: str, degree: int, dim: int) -> List[CochainKey]:
    """
    Canonical keys of the cochain space, in coordinate order

    lie degree p: increasing p-tuples; trilie degree 1: (k,); degree 2: ((i,j),k)
    with i < j; degree 3: ((i,j),(k,l),m).
    """
    indices = range(1, dim + 1)
    if theory == LIE:
        return list(itertools.combinations(indices, degree))
    pairs = list(itertools.combinations(indices, 2))
    if degree == 1:
        return [(k,) for k in indices]
    if degree == 2:
        return [(p, k) for p in pairs for k in indices]
    if degree == 3:
        return [(p, q, m) for p in pairs for q in pairs for m in indices]
    raise DegreeError(f"no trilie cochains of degree {degree}")


def arguments_count(theory: str, degree: int) -> int:
    if theory == LIE:
        return degree
    return 2 * degree - 1


def canonical_key(theory: str, degree: int, indices: Sequence[int]) -> Tuple[Optional[CochainKey], int]:
    """Key and sign for a basis argument tuple; (None, 0) when skew-symmetry forces zero"""
    indices = tuple(indices)
    if theory == LIE:
        if len(set(indices)) < len(indices):
            return None, 0
        return tuple(sorted(indices)), permutation_sign(indices)
    if degree == 1:
        return indices, 1
    key, sign = [], 1
    for start in range(0, 2 * (degree - 1), 2):
        i, j = indices[start], indices[start + 1]
        if i == j:
            return None, 0
        if i > j:
            i, j = j, i
            sign = -sign
        key.append((i, j))
    key.append(indices[-1])
    return tuple(key), sign


def flatten_key(key: CochainKey) -> Tuple[int, ...]:
    flat: List[int] = []
    for part in key:
        if isinstance(part, tuple):
            flat.extend(part)
        else:
            flat.append(part)
    return tuple(flat)


@dataclass(frozen=True)
class Cochain:
    """
    Multilinear map on basis arguments with values in A (adjoint) or the field (scalar)

    values holds (canonical key, value) pairs with nonzero values, sorted by key.
    Scalar values are stored as length-1 vectors.
    """

    theory: str
    coeffs: str
    degree: int
    dim: int
    values: Tuple[Tuple[CochainKey, Vector], ...]

    @property
    def value_dim(self) -> int:
        return self.dim if self.coeffs == ADJOINT else 1

    @cached_property
    def table(self) -> Dict[CochainKey, Vector]:
        return dict(self.values)

    def is_zero(self) -> bool:
        return not self.values

    def basis_value(self, indices: Sequence[int]) -> Vector:
        key, sign = canonical_key(self.theory, self.degree, indices)
        value = self.table.get(key) if key is not None else None
        if value is None:
            return zero_vector(self.value_dim)
        return value if sign > 0 else tuple(-x for x in value)

    def evaluate(self, args: Sequence[Sequence[Fraction]]) -> Vector:
        """Multilinear extension to arbitrary arguments"""
        if len(args) != arguments_count(self.theory, self.degree):
            raise ArityError(f"cochain of degree {self.degree} evaluated on {len(args)} arguments")
        supports = [[(k + 1, c) for k, c in enumerate(x) if c != 0] for x in args]
        result = [Fraction(0)] * self.value_dim
        for combo in itertools.product(*supports):
            coef = Fraction(1)
            for _, c in combo:
                coef *= c
            value = self.basis_value([i for i, _ in combo])
            for q, x in enumerate(value):
                if x != 0:
                    result[q] += coef * x
        return tuple(result)

    def scalar(self, indices: Sequence[int]) -> Fraction:
        return self.basis_value(indices)[0]

    def to_vector(self) -> Vector:
        keys = cochain_keys(self.theory, self.degree, self.dim)
        return tuple(x for key in keys for x in self.table.get(key, zero_vector(self.value_dim)))

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        return from_vector(self.theory, self.coeffs, self.degree, self.dim,
                           tuple(a + b for a, b in zip(self.to_vector(), other.to_vector())))

    def __sub__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        return from_vector(self.theory, self.coeffs, self.degree, self.dim,
                           tuple(a - b for a, b in zip(self.to_vector(), other.to_vector())))

    def scaled(self, c: Rational) -> "Cochain":
        c = to_scalar(c)
        return from_vector(self.theory, self.coeffs, self.degree, self.dim, tuple(c * x for x in self.to_vector()))

    def is_fully_skew(self) -> bool:
        """Alternating in all arguments; every stored lie cochain is"""
        if self.theory == LIE or self.degree == 1:
            return True
        if self.degree != 2:
            raise DegreeError("full skew-symmetry is checked for trilie 2-cochains")
        for (i, j), k in cochain_keys(TRILIE, 2, self.dim):
            swapped = self.basis_value((i, k, j))
            if any(a + b != 0 for a, b in zip(self.basis_value((i, j, k)), swapped)):
                return False
        return True


def _check_compatible(a: Cochain, b: Cochain):
    if (a.theory, a.coeffs, a.degree, a.dim) != (b.theory, b.coeffs, b.degree, b.dim):
        raise DimensionMismatchError("cochains live in different cochain spaces")


def from_vector(theory: str, coeffs: str, degree: int, dim: int, coords: Sequence[Rational]) -> Cochain:
    _check_kind(theory, coeffs)
    value_dim = dim if coeffs == ADJOINT else 1
    keys = cochain_keys(theory, degree, dim)
    coords = vector(coords)
    if len(coords) != len(keys) * value_dim:
        raise DimensionMismatchError(f"{len(coords)} coordinates for a cochain space of dimension {len(keys) * value_dim}")
    values = []
    for n, key in enumerate(keys):
        value = coords[n * value_dim:(n + 1) * value_dim]
        if not is_zero(value):
            values.append((key, value))
    return Cochain(theory, coeffs, degree, dim, tuple(values))


def zero_cochain(theory: str, coeffs: str, degree: int, dim: int) -> Cochain:
    _check_kind(theory, coeffs)
    return Cochain(theory, coeffs, degree, dim, ())


def make_cochain(
    theory: str,
    coeffs: str,
    degree: int,
    dim: int,
    items: Union[Mapping, Sequence[Tuple[Sequence[int], object]]],
) -> Cochain:
    """
    Cochain from values on basis arguments given in any order

    Args:
        items: (flat 1-based argument tuple, value) pairs or a mapping of them; a
            value is a coordinate sequence (adjoint) or a single rational (scalar).
            Arguments are canonicalized through skew-symmetry; assigning the same
            canonical key twice is an error.
    """
    _check_kind(theory, coeffs)
    value_dim = dim if coeffs == ADJOINT else 1
    pairs = items.items() if isinstance(items, Mapping) else items
    table: Dict[CochainKey, Vector] = {}
    for args, value in pairs:
        args = tuple(int(i) for i in args)
        if len(args) != arguments_count(theory, degree):
            raise ArityError(f"cochain argument {args} has the wrong length for degree {degree}")
        if any(not 1 <= i <= dim for i in args):
            raise DimensionMismatchError(f"cochain argument {args} outside 1..{dim}")
        if isinstance(value, (list, tuple)):
            coords = vector(value)
        else:
            coords = (to_scalar(value),)
        if len(coords) != value_dim:
            raise DimensionMismatchError(f"cochain value of length {len(coords)}, expected {value_dim}")
        key, sign = canonical_key(theory, degree, args)
        if key is None:
            if not is_zero(coords):
                raise AlgebraError(f"cochain argument {args} is forced to vanish by skew-symmetry")
            continue
        if key in table:
            raise AlgebraError(f"cochain value on {flatten_key(key)} assigned twice")
        table[key] = tuple(sign * x for x in coords)
    values = tuple(sorted((k, v) for k, v in table.items() if not is_zero(v)))
    return Cochain(theory, coeffs, degree, dim, values)


def cochain_basis(theory: str, coeffs: str, degree: int, dim: int) -> List[Cochain]:
    value_dim = dim if coeffs == ADJOINT else 1
    size = len(cochain_keys(theory, degree, dim)) * value_dim
    return [from_vector(theory, coeffs, degree, dim, [1 if k == n else 0 for k in range(size)]) for n in range(size)]


class _GenericCochain:
    """
    Generic cochain of a cochain space

    Its value at given arguments is a (value_dim x size) matrix over QQ sending
    cochain coordinates to the coordinates of that value.
    """

    def __init__(self, theory: str, coeffs: str, degree: int, dim: int):
        self.theory = theory
        self.degree = degree
        self.dim = dim
        self.value_dim = dim if coeffs == ADJOINT else 1
        self.keys = cochain_keys(theory, degree, dim)
        self.position = {key: n for n, key in enumerate(self.keys)}
        self.size = len(self.keys) * self.value_dim

    def zero(self) -> DomainMatrix:
        return zero_matrix(self.value_dim, self.size)

    def basis_value(self, indices: Sequence[int]) -> DomainMatrix:
        key, sign = canonical_key(self.theory, self.degree, indices)
        if key is None:
            return self.zero()
        base = self.position[key] * self.value_dim
        return sparse_matrix({q: {base + q: sign} for q in range(self.value_dim)}, (self.value_dim, self.size))

    def value(self, args: Sequence[Sequence[Fraction]]) -> DomainMatrix:
        supports = [[(k + 1, c) for k, c in enumerate(x) if c != 0] for x in args]
        result = self.zero()
        for combo in itertools.product(*supports):
            coef = Fraction(1)
            for _, c in combo:
                coef *= c
            result = result + self.basis_value([i for i, _ in combo]) * qq(coef)
        return result


def _act(a: StructureConstants, before: Sequence[Vector], value: DomainMatrix, after: Sequence[Vector]) -> DomainMatrix:
    """Bracket with a generic algebra element in one slot"""
    columns = {}
    for k in range(a.dim):
        image = bracket_eval(a, list(before) + [basis_vector(a.dim, k + 1)] + list(after))
        for q, x in enumerate(image):
            if x != 0:
                columns.setdefault(q, {})[k] = x
    return sparse_matrix(columns, (a.dim, a.dim)) * value


def _combine(gen: _GenericCochain, terms: Sequence[Tuple[int, DomainMatrix]]) -> DomainMatrix:
    result = gen.zero()
    for sign, term in terms:
        result = result + term * qq(sign)
    return result


def _stack(blocks: Sequence[DomainMatrix], cols: int) -> DomainMatrix:
    """Blocks with a common column count, one on top of the other"""
    table = {}
    offset = 0
    for block in blocks:
        for i, row in block.to_sparse().rep.items():
            if row:
                table[offset + i] = dict(row)
        offset += block.shape[0]
    return DomainMatrix(table, (offset, cols), QQ)


def _lie_delta_at(a: StructureConstants, gen: _GenericCochain, adjoint: bool, xs: List[Vector]) -> DomainMatrix:
    p = gen.degree
    terms = []
    if adjoint:
        for j in range(p + 1):
            rest = xs[:j] + xs[j + 1:]
            terms.append(((-1) ** j, _act(a, [xs[j]], gen.value(rest), [])))
    for j, k in itertools.combinations(range(p + 1), 2):
        rest = [x for n, x in enumerate(xs) if n not in (j, k)]
        sign = (-1) ** (j + k)
        if not adjoint and p == 1:
            sign = -sign
        terms.append((sign, gen.value([bracket_eval(a, [xs[j], xs[k]])] + rest)))
    return _combine(gen, terms)


def _trilie_d1_at(a: StructureConstants, gen: _GenericCochain, adjoint: bool, xs: List[Vector]) -> DomainMatrix:
    x, y, z = xs
    if not adjoint:
        return gen.value([bracket_eval(a, [x, y, z])])
    return _combine(gen, [
        (1, _act(a, [], gen.value([x]), [y, z])),
        (1, _act(a, [x], gen.value([y]), [z])),
        (1, _act(a, [x, y], gen.value([z]), [])),
        (-1, gen.value([bracket_eval(a, [x, y, z])])),
    ])


def _trilie_d2_at(a: StructureConstants, gen: _GenericCochain, adjoint: bool, xs: List[Vector]) -> DomainMatrix:
    x1, x2, y1, y2, z = xs
    terms = [
        (1, gen.value([x1, x2, bracket_eval(a, [y1, y2, z])])),
        (-1, gen.value([bracket_eval(a, [x1, x2, y1]), y2, z])),
        (-1, gen.value([y1, bracket_eval(a, [x1, x2, y2]), z])),
        (-1, gen.value([y1, y2, bracket_eval(a, [x1, x2, z])])),
    ]
    if adjoint:
        terms += [
            (1, _act(a, [x1, x2], gen.value([y1, y2, z]), [])),
            (-1, _act(a, [], gen.value([x1, x2, y1]), [y2, z])),
            (-1, _act(a, [y1], gen.value([x1, x2, y2]), [z])),
            (-1, _act(a, [y1, y2], gen.value([x1, x2, z]), [])),
        ]
    return _combine(gen, terms)


def _check_supported(a: StructureConstants, theory: str, coeffs: str, degree: int, allowed: Sequence[int]):
    _check_kind(theory, coeffs)
    expected_arity = 2 if theory == LIE else 3
    if a.arity != expected_arity:
        raise ArityError(f"{theory} cohomology needs arity {expected_arity}, got {a.arity}")
    if degree not in allowed:
        raise DegreeError(f"{theory} coboundary of degree {degree} is not supported")


@cached(cache=LRUCache(maxsize=128))
def coboundary_matrix(a: StructureConstants, theory: str, coeffs: str, degree: int) -> DomainMatrix:
    """
    Matrix of the coboundary operator on cochains of the given degree

    Rows are ordered like Cochain.to_vector of the output cochain; columns are
    input coordinates.
    """
    allowed = (0, 1, 2) if theory == LIE else (1, 2)
    _check_supported(a, theory, coeffs, degree, allowed)
    gen = _GenericCochain(theory, coeffs, degree, a.dim)
    adjoint = coeffs == ADJOINT
    basis = [basis_vector(a.dim, i) for i in range(1, a.dim + 1)]
    blocks = []
    for key in cochain_keys(theory, degree + 1, a.dim):
        xs = [basis[i - 1] for i in flatten_key(key)]
        if theory == LIE:
            blocks.append(_lie_delta_at(a, gen, adjoint, xs))
        elif degree == 1:
            blocks.append(_trilie_d1_at(a, gen, adjoint, xs))
        else:
            blocks.append(_trilie_d2_at(a, gen, adjoint, xs))
    matrix = _stack(blocks, gen.size)
    logger.debug(f"{theory} {coeffs} coboundary of degree {degree} on {a.name or 'algebra'}: {matrix.shape[0]}x{gen.size}")
    return matrix


def _cochain_size(theory: str, coeffs: str, degree: int, dim: int) -> int:
    return len(cochain_keys(theory, degree, dim)) * (dim if coeffs == ADJOINT else 1)


def lie_delta(a: StructureConstants, c: Cochain) -> Cochain:
    """
    Chevalley-Eilenberg coboundary in degrees 0, 1, 2

    delta phi(x_0..x_p) = sum_j (-1)^j rho(x_j) phi(..^x_j..)
                          + sum_{j<k} (-1)^(j+k) phi([x_j,x_k], ..^x_j..^x_k..)
    with rho = ad for adjoint and rho = 0 for scalar coefficients; in scalar
    degree 1 the sign is reversed, delta alpha(x,y) = alpha([x,y]).
    """
    if c.theory != LIE:
        raise ArityError("lie_delta applies to lie cochains")
    matrix = coboundary_matrix(a, LIE, c.coeffs, c.degree)
    return from_vector(LIE, c.coeffs, c.degree + 1, a.dim, apply_matrix(matrix, c.to_vector()))


def trilie_d(a: StructureConstants, c: Cochain) -> Cochain:
    """3-Lie coboundary: d1 from 1-cochains to 2-cochains, d2 from 2-cochains to 3-cochains"""
    if c.theory != TRILIE:
        raise ArityError("trilie_d applies to trilie cochains")
    matrix = coboundary_matrix(a, TRILIE, c.coeffs, c.degree)
    return from_vector(TRILIE, c.coeffs, c.degree + 1, a.dim, apply_matrix(matrix, c.to_vector()))


def coboundary(a: StructureConstants, c: Cochain) -> Cochain:
    return lie_delta(a, c) if c.theory == LIE else trilie_d(a, c)


def first_violation(a: StructureConstants, c: Cochain) -> Optional[Tuple[int, ...]]:
    """Flat argument tuple of the first nonzero value of the coboundary, or None for a cocycle"""
    image = coboundary(a, c)
    if image.is_zero():
        return None
    return flatten_key(image.values[0][0])


def _full_skew_block(gen: _GenericCochain) -> DomainMatrix:
    """Rows forcing psi(x,y,z) + psi(x,z,y) = 0 on every basis triple"""
    blocks = [gen.basis_value((i, j, k)) + gen.basis_value((i, k, j)) for (i, j), k in gen.keys]
    return _stack(blocks, gen.size)


def cocycle_space(a: StructureConstants, theory: str, coeffs: str, degree: int, skew: str = SKEW_PAIR) -> Subspace:
    """
    Cocycles in cochain coordinates

    For trilie degree 2, skew="full" restricts to cochains alternating in all
    three arguments; skew="pair" keeps the pair-skew cochain space.

    Args:
        a: Lie algebra (theory lie) or 3-Lie algebra (theory trilie)
        theory: lie or trilie
        coeffs: adjoint or scalar
        degree: 1 or 2
        skew: pair or full

    Returns:
        Z in the coordinates of Cochain.to_vector
    """
    _check_supported(a, theory, coeffs, degree, (1, 2))
    if skew not in (SKEW_PAIR, SKEW_FULL):
        raise DegreeError(f"unknown skew mode '{skew}'")
    size = _cochain_size(theory, coeffs, degree, a.dim)
    blocks = [coboundary_matrix(a, theory, coeffs, degree)]
    if theory == TRILIE and degree == 2 and skew == SKEW_FULL:
        blocks.append(_full_skew_block(_GenericCochain(theory, coeffs, degree, a.dim)))
    return kernel(_stack(blocks, size))


def inner_derivations(a: StructureConstants) -> Subspace:
    """Span of the maps z -> [e_i, .., z] over increasing (n-1)-tuples, in 1-cochain coordinates"""
    vectors = []
    for key in itertools.combinations(range(1, a.dim + 1), a.arity - 1):
        coords = []
        for k in range(1, a.dim + 1):
            coords.extend(a.basis_bracket(key + (k,)))
        vectors.append(coords)
    return span(a.dim * a.dim, vectors)


def coboundary_space(a: StructureConstants, theory: str, coeffs: str, degree: int) -> Subspace:
    """Image of the coboundary from degree-1 cochains; trilie degree 1 uses inner derivations"""
    _check_supported(a, theory, coeffs, degree, (1, 2))
    size = _cochain_size(theory, coeffs, degree, a.dim)
    if theory == TRILIE and degree == 1:
        return inner_derivations(a) if coeffs == ADJOINT else Subspace.zero(size)
    return column_space(coboundary_matrix(a, theory, coeffs, degree - 1))


@dataclass(frozen=True)
class CohomologyReport:
    theory: str
    coeffs: str
    degree: int
    Z: Subspace
    B: Subspace
    skew: str = SKEW_PAIR

    @property
    def dim_Z(self) -> int:
        return self.Z.dim

    @property
    def dim_B(self) -> int:
        return self.B.dim

    @property
    def dim_H(self) -> int:
        return self.Z.dim - self.B.dim


def cohomology_report(a: StructureConstants, theory: str, coeffs: str, degree: int, skew: str = SKEW_PAIR) -> CohomologyReport:
    Z = cocycle_space(a, theory, coeffs, degree, skew)
    B = coboundary_space(a, theory, coeffs, degree)
    if not subspace_leq(B, Z):
        raise AlgebraError(f"coboundaries are not cocycles for {theory} {coeffs} degree {degree}")
    report = CohomologyReport(theory, coeffs, degree, Z, B, skew)
    logger.info(
        f"✓ {a.name or 'algebra'} {theory} {coeffs} H^{degree}: "
        f"dim Z={report.dim_Z}, dim B={report.dim_B}, dim H={report.dim_H}"
    )
    return report


def derivations(a: StructureConstants) -> Subspace:
    """
    Linear maps f with f[x_1..x_n] = sum_i [x_1..f(x_i)..x_n]

    Coordinates are those of degree-1 adjoint cochains: index (i-1)*d + (q-1)
    holds the q-th coordinate of f(e_i).
    """
    gen = _GenericCochain(LIE, ADJOINT, 1, a.dim)
    basis = [basis_vector(a.dim, i) for i in range(1, a.dim + 1)]
    blocks = []
    for key in itertools.combinations(range(1, a.dim + 1), a.arity):
        xs = [basis[i - 1] for i in key]
        terms = [(1, _act(a, xs[:slot], gen.value([xs[slot]]), xs[slot + 1:])) for slot in range(a.arity)]
        terms.append((-1, gen.value([bracket_eval(a, xs)])))
        blocks.append(_combine(gen, terms))
    return kernel(_stack(blocks, gen.size))


def matrix_of(f: Cochain) -> List[List[Fraction]]:
    """d x d matrix of a degree-1 adjoint cochain, column i = f(e_i)"""
    return [[f.basis_value((i,))[q] for i in range(1, f.dim + 1)] for q in range(f.dim)]


def linear_map(theory: str, matrix: Sequence[Sequence[Rational]]) -> Cochain:
    """Degree-1 adjoint cochain from its matrix (column i = f(e_i))"""
    dim = len(matrix)
    items = [((i,), [matrix[q][i - 1] for q in range(dim)]) for i in range(1, dim + 1)]
    return make_cochain(theory, ADJOINT, 1, dim, items)


def cocycle_support(Z: Subspace, dim: int) -> Set[Tuple[int, int]]:
    """Matrix positions (q, i) nonzero for some degree-1 adjoint cocycle"""
    support = set()
    for v in Z.vectors():
        for n, x in enumerate(v):
            if x != 0:
                i, q = divmod(n, dim)
                support.add((q + 1, i + 1))
    return support


def _check_trace(a: StructureConstants, tau: LinearForm):
    if not is_trace(a, tau):
        raise TracePreconditionError(f"{tau.describe()} is not a trace")


def _check_derivation(a: StructureConstants, f: Cochain):
    if f.theory != LIE or f.coeffs != ADJOINT or f.degree != 1:
        raise PreconditionError("expected a degree-1 adjoint lie cochain")
    if not subspace_contains(derivations(a), f.to_vector()):
        raise PreconditionError("linear map is not a derivation")


def trace_compose(tau: LinearForm, f: Cochain) -> LinearForm:
    return LinearForm(tuple(tau(f.basis_value((i,))) for i in range(1, f.dim + 1)))


def trace_compose_check(a: StructureConstants, tau: LinearForm, f: Cochain) -> LinearForm:
    """tau composed with a derivation f; the result is again a trace"""
    _check_trace(a, tau)
    _check_derivation(a, f)
    composed = trace_compose(tau, f)
    if not is_trace(a, composed):
        raise AlgebraError(f"{composed.describe()} should be a trace")
    return composed


class DerivationTransfer(NamedTuple):
    is_induced_derivation: bool
    obstruction: StructureConstants
    direct: bool


def as_trilie(f: Cochain) -> Cochain:
    return Cochain(TRILIE, f.coeffs, f.degree, f.dim, f.values)


def derivation_transfer(a: StructureConstants, tau: LinearForm, f: Cochain) -> DerivationTransfer:
    """
    Whether a Lie derivation stays a derivation of the induced 3-Lie algebra

    The criterion is that the bracket induced by tau o f vanishes; direct holds
    the result of checking d1 f = 0 in the induced algebra.

    Args:
        a: Lie algebra
        tau: Trace of a
        f: Degree-1 adjoint lie cochain that is a derivation of a

    Returns:
        DerivationTransfer(is_induced_derivation, obstruction, direct)
    """
    composed = trace_compose_check(a, tau, f)
    obstruction = induce_bracket(a, composed)
    direct = trilie_d(induce_bracket(a, tau), as_trilie(f)).is_zero()
    return DerivationTransfer(obstruction.is_abelian(), obstruction, direct)


def cyclic_lift(omega: LinearForm, phi: Cochain) -> Cochain:
    """psi(x,y,z) = omega(x)phi(y,z) + omega(y)phi(z,x) + omega(z)phi(x,y) as a trilie 2-cochain"""
    if phi.theory != LIE or phi.degree != 2:
        raise DegreeError("cyclic lifting takes a lie 2-cochain")
    items = []
    for (i, j), k in cochain_keys(TRILIE, 2, phi.dim):
        value = [Fraction(0)] * phi.value_dim
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            weight = omega.coeffs[x - 1]
            if weight != 0:
                for q, v in enumerate(phi.basis_value((y, z))):
                    value[q] += weight * v
        items.append((((i, j), k), tuple(value)))
    values = tuple((key, v) for key, v in items if not is_zero(v))
    return Cochain(TRILIE, phi.coeffs, 2, phi.dim, values)


@dataclass(frozen=True)
class LiftResult:
    """Lifted trilie 2-cocycle; condition3_holds reports the third hypothesis"""

    psi: Cochain
    condition3_holds: bool


def _forms_dependent(tau: LinearForm, omega: LinearForm) -> bool:
    return span(tau.dim, [tau.coeffs, omega.coeffs]).dim <= 1


def _adjoint_condition3(a: StructureConstants, tau: LinearForm, phi: Cochain, omega: LinearForm) -> bool:
    """cyclic omega(x) tau(phi(y,z)) vanishes on basis triples"""
    for i, j, k in itertools.combinations(range(1, a.dim + 1), 3):
        total = Fraction(0)
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            total += omega.coeffs[x - 1] * tau(phi.basis_value((y, z)))
        if total != 0:
            return False
    return True


def _scalar_condition3(a: StructureConstants, tau: LinearForm, phi: Cochain, omega: LinearForm) -> bool:
    """omega(y2)(tau(x1)phi([y1,z],x2) + tau(x2)phi([z,y1],x1)) vanishes on basis tuples"""
    basis = [basis_vector(a.dim, i) for i in range(1, a.dim + 1)]
    for y2 in range(1, a.dim + 1):
        w = omega.coeffs[y2 - 1]
        if w == 0:
            continue
        for x1, x2, y1, z in itertools.product(range(1, a.dim + 1), repeat=4):
            first = tau.coeffs[x1 - 1] * phi.evaluate([a.basis_bracket((y1, z)), basis[x2 - 1]])[0]
            second = tau.coeffs[x2 - 1] * phi.evaluate([a.basis_bracket((z, y1)), basis[x1 - 1]])[0]
            if w * (first + second) != 0:
                return False
    return True


def lift_2cocycle(a: StructureConstants, tau: LinearForm, phi: Cochain, omega: LinearForm, coeffs: str) -> LiftResult:
    """
    Lift a Lie 2-cocycle phi to a 2-cocycle of the induced 3-Lie algebra

    Conditions: (1) tau and omega are proportional, (2) omega kills [A,A],
    (3) for adjoint coefficients cyclic omega(x)tau(phi(y,z)) = 0. For scalar
    coefficients the third condition is evaluated and reported but the
    decisive check is d2 psi = 0.

    Args:
        a: Lie algebra
        tau: Trace of a
        phi: Lie 2-cocycle with the given coefficients
        omega: Linear form on a
        coeffs: adjoint or scalar

    Returns:
        LiftResult with psi = cyclic omega(x)phi(y,z)

    Raises:
        PreconditionError: carrying the number of the failed condition
    """
    if a.arity != 2:
        raise ArityError("lifting starts from a Lie algebra")
    _check_trace(a, tau)
    if phi.theory != LIE or phi.degree != 2 or phi.coeffs != coeffs:
        raise PreconditionError(f"expected a lie {coeffs} 2-cochain")
    if not lie_delta(a, phi).is_zero():
        raise PreconditionError("phi is not a 2-cocycle of the Lie algebra")
    if not _forms_dependent(tau, omega):
        raise PreconditionError("omega is not proportional to tau", condition=1)
    if not is_trace(a, omega):
        raise PreconditionError("omega does not vanish on [A,A]", condition=2)
    if coeffs == ADJOINT:
        holds = _adjoint_condition3(a, tau, phi, omega)
        if not holds:
            raise PreconditionError("cyclic omega(x)tau(phi(y,z)) does not vanish", condition=3)
    else:
        holds = _scalar_condition3(a, tau, phi, omega)
    psi = cyclic_lift(omega, phi)
    violation = first_violation(induce_bracket(a, tau), psi)
    if violation is not None:
        raise PreconditionError(f"lifted cochain fails the cocycle condition at {violation}", condition=3)
    logger.debug(f"lifted {coeffs} 2-cocycle with omega={omega.describe()}, condition 3 holds: {holds}")
    return LiftResult(psi, holds)


def scalar_form_cochain(theory: str, alpha: LinearForm) -> Cochain:
    items = [((i,), c) for i, c in enumerate(alpha.coeffs, start=1)]
    return make_cochain(theory, SCALAR, 1, alpha.dim, items)


def scalar_1cocycle_transfer(a: StructureConstants, tau: LinearForm, omega: LinearForm) -> bool:
    """A scalar 1-cocycle of the Lie algebra is one of the induced algebra"""
    if not is_trace(a, omega):
        raise PreconditionError("omega is not a scalar 1-cocycle of the Lie algebra")
    induced = induce_bracket(a, tau)
    return trilie_d(induced, scalar_form_cochain(TRILIE, omega)).is_zero()


def induced_coboundary_identity(a: StructureConstants, tau: LinearForm, alpha: LinearForm) -> bool:
    """d1 alpha in the induced algebra equals cyclic tau(x) delta1 alpha(y,z)"""
    _check_trace(a, tau)
    lhs = trilie_d(induce_bracket(a, tau), scalar_form_cochain(TRILIE, alpha))
    rhs = cyclic_lift(tau, lie_delta(a, scalar_form_cochain(LIE, alpha)))
    return lhs == rhs


def check_class_preservation(a: StructureConstants, tau: LinearForm, phi: Cochain, alpha: LinearForm) -> bool:
    """
    Cohomologous scalar cocycles lift to cohomologous ones

    With phi2 = phi + delta1 alpha, the lifts differ by d1 alpha.
    """
    _check_trace(a, tau)
    delta_alpha = lie_delta(a, scalar_form_cochain(LIE, alpha))
    phi2 = phi + delta_alpha
    difference = cyclic_lift(tau, phi2) - cyclic_lift(tau, phi)
    return difference == trilie_d(induce_bracket(a, tau), scalar_form_cochain(TRILIE, alpha))
