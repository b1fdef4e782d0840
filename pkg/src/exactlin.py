#!/usr/bin/env python3
"""
Exact Linear Algebra
Rational matrices, reduced row echelon form, nullspaces and the subspace lattice
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import DimensionMismatchError, DocumentParseError

logger = logging.getLogger(__name__)

Scalar = Fraction
Vector = Tuple[Fraction, ...]
Rational = Union[int, Fraction, str]

UNICODE_MINUS = "−"


def to_scalar(value: Rational) -> Fraction:
    """Coerce an int, Fraction or rational literal to a reduced Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational scalar")


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational literal of the form "p" or "p/q" with q > 0

    Both the ASCII hyphen and the Unicode minus sign are accepted.

    Raises:
        DocumentParseError: the literal is malformed
    """
    raw = str(text).strip().replace(UNICODE_MINUS, "-")
    if not raw:
        raise DocumentParseError("empty rational literal")
    numerator, _, denominator = raw.partition("/")
    try:
        p = int(numerator.strip())
        q = int(denominator.strip()) if denominator else 1
    except ValueError:
        raise DocumentParseError(f"malformed rational literal '{text}'")
    if q <= 0:
        raise DocumentParseError(f"denominator must be positive in '{text}'")
    return Fraction(p, q)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(values: Iterable[Rational]) -> Vector:
    return tuple(to_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, index: int) -> Vector:
    """0-based unit vector of length n"""
    return tuple(Fraction(1) if k == index else Fraction(0) for k in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot add vectors of length {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot subtract vectors of length {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Rational, v: Sequence[Fraction]) -> Vector:
    c = to_scalar(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot pair vectors of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major rational matrix"""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"matrix {self.rows}x{self.cols} needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]], cols: Optional[int] = None) -> "Matrix":
        rows = [vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError(f"row of length {len(r)} in a matrix with {cols} columns")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Rational]], rows: int) -> "Matrix":
        columns = [vector(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatchError(f"column of length {len(c)} in a matrix with {rows} rows")
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([unit_vector(n, i) for i in range(n)], cols=n)

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product m·v"""
        return apply_matrix(self.to_domain(), v)

    def to_domain(self) -> DomainMatrix:
        """Sparse DomainMatrix over QQ with the same entries"""
        return sparse_matrix(
            {i: {j: x for j, x in enumerate(self.row(i)) if x != 0} for i in range(self.rows)},
            (self.rows, self.cols),
        )

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "Matrix":
        rows, cols = dm.shape
        table = dm.to_sparse().rep
        return cls.from_rows(
            [[from_qq(table.get(i, {}).get(j, QQ.zero)) for j in range(cols)] for i in range(rows)],
            cols=cols,
        )


def qq(value: Rational):
    """QQ element for a rational scalar"""
    value = to_scalar(value)
    return QQ(value.numerator, value.denominator)


def from_qq(element) -> Fraction:
    r = QQ.to_sympy(element)
    return Fraction(int(r.p), int(r.q))


def sparse_matrix(entries: Mapping[int, Mapping[int, Rational]], shape: Tuple[int, int]) -> DomainMatrix:
    """
    DomainMatrix over QQ from {row: {col: value}}

    Zero values and empty rows are dropped.
    """
    table: Dict[int, Dict[int, object]] = {}
    for i, row in entries.items():
        cleaned = {j: qq(x) for j, x in row.items() if x != 0}
        if cleaned:
            table[i] = cleaned
    return DomainMatrix(table, shape, QQ)


def zero_matrix(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix({}, (rows, cols), QQ)


def _pivot_rows(reduced: DomainMatrix) -> List[Tuple[int, Vector]]:
    """Nonzero rows of a reduced matrix as (pivot column, dense row), ordered by pivot"""
    cols = reduced.shape[1]
    found = []
    for row in reduced.to_sparse().rep.values():
        if not row:
            continue
        dense = [Fraction(0)] * cols
        for j, x in row.items():
            dense[j] = from_qq(x)
        found.append((min(row), tuple(dense)))
    return sorted(found)


def _reduce(dm: DomainMatrix) -> List[Tuple[int, Vector]]:
    rows, cols = dm.shape
    if rows == 0 or cols == 0 or not any(dm.to_sparse().rep.values()):
        return []
    reduced, _ = dm.rref()
    return _pivot_rows(reduced)


def rref(m: Matrix) -> Tuple[Matrix, int, List[int]]:
    """
    Reduced row echelon form of m

    Returns:
        (reduced matrix with the same shape, rank, pivot columns)
    """
    reduced = _reduce(m.to_domain())
    pivot_cols = [col for col, _ in reduced]
    rows = [row for _, row in reduced]
    rows.extend(zero_vector(m.cols) for _ in range(m.rows - len(rows)))
    return Matrix.from_rows(rows, cols=m.cols), len(pivot_cols), pivot_cols


@dataclass(frozen=True)
class Subspace:
    """
    Subspace held by its canonical basis

    The basis matrix is in reduced row echelon form without zero rows, so two
    Subspace values compare equal exactly when they are the same subspace.
    """

    ambient_dim: int
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> List[Vector]:
        return self.basis.row_list()

    def pivots(self) -> List[int]:
        return [next(k for k, x in enumerate(row) if x != 0) for row in self.vectors()]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zero(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    def __contains__(self, v: Sequence[Fraction]) -> bool:
        return subspace_contains(self, v)


def row_space(dm: DomainMatrix) -> Subspace:
    """Canonical subspace spanned by the rows of a DomainMatrix"""
    cols = dm.shape[1]
    rows = [row for _, row in _reduce(dm)]
    return Subspace(cols, Matrix.from_rows(rows, cols=cols))


def column_space(dm: DomainMatrix) -> Subspace:
    return row_space(dm.transpose())


def span(ambient_dim: int, vectors: Iterable[Sequence[Rational]]) -> Subspace:
    """Canonical subspace spanned by vectors; zero and repeated vectors are allowed"""
    checked = []
    for v in vectors:
        v = vector(v)
        if len(v) != ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in a space of dimension {ambient_dim}")
        checked.append(v)
    return row_space(Matrix.from_rows(checked, cols=ambient_dim).to_domain())


def kernel(dm: DomainMatrix) -> Subspace:
    """Canonical basis of {x : dm·x = 0}"""
    rows, cols = dm.shape
    if rows == 0 or not any(dm.to_sparse().rep.values()):
        return Subspace.full(cols)
    basis = dm.nullspace()
    logger.debug(f"nullspace of {rows}x{cols} matrix: dim {basis.shape[0]}")
    return row_space(basis)


def nullspace(m: Matrix) -> Subspace:
    """Canonical basis of {x : m·x = 0}"""
    return kernel(m.to_domain())


def apply_matrix(dm: DomainMatrix, v: Sequence[Rational]) -> Vector:
    """dm·v as a vector of Fractions"""
    rows, cols = dm.shape
    v = vector(v)
    if len(v) != cols:
        raise DimensionMismatchError(f"cannot apply a {rows}x{cols} matrix to a vector of length {len(v)}")
    column = sparse_matrix({j: {0: x} for j, x in enumerate(v)}, (cols, 1))
    table = (dm * column).to_sparse().rep
    return tuple(from_qq(table[i][0]) if i in table and 0 in table[i] else Fraction(0) for i in range(rows))


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_contains(s: Subspace, v: Sequence[Rational]) -> bool:
    v = vector(v)
    if len(v) != s.ambient_dim:
        raise DimensionMismatchError(f"vector of length {len(v)} tested against a subspace of {s.ambient_dim}")
    if is_zero(v):
        return True
    return span(s.ambient_dim, s.vectors() + [v]).dim == s.dim


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return subspace_sum(a, b).dim == b.dim


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(a.ambient_dim, a.vectors() + b.vectors())


def subspace_eq(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a == b


def annihilator(s: Subspace) -> Subspace:
    """Linear forms (as coefficient rows) vanishing on every vector of s"""
    if s.is_zero():
        return Subspace.full(s.ambient_dim)
    return nullspace(s.basis)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return annihilator(subspace_sum(annihilator(a), annihilator(b)))


def solve(m: Matrix, rhs: Sequence[Rational]) -> Optional[Vector]:
    """
    One solution of m·x = rhs, or None when the system is inconsistent

    Free variables are set to zero.
    """
    rhs = vector(rhs)
    if len(rhs) != m.rows:
        raise DimensionMismatchError(f"right-hand side of length {len(rhs)} for {m.rows} equations")
    augmented = Matrix.from_rows([tuple(m.row(i)) + (rhs[i],) for i in range(m.rows)], cols=m.cols + 1)
    x = [Fraction(0)] * m.cols
    for col, row in _reduce(augmented.to_domain()):
        if col == m.cols:
            return None
        x[col] = row[m.cols]
    return tuple(x)
