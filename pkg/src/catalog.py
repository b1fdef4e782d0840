#!/usr/bin/env python3
"""
Catalog
Low-dimensional Lie and 3-Lie algebras, recognition of induced 3-Lie algebras and table reproduction
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, NamedTuple, Optional, Tuple

from cachetools import LRUCache, cached

from src.algebra import StructureConstants, basis_vector, canonicalize, fixed_bracket, verify_identity
from src.cohomology import ADJOINT, LIE, TRILIE, CohomologyReport, cohomology_report
from src.errors import AlgebraError, CatalogError
from src.exactlin import Subspace, parse_rational
from src.induce import LinearForm, induce_bracket, induced_family, trace_space
from src.structure import product_span

logger = logging.getLogger(__name__)

Raw = List[Tuple[Tuple[int, ...], Dict[int, Fraction]]]
Params = Dict[str, Fraction]

INDUCED = "induced"
NOT_INDUCED = "not-induced"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Parameter:
    name: str
    default: Fraction


@dataclass(frozen=True)
class CatalogEntry:
    """
    One algebra of a classification list

    builder maps bound parameter values to raw bracket assignments. Defaults are
    concrete rational choices for exact computation, validated like user input.
    """

    id: str
    arity: int
    dim: int
    builder: Callable[[Params], Raw] = field(compare=False)
    parameters: Tuple[Parameter, ...] = ()
    constraint: str = ""
    validator: Optional[Callable[[Params], bool]] = field(default=None, compare=False)
    expected_induced: Optional[bool] = None
    notes: str = ""

    def defaults(self) -> Params:
        return {p.name: p.default for p in self.parameters}

    def bind(self, params: Optional[Mapping[str, Fraction]] = None) -> Params:
        bound = self.defaults()
        for name, value in (params or {}).items():
            if name not in bound:
                raise CatalogError(f"{self.id} has no parameter '{name}'")
            bound[name] = Fraction(value)
        if self.validator is not None and not self.validator(bound):
            shown = ", ".join(f"{k}={v}" for k, v in bound.items())
            raise CatalogError(f"{self.id}: parameters {shown} violate '{self.constraint}'")
        return bound

    def instantiate(self, params: Optional[Mapping[str, Fraction]] = None, name: str = "") -> StructureConstants:
        bound = self.bind(params)
        return canonicalize(self.builder(bound), self.arity, self.dim, name or self.id)


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    return math.isqrt(q.numerator) ** 2 == q.numerator and math.isqrt(q.denominator) ** 2 == q.denominator


def _b(*brackets) -> Callable[[Params], Raw]:
    """Builder from (args, {index: coefficient or callable(params)}) pairs"""

    def build(p: Params) -> Raw:
        raw = []
        for args, value in brackets:
            raw.append((args, {k: (c(p) if callable(c) else Fraction(c)) for k, c in value.items()}))
        return raw

    return build


def _param(name: str, default) -> Parameter:
    return Parameter(name, Fraction(default))


def _lie_entries() -> List[CatalogEntry]:
    a = lambda p: p["a"]
    b = lambda p: p["b"]
    return [
        CatalogEntry("abelian3", 2, 3, _b(), notes="3-dimensional abelian Lie algebra"),
        CatalogEntry("L(3,-1)", 2, 3, _b(((1, 2), {2: 1}))),
        CatalogEntry("L(3,1)", 2, 3, _b(((1, 2), {3: 1}))),
        CatalogEntry("L(3,2,a)", 2, 3, _b(((1, 3), {1: 1}), ((2, 3), {2: a})),
                     (_param("a", 1),), "0 < |a| <= 1", lambda p: 0 < abs(p["a"]) <= 1),
        CatalogEntry("L(3,3)", 2, 3, _b(((1, 3), {1: 1}), ((2, 3), {1: 1, 2: 1}))),
        CatalogEntry("L(3,4,a)", 2, 3, _b(((1, 3), {1: a, 2: -1}), ((2, 3), {1: 1, 2: a})),
                     (_param("a", 1),), "a >= 0", lambda p: p["a"] >= 0),
        CatalogEntry("L(3,5)", 2, 3, _b(((1, 2), {1: 1}), ((1, 3), {2: -2}), ((2, 3), {3: 1}))),
        CatalogEntry("L(3,6)", 2, 3, _b(((1, 2), {3: 1}), ((1, 3), {2: -1}), ((2, 3), {1: 1}))),
        CatalogEntry("abelian4", 2, 4, _b(), notes="4-dimensional abelian Lie algebra"),
        CatalogEntry("M2", 2, 4, _b(((1, 4), {1: 1}), ((2, 4), {2: 1}), ((3, 4), {3: 1}))),
        CatalogEntry("M3_a", 2, 4, _b(((1, 4), {1: 1}), ((2, 4), {3: 1}),
                                      ((3, 4), {2: lambda p: -p["a"], 3: lambda p: p["a"] + 1})),
                     (_param("a", 1),)),
        CatalogEntry("M4", 2, 4, _b(((2, 4), {3: 1}), ((3, 4), {3: 1}))),
        CatalogEntry("M5", 2, 4, _b(((2, 4), {3: 1}))),
        CatalogEntry("M6_ab", 2, 4, _b(((1, 4), {2: 1}), ((2, 4), {3: 1}), ((3, 4), {1: a, 2: b, 3: 1})),
                     (_param("a", 1), _param("b", 1))),
        CatalogEntry("M7_ab", 2, 4, _b(((1, 4), {2: 1}), ((2, 4), {3: 1}), ((3, 4), {1: a, 2: b})),
                     (_param("a", 1), _param("b", 1)), "a = b != 0 or a = 0 or b = 0",
                     lambda p: (p["a"] == p["b"] != 0) or p["a"] == 0 or p["b"] == 0),
        CatalogEntry("M8", 2, 4, _b(((1, 2), {2: 1}), ((3, 4), {4: 1}))),
        CatalogEntry("M9_a", 2, 4, _b(((1, 4), {1: 1, 2: a}), ((2, 4), {1: 1}), ((1, 3), {1: 1}), ((2, 3), {2: 1})),
                     (_param("a", 1),), "X^2 - X - a has no root",
                     lambda p: not _is_rational_square(1 + 4 * p["a"]),
                     notes="no rational root of X^2 - X - a, i.e. 1 + 4a is not a rational square"),
        CatalogEntry("M11", 2, 4, _b(((1, 4), {1: 1}), ((3, 4), {3: -1}), ((1, 3), {2: 1})),
                     notes="[e3,e4] = -e3; with +e3 the Jacobi identity fails on (e1,e3,e4)"),
        CatalogEntry("M12", 2, 4, _b(((1, 4), {1: 1}), ((2, 4), {2: 2}), ((3, 4), {3: 1}), ((1, 3), {2: 1})),
                     notes="[e2,e4] = 2e2; with e2 the Jacobi identity fails on (e1,e3,e4)"),
        CatalogEntry("M13_a", 2, 4, _b(((1, 4), {1: 1, 3: a}), ((2, 4), {2: 1}), ((3, 4), {1: 1}), ((1, 3), {2: 1})),
                     (_param("a", 1),)),
        CatalogEntry("M14_a", 2, 4, _b(((1, 4), {3: a}), ((3, 4), {1: 1}), ((1, 3), {2: 1})),
                     (_param("a", 1),)),
        CatalogEntry("gl2", 2, 4, _b(((1, 2), {2: 2}), ((1, 3), {3: -2}), ((2, 3), {1: 1})),
                     notes="sl2 basis h, e, f plus the central identity e4"),
        CatalogEntry("E3xK", 2, 4, _b(((1, 2), {3: 1}), ((2, 3), {1: 1}), ((3, 1), {2: 1})),
                     notes="cross product on the first three vectors, e4 central; listed over the reals"),
    ]


def _nonzero(*names: str) -> Callable[[Params], bool]:
    return lambda p: all(p[n] != 0 for n in names)


def _trilie_entries() -> List[CatalogEntry]:
    alpha = lambda p: p["alpha"]
    beta = lambda p: p["beta"]
    return [
        CatalogEntry("T4.1", 3, 2, _b(), expected_induced=True, notes="dimension below 3, abelian"),
        CatalogEntry("T4.2a", 3, 3, _b(), expected_induced=True),
        CatalogEntry("T4.2b", 3, 3, _b(((1, 2, 3), {1: 1})), expected_induced=True),
        CatalogEntry("T4.3a", 3, 4, _b(), expected_induced=True),
        CatalogEntry("T4.3b", 3, 4, _b(((2, 3, 4), {1: 1})), expected_induced=True),
        CatalogEntry("T4.3c", 3, 4, _b(((1, 2, 3), {1: 1})), expected_induced=True),
        CatalogEntry("T4.3d_C", 3, 4,
                     _b(((1, 2, 4), {3: lambda p: p["a"], 4: lambda p: p["b"]}),
                        ((1, 2, 3), {3: lambda p: p["c"], 4: lambda p: p["d"]})),
                     (_param("a", 1), _param("b", 0), _param("c", 0), _param("d", 1)),
                     "C = (a b; c d) invertible", lambda p: p["a"] * p["d"] - p["b"] * p["c"] != 0,
                     expected_induced=True,
                     notes="isomorphic for C2 = alpha B C1 B^-1; conjugacy is not decided"),
        CatalogEntry("T4.3e_ab", 3, 4,
                     _b(((2, 3, 4), {1: 1}), ((1, 3, 4), {2: lambda p: p["a"]}), ((1, 2, 4), {3: lambda p: p["b"]})),
                     (_param("a", 1), _param("b", 1)), "a, b != 0", _nonzero("a", "b"), expected_induced=True),
        CatalogEntry("T4.3f_abc", 3, 4,
                     _b(((2, 3, 4), {1: 1}), ((1, 3, 4), {2: lambda p: p["a"]}),
                        ((1, 2, 4), {3: lambda p: p["b"]}), ((1, 2, 3), {4: lambda p: p["c"]})),
                     (_param("a", 1), _param("b", 1), _param("c", 1)), "a, b, c != 0", _nonzero("a", "b", "c"),
                     expected_induced=False),
        CatalogEntry("T5.1", 3, 5, _b(), expected_induced=True),
        CatalogEntry("T5.2a", 3, 5, _b(((2, 3, 4), {1: 1})), expected_induced=True),
        CatalogEntry("T5.2b", 3, 5, _b(((1, 2, 3), {1: 1})), expected_induced=True),
        CatalogEntry("T5.3a", 3, 5, _b(((2, 3, 4), {1: 1}), ((3, 4, 5), {2: 1})), expected_induced=True),
        CatalogEntry("T5.3b", 3, 5, _b(((2, 3, 4), {1: 1}), ((2, 4, 5), {2: 1}), ((1, 4, 5), {1: 1})),
                     expected_induced=True),
        CatalogEntry("T5.3c", 3, 5, _b(((2, 3, 4), {1: 1}), ((1, 3, 4), {2: 1})), expected_induced=True),
        CatalogEntry("T5.3d", 3, 5, _b(((2, 3, 4), {1: 1}), ((1, 3, 4), {2: 1}), ((2, 4, 5), {2: 1}), ((1, 4, 5), {1: 1})),
                     expected_induced=True),
        CatalogEntry("T5.3e_alpha", 3, 5, _b(((2, 3, 4), {1: alpha, 2: 1}), ((1, 3, 4), {2: 1})),
                     (_param("alpha", 1),), "alpha != 0", _nonzero("alpha"), expected_induced=True),
        CatalogEntry("T5.3f_alpha", 3, 5,
                     _b(((2, 3, 4), {1: alpha, 2: 1}), ((1, 3, 4), {2: 1}), ((2, 4, 5), {2: 1}), ((1, 4, 5), {1: 1})),
                     (_param("alpha", 1),), "alpha != 0", _nonzero("alpha"), expected_induced=True),
        CatalogEntry("T5.3g", 3, 5, _b(((1, 3, 4), {1: 1}), ((2, 3, 4), {2: 1})), expected_induced=True),
        CatalogEntry("T5.4a", 3, 5, _b(((2, 3, 4), {1: 1}), ((2, 4, 5), {2: -1}), ((3, 4, 5), {3: 1})),
                     expected_induced=True),
        CatalogEntry("T5.4b_alpha", 3, 5,
                     _b(((2, 3, 4), {1: 1}), ((3, 4, 5), {3: 1, 2: alpha}), ((2, 4, 5), {3: 1}), ((1, 4, 5), {1: 1})),
                     (_param("alpha", 1),), "alpha != 0", _nonzero("alpha"), expected_induced=True),
        CatalogEntry("T5.4c", 3, 5, _b(((2, 3, 4), {1: 1}), ((3, 4, 5), {3: 1}), ((2, 4, 5), {2: 1}), ((1, 4, 5), {1: 2})),
                     expected_induced=True),
        CatalogEntry("T5.4d", 3, 5, _b(((2, 3, 4), {1: 1}), ((1, 3, 4), {2: 1}), ((1, 2, 4), {3: 1})),
                     expected_induced=True),
        CatalogEntry("T5.4e_beta", 3, 5,
                     _b(((1, 4, 5), {1: 1}), ((2, 4, 5), {3: 1}), ((3, 4, 5), {2: beta, 3: lambda p: 1 + p["beta"]})),
                     (_param("beta", 2),), "beta not in {0, 1}", lambda p: p["beta"] not in (0, 1),
                     expected_induced=True),
        CatalogEntry("T5.4f", 3, 5, _b(((1, 4, 5), {1: 1}), ((2, 4, 5), {2: 1}), ((3, 4, 5), {3: 1})),
                     expected_induced=True),
        CatalogEntry("T5.4g_stu", 3, 5,
                     _b(((1, 4, 5), {2: 1}), ((2, 4, 5), {3: 1}),
                        ((3, 4, 5), {1: lambda p: p["s"], 2: lambda p: p["t"], 3: lambda p: p["u"]})),
                     (_param("s", 1), _param("t", 1), _param("u", 1)), expected_induced=True,
                     notes="(s,t,u) ~ (r^3 s, r^2 t, r u) for r != 0"),
        CatalogEntry("T5.5a", 3, 5, _b(((2, 3, 4), {1: 1}), ((3, 4, 5), {2: 1}), ((2, 4, 5), {3: 1}), ((2, 3, 5), {4: 1})),
                     expected_induced=False),
        CatalogEntry("T5.5b", 3, 5, _b(((2, 3, 4), {1: 1}), ((1, 3, 4), {2: 1}), ((1, 2, 4), {3: 1}), ((1, 2, 3), {4: 1})),
                     expected_induced=False),
    ]


def parse_params(text: Optional[str]) -> Params:
    """Parse "a=1,b=-1/2" into parameter bindings"""
    bindings: Params = {}
    if not text:
        return bindings
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep or not name.strip():
            raise CatalogError(f"malformed parameter binding '{part}'")
        bindings[name.strip()] = parse_rational(value)
    return bindings


class AlgebraCatalog:
    """
    Registry of classification entries by id
    """

    def __init__(self):
        self.entries: Dict[str, CatalogEntry] = {}
        for entry in _lie_entries() + _trilie_entries():
            self.entries[entry.id] = entry
        lie = sum(1 for e in self.entries.values() if e.arity == 2)
        logger.debug(f"Algebra catalog initialized - {lie} Lie entries, {len(self.entries) - lie} 3-Lie entries")

    def list(self, arity: Optional[int] = None, dim: Optional[int] = None) -> List[CatalogEntry]:
        return [
            e for e in self.entries.values()
            if (arity is None or e.arity == arity) and (dim is None or e.dim == dim)
        ]

    def resolve(self, text: str) -> Tuple[CatalogEntry, Params]:
        """
        Map an id or a shorthand label to an entry and parameter bindings

        Shorthands put parameter values into the label: "M3_0" is M3_a with a = 0,
        "M6_0b" is M6_ab with a = 0 and b left at its default, "L(3,2,1/2)" is
        L(3,2,a) with a = 1/2.
        """
        key = text.strip().replace("−", "-")
        if key in self.entries:
            return self.entries[key], {}
        for entry in self.entries.values():
            names = [p.name for p in entry.parameters]
            if not names:
                continue
            if entry.id.endswith(",a)"):
                prefix = entry.id[:-2]
                if key.startswith(prefix) and key.endswith(")"):
                    return entry, {"a": parse_rational(key[len(prefix):-1])}
                continue
            prefix, _, suffix = entry.id.rpartition("_")
            if not key.startswith(prefix + "_") or suffix != "".join(names):
                continue
            rest = key[len(prefix) + 1:]
            if len(rest) != len(names):
                continue
            bindings: Params = {}
            for name, char in zip(names, rest):
                if char == name:
                    continue
                if not char.isdigit():
                    break
                bindings[name] = Fraction(int(char))
            else:
                return entry, bindings
        raise CatalogError(f"unknown catalog id '{text}'")


_catalog: Optional[AlgebraCatalog] = None


def get_catalog() -> AlgebraCatalog:
    global _catalog
    if _catalog is None:
        _catalog = AlgebraCatalog()
    return _catalog


def catalog_list(arity: Optional[int] = None, dim: Optional[int] = None) -> List[CatalogEntry]:
    return get_catalog().list(arity, dim)


def resolve_id(text: str) -> Tuple[str, Params]:
    entry, bindings = get_catalog().resolve(text)
    return entry.id, bindings


@cached(cache=LRUCache(maxsize=256))
def _instantiate(entry_id: str, bindings: Tuple[Tuple[str, Fraction], ...], name: str) -> StructureConstants:
    return get_catalog().entries[entry_id].instantiate(dict(bindings), name)


def catalog_get(id: str, params: Optional[Mapping[str, Fraction]] = None) -> StructureConstants:
    """
    Structure constants of a catalog entry

    Raises:
        CatalogError: unknown id or invalid parameters
    """
    entry, bindings = get_catalog().resolve(id)
    bindings = {**bindings, **{k: Fraction(v) for k, v in (params or {}).items()}}
    name = id.strip() if not params else entry.id
    return _instantiate(entry.id, tuple(sorted(bindings.items())), name)


class Recognition(NamedTuple):
    i0: int
    lie: StructureConstants
    tau: LinearForm


def _kills_values(t: StructureConstants, i0: int) -> bool:
    """x_i0 vanishes on every bracket value, so e_i0 lies outside their span"""
    return all(v[i0 - 1] == 0 for _, v in t.table)


def recognize_induced(t: StructureConstants) -> Optional[Recognition]:
    """
    Find a basis index i0 exhibiting t as induced by a Lie algebra

    Requires every nonzero bracket to involve e_i0 and e_i0 to lie outside the
    span of the bracket values, checked as x_i0 killing every value. The Lie
    bracket is [x,y] = [e_i0,x,y] and tau = x_i0. Only the given basis is searched.
    """
    if t.arity != 3:
        raise AlgebraError(f"recognition expects a 3-Lie algebra, got arity {t.arity}")
    for i0 in range(1, t.dim + 1):
        if any(i0 not in key for key, _ in t.table):
            continue
        if not _kills_values(t, i0):
            continue
        tau = LinearForm.coordinate(t.dim, i0)
        lie = fixed_bracket(t, basis_vector(t.dim, i0)).renamed(f"{t.name}_lie{i0}" if t.name else "")
        if not verify_identity(lie).ok:
            continue
        try:
            if induce_bracket(lie, tau) != t:
                continue
        except AlgebraError:
            continue
        logger.debug(f"{t.name or 'algebra'} recognised as induced with i0={i0}")
        return Recognition(i0, lie, tau)
    return None


class ClassificationRow(NamedTuple):
    id: str
    dim: int
    flag: str
    expected: Optional[bool]
    i0: Optional[int]

    @property
    def matches(self) -> bool:
        if self.expected is None:
            return True
        return (self.flag == INDUCED) == self.expected and self.flag != UNKNOWN


def second_derived(t: StructureConstants) -> Subspace:
    d1 = product_span(t, [Subspace.full(t.dim)] * t.arity)
    return product_span(t, [d1] * t.arity)


def classify(t: StructureConstants) -> Tuple[str, Optional[int]]:
    recognition = recognize_induced(t)
    if recognition is not None:
        return INDUCED, recognition.i0
    if not second_derived(t).is_zero():
        return NOT_INDUCED, None
    return UNKNOWN, None


def induced_classification(max_dim: int = 5) -> List[ClassificationRow]:
    """Flag every 3-Lie catalog entry of dimension <= max_dim"""
    rows = []
    for entry in catalog_list(arity=3):
        if entry.dim > max_dim:
            continue
        flag, i0 = classify(catalog_get(entry.id))
        rows.append(ClassificationRow(entry.id, entry.dim, flag, entry.expected_induced, i0))
    logger.info(f"✓ classified {len(rows)} 3-Lie algebras, {sum(r.flag == INDUCED for r in rows)} induced")
    return rows


@dataclass(frozen=True)
class Table6Row:
    """Trace space and induced brackets of a Lie algebra, weights t_p named by pivot index"""

    lie_id: str
    algebra: StructureConstants
    traces: Tuple[LinearForm, ...]
    weights: Tuple[int, ...]
    family: Tuple[StructureConstants, ...]

    def bracket_weights(self) -> Dict[Tuple[int, ...], Dict[int, Dict[int, Fraction]]]:
        """key -> basis index q -> weight index p -> coefficient of t_p in the e_q component"""
        combined: Dict[Tuple[int, ...], Dict[int, Dict[int, Fraction]]] = {}
        for p, member in zip(self.weights, self.family):
            for key, value in member.table:
                for q, c in enumerate(value, start=1):
                    if c != 0:
                        combined.setdefault(key, {}).setdefault(q, {})[p] = c
        return combined


def table6(lie_id: str, params: Optional[Mapping[str, Fraction]] = None) -> Table6Row:
    a = catalog_get(lie_id, params)
    if a.arity != 2:
        raise CatalogError(f"{lie_id} is not a Lie algebra")
    traces = tuple(trace_space(a).basis_forms())
    weights = tuple(next(k for k, c in enumerate(t.coeffs, start=1) if c != 0) for t in traces)
    family = tuple(alg for _, alg in induced_family(a))
    return Table6Row(lie_id, a, traces, weights, family)


TABLE7_CASES: Dict[str, Tuple[int, ...]] = {
    "gl2": (0, 0, 0, 1),
    "M4": (1, 1, 0, 1),
    "M5": (1, 0, 0, 0),
    "M8": (1, 0, 1, 0),
}


@dataclass(frozen=True)
class Table7Row:
    lie_id: str
    tau: LinearForm
    lie_report: CohomologyReport
    induced_report: CohomologyReport


def table7(lie_id: Optional[str] = None) -> List[Table7Row]:
    """Degree-1 adjoint cohomology of a Lie algebra and of its induced algebra"""
    ids = [lie_id] if lie_id else list(TABLE7_CASES)
    rows = []
    for case in ids:
        if case not in TABLE7_CASES:
            raise CatalogError(f"no cohomology table for '{case}', expected one of {', '.join(TABLE7_CASES)}")
        a = catalog_get(case)
        tau = LinearForm.of(TABLE7_CASES[case])
        induced = induce_bracket(a, tau)
        rows.append(Table7Row(case, tau, cohomology_report(a, LIE, ADJOINT, 1), cohomology_report(induced, TRILIE, ADJOINT, 1)))
    return rows
