#!/usr/bin/env python3
"""
Documents
YAML algebra and cochain documents: validation models, parsing and canonical printing
"""

import itertools
import logging
from typing import Dict, List, NamedTuple, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.algebra import StructureConstants, canonicalize, permutation_sign
from src.cohomology import LIE, SCALAR, SKEW_FULL, SKEW_PAIR, THEORIES, TRILIE, Cochain, flatten_key, make_cochain
from src.errors import AlgebraError, DocumentParseError
from src.exactlin import format_rational, parse_rational
from src.induce import LinearForm

logger = logging.getLogger(__name__)

RationalLiteral = Union[str, int]


def _literal(value: RationalLiteral) -> str:
    if isinstance(value, bool):
        raise ValueError("booleans are not rational literals")
    return str(value)


class BracketDocument(BaseModel):
    args: List[int]
    value: Dict[int, str] = Field(default_factory=dict)

    @field_validator("value", mode="before")
    @classmethod
    def _stringify(cls, value):
        if not isinstance(value, dict):
            raise ValueError("value must map basis indices to rational literals")
        return {k: _literal(v) for k, v in value.items()}


class AlgebraDocument(BaseModel):
    """
    name: M5
    dim: 4
    arity: 2
    brackets:
      - args: [2, 4]
        value: {3: "1"}
    trace: ["1", "0", "0", "0"]
    """

    name: str = ""
    dim: int = Field(ge=0)
    arity: int = Field(default=2, ge=2)
    brackets: List[BracketDocument] = Field(default_factory=list)
    trace: Optional[List[str]] = None

    @field_validator("trace", mode="before")
    @classmethod
    def _stringify_trace(cls, value):
        if value is None:
            return None
        if isinstance(value, str):
            value = value.split(",")
        return [_literal(v).strip() for v in value]


class CochainValueDocument(BaseModel):
    args: List[int]
    value: str

    @field_validator("value", mode="before")
    @classmethod
    def _stringify(cls, value):
        return _literal(value)


class CochainDocument(BaseModel):
    """
    Scalar cochain

    trilie 2-cochain values are given on triples. With skew: full (the default)
    each triple is extended to every ordering by the sign of the permutation;
    with skew: pair only the first two arguments are alternated.
    """

    name: str = ""
    dim: int = Field(ge=0)
    theory: str = LIE
    degree: int = 2
    skew: str = SKEW_FULL
    values: List[CochainValueDocument] = Field(default_factory=list)

    @field_validator("theory")
    @classmethod
    def _known_theory(cls, value):
        if value not in THEORIES:
            raise ValueError(f"theory must be one of {', '.join(THEORIES)}")
        return value

    @field_validator("skew")
    @classmethod
    def _known_skew(cls, value):
        if value not in (SKEW_PAIR, SKEW_FULL):
            raise ValueError(f"skew must be {SKEW_PAIR} or {SKEW_FULL}")
        return value


class ParsedAlgebra(NamedTuple):
    document: AlgebraDocument
    algebra: StructureConstants
    trace: Optional[LinearForm]


def _load(text: str) -> dict:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        location = f"line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise DocumentParseError(f"invalid YAML: {getattr(e, 'problem', e)}", location)
    if not isinstance(data, dict):
        raise DocumentParseError("document must be a mapping")
    return data


def _validate(model, data: dict):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise DocumentParseError(first["msg"], location)


def _rational(text: str, location: str):
    try:
        return parse_rational(text)
    except DocumentParseError as e:
        raise DocumentParseError(str(e), location)


def parse_document(text: str) -> ParsedAlgebra:
    """
    Parse an algebra document into canonical structure constants

    Raises:
        DocumentParseError: malformed YAML, schema violation, bad literal, index out
            of range, repeated index with a nonzero value or a duplicated tuple
    """
    document = _validate(AlgebraDocument, _load(text))
    raw = []
    for n, bracket in enumerate(document.brackets):
        location = f"brackets.{n}"
        value = {k: _rational(v, f"{location}.value.{k}") for k, v in bracket.value.items()}
        raw.append((tuple(bracket.args), value))
    try:
        algebra = canonicalize(raw, document.arity, document.dim, document.name)
    except AlgebraError as e:
        raise DocumentParseError(str(e), "brackets")
    trace = None
    if document.trace is not None:
        if len(document.trace) != document.dim:
            raise DocumentParseError(f"trace has {len(document.trace)} coefficients, expected {document.dim}", "trace")
        trace = LinearForm(tuple(_rational(v, f"trace.{k}") for k, v in enumerate(document.trace)))
    logger.debug(f"parsed document {document.name or '(unnamed)'}: dim {algebra.dim}, {len(algebra.table)} brackets")
    return ParsedAlgebra(document, algebra, trace)


def to_document(algebra: StructureConstants, trace: Optional[LinearForm] = None, name: str = "") -> AlgebraDocument:
    brackets = [
        BracketDocument(args=list(key), value={q: format_rational(c) for q, c in enumerate(value, start=1) if c != 0})
        for key, value in algebra.table
    ]
    return AlgebraDocument(
        name=name or algebra.name,
        dim=algebra.dim,
        arity=algebra.arity,
        brackets=brackets,
        trace=[format_rational(c) for c in trace.coeffs] if trace is not None else None,
    )


def print_document(algebra: StructureConstants, trace: Optional[LinearForm] = None, name: str = "") -> str:
    """Canonical YAML text; parse_document of the output gives back the same algebra"""
    data = to_document(algebra, trace, name).model_dump(exclude_none=True)
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, allow_unicode=True)


def parse_cochain_document(text: str) -> Cochain:
    """
    Parse a scalar 2-cochain document

    lie values are assigned on pairs; trilie values on triples are extended to
    every ordering by the sign of the permutation.
    """
    document = _validate(CochainDocument, _load(text))
    items = []
    seen = set()
    for n, entry in enumerate(document.values):
        location = f"values.{n}"
        value = _rational(entry.value, f"{location}.value")
        args = tuple(entry.args)
        if any(not 1 <= i <= document.dim for i in args):
            raise DocumentParseError(f"argument outside 1..{document.dim}", f"{location}.args")
        if document.theory == LIE or document.degree != 2:
            items.append((args, value))
            continue
        if len(args) != 3:
            raise DocumentParseError("trilie 2-cochain values take three arguments", f"{location}.args")
        if document.skew == SKEW_PAIR:
            items.append((args, value))
            continue
        if len(set(args)) < 3:
            if value != 0:
                raise DocumentParseError("repeated argument with a nonzero value", f"{location}.args")
            continue
        ordered = tuple(sorted(args))
        if ordered in seen:
            raise DocumentParseError(f"value on {ordered} assigned twice", location)
        seen.add(ordered)
        base = permutation_sign(args) * value
        for perm in itertools.permutations(ordered):
            if perm[0] < perm[1]:
                items.append((perm, permutation_sign(perm) * base))
    try:
        cochain = make_cochain(document.theory, SCALAR, document.degree, document.dim, items)
    except AlgebraError as e:
        raise DocumentParseError(str(e), "values")
    logger.debug(f"parsed {document.theory} cochain {document.name or '(unnamed)'} with {len(cochain.values)} values")
    return cochain


def print_cochain_document(cochain: Cochain, name: str = "") -> str:
    """
    Scalar 2-cochain as a document

    Fully skew trilie cochains are written on increasing triples; any other
    trilie 2-cochain is written with skew: pair on every stored key.
    """
    values = []
    data = {"name": name, "dim": cochain.dim, "theory": cochain.theory, "degree": cochain.degree}
    compact = cochain.theory == TRILIE and cochain.degree == 2 and cochain.is_fully_skew()
    if cochain.theory == TRILIE and cochain.degree == 2 and not compact:
        data["skew"] = SKEW_PAIR
    if compact:
        for triple in itertools.combinations(range(1, cochain.dim + 1), 3):
            c = cochain.scalar(triple)
            if c != 0:
                values.append({"args": list(triple), "value": format_rational(c)})
    else:
        for key, value in cochain.values:
            values.append({"args": list(flatten_key(key)), "value": format_rational(value[0])})
    data["values"] = values
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None)
