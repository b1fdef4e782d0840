#!/usr/bin/env python3
"""
Report Writer
Human (tabulate grid) and machine (key: value lines) rendering of every analysis result
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tabulate import tabulate

from src.algebra import IdentityReport, StructureConstants, format_element
from src.catalog import CatalogEntry, ClassificationRow, Recognition, Table6Row, Table7Row
from src.cohomology import ADJOINT, TRILIE, Cochain, CohomologyReport
from src.exactlin import Subspace, format_rational
from src.extensions import CentralExtension
from src.induce import LinearForm, TraceSpace
from src.settings import Settings
from src.structure import SeriesComparison, SeriesReport

logger = logging.getLogger(__name__)

HUMAN = "human"
MACHINE = "machine"


def format_vector(v: Sequence[Fraction]) -> str:
    return " ".join(format_rational(c) for c in v)


def format_linear_form(tau: LinearForm) -> str:
    return tau.describe("x")


def format_subspace(s: Subspace) -> str:
    if s.is_zero():
        return "0"
    return "; ".join(format_vector(v) for v in s.vectors())


def format_bracket_table(a: StructureConstants) -> List[List[str]]:
    """Rows (bracket, value) with 1-based e_i names"""
    return [["[" + ",".join(f"e{i}" for i in key) + "]", format_element(value)] for key, value in a.table]


def _combination(terms: Iterable[Tuple[Fraction, str]]) -> str:
    """c1*n1 + c2*n2 rendered without multiplication signs, e.g. -z11+1/2z23"""
    parts = []
    for c, name in terms:
        if c == 0:
            continue
        coef = "" if c == 1 else "-" if c == -1 else format_rational(c)
        sign = "" if not parts or coef.startswith("-") else "+"
        parts.append(f"{sign}{coef}{name}")
    return "".join(parts) if parts else "0"


def format_cocycle_matrix(Z: Subspace, dim: int) -> List[List[str]]:
    """
    Generic degree-1 adjoint cocycle as a d x d matrix of free parameters

    Each basis vector of Z is named z_qi after its pivot coordinate, the entry
    (q, i) of f(e_i); entry (q, i) of the result is the combination of the
    parameters that reach it.
    """
    names = []
    for v in Z.vectors():
        pivot = next(n for n, c in enumerate(v) if c != 0)
        i, q = divmod(pivot, dim)
        names.append(f"z{q + 1}{i + 1}")
    matrix = []
    for q in range(dim):
        row = []
        for i in range(dim):
            n = i * dim + q
            row.append(_combination((v[n], name) for v, name in zip(Z.vectors(), names)))
        matrix.append(row)
    return matrix


def _weights(weights: Dict[int, Fraction]) -> str:
    return _combination((c, f"t{p}") for p, c in sorted(weights.items()))


def format_table6_brackets(row: Table6Row) -> List[List[str]]:
    """Induced brackets of the whole family with the basis traces weighted by t_p"""
    lines = []
    for key, components in sorted(row.bracket_weights().items()):
        parts = []
        for q, weights in sorted(components.items()):
            expr = _weights(weights)
            term = f"{expr}e{q}" if len(weights) == 1 else f"({expr})e{q}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        lines.append(["[" + ",".join(f"e{i}" for i in key) + "]", "".join(parts)])
    return lines


def format_general_trace(row: Table6Row) -> str:
    if not row.traces:
        return "0"
    terms: Dict[int, Dict[int, Fraction]] = {}
    for p, tau in zip(row.weights, row.traces):
        for k, c in enumerate(tau.coeffs, start=1):
            if c != 0:
                terms.setdefault(k, {})[p] = c
    parts = []
    for k, weights in sorted(terms.items()):
        expr = _weights(weights)
        term = f"{expr}x{k}" if len(weights) == 1 else f"({expr})x{k}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


class ReportWriter:
    """
    Renders results in the configured format

    Machine output is deterministic: key: value lines, vectors as space separated
    rational literals, brackets in increasing key order.
    """

    def __init__(self, settings: Settings, output_format: Optional[str] = None):
        self.format = output_format or settings.output_format
        self.table_format = settings.table_format
        logger.debug(f"Report writer initialized - format {self.format}")

    @property
    def machine(self) -> bool:
        return self.format == MACHINE

    def _table(self, rows: List[List[str]], headers: Sequence[str]) -> str:
        return tabulate(rows, headers=list(headers), tablefmt=self.table_format)

    @staticmethod
    def _lines(pairs: Iterable[Tuple[str, object]]) -> str:
        return "\n".join(f"{k}: {v}" for k, v in pairs)

    def _bracket_lines(self, a: StructureConstants, prefix: str = "bracket") -> List[Tuple[str, str]]:
        return [(f"{prefix} {','.join(map(str, key))}", format_vector(value)) for key, value in a.table]

    def render_algebra(self, a: StructureConstants, title: str = "") -> str:
        if self.machine:
            return self._lines([("name", a.name), ("arity", a.arity), ("dim", a.dim)] + self._bracket_lines(a))
        header = f"{title or a.name or 'algebra'} (arity {a.arity}, dim {a.dim})"
        if a.is_abelian():
            return f"{header}\nall brackets vanish"
        return f"{header}\n{self._table(format_bracket_table(a), ['Bracket', 'Value'])}"

    def render_verify(self, a: StructureConstants, report: IdentityReport) -> str:
        if self.machine:
            pairs = [("name", a.name), ("identity", "ok" if report.ok else "violated"), ("violations", len(report.violations))]
            pairs += [
                (f"violation {','.join(map(str, x))} | {','.join(map(str, y))}", format_vector(d))
                for x, y, d in report.violations
            ]
            return self._lines(pairs)
        if report.ok:
            return f"✓ {a.name or 'algebra'}: fundamental identity holds"
        rows = [[",".join(f"e{i}" for i in x), ",".join(f"e{i}" for i in y), format_element(d)] for x, y, d in report.violations]
        return f"✗ {a.name or 'algebra'}: {len(rows)} violations\n{self._table(rows, ['Fixed', 'Inner', 'Defect'])}"

    def render_traces(self, traces: TraceSpace) -> str:
        forms = traces.basis_forms()
        if self.machine:
            return self._lines([("name", traces.algebra.name), ("trace_dim", traces.dim)]
                               + [(f"trace {n}", format_vector(t.coeffs)) for n, t in enumerate(forms, start=1)])
        if not forms:
            return f"{traces.algebra.name or 'algebra'}: trace space is zero"
        rows = [[n, format_linear_form(t)] for n, t in enumerate(forms, start=1)]
        return f"{traces.algebra.name or 'algebra'}: trace space of dimension {traces.dim}\n{self._table(rows, ['#', 'Trace'])}"

    def render_induced(self, a: StructureConstants, tau: LinearForm, induced: StructureConstants) -> str:
        if self.machine:
            return self._lines([("name", a.name), ("trace", format_vector(tau.coeffs)), ("arity", induced.arity)]
                               + self._bracket_lines(induced))
        return self.render_algebra(induced, f"{a.name or 'algebra'} induced by tau={format_linear_form(tau)}")

    def _series_rows(self, report: SeriesReport) -> List[List[str]]:
        return [[p, t.dim, format_subspace(t)] for p, t in enumerate(report.terms)]

    def render_series(self, a: StructureConstants, derived: SeriesReport, central: SeriesReport) -> str:
        if self.machine:
            pairs = [("name", a.name), ("derived_dims", " ".join(map(str, derived.dims))),
                     ("solvability_class", derived.series_class if derived.series_class is not None else "none"),
                     ("central_dims", " ".join(map(str, central.dims))),
                     ("nilpotency_class", central.series_class if central.series_class is not None else "none")]
            return self._lines(pairs)
        blocks = []
        for label, report, cls in (("Derived series", derived, "solvable"), ("Central series", central, "nilpotent")):
            if report.stabilized:
                status = f"not {cls}, stable at dimension {report.terms[-1].dim}"
            else:
                status = f"{cls} of class {report.series_class}"
            blocks.append(f"{label} of {a.name or 'algebra'}: {status}\n"
                          f"{self._table(self._series_rows(report), ['p', 'dim', 'Basis'])}")
        return "\n\n".join(blocks)

    def render_comparison(self, comparison: SeriesComparison) -> str:
        unit = format_element(comparison.unit_element) if comparison.unit_element is not None else "none"
        pairs = [
            ("lie_central_dims", " ".join(map(str, comparison.lie_central.dims))),
            ("induced_central_dims", " ".join(map(str, comparison.induced_central.dims))),
            ("central_included", comparison.central_included),
            ("derived1_included", comparison.derived1_included),
            ("unit_element", unit),
            ("central_equal", comparison.central_equal),
            ("derived1_equal", comparison.derived1_equal),
        ]
        if self.machine:
            return self._lines(pairs)
        return self._table([[k, v] for k, v in pairs], ["Property", "Value"])

    def render_center(self, a: StructureConstants, center: Subspace) -> str:
        if self.machine:
            return self._lines([("name", a.name), ("center_dim", center.dim), ("center", format_subspace(center))])
        rows = [[format_element(v)] for v in center.vectors()]
        if not rows:
            return f"{a.name or 'algebra'}: center is zero"
        return f"{a.name or 'algebra'}: center of dimension {center.dim}\n{self._table(rows, ['Basis'])}"

    def render_cohomology(self, a: StructureConstants, report: CohomologyReport) -> str:
        pairs = [("name", a.name), ("theory", report.theory), ("coeffs", report.coeffs), ("degree", report.degree),
                 ("dim_Z", report.dim_Z), ("dim_B", report.dim_B), ("dim_H", report.dim_H)]
        show_matrix = report.coeffs == ADJOINT and report.degree == 1
        if self.machine:
            if show_matrix:
                pairs += [(f"Z row {q}", " ".join(row)) for q, row in enumerate(format_cocycle_matrix(report.Z, a.dim), start=1)]
            return self._lines(pairs)
        text = self._table([[k, v] for k, v in pairs[1:]], ["Quantity", "Value"])
        if show_matrix:
            matrix = format_cocycle_matrix(report.Z, a.dim)
            text += "\n\nGeneric cocycle\n" + self._table(matrix, [f"e{i}" for i in range(1, a.dim + 1)])
        return text

    def render_extension(self, extension: CentralExtension, omega_tau: Optional[Cochain] = None,
                         trivial: Optional[bool] = None) -> str:
        total = extension.total
        pairs: List[Tuple[str, object]] = [("name", total.name), ("central_index", extension.central_index)]
        pairs += self._bracket_lines(total)
        if omega_tau is not None:
            pairs += [(f"omega_tau {','.join(map(str, k))}", format_rational(v[0])) for k, v in self._cochain_values(omega_tau)]
        if trivial is not None:
            pairs.append(("trivial", trivial))
        if self.machine:
            return self._lines(pairs)
        text = self.render_algebra(total, f"central extension, c = e{extension.central_index}")
        if trivial is not None:
            text += f"\n{'trivial' if trivial else 'not trivial'} extension"
        return text

    @staticmethod
    def _cochain_values(c: Cochain) -> List[Tuple[Tuple[int, ...], Tuple[Fraction, ...]]]:
        if c.degree == 2 and c.theory == TRILIE:
            out = []
            for key, value in c.values:
                (i, j), k = key
                if j < k:
                    out.append(((i, j, k), value))
            return out
        return [(tuple(key), value) for key, value in c.values]

    def render_recognition(self, t: StructureConstants, recognition: Optional[Recognition]) -> str:
        if recognition is None:
            if self.machine:
                return self._lines([("name", t.name), ("induced", "not recognised")])
            return f"{t.name or 'algebra'}: no basis index exhibits it as induced"
        if self.machine:
            return self._lines([("name", t.name), ("induced", "yes"), ("i0", recognition.i0),
                                ("trace", format_vector(recognition.tau.coeffs))]
                               + self._bracket_lines(recognition.lie, "lie"))
        return (f"✓ {t.name or 'algebra'} is induced with i0 = {recognition.i0}, tau = {format_linear_form(recognition.tau)}\n"
                + self.render_algebra(recognition.lie, "Lie algebra"))

    def render_catalog(self, entries: Sequence[CatalogEntry]) -> str:
        if self.machine:
            return "\n".join(f"{e.id} arity={e.arity} dim={e.dim} params={','.join(p.name for p in e.parameters) or '-'}"
                             for e in entries)
        rows = [[e.id, e.arity, e.dim, ", ".join(f"{p.name}={format_rational(p.default)}" for p in e.parameters),
                 e.constraint, e.notes] for e in entries]
        return self._table(rows, ["Id", "Arity", "Dim", "Defaults", "Constraint", "Notes"])

    def render_classification(self, rows: Sequence[ClassificationRow]) -> str:
        if self.machine:
            return "\n".join(f"{r.id} dim={r.dim} flag={r.flag} expected={r.expected} i0={r.i0 or '-'}" for r in rows)
        table = [[r.id, r.dim, r.flag, {True: "induced", False: "not-induced", None: "-"}[r.expected],
                  r.i0 or "-", "✓" if r.matches else "✗"] for r in rows]
        return self._table(table, ["Id", "Dim", "Computed", "Listed", "i0", "Match"])

    def render_table6_row(self, row: Table6Row) -> str:
        trace = format_general_trace(row)
        brackets = format_table6_brackets(row)
        if self.machine:
            return self._lines([("lie", row.lie_id), ("trace", trace)] + [(f"bracket {b}", v) for b, v in brackets])
        rendered = "; ".join(f"{b}={v}" for b, v in brackets) or "abelian"
        return self._table([[row.lie_id, trace, rendered]], ["Lie algebra", "Trace", "Induced 3-Lie algebra"])

    def render_table6(self, rows: Sequence[Table6Row]) -> str:
        if self.machine:
            return "\n\n".join(self.render_table6_row(r) for r in rows)
        table = []
        for row in rows:
            rendered = "; ".join(f"{b}={v}" for b, v in format_table6_brackets(row)) or "abelian"
            table.append([row.lie_id, format_general_trace(row), rendered])
        return self._table(table, ["Lie algebra", "Trace", "Induced 3-Lie algebra"])

    def render_table7_row(self, row: Table7Row) -> str:
        lie, induced = row.lie_report, row.induced_report
        if self.machine:
            pairs = [("lie", row.lie_id), ("trace", format_vector(row.tau.coeffs)),
                     ("lie_Z1", lie.dim_Z), ("lie_B1", lie.dim_B), ("lie_H1", lie.dim_H),
                     ("induced_Z1", induced.dim_Z), ("induced_B1", induced.dim_B), ("induced_H1", induced.dim_H)]
            return self._lines(pairs)
        dim = row.tau.dim
        header = [f"e{i}" for i in range(1, dim + 1)]
        return "\n".join([
            self._table([[row.lie_id, format_linear_form(row.tau), lie.dim_Z, lie.dim_B, lie.dim_H,
                          induced.dim_Z, induced.dim_B, induced.dim_H]],
                        ["Lie algebra", "Trace", "Z1", "B1", "H1", "Z1 induced", "B1 induced", "H1 induced"]),
            "Lie derivations",
            self._table(format_cocycle_matrix(lie.Z, dim), header),
            "Induced derivations",
            self._table(format_cocycle_matrix(induced.Z, dim), header),
        ])

    def render_table7(self, rows: Sequence[Table7Row]) -> str:
        return "\n\n".join(self.render_table7_row(r) for r in rows)
