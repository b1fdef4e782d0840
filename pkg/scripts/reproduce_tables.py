#!/usr/bin/env python3
"""
Reproduce the trace / induced bracket table and the first cohomology table
"""

import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from dotenv import load_dotenv
from tabulate import tabulate
from src.catalog import catalog_list, table6, table7
from src.report import format_cocycle_matrix, format_general_trace, format_table6_brackets

load_dotenv()


def main():
    print("Induced 3-Lie Algebras of Low-Dimensional Lie Algebras")
    print("=" * 50)

    table_data = []
    for entry in catalog_list(arity=2):
        row = table6(entry.id)
        brackets = "\n".join(f"{b} = {v}" for b, v in format_table6_brackets(row)) or "abelian"
        table_data.append([entry.id, format_general_trace(row), brackets])
    print(tabulate(table_data, headers=["Lie algebra", "Trace", "Induced 3-Lie algebra"], tablefmt="grid"))

    print("\n" + "=" * 50)
    print("First Adjoint Cohomology")
    rows = table7()
    summary = [
        [r.lie_id, r.tau.describe(), r.lie_report.dim_Z, r.lie_report.dim_B, r.lie_report.dim_H,
         r.induced_report.dim_Z, r.induced_report.dim_B, r.induced_report.dim_H]
        for r in rows
    ]
    print(tabulate(summary, headers=["Lie", "Trace", "Z1", "B1", "H1", "Z1 ind", "B1 ind", "H1 ind"], tablefmt="grid"))

    for r in rows:
        dim = r.tau.dim
        headers = [f"e{i}" for i in range(1, dim + 1)]
        print(f"\n{r.lie_id}: derivations of the Lie algebra")
        print(tabulate(format_cocycle_matrix(r.lie_report.Z, dim), headers=headers, tablefmt="grid"))
        print(f"{r.lie_id}: derivations of the induced algebra, tau = {r.tau.describe()}")
        print(tabulate(format_cocycle_matrix(r.induced_report.Z, dim), headers=headers, tablefmt="grid"))

    print("\n" + "=" * 50)
    print("✓ Tables reproduced")
    return True


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
