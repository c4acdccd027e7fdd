"""
Grid verification of companion-sequence identities
==================================================

The identity engine sweeps parameter grids and index ranges, producing
one structured report per (identity, parameter) cell. Corrected forms
pass everywhere they are defined; diagnostic ids reproduce incorrect
printed variants and carry their smallest counterexamples.
"""

import json

from lucaskit import GridSpec, pythagorean_like, run_grid

# The discriminant identity w_n^2 - 4q^n = u_n^2 (p^2 - 4q), swept over
# a small parameter grid.
grid = GridSpec(p_range=(-2, 2), q_range=(-2, 2), n_max=30)
for report in run_grid(grid, ["prop34"]):
    print(f"p={report.params.p} q={report.params.q}: {report.status}")

# Cells where a precondition fails are skipped with a reason, not
# silently dropped: cor35 needs q=1, eq35 needs a nonzero discriminant.
grid = GridSpec(p_range=(2, 2), q_range=(1, 2), n_max=10)
for report in run_grid(grid, ["cor35", "eq35"]):
    reason = f" ({report.note})" if report.status == "skipped" else ""
    print(f"{report.identity_id} at q={report.params.q}: {report.status}{reason}")

# The q=1 triples behind cor35, written out.
print("\ntriples (w_n, 2u_n, p u_n) for p=3, q=1:")
for n in range(1, 5):
    x, y, z = pythagorean_like(3, n)
    print(f"  n={n}: ({x}, {y}, {z}), x^2+y^2-z^2 = {x*x + y*y - z*z}")

# Diagnostics are expected to fail; their reports carry the first
# counterexample as machine evidence for the corrected forms.
fib_grid = GridSpec(n_max=20, a_max=5)
ids = ["eq25_zeitlin", "eq25_zeitlin_paper_sign"]
for report in run_grid(fib_grid, ids):
    print()
    print(json.dumps(report.to_record(), indent=2))
