"""Concordance-genus lower bounds from Upsilon and Upsilon2.

The slopes of the exact PL invariants, and the denominators of their
interior breakpoints, each bound the concordance genus from below.
Run with:  python3 demos/03_genus_bounds.py
"""

from fractions import Fraction

import upsilonkit as uk

# T(5,7): Upsilon alone already gives the sharp bound 12 = genus.
C = uk.torus_knot_complex(5, 7)
report = uk.genus_report(C, [Fraction(2, 5)])
for r in report.reports:
    bps = ", ".join(f"{x} -> {b}" for x, b in r.breakpoint_bounds) or "none"
    print(f"{r.source}: slope bound {r.slope_bound}, breakpoint bounds {bps}")
print(f"T(5,7): combined lower bound {report.combined}\n")

# The nK family: Upsilon is identically zero, so only the secondary
# invariant sees the growing complexity.
for n in (1, 2, 3):
    C = uk.nk_complex(n)
    assert uk.upsilon(C) == uk.PLFunction.constant(0)
    report = uk.genus_report(C, [1])
    print(f"nK({n}): Upsilon trivial, combined bound {report.combined} "
          f"(= 4n-2), diagonal width {uk.diagonal_width(C)}")

# Infinite secondary functions carry no bound and are skipped.
report = uk.genus_report(uk.dual(uk.box_complex(1)), [1])
print(f"\n-box(1): skipped t values {report.skipped}, combined {report.combined}")
