"""Tour of the Upsilon invariant on torus-knot staircase complexes.

Builds the staircase model of T(p, q) from the gap sequence of its
Alexander polynomial, computes Upsilon(t) exactly as a piecewise-linear
function on [0, 2], and inspects pivots and derivative jumps at a
breakpoint.  Run with:  python3 demos/01_torus_knot_upsilon.py
"""

from fractions import Fraction

import upsilonkit as uk

for p, q in [(2, 3), (3, 4), (5, 7)]:
    steps = uk.torus_knot_steps(p, q)
    C = uk.torus_knot_complex(p, q)
    print(f"T({p},{q}): staircase steps {steps}, {len(C)} generators")
    f = uk.upsilon(C)
    for (x0, y0), (x1, y1) in zip(f.breakpoints, f.breakpoints[1:]):
        slope = (y1 - y0) / (x1 - x0)
        print(f"  Upsilon on [{x0}, {x1}]: slope {slope}, values {y0} -> {y1}")
    print()

# The mirror has the negated invariant.
C = uk.torus_knot_complex(3, 4)
assert uk.upsilon(uk.dual(C)) == uk.upsilon(C).scale(-1)

# At the breakpoint t = 2/3 the support line carries two lattice points,
# and the one-sided minimizers pivot between them.
t = Fraction(2, 3)
pd = uk.pivot_points(C, t)
print(f"T(3,4) at t = {t}: gamma = {pd.gamma_t}")
print(f"  support-line points: {sorted(pd.on_line)}")
print(f"  pivot left/right of t: {pd.p_minus} / {pd.p_plus}")
print(f"  derivative jump of Upsilon: {uk.delta_upsilon_prime(C, t)}")

# Upsilon is additive under tensor product (connected sum).
A, B = uk.torus_knot_complex(2, 3), uk.torus_knot_complex(2, 5)
assert uk.upsilon(uk.tensor(A, B)) == uk.upsilon(A) + uk.upsilon(B)
print("\nadditivity under connected sum: OK")
