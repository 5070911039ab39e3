"""Secondary invariants: one-sided minimizing cycle sets and Upsilon^2.

For t in (0, 2), Z- and Z+ are the sets of grading-0 cycles carrying
the H0 generator inside the minimal weight half-plane just left and
just right of t.  When they are disjoint, gamma2(s) is the least extra
level r at which some member of Z- becomes homologous to some member
of Z+ inside the union of the t half-plane at gamma(t) and the s
half-plane at r; Upsilon2(s) = -2 (gamma2(s) - gamma(t)).  When they
intersect, gamma2 is identically -inf and Upsilon2 identically +inf.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .complexes import ModelComplex, SliceElement, tensor
from .exact import NEG_INF, POS_INF, DomainError, PLFunction, as_rational
from .gf2 import Gf2Solver, Gf2Span, combine
from .upsilon import ConsistencyError, gamma_at, phi, pivot_points


@dataclass(frozen=True)
class ZSets:
    """Affine descriptions of the one-sided minimizing cycle sets at t.

    Members of Z- are z_minus + sums of v_minus vectors, as bit vectors
    over basis (the grading-0 slice); same on the plus side.
    """

    t: Fraction
    delta: Fraction
    basis: tuple[SliceElement, ...]
    z_minus: int
    z_plus: int
    v_minus: tuple[int, ...]
    v_plus: tuple[int, ...]
    disjoint: bool


def _one_sided_set(C: ModelComplex, t_side: Fraction):
    """Representative and direction basis for the cycles supported in the
    half-plane of weight at most gamma(t_side)."""
    coset = C.generator_coset()
    level = gamma_at(C, t_side)
    allowed = 0
    for idx, elem in enumerate(coset.basis):
        if phi(t_side, elem.point) <= level:
            allowed |= 1 << idx
    outside = ~allowed
    columns = [b & outside for b in coset.boundaries]
    solver = Gf2Solver(columns)
    x = solver.solve(coset.cycle & outside)
    if x is None:
        raise ConsistencyError(f"no minimizing cycle at t = {t_side}")
    rep = coset.cycle ^ combine(list(coset.boundaries), x)
    directions = Gf2Span()
    for kernel_combo in solver.kernel_basis():
        directions.add(combine(list(coset.boundaries), kernel_combo))
    return rep, tuple(directions.basis())


def _same_affine(rep1, dirs1, rep2, dirs2) -> bool:
    span1 = Gf2Span(dirs1)
    span2 = Gf2Span(dirs2)
    if span1.rank != span2.rank or any(v not in span1 for v in dirs2):
        return False
    return (rep1 ^ rep2) in span1


def z_sets(C: ModelComplex, t) -> ZSets:
    """Z- and Z+ at t, certified stable under halving the margin delta."""
    C.require_valid()
    t = as_rational(t)
    pd = pivot_points(C, t)
    coset = C.generator_coset()

    def at_delta(d):
        return _one_sided_set(C, t - d), _one_sided_set(C, t + d)

    (zm, vm), (zp, vp) = at_delta(pd.delta)
    (zm2, vm2), (zp2, vp2) = at_delta(pd.delta / 2)
    if not (_same_affine(zm, vm, zm2, vm2) and _same_affine(zp, vp, zp2, vp2)):
        raise ConsistencyError(f"one-sided cycle sets unstable under delta halving at t = {t}")

    # Every member must already sit inside the weight-gamma(t) half-plane.
    level = pd.gamma_t
    for vec in (zm, zp) + vm + vp:
        for idx, elem in enumerate(coset.basis):
            if vec >> idx & 1 and phi(t, elem.point) > level:
                raise ConsistencyError(f"one-sided cycle leaves the t half-plane at t = {t}")

    disjoint = (zm ^ zp) not in Gf2Span(vm + vp)
    return ZSets(t, pd.delta, coset.basis, zm, zp, vm, vp, disjoint)


def check_disjointness_theorem(C: ModelComplex, t) -> bool:
    """Positive slope jump forces disjoint one-sided cycle sets."""
    from .upsilon import delta_upsilon_prime

    return delta_upsilon_prime(C, t) <= 0 or z_sets(C, t).disjoint


@dataclass(frozen=True)
class Upsilon2Result:
    t: Fraction
    gamma_t: Fraction
    zsets: ZSets
    smooth_point: bool  # the two pivot points coincide at t
    gamma2: PLFunction  # function of s; constant -inf when Z sets meet
    upsilon2: PLFunction  # -2 (gamma2 - gamma(t)); constant +inf when infinite
    witnesses: tuple  # (s0, s1, names of connecting-chain elements outside the t half-plane)


def upsilon2(C: ModelComplex, t) -> Upsilon2Result:
    """gamma2 and Upsilon2 at t as exact PL functions of s on [0, 2]."""
    C.require_valid()
    t = as_rational(t)
    pd = pivot_points(C, t)
    zs = z_sets(C, t)
    smooth = pd.p_minus == pd.p_plus
    if not zs.disjoint:
        return Upsilon2Result(
            t, pd.gamma_t, zs, smooth,
            PLFunction(infinite=NEG_INF), PLFunction(infinite=POS_INF), (),
        )

    target = zs.z_minus ^ zs.z_plus
    slice1 = C.grading_slice(1)
    columns = C.slice_boundary(1)
    inside = [idx for idx, e in enumerate(slice1) if phi(t, e.point) <= pd.gamma_t]
    outside = [idx for idx, e in enumerate(slice1) if phi(t, e.point) > pd.gamma_t]

    base = Gf2Span(zs.v_minus + zs.v_plus)
    for idx in inside:
        base.add(columns[idx])
    if target in base:
        # Already homologous through the t half-plane alone, for every s.
        return Upsilon2Result(
            t, pd.gamma_t, zs, smooth,
            PLFunction(infinite=NEG_INF), PLFunction(infinite=POS_INF), (),
        )

    def value_at(s: Fraction) -> Fraction:
        groups: dict[Fraction, list[int]] = {}
        for idx in outside:
            groups.setdefault(phi(s, slice1[idx].point), []).append(idx)
        span = base.copy()
        for value in sorted(groups):
            for idx in groups[value]:
                span.add(columns[idx])
            if target in span:
                return value
        raise ConsistencyError("one-sided cycles not homologous in the full complex")

    cands = {Fraction(0), Fraction(2)}
    pts = sorted({slice1[idx].point for idx in outside})
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            di = pts[a][0] - pts[b][0]
            dj = pts[a][1] - pts[b][1]
            if di != dj:
                s = Fraction(2 * di, di - dj)
                if 0 < s < 2:
                    cands.add(s)
    cands = sorted(cands)
    values = [value_at(s) for s in cands]
    for (s0, y0), (s1, y1) in zip(zip(cands, values), zip(cands[1:], values[1:])):
        if value_at((s0 + s1) / 2) != (y0 + y1) / 2:
            raise ConsistencyError(f"gamma2 not linear on ({s0}, {s1})")
    g2 = PLFunction(list(zip(cands, values)))
    u2 = PLFunction([(x, -2 * (y - pd.gamma_t)) for x, y in g2.breakpoints])

    # Chain witness per linear piece, from a solve at the piece midpoint.
    witnesses = []
    bps = [x for x, _ in g2.breakpoints]
    for s0, s1 in zip(bps, bps[1:]):
        mid = (s0 + s1) / 2
        level = g2.evaluate(mid)
        solver = Gf2Solver(list(zs.v_minus + zs.v_plus) + [columns[i] for i in inside])
        admitted = [idx for idx in outside if phi(mid, slice1[idx].point) <= level]
        for idx in admitted:
            solver.add_column(columns[idx])
        x = solver.solve(target)
        if x is None:
            raise ConsistencyError("witness solve failed on a certified piece")
        offset = len(zs.v_minus) + len(zs.v_plus) + len(inside)
        names = tuple(
            slice1[admitted[pos - offset]].name
            for pos in range(offset, solver.num_columns)
            if x >> pos & 1
        )
        witnesses.append((s0, s1, names))

    return Upsilon2Result(t, pd.gamma_t, zs, smooth, g2, u2, tuple(witnesses))


def gamma2(C: ModelComplex, t) -> Upsilon2Result:
    """Alias of upsilon2; the result carries both functions."""
    return upsilon2(C, t)


def upsilon2_scalar(C: ModelComplex):
    """Upsilon2 at t = 1 evaluated at s = 1 (+inf propagates)."""
    return upsilon2(C, 1).upsilon2.evaluate(1)


def check_subadditivity(C1: ModelComplex, C2: ModelComplex, t) -> bool:
    """Upsilon2 of a tensor product at s = t dominates the worse factor."""
    t = as_rational(t)
    if not 0 < t < 2:
        raise DomainError(f"subadditivity check needs t in (0, 2), got {t}")
    lhs = upsilon2(tensor(C1, C2), t).upsilon2.evaluate(t)
    rhs = min(upsilon2(C1, t).upsilon2.evaluate(t), upsilon2(C2, t).upsilon2.evaluate(t))
    return lhs >= rhs
