"""The Upsilon invariant: gamma, its PL function, pivots, slope jumps.

For a parameter t in [0, 2] the weight of a lattice point (i, j) is
phi_t(i, j) = (t/2) j + (1 - t/2) i.  gamma(t) is the smallest w such
that some grading-0 cycle carrying the H0 generator is supported on
points of weight at most w, and Upsilon(t) = -2 gamma(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .complexes import LatticePoint, ModelComplex, CycleCoset
from .exact import DomainError, PLFunction, as_rational
from .gf2 import Gf2Span


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates an engine bug."""


def phi(t, point: LatticePoint) -> Fraction:
    """Weight (t/2)*Alex + (1 - t/2)*alg of a lattice point."""
    t = as_rational(t)
    if not 0 <= t <= 2:
        raise DomainError(f"t = {t} outside [0, 2]")
    i, j = point
    return t / 2 * j + (1 - t / 2) * i


def _threshold_gamma(coset: CycleCoset, weight: Callable[[LatticePoint], Fraction]):
    """Least prefix weight at which the coset meets the weight half-plane.

    Returns (gamma, points at that weight).  Grows a span from the
    boundary space, admitting slice elements in weight order, until the
    representative cycle becomes a member.
    """
    span = Gf2Span(coset.boundaries)
    order: dict[Fraction, list[int]] = {}
    for idx, elem in enumerate(coset.basis):
        order.setdefault(weight(elem.point), []).append(idx)
    for value in sorted(order):
        for idx in order[value]:
            span.add(1 << idx)
        if coset.cycle in span:
            points = {coset.basis[idx].point for idx in order[value]}
            return value, points
    raise ConsistencyError("cycle not in the span of the full slice")


def gamma_at(C: ModelComplex, t, _checked: bool = True) -> Fraction:
    """gamma(t) = min over representing cycles of max weight over support."""
    if _checked:
        C.require_valid()
    t = as_rational(t)
    value, _ = _threshold_gamma(C.generator_coset(), lambda p: phi(t, p))
    return value


def breakpoint_candidates(C: ModelComplex) -> tuple[Fraction, ...]:
    """All t in [0, 2] where two grading-0 weights can cross, plus endpoints.

    Between consecutive candidates the weight order of the slice points
    is constant, so gamma is linear there.
    """
    if ("upsilon-candidates",) not in C._cache:
        points = sorted({e.point for e in C.grading_slice(0)})
        cands = {Fraction(0), Fraction(2)}
        for a in range(len(points)):
            for b in range(a + 1, len(points)):
                di = points[a][0] - points[b][0]
                dj = points[a][1] - points[b][1]
                if di == dj:
                    continue
                t = Fraction(2 * di, di - dj)
                if 0 < t < 2:
                    cands.add(t)
        C._cache[("upsilon-candidates",)] = tuple(sorted(cands))
    return C._cache[("upsilon-candidates",)]


def gamma_pl(C: ModelComplex) -> PLFunction:
    """gamma as an exact PL function of t on [0, 2]."""
    if ("gamma-pl",) not in C._cache:
        C.require_valid()
        cands = breakpoint_candidates(C)
        values = [gamma_at(C, t) for t in cands]
        for (t0, y0), (t1, y1) in zip(zip(cands, values), zip(cands[1:], values[1:])):
            mid = (t0 + t1) / 2
            if gamma_at(C, mid) != (y0 + y1) / 2:
                raise ConsistencyError(f"gamma not linear on ({t0}, {t1})")
        C._cache[("gamma-pl",)] = PLFunction(list(zip(cands, values)))
    return C._cache[("gamma-pl",)]


def upsilon(C: ModelComplex) -> PLFunction:
    """Upsilon(t) = -2 gamma(t), exact on [0, 2]."""
    return gamma_pl(C).scale(-2)


@dataclass(frozen=True)
class PivotData:
    t: Fraction
    gamma_t: Fraction
    on_line: frozenset  # grading-0 slice points of weight exactly gamma(t)
    p_minus: LatticePoint
    p_plus: LatticePoint
    delta: Fraction  # margin within which the one-sided minimizers are constant


def _one_sided_minimizer(C: ModelComplex, t: Fraction) -> LatticePoint:
    value, points = _threshold_gamma(C.generator_coset(), lambda p: phi(t, p))
    if len(points) != 1:
        raise ConsistencyError(f"weight tie off the crossing arrangement at t = {t}")
    return next(iter(points))


def pivot_points(C: ModelComplex, t) -> PivotData:
    """The unique minimizing points just left and just right of t."""
    C.require_valid()
    t = as_rational(t)
    if not 0 < t < 2:
        raise DomainError(f"pivots are defined for t in (0, 2), got {t}")
    cands = breakpoint_candidates(C)
    delta = min(abs(c - t) for c in cands if c != t) / 2
    gamma_t = gamma_at(C, t)
    on_line = frozenset(
        p for p in {e.point for e in C.grading_slice(0)} if phi(t, p) == gamma_t
    )
    p_minus = _one_sided_minimizer(C, t - delta)
    p_plus = _one_sided_minimizer(C, t + delta)
    if phi(t, p_minus) != gamma_t or phi(t, p_plus) != gamma_t:
        raise ConsistencyError("pivot point not on the support line")
    return PivotData(t, gamma_t, on_line, p_minus, p_plus, delta)


def delta_upsilon_prime(C: ModelComplex, t) -> Fraction:
    """Jump of the derivative of Upsilon at t, cross-checked against pivots."""
    t = as_rational(t)
    if not 0 < t < 2:
        raise DomainError(f"derivative jump needs t in (0, 2), got {t}")
    ups = upsilon(C)
    jump = ups.one_sided_slope(t, "right") - ups.one_sided_slope(t, "left")
    pd = pivot_points(C, t)
    from_pivots = Fraction(2) / t * (pd.p_plus[0] - pd.p_minus[0])
    if jump != from_pivots:
        raise ConsistencyError(
            f"slope jump {jump} disagrees with pivot formula {from_pivots} at t = {t}"
        )
    return jump
