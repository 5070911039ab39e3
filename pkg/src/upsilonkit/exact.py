"""Exact scalars and piecewise-linear functions on the interval [0, 2].

Scalars are fractions.Fraction throughout; the two infinities are
math.inf / -math.inf and occur only as the value of the two
constant-infinite functions, never as breakpoint coordinates.
PLFunction is canonical (collinear breakpoints merged), so structural
equality is function equality.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction
from typing import Iterable, Union

POS_INF = math.inf
NEG_INF = -math.inf

RationalLike = Union[int, str, Fraction]


class DomainError(ValueError):
    """Argument outside the domain of an exact operation."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions, and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(q) -> str:
    """Render as 'p/q' (denominator always present); infinities pass through."""
    if q == POS_INF:
        return "+inf"
    if q == NEG_INF:
        return "-inf"
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


class PLFunction:
    """Exact piecewise-linear function on [0, 2].

    Either finite, stored as strictly increasing breakpoints from x=0
    to x=2 with no three collinear, or one of the two constant-infinite
    functions (flag only, no breakpoints).
    """

    __slots__ = ("_points", "_infinite")

    def __init__(self, points: Iterable[tuple] = (), infinite=None):
        if infinite is not None:
            if infinite not in (POS_INF, NEG_INF):
                raise ValueError("infinite flag must be +inf or -inf")
            pts = tuple(points)
            if pts:
                raise ValueError("constant-infinite function takes no breakpoints")
            self._points = ()
            self._infinite = infinite
            return
        self._infinite = None
        pts = [(as_rational(x), as_rational(y)) for x, y in points]
        if len(pts) < 2:
            raise ValueError("need breakpoints at both endpoints 0 and 2")
        if pts[0][0] != 0 or pts[-1][0] != 2:
            raise ValueError("breakpoints must start at x=0 and end at x=2")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if x0 >= x1:
                raise ValueError("breakpoint x-values must be strictly increasing")
        self._points = tuple(_merge_collinear(pts))

    @classmethod
    def constant(cls, y) -> "PLFunction":
        if y == POS_INF or y == NEG_INF:
            return cls(infinite=y)
        y = as_rational(y)
        return cls([(0, y), (2, y)])

    @property
    def is_finite(self) -> bool:
        return self._infinite is None

    @property
    def infinite_value(self):
        return self._infinite

    @property
    def breakpoints(self) -> tuple:
        return self._points

    def evaluate(self, x: RationalLike):
        x = as_rational(x)
        if x < 0 or x > 2:
            raise DomainError(f"x = {x} outside [0, 2]")
        if self._infinite is not None:
            return self._infinite
        xs = [p[0] for p in self._points]
        k = bisect_left(xs, x)
        if k < len(xs) and xs[k] == x:
            return self._points[k][1]
        (x0, y0), (x1, y1) = self._points[k - 1], self._points[k]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    __call__ = evaluate

    def one_sided_slope(self, x: RationalLike, side: str) -> Fraction:
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if self._infinite is not None:
            raise DomainError("slope of a constant-infinite function")
        x = as_rational(x)
        if side == "left" and not 0 < x <= 2:
            raise DomainError(f"left slope needs 0 < x <= 2, got {x}")
        if side == "right" and not 0 <= x < 2:
            raise DomainError(f"right slope needs 0 <= x < 2, got {x}")
        xs = [p[0] for p in self._points]
        k = bisect_left(xs, x)
        if k < len(xs) and xs[k] == x and side == "right":
            k += 1
        (x0, y0), (x1, y1) = self._points[k - 1], self._points[k]
        return (y1 - y0) / (x1 - x0)

    def scale(self, a: RationalLike, b: RationalLike = 0) -> "PLFunction":
        """Pointwise a*f + b."""
        a = as_rational(a)
        b = as_rational(b)
        if self._infinite is not None:
            if a == 0:
                raise DomainError("0 * infinite function is undefined")
            return PLFunction(infinite=self._infinite if a > 0 else -self._infinite)
        return PLFunction([(x, a * y + b) for x, y in self._points])

    def __add__(self, other: "PLFunction") -> "PLFunction":
        if not isinstance(other, PLFunction):
            return NotImplemented
        if self._infinite is not None or other._infinite is not None:
            raise DomainError("sum involving a constant-infinite function")
        xs = sorted({x for x, _ in self._points} | {x for x, _ in other._points})
        return PLFunction([(x, self.evaluate(x) + other.evaluate(x)) for x in xs])

    def __neg__(self) -> "PLFunction":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._infinite == other._infinite and self._points == other._points

    def __hash__(self):
        return hash((self._infinite, self._points))

    def __repr__(self):
        if self._infinite is not None:
            sign = "+inf" if self._infinite == POS_INF else "-inf"
            return f"PLFunction(constant {sign})"
        pieces = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self._points)
        return f"PLFunction([{pieces}])"


def _merge_collinear(pts):
    out = [pts[0]]
    for p in pts[1:]:
        while len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            x2, y2 = p
            if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
                out.pop()
            else:
                break
        out.append(p)
    return out


def pl_evaluate(f: PLFunction, x: RationalLike):
    return f.evaluate(x)


def pl_negate_scale(f: PLFunction, a: RationalLike, b: RationalLike = 0) -> PLFunction:
    return f.scale(a, b)


def pl_one_sided_slope(f: PLFunction, x: RationalLike, side: str) -> Fraction:
    return f.one_sided_slope(x, side)
