"""Ready-made model complexes: stairways, torus-knot staircases, box
complexes, and the small named catalog used by the CLI and the tests."""

from __future__ import annotations

import re
from math import gcd

from .complexes import Generator, LatticePoint, ModelComplex, direct_sum, dual, tensor


def unknot() -> ModelComplex:
    return ModelComplex([Generator("a", 0, 0, 0)], {})


def stairway(steps) -> ModelComplex:
    """Staircase complex from alternating step lengths [a1, ..., a2m].

    The walk starts at (0, sum of even-indexed steps); odd steps move
    right, even steps move down.  Corners after even steps (and the
    start) are grading-0 generators a1, a2, ...; corners after odd
    steps are grading-1 generators b1, b2, ... with d(bk) = ak + a(k+1).
    """
    steps = list(steps)
    if not steps or len(steps) % 2 != 0:
        raise ValueError(f"step vector must have positive even length, got {steps}")
    if any(not isinstance(a, int) or a <= 0 for a in steps):
        raise ValueError(f"step lengths must be positive integers, got {steps}")
    i, j = 0, sum(steps[1::2])
    gens = [Generator("a1", 0, i, j)]
    boundary = {}
    for k in range(0, len(steps), 2):
        i += steps[k]
        b = Generator(f"b{k // 2 + 1}", 1, i, j)
        j -= steps[k + 1]
        a = Generator(f"a{k // 2 + 2}", 0, i, j)
        boundary[b.name] = [(0, gens[-1].name), (0, a.name)]
        gens += [b, a]
    return ModelComplex(gens, boundary)


def torus_knot_steps(p: int, q: int) -> list[int]:
    """Step vector of the T(p, q) staircase from the gap sequence of
    (t^(pq) - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"need coprime p, q >= 2, got ({p}, {q})")
    # Exact division of polynomials with int coefficients, dense lists
    # with index = exponent.
    num = _poly_mul(_cyclic(p * q), _cyclic(1))
    den = _poly_mul(_cyclic(p), _cyclic(q))
    quot = _poly_divexact(num, den)
    exponents = [e for e, c in enumerate(quot) if c]
    if any(c not in (-1, 0, 1) for c in quot):
        raise AssertionError("torus knot polynomial should have coefficients in {-1, 0, 1}")
    exponents.sort(reverse=True)
    return [a - b for a, b in zip(exponents, exponents[1:])]


def _cyclic(n: int) -> list[int]:
    return [-1] + [0] * (n - 1) + [1]  # t^n - 1


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                out[i + k] += ai * bk
    return out


def _poly_divexact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for top in range(len(num) - 1, len(den) - 2, -1):
        c = num[top]
        if c == 0:
            continue
        assert c % den[-1] == 0
        k = top - (len(den) - 1)
        f = c // den[-1]
        out[k] = f
        for e, dc in enumerate(den):
            num[k + e] -= f * dc
    if any(num):
        raise AssertionError("polynomial division left a remainder")
    return out


def torus_knot_complex(p: int, q: int) -> ModelComplex:
    return stairway(torus_knot_steps(p, q))


def box_complex(n: int) -> ModelComplex:
    """Square complex on a side-2n box with a central vertex; Upsilon
    vanishes but the secondary scalar is -2n."""
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"box complex needs n >= 1, got {n}")
    gens = [
        Generator("A", 0, -n, n),
        Generator("B", 0, 0, 0),
        Generator("C", 0, n, -n),
        Generator("X", 1, n, n),
        Generator("u", -1, -n, -n),
    ]
    boundary = {
        "X": [(0, "A"), (0, "C")],
        "A": [(0, "u")],
        "B": [(0, "u")],
        "C": [(0, "u")],
    }
    return ModelComplex(gens, boundary)


def figure6_complex() -> ModelComplex:
    """Seven-generator complex whose Upsilon derivative jumps by -4 at
    t = 1 while the secondary invariant there is the constant -4."""
    gens = [
        Generator("a", 0, -3, 1),
        Generator("b", 0, 0, -2),
        Generator("c", 0, -2, 0),
        Generator("d", 0, 1, -3),
        Generator("e", 1, 1, 1),
        Generator("u1", -1, -3, -2),
        Generator("u2", -1, -2, -3),
    ]
    boundary = {
        "e": [(0, "a"), (0, "b"), (0, "c"), (0, "d")],
        "a": [(0, "u1")],
        "b": [(0, "u1")],
        "c": [(0, "u2")],
        "d": [(0, "u2")],
    }
    return ModelComplex(gens, boundary)


def figure8_complex() -> ModelComplex:
    """Thin five-generator model: an isolated generator at the origin
    plus a unit box; Upsilon vanishes identically."""
    gens = [
        Generator("a", 0, 0, 0),
        Generator("tr", 1, 1, 1),
        Generator("tl", 0, 0, 1),
        Generator("br", 0, 1, 0),
        Generator("bl", -1, 0, 0),
    ]
    boundary = {
        "tr": [(0, "tl"), (0, "br")],
        "tl": [(0, "bl")],
        "br": [(0, "bl")],
    }
    return ModelComplex(gens, boundary)


def acyclic_box(corner: LatticePoint = (0, 0), size: int = 1) -> ModelComplex:
    """Four-generator square with zero graded homology; bottom-left
    corner at the given point."""
    if not isinstance(size, int) or size <= 0:
        raise ValueError(f"box size must be a positive integer, got {size}")
    x, y = corner
    gens = [
        Generator("qtr", 1, x + size, y + size),
        Generator("qtl", 0, x, y + size),
        Generator("qbr", 0, x + size, y),
        Generator("qbl", -1, x, y),
    ]
    boundary = {
        "qtr": [(0, "qtl"), (0, "qbr")],
        "qtl": [(0, "qbl")],
        "qbr": [(0, "qbl")],
    }
    return ModelComplex(gens, boundary)


def add_acyclic_box(C: ModelComplex, corner: LatticePoint, size: int) -> ModelComplex:
    return direct_sum(C, acyclic_box(corner, size))


def nk_complex(n: int) -> ModelComplex:
    """n-fold connected sum of the ladder-minus-staircase difference:
    stairway [2]*2n tensored with the dual of stairway [1]*4n."""
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"nK needs n >= 1, got {n}")
    return tensor(stairway([2] * (2 * n)), dual(stairway([1] * (4 * n))))


_FIXED = {
    "unknot": unknot,
    "fig8": figure8_complex,
    "figure6": figure6_complex,
    "hom-C1": lambda: stairway([2, 2]),
    "hom-C2": lambda: stairway([1, 1, 1, 1]),
    "hom-K": lambda: tensor(stairway([2, 2]), dual(stairway([1, 1, 1, 1]))),
}

CATALOG_NAMES = sorted(_FIXED) + ["T(p,q)", "box(n)", "nK(n)"]

_TORUS_RE = re.compile(r"T\((\d+),(\d+)\)$")
_BOX_RE = re.compile(r"box\((\d+)\)$")
_NK_RE = re.compile(r"nK\((\d+)\)$")


def catalog(name: str) -> ModelComplex:
    """Look up a named complex; parameterized names accept any valid
    parameters (coprime p, q for torus knots; n >= 1 for box/nK)."""
    key = name.replace(" ", "")
    if key in _FIXED:
        return _FIXED[key]()
    if m := _TORUS_RE.match(key):
        return torus_knot_complex(int(m.group(1)), int(m.group(2)))
    if m := _BOX_RE.match(key):
        return box_complex(int(m.group(1)))
    if m := _NK_RE.match(key):
        return nk_complex(int(m.group(1)))
    raise KeyError(f"unknown catalog name {name!r}; valid names: {', '.join(CATALOG_NAMES)}")
