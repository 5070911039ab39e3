"""Shared fixtures-by-function for the test suite.

Complexes cache their own invariant computations per instance, so the
tests share instances through an lru_cache keyed by catalog name; a
leading '-' means the dual.
"""

from functools import lru_cache

import upsilonkit as uk

# Every named/parameterized family member exercised by the suites.
CATALOG_SCAN = [
    "unknot",
    "fig8",
    "figure6",
    "hom-C1",
    "hom-C2",
    "hom-K",
    "T(2,3)",
    "T(3,4)",
    "T(2,5)",
    "T(4,5)",
    "T(5,7)",
    "box(1)",
    "box(2)",
    "box(3)",
    "nK(1)",
    "nK(2)",
]


@lru_cache(maxsize=None)
def built(name: str) -> uk.ModelComplex:
    if name.startswith("-"):
        return uk.dual(built(name[1:]))
    return uk.catalog(name)


def interior_breakpoints(C):
    return [x for x, _ in uk.upsilon(C).breakpoints if 0 < x < 2]


def pl(points) -> uk.PLFunction:
    return uk.PLFunction(points)
