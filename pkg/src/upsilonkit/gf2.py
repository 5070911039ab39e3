"""Bit-packed linear algebra over the two-element field.

Vectors are plain Python ints: bit ``i`` is the coefficient of basis
element ``i`` and addition is XOR, so everything is exact for any
dimension.  Pivoting always uses the highest set bit, which keeps
echelon bases, solutions, and kernel bases deterministic.
"""

from __future__ import annotations

from typing import Iterable, Optional


def support(v: int) -> tuple[int, ...]:
    """Indices of the set bits of v, ascending."""
    out = []
    idx = 0
    while v:
        if v & 1:
            out.append(idx)
        v >>= 1
        idx += 1
    return tuple(out)


def from_support(indices: Iterable[int]) -> int:
    v = 0
    for i in indices:
        v |= 1 << i
    return v


def combine(vectors: list[int], combo: int) -> int:
    """XOR of the vectors selected by the bits of combo."""
    acc = 0
    idx = 0
    while combo:
        if combo & 1:
            acc ^= vectors[idx]
        combo >>= 1
        idx += 1
    return acc


class Gf2Span:
    """Growable span of bit vectors kept in row-echelon form."""

    __slots__ = ("_rows",)

    def __init__(self, vectors: Iterable[int] = ()):
        self._rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        """Residue of v modulo the span; 0 iff v is a member."""
        rows = self._rows
        while v:
            row = rows.get(v.bit_length() - 1)
            if row is None:
                break
            v ^= row
        return v

    def add(self, v: int) -> bool:
        """Add v to the span; returns True iff the span grew."""
        v = self.reduce(v)
        if v == 0:
            return False
        self._rows[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis(self) -> list[int]:
        return [self._rows[p] for p in sorted(self._rows)]

    def copy(self) -> "Gf2Span":
        other = Gf2Span()
        other._rows = dict(self._rows)
        return other


class Gf2Solver:
    """Echelon form of a column set, tracking column combinations.

    Supports particular solutions of ``M x = b`` (as a bitmask over the
    columns added so far) and a basis for the kernel of M.
    """

    __slots__ = ("_rows", "_kernel", "_ncols")

    def __init__(self, columns: Iterable[int] = ()):
        self._rows: dict[int, tuple[int, int]] = {}
        self._kernel: list[int] = []
        self._ncols = 0
        for c in columns:
            self.add_column(c)

    def _reduce(self, v: int, combo: int) -> tuple[int, int]:
        rows = self._rows
        while v:
            rc = rows.get(v.bit_length() - 1)
            if rc is None:
                break
            v ^= rc[0]
            combo ^= rc[1]
        return v, combo

    def add_column(self, v: int) -> None:
        combo = 1 << self._ncols
        self._ncols += 1
        v, combo = self._reduce(v, combo)
        if v:
            self._rows[v.bit_length() - 1] = (v, combo)
        else:
            self._kernel.append(combo)

    def solve(self, target: int) -> Optional[int]:
        """Bitmask x with (columns selected by x) XOR-summing to target."""
        v, combo = self._reduce(target, 0)
        return combo if v == 0 else None

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def num_columns(self) -> int:
        return self._ncols

    def kernel_basis(self) -> list[int]:
        return list(self._kernel)

    def copy(self) -> "Gf2Solver":
        other = Gf2Solver()
        other._rows = dict(self._rows)
        other._kernel = list(self._kernel)
        other._ncols = self._ncols
        return other


def f2_solve(columns: list[int], target: int, nrows: Optional[int] = None) -> Optional[int]:
    """Solve M x = target where M is given by its columns.

    Returns a bitmask over the columns, or None when target is outside
    the column span.  If nrows is given, vectors with bits at or above
    it raise ValueError.
    """
    if nrows is not None:
        for v in list(columns) + [target]:
            if v.bit_length() > nrows:
                raise ValueError(f"vector has {v.bit_length()} rows, expected at most {nrows}")
    return Gf2Solver(columns).solve(target)


def f2_member(basis: Iterable[int], v: int) -> bool:
    """Decide membership of v in the span of the given vectors."""
    return v in Gf2Span(basis)


def f2_rank(vectors: Iterable[int]) -> int:
    return Gf2Span(vectors).rank
