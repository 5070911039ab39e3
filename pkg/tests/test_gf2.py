import pytest
from hypothesis import given
from hypothesis import strategies as st

from upsilonkit.gf2 import (
    Gf2Solver,
    Gf2Span,
    combine,
    f2_member,
    f2_rank,
    f2_solve,
    from_support,
    support,
)

vectors = st.integers(min_value=0, max_value=(1 << 12) - 1)


def test_support_round_trip():
    assert support(0) == ()
    assert support(0b1011) == (0, 1, 3)
    assert from_support([0, 1, 3]) == 0b1011
    assert from_support([]) == 0


@given(vectors)
def test_support_from_support_inverse(v):
    assert from_support(support(v)) == v


def test_combine():
    vs = [0b001, 0b010, 0b100]
    assert combine(vs, 0b000) == 0
    assert combine(vs, 0b101) == 0b101
    assert combine([3, 3], 0b11) == 0


def test_span_membership_and_rank():
    span = Gf2Span([0b110, 0b011])
    assert 0b101 in span  # the sum
    assert 0b100 not in span
    assert span.rank == 2
    assert not span.add(0b101)  # dependent, span unchanged
    assert span.add(0b100)
    assert span.rank == 3


def test_span_reduce_residue():
    span = Gf2Span([0b110])
    assert span.reduce(0b110) == 0
    assert span.reduce(0b111) in (0b001, 0b111 ^ 0b110)


def test_span_copy_is_independent():
    span = Gf2Span([0b1])
    clone = span.copy()
    clone.add(0b10)
    assert span.rank == 1 and clone.rank == 2


def test_solver_solution_and_kernel():
    cols = [0b011, 0b110, 0b101]  # third = sum of first two
    solver = Gf2Solver(cols)
    assert solver.rank == 2
    kernel = solver.kernel_basis()
    assert len(kernel) == 1
    assert combine(cols, kernel[0]) == 0
    x = solver.solve(0b110)
    assert x is not None and combine(cols, x) == 0b110
    assert solver.solve(0b100) is None


def test_solver_copy_is_independent():
    solver = Gf2Solver([0b1])
    clone = solver.copy()
    clone.add_column(0b10)
    assert solver.num_columns == 1 and clone.num_columns == 2


def test_f2_wrappers():
    cols = [0b011, 0b110]
    x = f2_solve(cols, 0b101)
    assert x is not None and combine(cols, x) == 0b101
    assert f2_solve(cols, 0b100) is None
    assert f2_member(cols, 0b101)
    assert not f2_member(cols, 0b001)
    assert f2_rank([0b1, 0b10, 0b11]) == 2


def test_f2_solve_nrows_guard():
    with pytest.raises(ValueError):
        f2_solve([0b1000], 0b1, nrows=3)
    assert f2_solve([0b100], 0b100, nrows=3) is not None


@given(st.lists(vectors, max_size=8), vectors)
def test_solver_agrees_with_span(cols, target):
    solver = Gf2Solver(cols)
    x = solver.solve(target)
    if x is None:
        assert not f2_member(cols, target)
    else:
        assert combine(cols, x) == target
    for k in solver.kernel_basis():
        assert k != 0 and combine(cols, k) == 0
    assert solver.rank + len(solver.kernel_basis()) == len(cols)


@given(st.lists(vectors, max_size=8))
def test_span_basis_spans_inputs(vs):
    span = Gf2Span(vs)
    basis = span.basis()
    assert len(basis) == span.rank == f2_rank(vs)
    for v in vs:
        assert f2_member(basis, v)
