from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from upsilonkit.exact import (
    NEG_INF,
    POS_INF,
    DomainError,
    PLFunction,
    as_rational,
    format_rational,
    pl_evaluate,
    pl_negate_scale,
    pl_one_sided_slope,
)


def test_as_rational():
    assert as_rational(3) == Fraction(3)
    assert as_rational("2/3") == Fraction(2, 3)
    assert as_rational(" -5/2 ") == Fraction(-5, 2)
    assert as_rational(Fraction(1, 7)) == Fraction(1, 7)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("x")


def test_format_rational():
    assert format_rational(Fraction(2, 3)) == "2/3"
    assert format_rational(-2) == "-2/1"
    assert format_rational(POS_INF) == "+inf"
    assert format_rational(NEG_INF) == "-inf"


def test_construction_requires_full_domain():
    with pytest.raises(ValueError):
        PLFunction([(0, 0)])
    with pytest.raises(ValueError):
        PLFunction([(0, 0), (1, 1)])  # must end at 2
    with pytest.raises(ValueError):
        PLFunction([(Fraction(1, 2), 0), (2, 1)])  # must start at 0
    with pytest.raises(ValueError):
        PLFunction([(0, 0), (1, 1), (1, 2), (2, 0)])  # strictly increasing x


def test_collinear_breakpoints_are_merged():
    f = PLFunction([(0, 0), (1, 1), (2, 2)])
    assert f.breakpoints == ((0, 0), (2, 2))
    g = PLFunction([(0, 0), (1, 1), (Fraction(3, 2), 1), (2, 1)])
    assert g.breakpoints == ((0, 0), (1, 1), (2, 1))


def test_canonical_equality_and_hash():
    f = PLFunction([(0, 0), (1, 1), (2, 2)])
    g = PLFunction([(0, 0), (Fraction(1, 3), Fraction(1, 3)), (2, 2)])
    assert f == g and hash(f) == hash(g)
    assert f != PLFunction([(0, 0), (1, 1), (2, 0)])


def test_constant():
    f = PLFunction.constant(Fraction(-2))
    assert f.breakpoints == ((0, -2), (2, -2))
    assert PLFunction.constant(POS_INF).infinite_value == POS_INF
    assert PLFunction.constant(NEG_INF).infinite_value == NEG_INF


def test_evaluate_and_domain():
    f = PLFunction([(0, 0), (Fraction(2, 3), -2), (Fraction(4, 3), -2), (2, 0)])
    assert f.evaluate(Fraction(1, 3)) == -1
    assert f.evaluate("2/3") == -2
    assert f(1) == -2
    assert pl_evaluate(f, 2) == 0
    with pytest.raises(DomainError):
        f.evaluate(Fraction(-1, 2))
    with pytest.raises(DomainError):
        f.evaluate(Fraction(5, 2))


def test_infinite_function():
    f = PLFunction(infinite=POS_INF)
    assert not f.is_finite
    assert f.evaluate(1) == POS_INF
    with pytest.raises(ValueError):
        PLFunction([(0, 0), (2, 0)], infinite=POS_INF)
    with pytest.raises(ValueError):
        PLFunction(infinite=7)
    with pytest.raises(DomainError):
        f.one_sided_slope(1, "left")
    with pytest.raises(DomainError):
        f + PLFunction.constant(0)


def test_one_sided_slope():
    f = PLFunction([(0, 0), (1, -3), (2, 0)])
    assert f.one_sided_slope(1, "left") == -3
    assert f.one_sided_slope(1, "right") == 3
    assert f.one_sided_slope(Fraction(1, 2), "left") == -3
    assert f.one_sided_slope(Fraction(1, 2), "right") == -3
    assert pl_one_sided_slope(f, 2, "left") == 3
    with pytest.raises(DomainError):
        f.one_sided_slope(0, "left")
    with pytest.raises(DomainError):
        f.one_sided_slope(2, "right")
    with pytest.raises(ValueError):
        f.one_sided_slope(1, "middle")


def test_scale_and_neg():
    f = PLFunction([(0, 0), (1, 1), (2, 0)])
    assert f.scale(-2).breakpoints == ((0, 0), (1, -2), (2, 0))
    assert f.scale(2, 1).evaluate(1) == 3
    assert (-f) == f.scale(-1)
    assert pl_negate_scale(f, -2) == f.scale(-2)
    inf = PLFunction(infinite=NEG_INF)
    assert inf.scale(-2).infinite_value == POS_INF
    with pytest.raises(DomainError):
        inf.scale(0)


def test_add():
    f = PLFunction([(0, 0), (1, 1), (2, 0)])
    g = PLFunction([(0, 0), (Fraction(1, 2), -1), (2, 2)])
    h = f + g
    for x in (0, Fraction(1, 2), 1, Fraction(3, 2), 2):
        assert h.evaluate(x) == f.evaluate(x) + g.evaluate(x)
    assert (f + f.scale(-1)) == PLFunction.constant(0)


rationals = st.fractions(
    min_value=Fraction(0), max_value=Fraction(2), max_denominator=12
)


@given(st.lists(rationals, min_size=0, max_size=4), rationals)
def test_scale_matches_pointwise(xs, x):
    ys = {Fraction(0): Fraction(1), Fraction(2): Fraction(-1)}
    for k, xv in enumerate(sorted(set(xs))):
        ys.setdefault(xv, Fraction(k, 3))
    f = PLFunction(sorted(ys.items()))
    assert f.scale(-2, 5).evaluate(x) == -2 * f.evaluate(x) + 5
