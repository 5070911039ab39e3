import pytest

import upsilonkit as uk
from upsilonkit.textio import ComplexParseError, parse_complex, serialize_complex
from helpers import CATALOG_SCAN, built

SAMPLE = """
# a staircase
gen a1 0 0 1
gen b1 1 1 1   # top corner
gen a2 0 1 0
d b1 = a1 + a2
d a1 = 0
"""


def test_parse_basic():
    C = parse_complex(SAMPLE)
    assert C.names == ("a1", "b1", "a2")
    assert C.generator("b1").point == (1, 1)
    assert C.boundary_of("b1") == frozenset({(0, "a1"), (0, "a2")})
    assert C.boundary_of("a1") == frozenset()
    assert C.boundary_of("a2") == frozenset()  # missing d line means zero


def test_parse_u_powers():
    C = parse_complex("gen a 0 0 0\ngen b 1 2 2\nd b = U^2 a\n")
    assert C.boundary_of("b") == frozenset({(2, "a")})


def test_parse_errors_carry_line_numbers():
    cases = [
        ("gen a 0 0\n", 1, "gen NAME GRADING I J"),
        ("gen a 0 0 x\n", 1, "integers"),
        ("gen a 0 0 0\ngen a 0 0 0\n", 2, "duplicate gen"),
        ("foo a\n", 1, "unknown statement"),
        ("gen a 0 0 0\nd a b\n", 2, "needs '='"),
        ("d zz = 0\n", 1, "unknown generator"),
        ("gen a 0 0 0\nd a = 0\nd a = 0\n", 3, "duplicate d"),
        ("gen a 0 0 0\ngen b 1 1 1\nd b = U^0 a\n", 3, "malformed term"),
        ("gen a 0 0 0\ngen b 1 1 1\nd b = U^1 a extra\n", 3, "malformed term"),
        ("gen a 0 0 0\ngen b 1 1 1\nd b = zz\n", 3, "unknown generator"),
    ]
    for text, lineno, fragment in cases:
        with pytest.raises(ComplexParseError, match=fragment) as err:
            parse_complex(text)
        assert err.value.lineno == lineno


def test_serialize_format():
    text = serialize_complex(built("hom-C1"))
    lines = text.splitlines()
    assert lines[0] == "gen a1 0 0 2"
    assert "d b1 = a1 + a2" in lines
    assert "d a1 = 0" in lines
    assert text.endswith("\n")


def test_serialize_u_powers():
    C = parse_complex("gen a 0 0 0\ngen b 1 2 2\nd b = U^2 a\n")
    assert "d b = U^2 a" in serialize_complex(C)


@pytest.mark.parametrize("name", CATALOG_SCAN)
def test_round_trip_preserves_invariants(name):
    C = built(name)
    D = parse_complex(serialize_complex(C))
    assert D.names == C.names
    assert {n: D.boundary_of(n) for n in D.names} == {n: C.boundary_of(n) for n in C.names}
    assert uk.upsilon(D) == uk.upsilon(C)
