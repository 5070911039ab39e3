"""Expression language for building complexes on the command line.

    atom   := catalog name | T(p,q) | stair[a1,...] | box(n) | nK(n)
            | @path | '(' expr ')'
    unary  := '-' unary | atom            (dual)
    power  := INT '*' power | unary       (tensor power)
    tensor := power ('#' power)*          (connected sum)
    sum    := tensor ('+' tensor)*        (direct sum)

Precedence: '-' over '*' over '#' over '+'.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Union

from .catalog import box_complex, catalog, nk_complex, stairway, torus_knot_complex
from .complexes import ModelComplex, direct_sum, dual, tensor, tensor_power
from .textio import parse_complex


class ExprParseError(ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        detail = f" at offset {offset}"
        if expected:
            detail += f" (expected {', '.join(sorted(expected))})"
        super().__init__(message + detail)
        self.offset = offset
        self.expected = tuple(sorted(expected))


@dataclass(frozen=True)
class Atom:
    kind: str  # "catalog" | "torus" | "stair" | "box" | "nk" | "file"
    payload: object


@dataclass(frozen=True)
class Dual:
    operand: "Node"


@dataclass(frozen=True)
class Power:
    n: int
    operand: "Node"


@dataclass(frozen=True)
class Tensor:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sum:
    left: "Node"
    right: "Node"


Node = Union[Atom, Dual, Power, Tensor, Sum]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_-]*)|(?P<int>\d+)|(?P<file>@[^\s()#+*]+)"
    r"|(?P<punct>[()\[\],#+*-]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ExprParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                                 len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, off = self.peek()
        if val != value:
            raise ExprParseError(f"unexpected token {val or 'end of input'!r}", off, {repr(value)})
        return self.next()

    def parse(self) -> Node:
        node = self.sum()
        kind, val, off = self.peek()
        if kind != "end":
            raise ExprParseError(f"trailing input {val!r}", off, {"'#'", "'+'", "end of input"})
        return node

    def sum(self) -> Node:
        node = self.tensor()
        while self.peek()[1] == "+":
            self.next()
            node = Sum(node, self.tensor())
        return node

    def tensor(self) -> Node:
        node = self.power()
        while self.peek()[1] == "#":
            self.next()
            node = Tensor(node, self.power())
        return node

    def power(self) -> Node:
        kind, val, off = self.peek()
        if kind == "int":
            self.next()
            n = int(val)
            if n <= 0:
                raise ExprParseError(f"tensor power must be positive, got {n}", off)
            self.expect("*")
            return Power(n, self.power())
        return self.unary()

    def unary(self) -> Node:
        if self.peek()[1] == "-":
            self.next()
            return Dual(self.unary())
        return self.atom()

    def atom(self) -> Node:
        kind, val, off = self.next()
        if val == "(":
            node = self.sum()
            self.expect(")")
            return node
        if kind == "file":
            return Atom("file", val[1:])
        if kind == "name":
            if val == "T":
                p, q = self.int_pair()
                return Atom("torus", (p, q))
            if val == "stair":
                return Atom("stair", tuple(self.int_list()))
            if val == "box":
                return Atom("box", self.int_args(1)[0])
            if val == "nK":
                return Atom("nk", self.int_args(1)[0])
            return Atom("catalog", val)
        raise ExprParseError(
            f"unexpected token {val or 'end of input'!r}", off,
            {"a name", "'('", "'-'", "'@file'", "an integer"},
        )

    def int_pair(self):
        a, b = self.int_args(2)
        return a, b

    def int_args(self, count: int):
        self.expect("(")
        out = [self.integer()]
        while len(out) < count:
            self.expect(",")
            out.append(self.integer())
        self.expect(")")
        return out

    def int_list(self):
        self.expect("[")
        out = [self.integer()]
        while self.peek()[1] == ",":
            self.next()
            out.append(self.integer())
        self.expect("]")
        return out

    def integer(self) -> int:
        kind, val, off = self.next()
        if kind != "int":
            raise ExprParseError(f"unexpected token {val or 'end of input'!r}", off, {"an integer"})
        return int(val)


def parse_expression(text: str) -> Node:
    return _Parser(text).parse()


def build(node: Node, base_dir: str = ".") -> ModelComplex:
    """Evaluate a parsed expression to a model complex."""
    if isinstance(node, Atom):
        if node.kind == "catalog":
            return catalog(node.payload)
        if node.kind == "torus":
            return torus_knot_complex(*node.payload)
        if node.kind == "stair":
            return stairway(list(node.payload))
        if node.kind == "box":
            return box_complex(node.payload)
        if node.kind == "nk":
            return nk_complex(node.payload)
        if node.kind == "file":
            path = os.path.join(base_dir, node.payload)
            with open(path, encoding="utf-8") as fh:
                return parse_complex(fh.read())
    if isinstance(node, Dual):
        return dual(build(node.operand, base_dir))
    if isinstance(node, Power):
        return tensor_power(build(node.operand, base_dir), node.n)
    if isinstance(node, Tensor):
        return tensor(build(node.left, base_dir), build(node.right, base_dir))
    if isinstance(node, Sum):
        return direct_sum(build(node.left, base_dir), build(node.right, base_dir))
    raise TypeError(f"not an expression node: {node!r}")


def parse_and_build(text: str, base_dir: str = ".") -> ModelComplex:
    return build(parse_expression(text), base_dir)
