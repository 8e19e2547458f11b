"""Parser/evaluator for user-supplied profile expressions in the variable s.

Grammar (highest precedence first):

    power   (^, right-associative)
    unary minus
    * /     (left-associative)
    + -     (left-associative)

with parentheses, numeric literals, the variable ``s`` and the functions
sin, cos, tan, sinh, cosh, tanh, sech, exp, sqrt, abs.  Parse errors carry
the character offset and the set of tokens that would have been accepted;
evaluation errors (division by zero, sqrt of a negative) carry the offset
of the offending operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ExprEvalError, ExprSyntaxError

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "tanh": np.tanh,
    "sech": lambda x: 1.0 / np.cosh(x),
    "exp": np.exp,
    "sqrt": None,  # handled specially: needs a domain check
    "abs": np.abs,
}

VARIABLE = "s"


class Token(NamedTuple):
    kind: str  # number | ident | op | lparen | rparen | end
    text: str
    pos: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            j = i
            seen_dot = False
            while j < n and (text[j].isdigit() or (text[j] == "." and not seen_dot)):
                seen_dot = seen_dot or text[j] == "."
                j += 1
            # exponent part like 1e-3
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and text[k] in "+-":
                    k += 1
                if k < n and text[k].isdigit():
                    while k < n and text[k].isdigit():
                        k += 1
                    j = k
            num = text[i:j]
            try:
                float(num)
            except ValueError:
                raise ExprSyntaxError(i, {"number"}, repr(num)) from None
            tokens.append(Token("number", num, i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^":
            tokens.append(Token("op", ch, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(Token("lparen", ch, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(Token("rparen", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(i, {"number", "identifier", "operator", "'('", "')'"}, repr(ch))
    tokens.append(Token("end", "", n))
    return tokens


@dataclass(frozen=True)
class Num:
    value: float
    pos: int


@dataclass(frozen=True)
class Var:
    pos: int


@dataclass(frozen=True)
class Unary:
    operand: object
    pos: int


@dataclass(frozen=True)
class Bin:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Call:
    name: str
    arg: object
    pos: int


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.cur
        self.i += 1
        return tok

    def expect(self, kind: str, expected: set[str]) -> Token:
        if self.cur.kind != kind:
            raise ExprSyntaxError(self.cur.pos, expected, self.cur.text or "end of input")
        return self.advance()

    def parse(self):
        node = self.sum()
        if self.cur.kind != "end":
            raise ExprSyntaxError(self.cur.pos, {"operator", "end of input"},
                                  self.cur.text)
        return node

    def sum(self):
        node = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            tok = self.advance()
            node = Bin(tok.text, node, self.term(), tok.pos)
        return node

    def term(self):
        node = self.unary()
        while self.cur.kind == "op" and self.cur.text in "*/":
            tok = self.advance()
            node = Bin(tok.text, node, self.unary(), tok.pos)
        return node

    def unary(self):
        if self.cur.kind == "op" and self.cur.text == "-":
            tok = self.advance()
            return Unary(self.unary(), tok.pos)
        return self.power()

    def power(self):
        base = self.primary()
        if self.cur.kind == "op" and self.cur.text == "^":
            tok = self.advance()
            # right-associative; the exponent may carry a unary minus
            return Bin("^", base, self.unary(), tok.pos)
        return base

    def primary(self):
        tok = self.cur
        if tok.kind == "number":
            self.advance()
            return Num(float(tok.text), tok.pos)
        if tok.kind == "ident":
            self.advance()
            if tok.text == VARIABLE:
                return Var(tok.pos)
            if tok.text in FUNCTIONS:
                self.expect("lparen", {"'('"})
                arg = self.sum()
                self.expect("rparen", {"')'"})
                return Call(tok.text, arg, tok.pos)
            raise ExprSyntaxError(tok.pos, {"'s'"} | set(FUNCTIONS), tok.text)
        if tok.kind == "lparen":
            self.advance()
            node = self.sum()
            self.expect("rparen", {"')'"})
            return node
        raise ExprSyntaxError(tok.pos, {"number", "'s'", "function", "'('", "'-'"},
                              tok.text or "end of input")


def _eval(node, s):
    if isinstance(node, Num):
        return np.full_like(s, node.value) if np.ndim(s) else node.value
    if isinstance(node, Var):
        return s
    if isinstance(node, Unary):
        return -_eval(node.operand, s)
    if isinstance(node, Bin):
        left = _eval(node.left, s)
        right = _eval(node.right, s)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            if np.any(np.asarray(right) == 0.0):
                raise ExprEvalError(f"division by zero at offset {node.pos}", node.pos)
            return left / right
        return np.power(left, right)
    if isinstance(node, Call):
        arg = _eval(node.arg, s)
        if node.name == "sqrt":
            if np.any(np.asarray(arg) < 0.0):
                raise ExprEvalError(
                    f"sqrt of a negative value at offset {node.pos}", node.pos)
            return np.sqrt(arg)
        return FUNCTIONS[node.name](arg)
    raise TypeError(f"unexpected node {node!r}")


@dataclass(frozen=True)
class ProfileExpr:
    """A parsed expression over the variable s."""

    text: str
    root: object

    def evaluate(self, s):
        """Evaluate at a scalar or array of s values."""
        return _eval(self.root, np.asarray(s, dtype=float))

    __call__ = evaluate


def parse_profile(text: str) -> ProfileExpr:
    """Parse an expression; raises ExprSyntaxError with offset and
    expected-token set on malformed input."""
    return ProfileExpr(text, _Parser(_tokenize(text)).parse())
