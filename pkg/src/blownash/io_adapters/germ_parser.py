from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ConstantTerm, GermSyntaxError, ZeroPolynomial
from ..model.germ import Germ

# Sparse polynomial while parsing: ((var_index, exponent), ...) sorted -> coefficient.
# Variable indices are 0-based: x/x1 -> 0, y/x2 -> 1, z/x3 -> 2, xk -> k-1.
_Mono = tuple[tuple[int, int], ...]
_Poly = dict[_Mono, int]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+|[xyz])|(?P<op>[-+*^()]))")
_XYZ = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int" | "var" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise GermSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup or "op"
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _mono_mul(a: _Mono, b: _Mono) -> _Mono:
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _poly_add(a: _Poly, b: _Poly, sign: int = 1) -> _Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sign * c
        if out[m] == 0:
            del out[m]
    return out


def _poly_mul(a: _Poly, b: _Poly) -> _Poly:
    out: _Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


class _Parser:
    """
    Recursive descent over the grammar

        expr   := [sign] term { sign term }
        term   := factor { ["*"] factor }
        factor := atom [ "^" INT ]
        atom   := INT | VAR | "(" expr ")"
    """

    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.uses_xyz = False
        self.uses_indexed = False

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Tok) -> GermSyntaxError:
        return GermSyntaxError(message, self.text, tok.pos)

    def parse(self) -> _Poly:
        if self.peek().kind == "end":
            raise self.fail("empty germ", self.peek())
        poly = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise self.fail(f"unexpected {tok.text!r}", tok)
        return poly

    def expr(self) -> _Poly:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        acc = _poly_add({}, self.term(), sign)
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                acc = _poly_add(acc, self.term(), -1 if tok.text == "-" else 1)
            else:
                return acc

    def term(self) -> _Poly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                acc = _poly_mul(acc, self.factor())
            elif tok.kind in ("int", "var") or (tok.kind == "op" and tok.text == "("):
                acc = _poly_mul(acc, self.factor())
            else:
                return acc

    def factor(self) -> _Poly:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok.kind != "int":
                raise self.fail("expected a nonnegative integer exponent", exp_tok)
            out: _Poly = {(): 1}
            for _ in range(int(exp_tok.text)):
                out = _poly_mul(out, base)
            return out
        return base

    def atom(self) -> _Poly:
        tok = self.take()
        if tok.kind == "int":
            return {(): int(tok.text)} if int(tok.text) else {}
        if tok.kind == "var":
            return {((self.var_index(tok), 1),): 1}
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                raise self.fail("expected ')'", close)
            return inner
        raise self.fail("expected a number, a variable or '('" if tok.kind != "end" else "unexpected end of input", tok)

    def var_index(self, tok: _Tok) -> int:
        if tok.text in _XYZ:
            self.uses_xyz = True
            idx = _XYZ[tok.text]
        else:
            self.uses_indexed = True
            idx = int(tok.text[1:]) - 1
            if idx < 0:
                raise self.fail("indexed variables start at x1", tok)
        if self.uses_xyz and self.uses_indexed:
            raise self.fail("cannot mix x,y,z with x1..xd", tok)
        return idx


def parse(text: str, d: int | None = None) -> Germ:
    """
    Parse a germ such as "x^2+y^4" or "-(x^2+y^4+z^4)".

    The dimension is the highest variable used (x=1, y=2, z=3, xk=k) unless d is given,
    in which case the polynomial is embedded in d variables.
    """
    p = _Parser(text)
    poly = p.parse()
    if not poly:
        raise ZeroPolynomial(f"{text!r} is the zero polynomial")
    if () in poly:
        raise ConstantTerm(f"{text!r} has constant term {poly[()]}")
    used = max(v for mono in poly for v, _ in mono) + 1
    dim = used if d is None else d
    if dim < used:
        raise GermSyntaxError(f"germ uses {used} variables but d={dim} was requested", text, 0)
    support: dict[tuple[int, ...], int] = {}
    for mono, c in poly.items():
        exps = [0] * dim
        for v, e in mono:
            exps[v] = e
        support[tuple(exps)] = c
    return Germ.from_map(dim, support)
