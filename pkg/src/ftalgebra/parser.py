"""Text syntax for system expressions.

Grammar (whitespace is ignored between tokens)::

    expr    := term   ( '+' term )*
    term    := factor ( ('*' | 'x' | '×') factor )*
    factor  := NAT? base ( '^' NAT )?
    base    := ATOM | '0' | '1' | '(' expr ')'

A leading coefficient ``n`` repeats the (possibly exponentiated) base as a
direct sum, so ``2A^3`` is ``A^3 + A^3``.  Repetitions are expanded at parse
time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .expr import ONE, ZERO, Atom, One, Product, Sum, SystemExpr, Zero, _Composite


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span.start}..{span.end}")
        self.message = message
        self.span = span


_TOKEN = re.compile(
    r"\s*(?:(?P<nat>[0-9]+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*×^()]|\S))"
)

PRODUCT_OPS = {"*", "x", "×"}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "nat", "name", "op", "end"
    text: str
    span: SourceSpan


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.lastgroup is None:
            # only trailing whitespace left
            break
        kind = m.lastgroup
        span = SourceSpan(m.start(kind), m.end(kind))
        tok_text = m.group(kind)
        if kind == "name" and tok_text == "x":
            kind = "op"
        toks.append(_Tok(kind, tok_text, span))
        pos = m.end()
    toks.append(_Tok("end", "", SourceSpan(len(text), len(text))))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, tok.span)

    def parse(self) -> SystemExpr:
        if self.peek().kind == "end":
            raise self.error("empty expression")
        e = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return e

    def expr(self) -> SystemExpr:
        terms = [self.term()]
        while self.peek().kind == "op" and self.peek().text == "+":
            self.next()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> SystemExpr:
        factors = [self.factor()]
        while self.peek().kind == "op" and self.peek().text in PRODUCT_OPS:
            self.next()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def _starts_base(self, tok: _Tok) -> bool:
        return tok.kind == "name" or tok.kind == "nat" or (
            tok.kind == "op" and tok.text == "("
        )

    def factor(self) -> SystemExpr:
        coeff = 1
        tok = self.peek()
        if tok.kind == "nat" and self._starts_base(self.peek(1)):
            self.next()
            coeff = self._positive(tok, "coefficient")
        e = self.base()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.next()
            tok = self.next()
            if tok.kind != "nat":
                raise self.error("expected exponent", tok)
            e = repeat(Product, e, self._positive(tok, "exponent"))
        return repeat(Sum, e, coeff)

    def _positive(self, tok: _Tok, what: str) -> int:
        n = int(tok.text)
        if n == 0:
            raise self.error(f"{what} must be a positive integer", tok)
        return n

    def base(self) -> SystemExpr:
        tok = self.next()
        if tok.kind == "name":
            return Atom(tok.text)
        if tok.kind == "nat":
            if tok.text == "0":
                return ZERO
            if tok.text == "1":
                return ONE
            raise self.error(f"numeral {tok.text} is not a system", tok)
        if tok.kind == "op" and tok.text == "(":
            e = self.expr()
            close = self.next()
            if close.kind != "op" or close.text != ")":
                raise self.error("expected ')'", close)
            return e
        if tok.kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def repeat(kind: type[_Composite], e: SystemExpr, n: int) -> SystemExpr:
    return e if n == 1 else kind((e,) * n)


def parse(text: str) -> SystemExpr:
    return _Parser(text).parse()


# Precedence levels used by the printer.
_SUM, _TERM, _FACTOR, _BASE = range(4)


def _uniform(e: _Composite) -> bool:
    first = e.children[0]
    return all(c == first for c in e.children[1:])


def _level(e: SystemExpr) -> int:
    if isinstance(e, (Atom, Zero, One)):
        return _BASE
    if _uniform(e):
        return _FACTOR
    return _SUM if isinstance(e, Sum) else _TERM


def format_expr(e: SystemExpr) -> str:
    """Print ``e`` so that ``parse`` rebuilds exactly the same tree.

    A composite whose children are all identical prints as a coefficient
    (sums) or an exponent (products).  Nested composites of the same kind
    keep their parentheses so the tree shape survives the round trip.
    """
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, One):
        return "1"
    n = len(e.children)
    child = e.children[0]
    if _uniform(e):
        if isinstance(e, Product):
            return f"{_wrap(child, _BASE)}^{n}"
        inner = child
        if isinstance(inner, Product) and _uniform(inner):
            base = inner.children[0]
            base_text = _wrap(base, _BASE, force=isinstance(base, (Zero, One)))
            return f"{n}{base_text}^{len(inner.children)}"
        # digits must not run into a 0/1 base
        return f"{n}{_wrap(inner, _BASE, force=isinstance(inner, (Zero, One)))}"
    if isinstance(e, Sum):
        # a Sum child needs parens; a coefficient sum is already a factor
        return " + ".join(_wrap(c, _TERM) for c in e.children)
    return "*".join(_wrap(c, _FACTOR) for c in e.children)


def _wrap(e: SystemExpr, min_level: int, force: bool = False) -> str:
    s = format_expr(e)
    if force or _level(e) < min_level:
        return f"({s})"
    return s
