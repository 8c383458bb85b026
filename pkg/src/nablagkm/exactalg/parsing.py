"""Canonical text rendering and re-parsing of polynomials and fractions.

Grammar (also the output syntax):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' integer)?
    base   := integer | name | '(' expr ')' | '-' factor

Variable names are registry entries such as q, t, x1..xn, eps.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .mpoly import MPoly, Registry
from .ratfrac import RatFrac

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z][A-Za-z0-9]*|\^|\*|/|\+|-|\(|\))")


def _tokenize(s: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ValueError("bad token at %r" % s[pos:])
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], registry: Registry):
        self.tokens = tokens
        self.i = 0
        self.registry = registry

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise ValueError("expected %r, got %r" % (tok, got))

    def parse_expr(self) -> RatFrac:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> RatFrac:
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_factor(self) -> RatFrac:
        base = self.parse_base()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ValueError("bad exponent %r" % tok)
            k = int(tok)
            return base ** (-k if neg else k)
        return base

    def parse_base(self) -> RatFrac:
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of input")
        if tok == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        if tok == "-":
            return -self.parse_factor()
        if tok.isdigit():
            return RatFrac.const(self.registry, int(tok))
        if tok in self.registry:
            return RatFrac.var(self.registry, tok)
        raise ValueError("unknown variable %r (registry %r)" % (tok, self.registry))


def parse_frac(s: str, registry: Registry) -> RatFrac:
    p = _Parser(_tokenize(s), registry)
    value = p.parse_expr()
    if p.peek() is not None:
        raise ValueError("trailing input at %r" % p.tokens[p.i:])
    return value


def parse_poly(s: str, registry: Registry) -> MPoly:
    return parse_frac(s, registry).as_poly()


def _render_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def render_poly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = "*".join(
            name if k == 1 else "%s^%d" % (name, k)
            for name, k in zip(p.registry, e)
            if k
        )
        if not mono:
            frag = _render_coeff(abs(c))
        elif abs(c) == 1:
            frag = mono
        else:
            frag = "%s*%s" % (_render_coeff(abs(c)), mono)
        parts.append(("-" if c < 0 else "+", frag))
    sign, frag = parts[0]
    out = ("-" if sign == "-" else "") + frag
    for sign, frag in parts[1:]:
        out += sign + frag
    return out


def _needs_parens(p: MPoly) -> bool:
    return len(p.terms) > 1 or (len(p.terms) == 1 and min(p.terms.values(), key=abs) < 0)


def render_frac(f: RatFrac) -> str:
    num = render_poly(f.num)
    if f.den.is_const() and f.den.const_value() == 1:
        return num
    den = render_poly(f.den)
    ns = "(%s)" % num if _needs_parens(f.num) or "/" in num else num
    ds = "(%s)" % den if _needs_parens(f.den) or len(f.den.terms) > 1 else "(%s)" % den
    return "%s/%s" % (ns, ds)
