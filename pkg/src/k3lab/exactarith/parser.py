"""Text expression grammar for model and lattice files.

    expr     := term (('+'|'-') term)*
    term     := signed (('*'|'/') signed)*
    signed   := '-'? factor
    factor   := base ('^' uint)?
    base     := rational | ident | '(' expr ')'
    rational := uint ('/' uint)?
    ident    := [a-zA-Z][a-zA-Z0-9_]*

Whitespace is insignificant.  There is no implicit multiplication: "x(x+1)"
is a syntax error, "x*(x+1)" is not.  Errors carry the byte offset of the
offending token.  The printer produces text that parses back to the same
value.
"""

from __future__ import annotations

from fractions import Fraction

from k3lab.exactarith.mpoly import MPoly
from k3lab.exactarith.ratfunc import RatFunc


class ExprError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_IDENT_CONT = _IDENT_START | set("0123456789_")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks: list[tuple[str, str, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            toks.append(("ident", text[i:j], i))
            i = j
            continue
        raise ExprError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, allowed_vars: set[str]):
        self.toks = _tokenize(text)
        self.pos = 0
        self.vars = set(allowed_vars)

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str):
        kind, val, off = self.peek()
        if kind != "op" or val != op:
            raise ExprError(f"expected {op!r}", off)
        self.take()

    def parse(self) -> RatFunc:
        v = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected token {val!r}", off)
        return v

    def expr(self) -> RatFunc:
        v = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if val == "+" else v - rhs
            else:
                return v

    def term(self) -> RatFunc:
        v = self.signed()
        while True:
            kind, val, off = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.signed()
                if val == "*":
                    v = v * rhs
                else:
                    if rhs.is_zero():
                        raise ExprError("division by zero", off)
                    v = v / rhs
            else:
                return v

    def signed(self) -> RatFunc:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.factor()
        return self.factor()

    def factor(self) -> RatFunc:
        v = self.base()
        kind, val, off = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, off = self.peek()
            if kind != "int":
                raise ExprError("exponent must be an unsigned integer", off)
            self.take()
            v = v ** int(val)
        return v

    def base(self) -> RatFunc:
        kind, val, off = self.take()
        if kind == "int":
            num = int(val)
            k2, v2, _ = self.peek()
            # rational literal: uint '/' uint binds here only when the next
            # token after '/' is an unsigned integer
            if k2 == "op" and v2 == "/":
                k3, v3, o3 = self.toks[self.pos + 1]
                if k3 == "int":
                    self.take()
                    self.take()
                    if int(v3) == 0:
                        raise ExprError("division by zero", o3)
                    return RatFunc.const(Fraction(num, int(v3)))
            return RatFunc.const(num)
        if kind == "ident":
            if val not in self.vars:
                raise ExprError(f"unknown variable {val!r}", off)
            return RatFunc.var(val)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect_op(")")
            return v
        raise ExprError(f"unexpected token {val or 'end of input'!r}", off)


def parse_expr(text: str, allowed_vars) -> RatFunc:
    """Parse an expression over the given variables into a RatFunc."""
    return _Parser(text, set(allowed_vars)).parse()


# -- printing -----------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(vars, e) -> str:
    parts = []
    for v, k in zip(vars, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_mpoly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    out = ""
    for e, c in items:
        mono = _format_monomial(p.vars, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if not out:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out


def _needs_parens(p: MPoly) -> bool:
    if len(p.terms) > 1:
        return True
    if p.is_zero():
        return False
    ((e, c),) = p.terms.items()
    if c < 0:
        return True
    # a bare monomial with coefficient 1 or a constant is safe either way
    return False


def format_ratfunc(f: RatFunc) -> str:
    num = format_mpoly(f.num)
    if f.is_polynomial() and f.den.constant_value() == 1:
        return num
    den = format_mpoly(f.den)
    if _needs_parens(f.num) or "/" in num or "*" in num or "^" in num:
        num = f"({num})"
    if _needs_parens(f.den) or "/" in den or "*" in den or "^" in den:
        den = f"({den})"
    return f"{num}/{den}"


def format_upoly(p) -> str:
    from k3lab.exactarith.upoly import UPoly

    assert isinstance(p, UPoly)
    if p.is_zero():
        return "0"
    if p.field.is_rational:
        terms = {(k,): c for k, c in enumerate(p.coeffs) if c != 0}
        return format_mpoly(MPoly((p.var,), terms))
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if not c:
            continue
        cs = format_ratfunc(c)
        if "+" in cs or ("-" in cs[1:]) or "/" in cs:
            cs = f"({cs})"
        if k == 0:
            parts.append(cs)
        elif k == 1:
            parts.append(f"{cs}*{p.var}" if cs != "1" else p.var)
        else:
            parts.append(f"{cs}*{p.var}^{k}" if cs != "1" else f"{p.var}^{k}")
    return " + ".join(parts)
