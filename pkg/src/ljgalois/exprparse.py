"""Expression text <-> exact rational functions.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := int | VAR | 'sqrt' '(' int ')' | '(' expr ')'

'^' binds tighter than unary minus, so -x^2 means -(x^2).  The variable
is 'x' unless a different name is passed.  sqrt() literals fix the
quadratic extension; two incompatible radicands raise
UnsupportedExtension.
"""

from __future__ import annotations

from fractions import Fraction

from ljgalois.errors import ExprSyntaxError, ZeroDenominator
from ljgalois.exactalg.field import FieldElem
from ljgalois.exactalg.poly import Poly
from ljgalois.exactalg.ratfunc import RatFunc

_INT = "int"
_NAME = "name"
_OPS = set("+-*/^()")


def _tokenize(text: str):
    tokens: list[tuple[str, str, int]] = []  # (kind, value, position)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append((_INT, text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append((_NAME, text[i:j], i))
            i = j
        elif ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ExprSyntaxError(i, ("digit", "name", "operator"), ch)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, var: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.var = var

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ExprSyntaxError(tok[2], (kind,), tok[1] or "end of input")
        return self.advance()

    def parse(self) -> RatFunc:
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(tok[2], ("end of input",), tok[1])
        return out

    def expr(self) -> RatFunc:
        out = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> RatFunc:
        out = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            rhs = self.factor()
            if op == "*":
                out = out * rhs
            else:
                if rhs.is_zero:
                    raise ZeroDenominator("division by an identically zero expression")
                out = out / rhs
        return out

    def factor(self) -> RatFunc:
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        out = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect(_INT)
            out = out ** int(tok[1])
        return out

    def atom(self) -> RatFunc:
        tok = self.peek()
        if tok[0] == _INT:
            self.advance()
            return RatFunc.const(int(tok[1]))
        if tok[0] == _NAME:
            if tok[1] == self.var:
                self.advance()
                return RatFunc.x()
            if tok[1] == "sqrt":
                self.advance()
                self.expect("(")
                arg = self.expect(_INT)
                self.expect(")")
                return RatFunc.const(FieldElem(0, 1, int(arg[1])))
            raise ExprSyntaxError(
                tok[2], (f"'{self.var}'", "'sqrt'"), tok[1]
            )
        if tok[0] == "(":
            self.advance()
            out = self.expr()
            self.expect(")")
            return out
        raise ExprSyntaxError(
            tok[2], ("int", f"'{self.var}'", "'sqrt'", "'('", "'-'"),
            tok[1] or "end of input",
        )


def parse_expression(text: str, var: str = "x") -> RatFunc:
    """Parse expression text to a normalized RatFunc over Q(sqrt(d))."""
    return _Parser(text, var).parse()


# ---------------------------------------------------------------------------
# rendering (round-trips through parse_expression)
# ---------------------------------------------------------------------------


def _render_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_field_elem(c: FieldElem) -> str:
    if c.b == 0:
        return _render_fraction(c.a)
    rad = f"sqrt({c.d})"
    if abs(c.b) != 1:
        rad = f"{_render_fraction(abs(c.b))}*{rad}"
    rad = rad if c.b > 0 else f"-{rad}"
    if c.a == 0:
        return rad
    joiner = " + " if c.b > 0 else " - "
    return f"{_render_fraction(c.a)}{joiner}{rad.lstrip('-')}"


def _coeff_is_compound(c: FieldElem) -> bool:
    return c.a != 0 and c.b != 0


def render_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero:
        return "0"
    parts: list[tuple[str, str]] = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c.is_zero:
            continue
        if k == 0:
            base = ""
        elif k == 1:
            base = var
        else:
            base = f"{var}^{k}"
        if _coeff_is_compound(c):
            body = f"({render_field_elem(c)})" + (f"*{base}" if base else "")
            parts.append(("+", body))
            continue
        sign = "-" if c.sign() < 0 else "+"
        mag = c if c.sign() >= 0 else -c
        if base and mag == FieldElem(1):
            body = base
        elif base:
            body = f"{render_field_elem(mag)}*{base}"
        else:
            body = render_field_elem(mag)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_ratfunc(r: RatFunc, var: str = "x") -> str:
    if r.is_zero:
        return "0"
    num = render_poly(r.num, var)
    if r.den.degree == 0:
        return num
    den = render_poly(r.den, var)
    return f"({num})/({den})"
