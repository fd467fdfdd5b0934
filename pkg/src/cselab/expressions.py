"""Expression text for exact functions: parsing and canonical printing.

Grammar (whitespace-insensitive, no floats; rationals are written a/b):

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' NAT)?
    atom    := NUMBER | 'i' | 'x' | 'y' | 'z' | '(' expr ')' | radial
    radial  := 'abs' '(' expr ')' '^' '(' ODD '/' '2' ')'
    NUMBER  := INT ('/' INT)?

The radial atom must wrap exactly the monomial x*y and may appear at most
once, as a top-level additive term scaled by a constant: that is the only
non-holomorphic shape the library computes with.  A well-formed expression
lowers to exactly one BivariatePoly (variables x, y), UnivariatePoly
(variable z) or MixedFunction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import BivariatePoly, MixedFunction, UnivariatePoly
from .rationals import GaussianRational


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# -- tokens ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]+)|([()+\-*^]))")


@dataclass(frozen=True)
class _Tok:
    kind: str   # 'num' | 'name' | 'sym' | 'end'
    text: str
    pos: int


def _tokenize(text: str):
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExpressionError(f"unexpected character {stripped[0]!r}",
                                  len(text) - len(stripped))
        num, name, sym = m.groups()
        at = m.start(1) if num else m.start(2) if name else m.start(3)
        if num:
            toks.append(_Tok("num", num, at))
        elif name:
            toks.append(_Tok("name", name, at))
        else:
            toks.append(_Tok("sym", sym, at))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: GaussianRational


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Radial:
    """abs(x*y)^(half_exp/2) with half_exp odd and positive."""
    half_exp: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def next(self) -> _Tok:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect_sym(self, sym: str) -> _Tok:
        t = self.next()
        if t.kind != "sym" or t.text != sym:
            raise ExpressionError(f"expected {sym!r}", t.pos)
        return t

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ExpressionError(f"unexpected token {t.text!r}", t.pos)
        return node

    def expr(self):
        node = self.term()
        while True:
            t = self.peek()
            if t.kind == "sym" and t.text in "+-":
                self.next()
                rhs = self.term()
                node = Add(node, rhs) if t.text == "+" else Sub(node, rhs)
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            t = self.peek()
            if t.kind == "sym" and t.text == "*":
                self.next()
                node = Mul(node, self.unary())
            else:
                return node

    def unary(self):
        t = self.peek()
        if t.kind == "sym" and t.text == "-":
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t.kind == "sym" and t.text == "^":
            if isinstance(base, Radial):
                raise ExpressionError("radial term already carries its exponent",
                                      t.pos)
            self.next()
            e = self.next()
            if e.kind != "num" or "/" in e.text:
                raise ExpressionError("exponent must be a nonnegative integer",
                                      e.pos)
            return Pow(base, int(e.text))
        return base

    def atom(self):
        t = self.next()
        if t.kind == "num":
            return Lit(GaussianRational(Fraction(t.text)))
        if t.kind == "name":
            if t.text == "i":
                return Lit(GaussianRational(0, 1))
            if t.text in ("x", "y", "z"):
                return Var(t.text)
            if t.text == "abs":
                return self.radial(t.pos)
            raise ExpressionError(f"unknown name {t.text!r}", t.pos)
        if t.kind == "sym" and t.text == "(":
            node = self.expr()
            self.expect_sym(")")
            return node
        raise ExpressionError(f"unexpected token {t.text!r}", t.pos)

    def radial(self, at: int):
        self.expect_sym("(")
        inner = self.expr()
        self.expect_sym(")")
        caret = self.next()
        if caret.kind != "sym" or caret.text != "^":
            raise ExpressionError(
                "abs(...) must be raised to an explicit half-integer power "
                "(p/2)", caret.pos)
        self.expect_sym("(")
        num = self.next()
        if num.kind != "num":
            raise ExpressionError("expected p/2 inside the radial exponent",
                                  num.pos)
        if "/" in num.text:
            p_txt, q_txt = num.text.split("/")
        else:
            p_txt = num.text
            self.expect_sym("/")  # will fail with a targeted message
            q_txt = ""
        if q_txt != "2":
            raise ExpressionError("radial exponents must have denominator 2",
                                  num.pos)
        p = int(p_txt)
        if p <= 0 or p % 2 == 0:
            raise ExpressionError("radial exponent numerator must be odd and "
                                  "positive", num.pos)
        self.expect_sym(")")
        lowered = _lower(inner)
        if not isinstance(lowered, BivariatePoly) or \
                lowered != BivariatePoly.monomial(1, 1):
            raise ExpressionError("abs(...) must wrap exactly the monomial x*y",
                                  at)
        return Radial(p)


# -- lowering ----------------------------------------------------------------

@dataclass(frozen=True)
class _Val:
    poly: BivariatePoly
    radial_coeff: GaussianRational
    radial_p: int | None

    @property
    def has_radial(self):
        return self.radial_p is not None and not self.radial_coeff.is_zero()


def _plain(poly: BivariatePoly) -> _Val:
    return _Val(poly, GaussianRational(0), None)


def _lower_val(node) -> _Val:
    if isinstance(node, Lit):
        return _plain(BivariatePoly.monomial(0, 0, node.value))
    if isinstance(node, Var):
        return _plain(BivariatePoly.variable(node.name))
    if isinstance(node, Radial):
        return _Val(BivariatePoly.zero(), GaussianRational(1), node.half_exp)
    if isinstance(node, Neg):
        v = _lower_val(node.arg)
        return _Val(-v.poly, -v.radial_coeff, v.radial_p)
    if isinstance(node, (Add, Sub)):
        a = _lower_val(node.left)
        b = _lower_val(node.right)
        if isinstance(node, Sub):
            b = _Val(-b.poly, -b.radial_coeff, b.radial_p)
        if a.has_radial and b.has_radial:
            raise ExpressionError("at most one radial term is allowed")
        p = a.radial_p if a.has_radial else b.radial_p
        return _Val(a.poly + b.poly, a.radial_coeff + b.radial_coeff, p)
    if isinstance(node, Mul):
        a = _lower_val(node.left)
        b = _lower_val(node.right)
        if a.has_radial and b.has_radial:
            raise ExpressionError("radial terms cannot be multiplied together")
        if b.has_radial:
            a, b = b, a
        if a.has_radial:
            if not _is_constant(b.poly) or b.has_radial:
                raise ExpressionError(
                    "a radial term may only be scaled by a constant")
            s = b.poly.support.get((0, 0), GaussianRational(0))
            return _Val(a.poly * b.poly, a.radial_coeff * s, a.radial_p)
        return _plain(a.poly * b.poly)
    if isinstance(node, Pow):
        v = _lower_val(node.base)
        if v.has_radial:
            raise ExpressionError("radial terms cannot be exponentiated")
        return _plain(v.poly ** node.exponent)
    raise TypeError(f"unknown AST node {node!r}")


def _is_constant(p: BivariatePoly) -> bool:
    return all(k == (0, 0) for k in p.support)


def _vars_used(node) -> set:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, (Lit, Radial)):
        return {"x", "y"} if isinstance(node, Radial) else set()
    if isinstance(node, Neg):
        return _vars_used(node.arg)
    if isinstance(node, (Add, Sub, Mul)):
        return _vars_used(node.left) | _vars_used(node.right)
    if isinstance(node, Pow):
        return _vars_used(node.base)
    return set()


def _lower(node):
    used = _vars_used(node)
    if "z" in used and used & {"x", "y"}:
        raise ExpressionError("cannot mix z with x and y in one expression")
    if "z" in used:
        return _lower_univariate(node)
    v = _lower_val(node)
    if v.has_radial:
        return MixedFunction(v.poly, v.radial_coeff, v.radial_p)
    return v.poly


def _lower_univariate(node) -> UnivariatePoly:
    if isinstance(node, Lit):
        return UnivariatePoly([node.value])
    if isinstance(node, Var):
        return UnivariatePoly.monomial(1)
    if isinstance(node, Neg):
        return -_lower_univariate(node.arg)
    if isinstance(node, Add):
        return _lower_univariate(node.left) + _lower_univariate(node.right)
    if isinstance(node, Sub):
        return _lower_univariate(node.left) - _lower_univariate(node.right)
    if isinstance(node, Mul):
        return _lower_univariate(node.left) * _lower_univariate(node.right)
    if isinstance(node, Pow):
        return _lower_univariate(node.base) ** node.exponent
    if isinstance(node, Radial):
        raise ExpressionError("radial terms live in the x, y variables")
    raise TypeError(f"unknown AST node {node!r}")


def parse_expression(text: str):
    """Parse text to a BivariatePoly, UnivariatePoly or MixedFunction."""
    return _lower(_Parser(text).parse())


# -- canonical printing ------------------------------------------------------

def _format_scalar(c: GaussianRational, lead_context: bool):
    """(sign, body) where body never starts with a minus sign.

    lead_context=True means the scalar multiplies a monomial, so 1 may be
    dropped; mixed complex scalars are parenthesized so they re-parse.
    """
    if c.im == 0:
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        if mag == 1 and lead_context:
            return sign, ""
        return sign, str(mag)
    if c.re == 0:
        sign = "-" if c.im < 0 else "+"
        mag = abs(c.im)
        return sign, "i" if mag == 1 else f"{mag}*i"
    re_txt = str(c.re)
    sign = "+" if c.im > 0 else "-"
    mag = abs(c.im)
    itxt = "i" if mag == 1 else f"{mag}*i"
    return "+", f"({re_txt}{sign}{itxt})"


def _format_monomial(names_exps) -> str:
    parts = []
    for name, e in names_exps:
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _join_terms(terms) -> str:
    out = []
    for idx, (sign, body) in enumerate(terms):
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_function(obj) -> str:
    """Canonical text form; parse(format_function(v)) reproduces v."""
    if isinstance(obj, MixedFunction):
        if obj.is_holomorphic():
            return format_function(obj.holo)
        holo_txt_terms = _poly_terms(obj.holo)
        sign, coeff = _format_scalar(obj.radial_coeff, lead_context=True)
        body = f"abs(x*y)^({obj.radial_half_exp}/2)"
        body = body if not coeff else f"{coeff}*{body}"
        return _join_terms(holo_txt_terms + [(sign, body)])
    if isinstance(obj, BivariatePoly):
        if obj.is_zero():
            return "0"
        return _join_terms(_poly_terms(obj))
    if isinstance(obj, UnivariatePoly):
        if obj.is_zero():
            return "0"
        terms = []
        for e, c in enumerate(obj.coeffs):
            if c.is_zero():
                continue
            mono = _format_monomial([("z", e)])
            sign, coeff = _format_scalar(c, lead_context=bool(mono))
            if mono:
                body = mono if not coeff else f"{coeff}*{mono}"
            else:
                body = coeff if coeff else "1"
            terms.append((sign, body))
        return _join_terms(terms)
    raise TypeError("expected BivariatePoly, UnivariatePoly or MixedFunction")


def _poly_terms(p: BivariatePoly):
    terms = []
    for (m, n), c in p.sorted_items():
        mono = _format_monomial([("x", m), ("y", n)])
        sign, coeff = _format_scalar(c, lead_context=bool(mono))
        if mono:
            body = mono if not coeff else f"{coeff}*{mono}"
        else:
            body = coeff if coeff else "1"
        terms.append((sign, body))
    return terms
