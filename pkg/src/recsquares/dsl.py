"""Text format for recurrences and renderers for rational functions.

Recurrence sources look like::

    a(n) = 2*a(n-1) + a(n-3); a(0)=1; a(1)=1; a(2)=1

Statements are separated by ``;`` or newlines and whitespace is ignored.
The order is the largest lag mentioned and every ``a(0)..a(l-1)`` must
be given exactly once.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .core import RecurrenceSpec
from .errors import SpecSemanticError, SpecSyntaxError
from .poly import Poly
from .ratfun import RatFun, ratfun_normalize

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<sep>[;\n])|(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[()=+\-*/])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        if m.group() == "\n":
            line, line_start = line + 1, m.end()
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return SpecSyntaxError(f"{msg}, found {found}", tok.line, tok.col)

    def accept(self, text: str) -> _Tok | None:
        if self.tok.text == text and self.tok.kind != "eof":
            tok = self.tok
            self.i += 1
            return tok
        return None

    def expect(self, text: str, what: str | None = None) -> _Tok:
        tok = self.accept(text)
        if tok is None:
            raise self.error(f"expected {what or repr(text)}")
        return tok

    def integer(self, what: str) -> tuple[int, _Tok]:
        tok = self.tok
        if tok.kind != "int":
            raise self.error(f"expected {what}")
        self.i += 1
        return int(tok.text), tok

    def skip_seps(self) -> bool:
        seen = False
        while self.tok.kind == "sep":
            self.i += 1
            seen = True
        return seen

    # coeff := [ "-" ] digits [ "/" digits ]
    def coeff(self) -> Fraction:
        neg = self.accept("-") is not None
        num, _ = self.integer("a number")
        den = 1
        if self.accept("/"):
            den, tok = self.integer("a denominator")
            if den == 0:
                raise SpecSemanticError("zero denominator", tok.line, tok.col)
        value = Fraction(num, den)
        return -value if neg else value

    # "a(n-" posint ")"
    def lagged(self) -> int:
        self.expect_name()
        self.expect("(")
        self.expect_n()
        if self.tok.text != "-":
            raise self.error("expected '-' and a positive lag")
        self.i += 1
        lag, tok = self.integer("a positive lag")
        if lag == 0:
            raise SpecSemanticError("lag must be positive", tok.line, tok.col)
        self.expect(")")
        return lag

    def expect_name(self):
        if self.tok.kind != "name" or self.tok.text != "a":
            raise self.error("expected 'a'")
        self.i += 1

    def expect_n(self):
        if self.tok.kind != "name" or self.tok.text != "n":
            raise self.error("expected 'n'")
        self.i += 1

    # term := [ "-" ] [ coeff "*" ] a(n-k)
    def term(self) -> tuple[int, Fraction]:
        sign = Fraction(1)
        if self.tok.kind == "int" or (self.tok.text == "-" and self.toks[self.i + 1].kind == "int"):
            value = self.coeff()
            self.expect("*")
        else:
            if self.accept("-"):
                sign = Fraction(-1)
            value = Fraction(1)
        lag = self.lagged()
        return lag, sign * value

    def rec_line(self) -> dict[int, Fraction]:
        self.expect_name()
        self.expect("(")
        self.expect_n()
        self.expect(")")
        self.expect("=")
        coeffs: dict[int, Fraction] = {}
        sign = Fraction(1)
        while True:
            lag, value = self.term()
            coeffs[lag] = coeffs.get(lag, Fraction(0)) + sign * value
            if self.accept("+"):
                sign = Fraction(1)
            elif self.accept("-"):
                sign = Fraction(-1)
            else:
                return coeffs

    def init_line(self, inits: dict[int, Fraction]) -> _Tok:
        self.expect_name()
        self.expect("(")
        idx, idx_tok = self.integer("an index")
        self.expect(")")
        self.expect("=")
        value = self.coeff()
        if idx in inits:
            raise SpecSemanticError(f"duplicate initial value a({idx})", idx_tok.line, idx_tok.col)
        inits[idx] = value
        return idx_tok

    def parse(self) -> RecurrenceSpec:
        self.skip_seps()
        rec_tok = self.tok
        coeffs = self.rec_line()
        inits: dict[int, Fraction] = {}
        index_toks: list[_Tok] = []
        while self.tok.kind != "eof":
            if not self.skip_seps():
                raise self.error("expected ';' or newline")
            if self.tok.kind == "eof":
                break
            index_toks.append(self.init_line(inits))
        order = max(coeffs)
        missing = [k for k in range(order) if k not in inits]
        if missing:
            raise SpecSemanticError(f"missing initial value a({missing[0]})", rec_tok.line, rec_tok.col)
        for tok in index_toks:
            if int(tok.text) >= order:
                raise SpecSemanticError(
                    f"initial value a({tok.text}) is beyond the order {order} of the recurrence",
                    tok.line, tok.col,
                )
        return RecurrenceSpec(
            tuple(coeffs.get(k, Fraction(0)) for k in range(1, order + 1)),
            tuple(inits[k] for k in range(order)),
        )


def parse_spec(src: str) -> RecurrenceSpec:
    """Parse recurrence source text; errors carry 1-based line and column."""
    return _Parser(src).parse()


def _rat(c: Fraction) -> str:
    return str(c)


def format_spec(spec: RecurrenceSpec) -> str:
    """Canonical source for ``spec``; :func:`parse_spec` inverts it.

    Zero coefficients are dropped except at the highest lag, which is
    always written so the order survives a round trip.
    """
    l = spec.order
    terms = []
    for lag, c in enumerate(spec.coefficients, start=1):
        if c == 0 and lag != l:
            continue
        terms.append((lag, c))
    parts = []
    for k, (lag, c) in enumerate(terms):
        atom = f"a(n-{lag})"
        mag = abs(c)
        body = atom if mag == 1 else f"{_rat(mag)}*{atom}"
        if k == 0:
            parts.append(body if c >= 0 else ("-" + body if mag == 1 else f"{_rat(c)}*{atom}"))
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    rec = "a(n) = " + " ".join(parts)
    inits = [f"a({k}) = {_rat(c)}" for k, c in enumerate(spec.initials)]
    return "; ".join([rec] + inits)


# -- rational function output --------------------------------------------

def _plain_term(c: Fraction, i: int) -> str:
    mag = abs(c)
    if i == 0:
        return _rat(mag)
    mono = "x" if i == 1 else f"x^{i}"
    return mono if mag == 1 else f"{_rat(mag)}*{mono}"


def _latex_coeff(mag: Fraction) -> str:
    if mag.denominator == 1:
        return str(mag.numerator)
    return rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"


def _latex_term(c: Fraction, i: int) -> str:
    mag = abs(c)
    if i == 0:
        return _latex_coeff(mag)
    mono = "x" if i == 1 else f"x^{{{i}}}"
    return mono if mag == 1 else _latex_coeff(mag) + mono


def _join(p: Poly, term) -> str:
    out = ""
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        t = term(c, i)
        if not out:
            out = "-" + t if c < 0 else t
        else:
            out += (" - " if c < 0 else " + ") + t
    return out or "0"


def format_poly(p: Poly) -> str:
    """Ascending-degree plain text, e.g. ``1 - 2*x + x^2``."""
    return _join(p, _plain_term)


def format_ratfun(r: RatFun, style: str = "plain") -> str:
    if style == "plain":
        return f"({_join(r.num, _plain_term)})/({_join(r.den, _plain_term)})"
    if style == "latex":
        return rf"\frac{{{_join(r.num, _latex_term)}}}{{{_join(r.den, _latex_term)}}}"
    if style == "json":
        return json.dumps(ratfun_to_json(r))
    raise ValueError(f"unknown format {style!r}")


def ratfun_to_json(r: RatFun) -> dict:
    return {
        "numerator": [str(c) for c in r.num.coeffs] or ["0"],
        "denominator": [str(c) for c in r.den.coeffs],
        "variable": "x",
    }


def ratfun_from_json(obj) -> RatFun:
    """Inverse of ``format_ratfun(r, "json")``; accepts a dict or a JSON string."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    num = Poly(Fraction(s) for s in obj["numerator"])
    den = Poly(Fraction(s) for s in obj["denominator"])
    return ratfun_normalize(num, den)
