"""Parser for the input language.

Grammar (ASCII, one statement per line, ';'-terminated):

    ring x,y,z;
    axis t;
    ideal I = x^2 - y^2*z, y^3;
    option locus=projective;

Polynomials use + - * ^ with integer or rational literals like 3 or 1/16.
Implicit multiplication is forbidden: write 2*x^3*y, not 2x^3y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, PreconditionError
from .poly import Polynomial, RingContext


@dataclass
class Token:
    kind: str  # name | int | punct
    text: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":  # comment to end of line
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and (text[j].isalpha() or text[j] == "_"):
                raise ParseError(
                    "implicit multiplication is forbidden (write 2*x)", line, col
                )
            toks.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^/=,;()":
            toks.append(Token("punct", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0
        self.ring = None
        self.axis = []
        self.generators = None
        self.options = {}

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind, text=None):
        t = self.next()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            raise ParseError(f"expected {want!r}, found {t.text!r}", t.line, t.col)
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    # -- statements ---------------------------------------------------------

    def parse(self):
        while self.peek().kind != "eof":
            t = self.next()
            if t.kind != "name":
                self.error(f"expected a statement keyword, found {t.text!r}", t)
            if t.text == "ring":
                self.stmt_ring()
            elif t.text == "axis":
                self.stmt_axis()
            elif t.text == "ideal":
                self.stmt_ideal()
            elif t.text == "option":
                self.stmt_option()
            else:
                self.error(f"unknown statement {t.text!r}", t)
        if self.ring is None:
            self.error("no ring declared")
        if self.generators is None:
            self.error("no ideal declared")
        locus = self.options.get("locus", "local")
        if locus not in ("local", "projective", "affine"):
            self.error(f"unknown locus option {locus!r}")
        ring = RingContext(tuple(self._vars), tuple(self.axis), locus)
        gens = [self._rebind(g, ring) for g in self.generators]
        for i, g in enumerate(gens):
            if g.is_zero():
                self.error(f"zero generator at position {i + 1} rejected")
            if locus == "projective" and not g.is_homogeneous():
                self.error(
                    f"inhomogeneous generator at position {i + 1} in projective context"
                )
        return ring, gens, dict(self.options)

    @staticmethod
    def _rebind(p, ring):
        # generators are parsed into a provisional local ring; re-tag them
        # with the final ring carrying axis/locus info
        return Polynomial(ring, p.terms)

    def stmt_ring(self):
        if self.ring is not None:
            self.error("ring declared twice")
        names = [self.expect("name").text]
        while self.peek().text == ",":
            self.next()
            names.append(self.expect("name").text)
        self.expect("punct", ";")
        if len(set(names)) != len(names):
            self.error(f"duplicate variable in ring declaration {names}")
        self._vars = names
        self.ring = RingContext(tuple(names))

    def stmt_axis(self):
        if self.ring is None:
            self.error("axis before ring declaration")
        t = self.expect("name")
        if t.text not in self._vars:
            self.error(f"unknown variable {t.text!r}", t)
        if t.text in self.axis:
            self.error(f"axis {t.text!r} declared twice", t)
        self.axis.append(t.text)
        self.expect("punct", ";")

    def stmt_ideal(self):
        if self.ring is None:
            self.error("ideal before ring declaration")
        if self.generators is not None:
            self.error("ideal declared twice")
        self.expect("name")  # the ideal's name, e.g. I
        self.expect("punct", "=")
        gens = [self.expr()]
        while self.peek().text == ",":
            self.next()
            gens.append(self.expr())
        self.expect("punct", ";")
        self.generators = gens

    def stmt_option(self):
        key = self.expect("name").text
        self.expect("punct", "=")
        t = self.next()
        if t.kind not in ("name", "int"):
            self.error("option value must be a name or integer", t)
        self.options[key] = t.text
        self.expect("punct", ";")

    # -- polynomial expressions ----------------------------------------------

    def expr(self):
        t = self.peek()
        negate = False
        if t.text in ("+", "-"):
            self.next()
            negate = t.text == "-"
        p = self.term()
        if negate:
            p = -p
        while self.peek().text in ("+", "-"):
            op = self.next().text
            q = self.term()
            p = p - q if op == "-" else p + q
        return p

    def term(self):
        p = self.factor()
        while self.peek().text == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self):
        t = self.next()
        if t.kind == "int":
            num = int(t.text)
            if self.peek().text == "/":
                self.next()
                den_tok = self.expect("int")
                den = int(den_tok.text)
                if den == 0:
                    self.error("zero denominator", den_tok)
                base = self.ring.constant(Fraction(num, den))
            else:
                base = self.ring.constant(num)
        elif t.kind == "name":
            if t.text not in self._vars:
                self.error(f"unknown variable {t.text!r}", t)
            base = self.ring.variable(t.text)
        elif t.text == "(":
            base = self.expr()
            self.expect("punct", ")")
        else:
            self.error(f"expected a factor, found {t.text!r}", t)
        if self.peek().text == "^":
            self.next()
            e_tok = self.expect("int")
            base = base ** int(e_tok.text)
        return base


def parse_input(text):
    """Parse input-language source into (RingContext, generator list, options).

    Total on valid input; raises ParseError with line/column otherwise.
    """
    return _Parser(text).parse()


def print_input(ring, generators, options=None):
    """Deterministic printer; parse_input(print_input(...)) round-trips."""
    lines = [f"ring {','.join(ring.variables)};"]
    for a in ring.marked_axis:
        lines.append(f"axis {a};")
    if ring.locus != "local":
        lines.append(f"option locus={ring.locus};")
    for key, val in sorted((options or {}).items()):
        if key != "locus":
            lines.append(f"option {key}={val};")
    body = ", ".join(g.to_string() for g in generators)
    lines.append(f"ideal I = {body};")
    return "\n".join(lines) + "\n"
