"""Recursive-descent parser for polynomial expressions in named generators.

Grammar (``^`` binds tighter than unary minus, which binds tighter than ``*``)::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := NUMBER | IDENT | '(' expr ')'

NUMBER is ``a`` or ``a/b`` with no inner spaces. IDENT starts with a letter and
may continue with letters, digits, ``_`` and ``'``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import PolySyntaxError, UnknownIdentifier
from .poly import Poly


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - *
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_PREC = {"+": 1, "-": 1, "*": 2}


class PolyExpr:
    """Parsed expression; ``str`` gives the canonical form."""

    __slots__ = ("root", "text")

    def __init__(self, root, text=None):
        self.root = root
        self.text = text

    def identifiers(self):
        out = set()

        def walk(n):
            if isinstance(n, Var):
                out.add(n.name)
            elif isinstance(n, Neg):
                walk(n.arg)
            elif isinstance(n, BinOp):
                walk(n.left)
                walk(n.right)
            elif isinstance(n, Pow):
                walk(n.base)

        walk(self.root)
        return out

    def evaluate(self, env, const=lambda c: c):
        """Evaluate with ``env[name]`` for identifiers and ``const(c)`` for literals."""

        def ev(n):
            if isinstance(n, Num):
                return const(n.value)
            if isinstance(n, Var):
                try:
                    return env[n.name]
                except KeyError:
                    raise UnknownIdentifier(n.name) from None
            if isinstance(n, Neg):
                return -ev(n.arg)
            if isinstance(n, Pow):
                return ev(n.base) ** n.exp
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            return a * b

        return ev(self.root)

    def to_poly(self, gens):
        gens = tuple(gens)
        env = {g: Poly.variable(gens, g) for g in gens}
        return self.evaluate(env, const=lambda c: Poly.constant(gens, c))

    def __eq__(self, other):
        return isinstance(other, PolyExpr) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __str__(self):
        return _canonical(self.root)

    def __repr__(self):
        return f"PolyExpr({str(self)!r})"

    def pretty(self, labels=None):
        """Display form: labels substituted, ``·`` for products of symbols, superscript powers."""
        return _pretty(self.root, labels or {})


def _canonical(n, parent=0, right=False):
    if isinstance(n, Num):
        v = n.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(n, Var):
        return n.name
    if isinstance(n, Pow):
        base = _canonical(n.base)
        if not isinstance(n.base, (Num, Var)):
            base = f"({base})"
        return f"{base}^{n.exp}"
    if isinstance(n, Neg):
        inner = _canonical(n.arg, 3)
        return f"-{inner}"
    prec = _PREC[n.op]
    sep = "*" if n.op == "*" else f" {n.op} "
    text = _canonical(n.left, prec) + sep + _canonical(n.right, prec, right=True)
    if prec < parent or (prec == parent and right):
        return f"({text})"
    return text


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _pretty(n, labels, parent=0, right=False):
    if isinstance(n, Num):
        return _canonical(n)
    if isinstance(n, Var):
        return labels.get(n.name, n.name)
    if isinstance(n, Pow):
        base = _pretty(n.base, labels)
        if not isinstance(n.base, Var):
            base = f"({base})"
        return base + str(n.exp).translate(_SUPERSCRIPT)
    if isinstance(n, Neg):
        return "-" + _pretty(n.arg, labels, 3)
    prec = _PREC[n.op]
    left = _pretty(n.left, labels, prec)
    rgt = _pretty(n.right, labels, prec, right=True)
    if n.op == "*":
        # an integer left factor is glued: 2σ4, 16q
        num = n.left.arg if isinstance(n.left, Neg) else n.left
        glue = (
            isinstance(num, Num)
            and num.value.denominator == 1
            and not (rgt[0].isdigit() or rgt[0] == "-")
        )
        text = left + rgt if glue else f"{left}·{rgt}"
    else:
        text = f"{left} {n.op} {rgt}"
    if prec < parent or (prec == parent and right):
        return f"({text})"
    return text


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.pos = 0
        self.names = None if names is None else set(names)

    def error(self, msg, pos=None):
        raise PolySyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        if not self.peek():
            self.error("empty expression")
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() == "*":
            self.pos += 1
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected a nonnegative integer exponent")
            node = Pow(node, int(self.text[start:self.pos]))
        return node

    def atom(self):
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if ch.isdigit():
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            num = int(self.text[start:self.pos])
            den = 1
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                dstart = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                if dstart == self.pos:
                    self.error("expected a denominator")
                den = int(self.text[dstart:self.pos])
                if den == 0:
                    self.error("zero denominator", dstart)
            return Num(Fraction(num, den))
        if ch.isalpha():
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] in "_'"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if self.names is not None and name not in self.names:
                raise UnknownIdentifier(f"unknown identifier {name!r} at offset {start}")
            return Var(name)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_poly(text, names=None):
    """Parse ``text``; identifiers must belong to ``names`` when it is given."""
    return PolyExpr(_Parser(text, names).parse(), text)
