"""Sparse multivariate polynomials over Q in named generators."""
from fractions import Fraction


class Poly:
    __slots__ = ("gens", "terms")

    def __init__(self, gens, terms=()):
        self.gens = tuple(gens)
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != len(self.gens):
                raise ValueError(f"exponent vector {exps} does not match generators {self.gens}")
            acc[exps] = acc.get(exps, 0) + Fraction(c)
        self.terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def constant(cls, gens, c):
        return cls(gens, {(0,) * len(gens): c})

    @classmethod
    def variable(cls, gens, name):
        exps = [0] * len(gens)
        exps[gens.index(name)] = 1
        return cls(gens, {tuple(exps): 1})

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch {self.gens} vs {other.gens}")
            return other
        return Poly.constant(self.gens, other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Poly(self.gens, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(self.gens, {e: c * v for e, v in self.terms.items()})
        other = self._lift(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Poly(self.gens, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(self.gens, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.gens, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def weighted_degrees(self, weights):
        return {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}

    def substitute(self, name, value):
        """Replace generator ``name`` by the rational ``value`` (generator kept, exponent 0)."""
        i = self.gens.index(name)
        t = {}
        for e, c in self.terms.items():
            e2 = e[:i] + (0,) + e[i + 1:]
            t[e2] = t.get(e2, 0) + c * Fraction(value) ** e[i]
        return Poly(self.gens, t)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
