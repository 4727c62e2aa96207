"""Graded quotient rings Q[gens]/(relations) by per-degree linear algebra.

Ideal membership in degree d is decided by row-reducing the span of
``monomial * relation`` products of degree d; no Groebner bases.  Columns are
ordered so that pivots fall on q-free monomials first and, among those, on
monomials with high exponents of later generators.  With generators listed as
(h, second generator, q) the standard monomials come out as ``h^a`` and
``h^a * x`` times powers of q.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .errors import (
    DegeneratePairing,
    DegreeOutOfRange,
    HilbertMismatch,
    InhomogeneousRelation,
    NoQuantumParameter,
    NotABasis,
    RingMismatch,
)
from .linalg import (
    identity,
    inverse,
    rank,
    rref,
    solve,
    upoly_derivative,
    upoly_eval_matrix,
    upoly_gcd,
    upoly_trim,
)
from .poly import Poly
from .polyexpr import PolyExpr, parse_poly


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple  # ((name, degree), ...)
    relations: tuple  # Poly or str
    top_degree: int
    normalization: tuple  # (generator, exponent, value): integral of generator^exponent
    quantum: str = None  # name of the quantum parameter, if any

    @property
    def names(self):
        return tuple(n for n, _ in self.generators)

    @property
    def weights(self):
        return tuple(d for _, d in self.generators)

    def relation_polys(self):
        out = []
        for r in self.relations:
            if isinstance(r, str):
                r = parse_poly(r, self.names)
            if isinstance(r, PolyExpr):
                r = r.to_poly(self.names)
            out.append(r)
        return out


def _monomials(weights, d):
    """Exponent vectors of weighted degree d."""
    if not weights:
        return [()] if d == 0 else []
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(d // w + 1):
        out.extend((e,) + tail for tail in _monomials(rest, d - e * w))
    return out


class GradedRing:
    def __init__(self, pres, expected_hilbert=None):
        self.pres = pres
        self.names = pres.names
        self.weights = pres.weights
        self.top = pres.top_degree
        self.q_index = self.names.index(pres.quantum) if pres.quantum else None
        self.q_degree = self.weights[self.q_index] if pres.quantum else None
        if pres.quantum:
            self.max_degree = max(2 * self.top, self.top + 2 * self.q_degree)
        else:
            self.max_degree = 2 * self.top
        self._relations = []
        for r in pres.relation_polys():
            degs = r.weighted_degrees(self.weights)
            if len(degs) > 1:
                raise InhomogeneousRelation(f"{r} has components in degrees {sorted(degs)}")
            if degs:
                self._relations.append((degs.pop(), r))
        self.standard = {}
        self._reduce = {}
        for d in range(self.max_degree + 1):
            self._build_degree(d)
        if expected_hilbert is not None:
            found = self.hilbert()
            for d, (e, f) in enumerate(zip(list(expected_hilbert) + [0] * len(found), found)):
                if e != f:
                    raise HilbertMismatch(d, e, f)
            if len(expected_hilbert) > len(found) and any(expected_hilbert[len(found):]):
                d = len(found)
                raise HilbertMismatch(d, expected_hilbert[d], 0)
        self._scale = self._normalization_scale()

    # --- construction -----------------------------------------------------

    def _qexp(self, mono):
        return mono[self.q_index] if self.q_index is not None else 0

    def _column_key(self, mono):
        return (self._qexp(mono), tuple(-e for e in reversed(mono)))

    def _build_degree(self, d):
        monos = sorted(_monomials(self.weights, d), key=self._column_key)
        col = {m: i for i, m in enumerate(monos)}
        rows = []
        for dr, rel in self._relations:
            if dr > d:
                continue
            for m in _monomials(self.weights, d - dr):
                row = [Fraction(0)] * len(monos)
                for e, c in rel.terms.items():
                    row[col[tuple(a + b for a, b in zip(m, e))]] += c
                rows.append(row)
        red, pivots = rref(rows, len(monos)) if rows else ([], [])
        pivset = set(pivots)
        std = [m for i, m in enumerate(monos) if i not in pivset]
        self.standard[d] = std
        reduce = {m: {m: Fraction(1)} for m in std}
        for row, p in zip(red, pivots):
            reduce[monos[p]] = {monos[j]: -row[j] for j in range(len(monos)) if j not in pivset and row[j]}
        self._reduce[d] = reduce

    def _normalization_scale(self):
        name, exp, value = self.pres.normalization
        mono = [0] * len(self.names)
        mono[self.names.index(name)] = exp
        top = self.classical_standard(self.top)
        if len(top) != 1:
            raise NotABasis(f"top degree {self.top} has dimension {len(top)}, expected 1")
        nf = self.reduce_monomial(tuple(mono))
        c = nf.get(top[0], Fraction(0))
        if c == 0:
            raise DegeneratePairing(f"{name}^{exp} is zero in the ring")
        return Fraction(value) / c

    # --- queries ----------------------------------------------------------

    def degree_of(self, mono):
        return sum(w * e for w, e in zip(self.weights, mono))

    def classical_standard(self, d):
        return [m for m in self.standard.get(d, []) if self._qexp(m) == 0]

    def hilbert(self):
        return [len(self.classical_standard(d)) for d in range(self.top + 1)]

    def dim(self, d):
        return len(self.standard.get(d, []))

    def reduce_monomial(self, mono):
        d = self.degree_of(mono)
        if d > self.max_degree:
            raise DegreeOutOfRange(f"degree {d} exceeds the reduction bound {self.max_degree}")
        return self._reduce[d][mono]

    def normal_form(self, p):
        if isinstance(p, RingElt):
            if p.ring is not self:
                raise RingMismatch("element belongs to another ring")
            return p
        if isinstance(p, str):
            p = parse_poly(p, self.names)
        if isinstance(p, PolyExpr):
            p = p.to_poly(self.names)
        if isinstance(p, (int, Fraction)):
            return self.scalar(p)
        if p.gens != self.names:
            raise RingMismatch(f"polynomial in {p.gens}, ring in {self.names}")
        acc = {}
        for mono, c in p.terms.items():
            for m, v in self.reduce_monomial(mono).items():
                acc[m] = acc.get(m, 0) + c * v
        return RingElt(self, acc)

    def __call__(self, p):
        return self.normal_form(p)

    def scalar(self, c):
        return RingElt(self, {(0,) * len(self.names): Fraction(c)})

    def gen(self, name):
        return self.normal_form(Poly.variable(self.names, name))

    def env(self):
        return {n: self.gen(n) for n in self.names}

    def evaluate(self, expr, env):
        """Evaluate a PolyExpr with identifiers bound to ring elements in ``env``."""
        if isinstance(expr, str):
            expr = parse_poly(expr)
        return expr.evaluate(env, const=self.scalar)

    def mult(self, a, b):
        if a.ring is not self or b.ring is not self:
            raise RingMismatch("factors belong to different rings")
        return a * b

    def integrate(self, a):
        top = self.classical_standard(self.top)[0]
        return a.terms.get(top, Fraction(0)) * self._scale

    def basis(self, d):
        return [RingElt(self, {m: 1}) for m in self.classical_standard(d)]

    def coordinates(self, a, d):
        """Coordinates of the degree-d part of ``a`` over ``standard[d]``."""
        return [a.terms.get(m, Fraction(0)) for m in self.standard.get(d, [])]

    def from_coordinates(self, vec, d):
        return RingElt(self, dict(zip(self.standard[d], vec)))

    def pairing_matrix(self, d, left=None, right=None):
        if not 0 <= d <= self.top:
            raise DegreeOutOfRange(f"degree {d} outside 0..{self.top}")
        left = self.basis(d) if left is None else left
        right = self.basis(self.top - d) if right is None else right
        return [[self.integrate(b * c) for c in right] for b in left]

    def dual_basis(self, basis, d):
        """Elements b*_j of degree top-d with integral(b_i b*_j) = delta_ij."""
        n = len(self.classical_standard(d))
        coords = [self.coordinates(b, d) for b in basis]
        if len(basis) != n or (n and rank(coords) != n):
            raise NotABasis(f"{len(basis)} elements do not form a basis of degree {d} (dimension {n})")
        other = self.basis(self.top - d)
        pm = self.pairing_matrix(d, basis, other)
        try:
            x = inverse(pm)
        except ZeroDivisionError:
            raise DegeneratePairing(f"pairing of degrees {d} and {self.top - d} is singular") from None
        return [sum((other[k] * x[k][j] for k in range(n)), self.scalar(0)) for j in range(n)]

    # --- quantum ----------------------------------------------------------

    def finite_algebra(self, q=None):
        """The classical-basis algebra; for quantum rings, the quotient by (q - value)."""
        if q is not None and self.q_index is None:
            raise NoQuantumParameter("ring has no quantum parameter")
        basis = [m for d in range(self.top + 1) for m in self.classical_standard(d)]
        index = {m: i for i, m in enumerate(basis)}
        qv = Fraction(q) if q is not None else Fraction(0)

        def to_vec(elt):
            v = [Fraction(0)] * len(basis)
            for m, c in elt.terms.items():
                k = self._qexp(m)
                base = list(m)
                if self.q_index is not None:
                    base[self.q_index] = 0
                base = tuple(base)
                if base not in index:
                    raise NotABasis(f"standard monomial {m} is not q^k times a classical one")
                v[index[base]] += c * qv ** k
            return v

        elems = [RingElt(self, {m: 1}) for m in basis]
        table = [[to_vec(a * b) for b in elems] for a in elems]
        unit = to_vec(self.scalar(1))
        labels = [_mono_str(self.names, m) for m in basis]
        return FiniteAlgebra(labels, table, unit, to_vec)

    def specialize_q(self, value):
        if self.q_index is None:
            raise NoQuantumParameter("ring has no quantum parameter")
        return self.finite_algebra(value)


def _mono_str(names, mono):
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
    return "*".join(parts) or "1"


class RingElt:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}

    def _lift(self, other):
        if isinstance(other, RingElt):
            if other.ring is not self.ring:
                raise RingMismatch("elements of different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return RingElt(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return RingElt(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return RingElt(self.ring, {m: c * v for m, v in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                for m, v in ring.reduce_monomial(mono).items():
                    acc[m] = acc.get(m, 0) + c1 * c2 * v
        return RingElt(ring, acc)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, n):
        result = self.ring.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, RingElt):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {self.ring.degree_of(m) for m in self.terms}

    def q_free(self):
        r = self.ring
        return RingElt(r, {m: c for m, c in self.terms.items() if r._qexp(m) == 0})

    def __repr__(self):
        if not self.terms:
            return "0"
        poly = Poly(self.ring.names, self.terms)
        return repr(poly)


@dataclass
class FiniteAlgebra:
    """Commutative algebra with basis ``labels`` and structure constants ``table[i][j]``."""

    labels: list
    table: list
    unit: list
    vector: object = field(repr=False, default=None)  # RingElt -> coordinate vector

    @property
    def dimension(self):
        return len(self.labels)

    def mult(self, u, v):
        n = self.dimension
        out = [Fraction(0)] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += ab * c
        return out

    def left_matrix(self, u):
        """Matrix of y -> u*y (columns are images of basis vectors)."""
        cols = [self.mult(u, e) for e in identity(self.dimension)]
        return [list(r) for r in zip(*cols)]

    def is_commutative(self):
        n = self.dimension
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def is_associative(self):
        basis = identity(self.dimension)
        for a, b, c in iproduct(basis, repeat=3):
            if self.mult(self.mult(a, b), c) != self.mult(a, self.mult(b, c)):
                return False
        return True


@dataclass(frozen=True)
class SemisimpleCertificate:
    element: str
    min_poly: tuple  # monic, lowest degree first
    dimension: int
    squarefree: bool
    generates: bool

    @property
    def degree(self):
        return len(self.min_poly) - 1

    @property
    def semisimple(self):
        return self.squarefree and self.generates

    def min_poly_str(self, var="t"):
        terms = []
        for k in range(len(self.min_poly) - 1, -1, -1):
            c = self.min_poly[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            terms.append(("-" if c < 0 else "+", body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return text + "".join(f" {s} {b}" for s, b in terms[1:])


def minimal_polynomial(alg, x):
    """Minimal polynomial of ``x`` from the Krylov sequence 1, x, x^2, ..."""
    powers = [list(alg.unit)]
    while True:
        nxt = alg.mult(powers[-1], x)
        # columns are the earlier powers; solve sum c_i x^i = x^k
        cols = [list(r) for r in zip(*powers)]
        sol = solve(cols, nxt)
        if sol is not None:
            return upoly_trim([-c for c in sol] + [Fraction(1)])
        powers.append(nxt)
        if len(powers) > alg.dimension + 1:
            raise ArithmeticError("Krylov sequence did not terminate")


def semisimple_certificate(alg, x, label="x"):
    p = minimal_polynomial(alg, x)
    g = upoly_gcd(p, upoly_derivative(p))
    return SemisimpleCertificate(
        element=label,
        min_poly=tuple(p),
        dimension=alg.dimension,
        squarefree=(len(g) == 1),
        generates=(len(p) - 1 == alg.dimension),
    )


def verify_certificate(alg, x, cert):
    """Re-derive every claim of ``cert`` independently; returns a list of failures."""
    problems = []
    p = list(cert.min_poly)
    if p[-1] != 1:
        problems.append("minimal polynomial is not monic")
    m = alg.left_matrix(x)
    if any(any(row) for row in upoly_eval_matrix(p, m)):
        problems.append("p(x) != 0")
    # no proper divisor kills x: the Krylov vectors below deg p are independent
    powers = [list(alg.unit)]
    for _ in range(len(p) - 2):
        powers.append(alg.mult(powers[-1], x))
    if rank(powers) != len(p) - 1:
        problems.append("a lower-degree polynomial annihilates x")
    g = upoly_gcd(p, upoly_derivative(p))
    if (len(g) == 1) != cert.squarefree:
        problems.append("squarefree flag disagrees with gcd(p, p')")
    if (len(p) - 1 == alg.dimension) != cert.generates:
        problems.append("generates flag disagrees with degree/dimension")
    return problems


def find_semisimple_witness(alg, candidates):
    """First (label, vector) whose certificate is semisimple, with all attempts."""
    tried = []
    for label, vec in candidates:
        cert = semisimple_certificate(alg, vec, label)
        tried.append(cert)
        if cert.semisimple:
            return cert, tried
    return None, tried


def build(pres, expected_hilbert=None):
    return GradedRing(pres, expected_hilbert)


__all__ = [
    "FiniteAlgebra",
    "GradedRing",
    "RingElt",
    "RingPresentation",
    "SemisimpleCertificate",
    "build",
    "find_semisimple_witness",
    "minimal_polynomial",
    "semisimple_certificate",
    "verify_certificate",
]
