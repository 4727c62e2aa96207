"""Partitions and exact symmetric-function arithmetic.

Two independent routes are kept for every product that matters downstream:

* Littlewood-Richardson coefficients by tableau enumeration (``lr_product``)
  versus multiplying Jacobi-Trudi polynomials and expanding back into Schur
  polynomials (``schur_polynomial`` + ``schur_expand``).
* Schur P/Q structure constants from the Pieri rule (``pq_product``) versus
  the shifted-tableau polynomials of ``pq_polynomial``.
"""
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .errors import NotSymmetric, TooManyParts


class LinComb(Mapping):
    """Immutable finite formal linear combination with rational coefficients.

    Zero coefficients are dropped on construction.  Subclasses that carry
    context (a Grassmannian, a P/Q family) override ``_like``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        for key, c in items:
            key = self._coerce_key(key)
            acc[key] = acc.get(key, 0) + Fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @staticmethod
    def _coerce_key(key):
        return key

    def _like(self, terms):
        return type(self)(terms)

    def __getitem__(self, key):
        return self._terms[self._coerce_key(key)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, key):
        return self._terms.get(self._coerce_key(key), Fraction(0))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        terms = dict(self._terms)
        for k, v in other.items():
            terms[k] = terms.get(k, 0) + v
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return self._like({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if isinstance(other, LinComb):
            return self._terms == other._terms and self._context() == other._context()
        if isinstance(other, Mapping):
            return self._terms == {k: Fraction(v) for k, v in other.items() if v != 0}
        return NotImplemented

    def __hash__(self):
        return hash((frozenset(self._terms.items()), self._context()))

    def _context(self):
        return None

    def is_zero(self):
        return not self._terms

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def __repr__(self):
        body = ", ".join(f"{k!r}: {v}" for k, v in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.  Trailing zeros are dropped."""

    def __new__(cls, parts=()):
        if isinstance(parts, str):
            return cls.parse(parts)
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        cls._validate(parts)
        return super().__new__(cls, parts)

    @staticmethod
    def _validate(parts):
        pass

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("0", ""):
            return cls(())
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}") from exc

    @property
    def weight(self):
        return sum(self)

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)!r})"

    def conjugate(self):
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def part(self, i):
        return self[i] if i < len(self) else 0

    def fits(self, rows, cols):
        return len(self) <= rows and (not self or self[0] <= cols)

    def complement(self, rows, cols):
        return Partition(cols - self.part(rows - 1 - i) for i in range(rows))


class StrictPartition(Partition):
    @staticmethod
    def _validate(parts):
        if any(a == b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"strict partition parts must be distinct: {parts}")


def is_strict(parts):
    return all(a > b for a, b in zip(parts, parts[1:]))


def partitions(n, max_part=None, max_len=None):
    """All partitions of ``n``, in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield Partition(())
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first, max_len - 1):
            yield Partition((first,) + rest)


def strict_partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield StrictPartition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield StrictPartition((first,) + rest)


class SchurExpansion(LinComb):
    """Combination of Schur functions indexed by partitions."""

    @staticmethod
    def _coerce_key(key):
        return key if isinstance(key, Partition) else Partition(key)

    @property
    def is_homogeneous(self):
        return len({k.weight for k in self}) <= 1


class PQExpansion(LinComb):
    """Combination of Schur P- or Q-functions indexed by strict partitions."""

    __slots__ = ("family",)

    def __init__(self, terms=(), family="P"):
        if family not in ("P", "Q"):
            raise ValueError(f"family must be 'P' or 'Q', not {family!r}")
        self.family = family
        super().__init__(terms)

    @staticmethod
    def _coerce_key(key):
        return key if isinstance(key, StrictPartition) else StrictPartition(key)

    def _like(self, terms):
        return PQExpansion(terms, self.family)

    def _context(self):
        return self.family

    def convert(self, family):
        """Same symmetric function expressed in the other family (Q_l = 2^len(l) P_l)."""
        if family == self.family:
            return self
        if family == "Q":
            return PQExpansion({k: v / 2 ** len(k) for k, v in self.items()}, "Q")
        return PQExpansion({k: v * 2 ** len(k) for k, v in self.items()}, "P")


class SymPoly:
    """Polynomial in ``m`` variables, stored as exponent vector -> rational.

    Intended to hold symmetric polynomials, but symmetry is only checked when a
    caller asks (``schur_expand`` does).
    """

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=()):
        self.m = m
        acc = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != m:
                raise ValueError(f"exponent vector {exps} has wrong length for m={m}")
            acc[exps] = acc.get(exps, 0) + Fraction(c)
        self.terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def constant(cls, m, c=1):
        return cls(m, {(0,) * m: c})

    @classmethod
    def variable(cls, i, m):
        return cls(m, {tuple(int(j == i) for j in range(m)): 1})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.constant(self.m, other)
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return SymPoly(self.m, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly(self.m, {k: other * v for k, v in self.terms.items()})
        self._check(other)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return SymPoly(self.m, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = SymPoly.constant(self.m)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.constant(self.m, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def _check(self, other):
        if self.m != other.m:
            raise ValueError(f"variable count mismatch: {self.m} vs {other.m}")

    def transpose(self, i, j):
        def swap(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)

        return SymPoly(self.m, {swap(k): v for k, v in self.terms.items()})

    def is_symmetric(self):
        # adjacent transpositions generate the symmetric group
        return all(self.transpose(i, i + 1) == self for i in range(self.m - 1))

    def dominant_terms(self):
        """Coefficients at partition-shaped exponents, keyed by ``Partition``."""
        out = {}
        for e, c in self.terms.items():
            if all(a >= b for a, b in zip(e, e[1:])):
                out[Partition(e)] = c
        return out

    def __repr__(self):
        if not self.terms:
            return f"SymPoly({self.m}, 0)"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"y{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return f"SymPoly({self.m}, {' + '.join(parts)})"


# --- symmetric polynomial constructors -------------------------------------


def monomial_symmetric(lam, m):
    lam = Partition(lam)
    if len(lam) > m:
        raise TooManyParts(f"{lam} has more than {m} parts")
    exps = tuple(lam) + (0,) * (m - len(lam))
    return SymPoly(m, {perm: 1 for perm in _distinct_permutations(exps)})


def _distinct_permutations(seq):
    seq = sorted(seq)
    out = set()

    def rec(prefix, remaining):
        if not remaining:
            out.add(tuple(prefix))
            return
        seen = set()
        for i, x in enumerate(remaining):
            if x in seen:
                continue
            seen.add(x)
            rec(prefix + [x], remaining[:i] + remaining[i + 1:])

    rec([], seq)
    return out


def _compositions(total, m, max_each=None):
    if m == 0:
        if total == 0:
            yield ()
        return
    hi = total if max_each is None else min(total, max_each)
    for first in range(hi, -1, -1):
        for rest in _compositions(total - first, m - 1, max_each):
            yield (first,) + rest


def complete_homogeneous(k, m):
    if k < 0:
        return SymPoly(m)
    return SymPoly(m, {e: 1 for e in _compositions(k, m)})


def elementary(k, m):
    if k < 0 or k > m:
        return SymPoly(m)
    return SymPoly(m, {e: 1 for e in _compositions(k, m, max_each=1)})


def _det(matrix, m):
    """Laplace expansion along the first row; entries are SymPolys."""
    n = len(matrix)
    if n == 0:
        return SymPoly.constant(m)
    total = SymPoly(m)
    for j, entry in enumerate(matrix[0]):
        if not entry.terms:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _det(minor, m)
        total = total + term if j % 2 == 0 else total - term
    return total


@lru_cache(maxsize=None)
def schur_polynomial(lam, m):
    """s_lambda(x_1..x_m) from the Jacobi-Trudi determinant (h- or e-form, whichever is smaller)."""
    lam = Partition(lam)
    if len(lam) > m:
        return SymPoly(m)
    if not lam:
        return SymPoly.constant(m)
    if len(lam) <= lam[0]:
        n, parts, basic = len(lam), lam, complete_homogeneous
    else:
        conj = lam.conjugate()
        n, parts, basic = len(conj), conj, elementary
    matrix = [[basic(parts[i] - i + j, m) for j in range(n)] for i in range(n)]
    return _det(matrix, m)


# --- Kostka numbers and Schur expansion ------------------------------------


def horizontal_strips_removed(lam, r):
    """Partitions nu with lam/nu a horizontal strip of size r."""
    lam = tuple(lam)
    n = len(lam)

    def rec(i, left):
        if i == n:
            if left == 0:
                yield ()
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for v in range(lam[i], lo - 1, -1):
            take = lam[i] - v
            if take > left:
                break
            for rest in rec(i + 1, left - take):
                yield (v,) + rest

    for nu in rec(0, r):
        yield Partition(nu)


def horizontal_strips_added(lam, r):
    """Partitions mu with mu/lam a horizontal strip of size r."""
    lam = tuple(lam) + (0,)
    n = len(lam)

    def rec(i, left):
        if i == n:
            if left == 0:
                yield ()
            return
        hi = lam[i] + left if i == 0 else min(lam[i - 1], lam[i] + left)
        for v in range(lam[i], hi + 1):
            for rest in rec(i + 1, left - (v - lam[i])):
                yield (v,) + rest

    for mu in rec(0, r):
        yield Partition(mu)


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    lam, mu = Partition(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in horizontal_strips_removed(lam, mu[-1]))


def schur_expand(p):
    """Expand a symmetric polynomial in Schur polynomials s_lambda(x_1..x_m)."""
    if not p.is_symmetric():
        raise NotSymmetric("polynomial is not invariant under permuting its variables")
    remaining = {k: v for k, v in p.dominant_terms().items()}
    out = {}
    by_weight = {}
    for mu in remaining:
        by_weight.setdefault(mu.weight, []).append(mu)
    for n in by_weight:
        shapes = list(partitions(n, max_len=p.m))  # decreasing lex refines dominance
        for i, lam in enumerate(shapes):
            c = remaining.get(lam, 0)
            if c == 0:
                continue
            out[lam] = c
            for mu in shapes[i:]:
                k = kostka(lam, mu)
                if k:
                    remaining[mu] = remaining.get(mu, 0) - c * k
    return SchurExpansion(out)


# --- Littlewood-Richardson rule ---------------------------------------------


@lru_cache(maxsize=None)
def _lr_terms(lam, mu):
    """LR tableaux of shape nu/lam and content mu, counted by nu."""
    counts = {}
    letters = list(mu)

    def lattice_ok(fill, i):
        # reading word: rows top to bottom, each right to left; #i never exceeds #(i-1)
        a = b = 0
        for row in fill:
            for x in reversed(row):
                if x == i - 1:
                    a += 1
                elif x == i:
                    b += 1
                    if b > a:
                        return False
        return True

    def rec(idx, shape, fill):
        if idx == len(letters):
            nu = Partition(shape)
            counts[nu] = counts.get(nu, 0) + 1
            return
        letter = idx + 1
        for new in horizontal_strips_added(shape, letters[idx]):
            new = tuple(new)
            ext = list(fill) + [()] * (len(new) - len(fill))
            ext = [
                row + (letter,) * (new[r] - (shape[r] if r < len(shape) else 0))
                for r, row in enumerate(ext)
            ]
            if letter > 1 and not lattice_ok(ext, letter):
                continue
            rec(idx + 1, new, tuple(ext))

    rec(0, tuple(lam), tuple(() for _ in lam))
    return tuple(sorted(counts.items(), reverse=True))


def lr_product(lam, mu):
    """s_lam * s_mu expanded in Schur functions (Littlewood-Richardson coefficients)."""
    lam, mu = Partition(lam), Partition(mu)
    # enumerate with the shorter content word
    if len(mu) > len(lam):
        lam, mu = mu, lam
    return SchurExpansion(_lr_terms(lam, mu))


# --- Schur P- and Q-functions -----------------------------------------------


def _strip_fillings(cells, diagonal_unprimed):
    """Fillings of a skew shifted shape by {k', k} obeying marked-tableau rules.

    ``cells`` is a list of (row, col).  Rows: at most one primed, primed first.
    Columns: at most one unprimed, unprimed last.
    """
    n = len(cells)
    rows, cols = {}, {}
    for idx, (r, c) in enumerate(cells):
        rows.setdefault(r, []).append((c, idx))
        cols.setdefault(c, []).append((r, idx))
    for v in rows.values():
        v.sort()
    for v in cols.values():
        v.sort()
    count = 0
    for assign in iproduct((0, 1), repeat=n):  # 0 = primed, 1 = unprimed
        if diagonal_unprimed and any(assign[i] == 0 for i, (r, c) in enumerate(cells) if r == c):
            continue
        ok = True
        for row in rows.values():
            seq = [assign[i] for _, i in row]
            if seq.count(0) > 1 or seq != sorted(seq):
                ok = False
                break
        if ok:
            for col in cols.values():
                seq = [assign[i] for _, i in col]
                if seq.count(1) > 1 or seq != sorted(seq):
                    ok = False
                    break
        if ok:
            count += 1
    return count


def _strict_subshapes(lam):
    lam = tuple(lam)

    def rec(i, prev):
        if i == len(lam):
            yield ()
            return
        hi = lam[i] if prev is None else min(lam[i], prev - 1)
        for v in range(hi, -1, -1):
            if v == 0:
                yield (0,) * (len(lam) - i)
                continue
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for mu in rec(0, None):
        yield tuple(p for p in mu if p)


@lru_cache(maxsize=None)
def _pq_poly_terms(lam, m, family):
    out = {}
    for mu in _strict_subshapes(lam):
        cells = [
            (r, r + c)
            for r in range(len(lam))
            for c in range(mu[r] if r < len(mu) else 0, lam[r])
        ]
        count = _strip_fillings(cells, family == "P") if cells else 1
        if not count:
            continue
        sub = pq_polynomial(StrictPartition(mu), m - 1, family)
        for e, c in sub.terms.items():
            key = e + (len(cells),)
            out[key] = out.get(key, 0) + c * count
    return tuple(out.items())


def pq_polynomial(lam, m, family="P"):
    """Schur P/Q polynomial in m variables by summing over marked shifted tableaux."""
    lam = StrictPartition(lam)
    if m == 0:
        return SymPoly(0, {(): 1}) if not lam else SymPoly(0)
    return SymPoly(m, _pq_poly_terms(tuple(lam), m, family))


def pq_expand(p, family="P"):
    """Expand a symmetric polynomial (in at least weight-many variables) in P or Q functions."""
    if not p.is_symmetric():
        raise NotSymmetric("polynomial is not invariant under permuting its variables")
    remaining = dict(p.dominant_terms())
    out = {}
    while remaining:
        lead = max(k for k, v in remaining.items() if v != 0) if any(remaining.values()) else None
        if lead is None:
            break
        if not is_strict(lead):
            raise ValueError(f"leading term {lead} is not strict; not in the P/Q span")
        c = remaining[lead]
        out[lead] = c
        for mu, k in pq_polynomial(lead, p.m, family).dominant_terms().items():
            remaining[mu] = remaining.get(mu, 0) - c * k
        remaining = {k: v for k, v in remaining.items() if v != 0}
    return PQExpansion(out, family)


def _pieri_p(lam, r):
    """P_lam * P_r for r >= 1 (coefficients 2^(a-1) over horizontal strips)."""
    out = {}
    for mu in horizontal_strips_added(lam, r):
        if not is_strict(mu):
            continue
        strip_cols = set()
        for i, v in enumerate(mu):
            old = lam[i] if i < len(lam) else 0
            strip_cols.update(range(old + 1, v + 1))
        a = sum(1 for c in strip_cols if c + 1 not in strip_cols)
        out[StrictPartition(mu)] = Fraction(2) ** (a - 1)
    return out


@lru_cache(maxsize=None)
def _p_in_specials(lam):
    """P_lam as a polynomial in the one-row functions P_r: {sorted tuple of r: coeff}."""
    if len(lam) <= 1:
        return {tuple(lam): Fraction(1)}
    first, rest = lam[0], StrictPartition(lam[1:])
    # P_first * P_rest = P_lam + (terms lexicographically above lam)
    out = {}
    for word, c in _p_in_specials(rest).items():
        key = tuple(sorted(word + (first,), reverse=True))
        out[key] = out.get(key, 0) + c
    for nu, c in _pieri_p(rest, first).items():
        if nu == lam:
            continue
        for word, d in _p_in_specials(nu).items():
            out[word] = out.get(word, 0) - c * d
    return {k: v for k, v in out.items() if v != 0}


@lru_cache(maxsize=None)
def _pq_product_p(lam, mu):
    total = {}
    for word, c in _p_in_specials(lam).items():
        cur = {mu: Fraction(1)}
        for r in word:
            nxt = {}
            for nu, a in cur.items():
                for rho, b in _pieri_p(nu, r).items():
                    nxt[rho] = nxt.get(rho, 0) + a * b
            cur = nxt
        for nu, a in cur.items():
            total[nu] = total.get(nu, 0) + c * a
    return tuple((k, v) for k, v in total.items() if v != 0)


def pq_product(lam, mu, family="P"):
    """Structure constants of Schur P- (or Q-) functions, untruncated."""
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    # the shorter factor goes through the special-class expansion
    if len(lam) > len(mu):
        lam, mu = mu, lam
    terms = _pq_product_p(lam, mu)
    if family == "P":
        return PQExpansion(terms, "P")
    shift = len(lam) + len(mu)
    return PQExpansion({nu: c * Fraction(2) ** (shift - len(nu)) for nu, c in terms}, "Q")
