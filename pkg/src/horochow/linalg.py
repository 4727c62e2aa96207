"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of ``Fraction``.  Everything here is small
(dimensions well under a hundred), so there is no attempt at cleverness beyond
skipping zero entries.
"""
from fractions import Fraction


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns ``(rows, pivots)`` with zero rows dropped."""
    m = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` as a list of vectors."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of ``A x = b`` (free variables set to zero), or ``None``."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


# Univariate polynomials: coefficient lists, lowest degree first, no trailing zeros.

def upoly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_derivative(p):
    return upoly_trim([i * c for i, c in enumerate(p)][1:])


def upoly_divmod(a, b):
    a, b = upoly_trim(a), upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = [Fraction(x) for x in a]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        f = rem[-1] / b[-1]
        quot[shift] = f
        for i, c in enumerate(b):
            rem[shift + i] -= f * c
        rem = upoly_trim(rem)
    return upoly_trim(quot), rem


def upoly_gcd(a, b):
    """Monic gcd over Q."""
    a, b = upoly_trim(a), upoly_trim(b)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [Fraction(c) / lead for c in a]


def upoly_eval_matrix(p, mat):
    """``p(mat)`` for a square matrix."""
    n = len(mat)
    result = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(p):
        result = matmul(result, mat)
        for i in range(n):
            result[i][i] += c
    return result
