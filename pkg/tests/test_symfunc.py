from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from horochow.errors import NotSymmetric, TooManyParts
from horochow.symfunc import (
    Partition,
    StrictPartition,
    SymPoly,
    lr_product,
    monomial_symmetric,
    partitions,
    pq_polynomial,
    pq_product,
    schur_expand,
    schur_polynomial,
    strict_partitions,
)

SMALL = [lam for n in range(5) for lam in partitions(n)]
STRICT = [lam for n in range(9) for lam in strict_partitions(n)]


def _pairs(pool, limit):
    return [(a, b) for a, b in product(pool, repeat=2) if a.weight + b.weight <= limit]


# --- partitions ---------------------------------------------------------------


@given(st.lists(st.integers(1, 6), max_size=5))
def test_partition_round_trip(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert Partition(str(lam)) == lam
    assert lam.weight == sum(parts)


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    assert str(Partition(())) == "0"
    assert Partition("0") == Partition(())


# --- Littlewood-Richardson ------------------------------------------------------


def _sympy_schur(lam, n):
    """Bialternant formula a_{lam+delta} / a_delta; independent of the package."""
    xs = sympy.symbols(f"x1:{n + 1}")
    lam = tuple(lam) + (0,) * (n - len(lam))
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    return sympy.expand(sympy.cancel(num / den)), xs


def _to_sympy(p, xs):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(x**e for x, e in zip(xs, exps))
                            for exps, c in p.terms.items()))


def test_lr_one_times_one():
    assert lr_product((1,), (1,)) == {(2,): 1, (1, 1): 1}
    s1, xs = _sympy_schur((1,), 2)
    s2, _ = _sympy_schur((2,), 2)
    s11, _ = _sympy_schur((1, 1), 2)
    assert sympy.expand(s1 * s1 - s2 - s11) == 0


def test_lr_identity():
    for lam in SMALL:
        assert lr_product((), lam) == {lam: 1}


def test_lr_41_times_22():
    prod = lr_product((4, 1), (2, 2))
    # in two variables s22 = (x1 x2)^2, so only (6,3) survives among two-row shapes
    two_rows = {lam: c for lam, c in prod.items() if len(lam) <= 2}
    assert two_rows == {(6, 3): 1}
    # frozen from the Jacobi-Trudi route in 8 variables
    assert prod == {(6, 3): 1, (6, 2, 1): 1, (5, 3, 1): 1, (5, 2, 2): 1, (5, 2, 1, 1): 1,
                    (4, 3, 2): 1, (4, 2, 2, 1): 1}
    a, xs = _sympy_schur((4, 1), 2)
    b, _ = _sympy_schur((2, 2), 2)
    c, _ = _sympy_schur((6, 3), 2)
    assert sympy.expand(a * b - c) == 0


@pytest.mark.parametrize("lam,mu", [((2, 1), (1,)), ((2,), (1, 1)), ((1, 1), (1, 1))])
def test_lr_matches_sympy_bialternant(lam, mu):
    n = sum(lam) + sum(mu)
    a, xs = _sympy_schur(lam, n)
    b, _ = _sympy_schur(mu, n)
    rhs = sum(c * _sympy_schur(nu, n)[0] for nu, c in lr_product(lam, mu).items())
    assert sympy.expand(a * b - rhs) == 0


@pytest.mark.parametrize("lam,mu", _pairs(SMALL, 6))
def test_lr_matches_jacobi_trudi_route(lam, mu):
    m = max(lam.weight + mu.weight, 1)
    poly = schur_polynomial(lam, m) * schur_polynomial(mu, m)
    assert schur_expand(poly) == lr_product(lam, mu)


partition_st = st.sampled_from([lam for n in range(9) for lam in partitions(n)])


@given(partition_st, partition_st)
def test_lr_symmetric_integral_weight_preserving(lam, mu):
    prod = lr_product(lam, mu)
    assert prod == lr_product(mu, lam)
    for nu, c in prod.items():
        assert c.denominator == 1 and c > 0
        assert nu.weight == lam.weight + mu.weight


@given(partition_st, partition_st, partition_st)
def test_lr_associative(a, b, c):
    if a.weight + b.weight + c.weight > 8:
        return

    def times(expansion, lam):
        acc = {}
        for nu, x in expansion.items():
            for rho, y in lr_product(nu, lam).items():
                acc[rho] = acc.get(rho, 0) + x * y
        return {k: v for k, v in acc.items() if v}

    assert times(lr_product(a, b), c) == times(lr_product(b, c), a)


# --- Schur expansion -------------------------------------------------------------


def test_schur_expand_bidegree_combination():
    p = monomial_symmetric((4, 1), 2) * 2 + monomial_symmetric((3, 2), 2) * 4
    assert schur_expand(p) == {(4, 1): 2, (3, 2): 2}


def test_schur_expand_power_sum():
    assert schur_expand(monomial_symmetric((5,), 2)) == {(5,): 1, (4, 1): -1}


def test_schur_expand_constant():
    assert schur_expand(SymPoly.constant(3)) == {(): 1}


def test_schur_expand_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        schur_expand(SymPoly.variable(0, 2))


@pytest.mark.parametrize("lam", [lam for n in range(9) for lam in partitions(n, max_len=3)])
def test_schur_expand_inverts_schur_polynomial(lam):
    assert schur_expand(schur_polynomial(lam, 3)) == {lam: 1}


def test_schur_expand_reconstructs_polynomial():
    p = monomial_symmetric((3, 1), 3) * Fraction(1, 2) + monomial_symmetric((2, 2), 3) - monomial_symmetric((4,), 3)
    total = SymPoly(3)
    for lam, c in schur_expand(p).items():
        total = total + schur_polynomial(lam, 3) * c
    assert total == p


# --- monomial symmetric functions ---------------------------------------------------


def test_monomial_symmetric_examples():
    assert monomial_symmetric((5,), 2) == SymPoly(2, {(5, 0): 1, (0, 5): 1})
    assert monomial_symmetric((4, 1), 2) == SymPoly(2, {(4, 1): 1, (1, 4): 1})
    assert monomial_symmetric((1,), 1) == SymPoly(1, {(1,): 1})
    with pytest.raises(TooManyParts):
        monomial_symmetric((1, 1, 1), 2)


# --- Schur P and Q functions -----------------------------------------------------------


def test_pq_product_examples():
    assert pq_product((1,), (1,), "P") == {(2,): 1}
    assert pq_product((1,), (1,), "Q") == {(2,): 2}
    for lam in STRICT:
        assert pq_product((), lam) == {lam: 1}


def test_pq_polynomial_examples():
    p1, p2 = pq_polynomial((1,), 2), pq_polynomial((2,), 2)
    assert p2 == SymPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert p1 * p1 == p2
    assert pq_polynomial((1,), 3, "Q") == SymPoly(3, {(1, 0, 0): 2, (0, 1, 0): 2, (0, 0, 1): 2})
    assert pq_polynomial((), 1) == SymPoly.constant(1)


def test_pq_polynomial_matches_generating_function():
    # q_r is the degree-r part of prod (1 + x_i)/(1 - x_i)
    t = sympy.Symbol("t")
    xs = sympy.symbols("x1:4")
    gen = sympy.prod((1 + t * x) / (1 - t * x) for x in xs)
    series = sympy.expand(sympy.series(gen, t, 0, 5).removeO())
    for r in range(1, 5):
        assert sympy.expand(series.coeff(t, r) - _to_sympy(pq_polynomial((r,), 3, "Q"), xs)) == 0


@lru_cache(maxsize=None)
def _dominant_p(lam, m=8):
    return pq_polynomial(lam, m, "P").dominant_terms()


@lru_cache(maxsize=None)
def _poly_p(lam, m=8):
    return pq_polynomial(lam, m, "P").terms


def _oracle_product(lam, mu, m=8):
    """Expand P_lam * P_mu in P-functions using only dominant monomial coefficients."""
    a, b = _poly_p(lam, m), _poly_p(mu, m)
    w = lam.weight + mu.weight
    coeffs = {}
    for nu in partitions(w, max_len=m):
        target = tuple(nu) + (0,) * (m - len(nu))
        total = Fraction(0)
        for e1, c1 in a.items():
            e2 = tuple(x - y for x, y in zip(target, e1))
            if min(e2) >= 0:
                total += c1 * b.get(e2, 0)
        if total:
            coeffs[nu] = total
    out = {}
    for nu in partitions(w, max_len=m):  # decreasing lex order refines dominance
        c = coeffs.get(nu, 0)
        if not c:
            continue
        assert len(set(nu)) == len(nu), f"non-strict leading term {nu}"
        out[StrictPartition(nu)] = c
        for rho, k in _dominant_p(StrictPartition(nu), m).items():
            coeffs[rho] = coeffs.get(rho, 0) - c * k
    return out


STRICT_PAIRS = [(a, b) for a, b in product(STRICT, repeat=2) if a.weight + b.weight <= 8 and a >= b]


@pytest.mark.parametrize("lam,mu", STRICT_PAIRS, ids=lambda p: str(p))
def test_pq_product_matches_tableau_oracle(lam, mu):
    assert pq_product(lam, mu, "P") == _oracle_product(lam, mu)


strict_st = st.sampled_from([lam for n in range(7) for lam in strict_partitions(n)])


@given(strict_st, strict_st, strict_st)
def test_pq_product_associative(a, b, c):
    if a.weight + b.weight + c.weight > 8:
        return

    def times(expansion, lam):
        acc = {}
        for nu, x in expansion.items():
            for rho, y in pq_product(nu, lam).items():
                acc[rho] = acc.get(rho, 0) + x * y
        return {k: v for k, v in acc.items() if v}

    assert times(pq_product(a, b), c) == times(pq_product(b, c), a)


@given(strict_st, strict_st)
def test_q_results_follow_conversion_law(lam, mu):
    p, q = pq_product(lam, mu, "P"), pq_product(lam, mu, "Q")
    for nu, c in p.items():
        assert q[nu] == c * 2 ** (len(lam) + len(mu) - len(nu))
    # the same class in the other family: Q_lam Q_mu = 2^(l(lam)+l(mu)) P_lam P_mu
    assert p.scale(2 ** (len(lam) + len(mu))).convert("Q") == q


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in strict_partitions(n)])
def test_q_polynomial_is_power_of_two_times_p(lam):
    assert pq_polynomial(lam, 5, "Q") == pq_polynomial(lam, 5, "P") * 2 ** len(lam)
