"""Top Chern classes, external tensor products, and the fundamental class of the
G2-variety inside G(2,8).

The G2 computation never represents G2/P2 itself: classes on it are restrictions
from G(2,7), and integrals over it are computed against its fundamental class in
G(2,7) (the top Chern class of Q*(1)).
"""
from dataclasses import dataclass, field
from itertools import product as iproduct

from .schubert import GrassCtx, SchubertCycle, evaluate_against, grass_mult
from .symfunc import (
    LinComb,
    Partition,
    SymPoly,
    elementary,
    monomial_symmetric,
    schur_expand,
)


@dataclass(frozen=True)
class BundleChern:
    rank: int
    chern: tuple  # c_1 .. c_rank as SchubertCycles

    def __post_init__(self):
        if len(self.chern) != self.rank:
            raise ValueError(f"expected {self.rank} Chern classes, got {len(self.chern)}")
        for i, c in enumerate(self.chern, start=1):
            if c and c.degrees() != {i}:
                raise ValueError(f"c_{i} is not homogeneous of degree {i}")

    @property
    def ctx(self):
        return self.chern[0].ctx

    def c(self, i):
        if i == 0:
            return self.ctx.unit()
        return self.chern[i - 1]

    @classmethod
    def quotient(cls, ctx):
        """Tautological quotient bundle of G(k,n): c_i = sigma_i."""
        r = ctx.n - ctx.k
        return cls(r, tuple(ctx.special(i) for i in range(1, r + 1)))

    @classmethod
    def trivial(cls, ctx, rank):
        return cls(rank, tuple(SchubertCycle({}, ctx) for _ in range(rank)))


def twisted_dual_top_chern(bundle):
    """c_r(E* (x) O(1)) = sum_i (-1)^i c_i(E) h^(r-i)."""
    ctx = bundle.ctx
    h = ctx.hyperplane()
    total = SchubertCycle({}, ctx)
    for i in range(bundle.rank + 1):
        total = total + (h ** (bundle.rank - i) * bundle.c(i)).scale((-1) ** i)
    return total


class BigradedClass(LinComb):
    """Element of A*(ctx_a) (x) A*(ctx_b) in the product Schubert basis."""

    __slots__ = ("ctx_a", "ctx_b")

    def __init__(self, terms=(), ctx_a=None, ctx_b=None):
        self.ctx_a, self.ctx_b = ctx_a, ctx_b
        super().__init__(terms)
        for a, b in self._terms:
            if not (ctx_a.fits(a) and ctx_b.fits(b)):
                raise ValueError(f"({a}, {b}) does not fit {ctx_a} x {ctx_b}")

    @staticmethod
    def _coerce_key(key):
        a, b = key
        return (Partition(a), Partition(b))

    def _like(self, terms):
        return BigradedClass(terms, self.ctx_a, self.ctx_b)

    def _context(self):
        return (self.ctx_a, self.ctx_b)

    def bidegrees(self):
        return sorted({(a.weight, b.weight) for a, b in self})

    def part(self, left_degree):
        return self._like({k: v for k, v in self.items() if k[0].weight == left_degree})

    def total_degrees(self):
        return {a.weight + b.weight for a, b in self}


def tensor_top_chern_monomials(bundle, s):
    """c_top(E (x) M) for M of rank s with formal roots y_1..y_s.

    Returns {(left degree, y-partition): left class}: the coefficient of the
    monomial-symmetric function m_lambda(y) in each bidegree.
    """
    r = bundle.rank
    out = {}
    # the choice j_i in 0..r picks y_i^(r-j_i) c_{j_i}(E) from the i-th factor
    for js in iproduct(range(r + 1), repeat=s):
        exps = tuple(r - j for j in js)
        if list(exps) != sorted(exps, reverse=True):
            continue  # one representative per symmetric orbit
        left = bundle.ctx.unit()
        for j in js:
            left = grass_mult(left, bundle.c(j))
        key = (sum(js), Partition(exps))
        out[key] = out.get(key, SchubertCycle({}, bundle.ctx)) + left
    return {k: v for k, v in out.items() if v}


def external_tensor_top_chern(bundle, s, ctx_b):
    """c_{rs}(E boxtimes U*) with U the rank-s tautological bundle of ``ctx_b``."""
    if ctx_b.k != s:
        raise ValueError(f"{ctx_b} does not carry a tautological bundle of rank {s}")
    acc = {}
    for (_, ylam), left in tensor_top_chern_monomials(bundle, s).items():
        right = schur_expand(monomial_symmetric(ylam, s))
        for mu, c in right.items():
            if not ctx_b.fits(mu):
                continue
            for lam, d in left.items():
                acc[(lam, mu)] = acc.get((lam, mu), 0) + c * d
    return BigradedClass(acc, bundle.ctx, ctx_b)


@dataclass
class FundamentalClassResult:
    bidegree_part: dict  # y-partition -> left class on G(2,7)
    base_class: SchubertCycle  # class of G2/P2 in G(2,7)
    evaluations: dict  # y-partition -> integral over G2/P2
    y_combination: SymPoly
    fundamental_class: SchubertCycle
    schur_route: SchubertCycle
    stages: list = field(default_factory=list)


def _chern_word(ylam, r):
    """Name the left factor paired with m_lambda(y), e.g. ``τ̄4τ̄1`` for (4,1) at r=5."""
    js = sorted((r - e for e in tuple(ylam) + (0,) * (2 - len(ylam))), reverse=True)
    return "".join(f"τ̄{j}" for j in js if j)


def schur_to_cycle(expansion, ctx):
    return SchubertCycle({lam: c for lam, c in expansion.items() if ctx.fits(lam)}, ctx)


def g2_fundamental_class():
    """Class of the G2-variety X in G(2, V7 + C) from the blow-up X~ as a zero locus."""
    small, big = GrassCtx(2, 7), GrassCtx(2, 8)
    quotient = BundleChern.quotient(small)
    base = twisted_dual_top_chern(quotient)
    monos = tensor_top_chern_monomials(quotient, 2)
    top_left = small.cols  # dim G2/P2 = 5
    part = {ylam: left for (deg, ylam), left in monos.items() if deg == top_left}
    evaluations = {ylam: evaluate_against(base, left) for ylam, left in part.items()}
    ycomb = SymPoly(2)
    for ylam, val in evaluations.items():
        ycomb = ycomb + monomial_symmetric(ylam, 2) * val
    fundamental = schur_to_cycle(schur_expand(ycomb), big)

    # independent route: [X] = 2 e2 (e1^3 - e1 e2) in the roots of U*
    e1, e2 = elementary(1, 2), elementary(2, 2)
    schur_route = schur_to_cycle(schur_expand(e2 * (e1 ** 3 - e1 * e2) * 2), big)

    stages = [
        "bidegree (5,5) part: "
        + " + ".join(f"m[{ylam}]⊗{_chern_word(ylam, quotient.rank)}" for ylam in sorted(part, reverse=True)),
        f"[G2/P2] in {small}: {base}",
        "evaluations: " + ", ".join(
            f"∫ m[{ylam}]-coefficient = {val}" for ylam, val in sorted(evaluations.items(), reverse=True)
        ),
        "y-side: " + " + ".join(
            f"{val}·m[{ylam}]" for ylam, val in sorted(evaluations.items(), reverse=True)
        ),
        str(fundamental),
    ]
    return FundamentalClassResult(
        bidegree_part=part,
        base_class=base,
        evaluations=evaluations,
        y_combination=ycomb,
        fundamental_class=fundamental,
        schur_route=schur_route,
        stages=stages,
    )


def schur_of_y(poly, ctx):
    """Convert a symmetric polynomial in the roots of U* to a Schubert cycle on ``ctx``."""
    return schur_to_cycle(schur_expand(poly), ctx)


__all__ = [
    "BigradedClass",
    "BundleChern",
    "FundamentalClassResult",
    "external_tensor_top_chern",
    "g2_fundamental_class",
    "schur_of_y",
    "tensor_top_chern_monomials",
    "twisted_dual_top_chern",
]
